#ifndef FGLOCUS_MONOMIAL_IDEAL_HPP
#define FGLOCUS_MONOMIAL_IDEAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fglocus/face.hpp"
#include "fglocus/monomial.hpp"
#include "fglocus/ring_context.hpp"

namespace fglocus {

/// A monomial ideal, held as its unique minimal generating set.
///
/// Generators are sorted in descending lexicographic order of their exponent
/// vectors, so x_1 sorts before x_2 and equality is structural. The zero ideal
/// has no generators; the unit ideal is (1).
///
/// An ideal may also record a set of inverted variables: those set to 1 by a
/// monomial localization, or lying outside the ground set of a complex. The
/// ideal then lives in k[x_i : i not inverted]. This mask never affects
/// equality or membership.
class MonomialIdeal {
public:
  /// The zero ideal.
  explicit MonomialIdeal(RingPtr ring);
  /// Minimalizes and sorts `gens`.
  MonomialIdeal(RingPtr ring, std::vector<Monomial> gens, Face inverted = {});

  static MonomialIdeal zero(RingPtr ring) { return MonomialIdeal(std::move(ring)); }
  static MonomialIdeal unit(RingPtr ring);
  /// (x_i : i in vars).
  static MonomialIdeal generated_by_variables(RingPtr ring, Face vars);

  const RingContext& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  Face inverted() const { return inverted_; }
  MonomialIdeal with_inverted(Face vars) const;

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_squarefree() const;
  /// Union of the generator supports.
  Face support() const;

  bool contains(const Monomial& m) const;
  /// this ⊇ other.
  bool contains(const MonomialIdeal& other) const;

  /// "(x*w, y*w)"; "(0)" for the zero ideal.
  std::string to_string() const;

  bool operator==(const MonomialIdeal& other) const;

private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
  Face inverted_;
};

/// Removes every generator divisible by another and sorts canonically.
MonomialIdeal minimalize(RingPtr ring, std::vector<Monomial> gens);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b);

/// (I : f), generated by m / gcd(m, f) over the generators m of I.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f);
/// (I : J) as the intersection of (I : f) over the generators f of J.
/// Throws InvalidArgument when J is the zero ideal.
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by);

/// I^[q], generated by the q-th powers of the minimal generators.
MonomialIdeal bracket_power(const MonomialIdeal& ideal, std::uint64_t q);

/// (lcm(m_i, m_j) : i < j) over the minimal generators; zero with fewer than two.
MonomialIdeal lcm_pairs_ideal(const MonomialIdeal& ideal);

/// The principal ideal generated by the lcm of all minimal generators; zero for
/// the zero ideal.
MonomialIdeal generator_lcm_ideal(const MonomialIdeal& ideal);

/// I(p_F): sets x_j = 1 for every j in `face` and records those variables as inverted.
MonomialIdeal monomial_localization(const MonomialIdeal& ideal, Face face);

/// Minimal generators have pairwise disjoint supports. The unit ideal is not a
/// complete intersection.
bool is_complete_intersection(const MonomialIdeal& ideal);

} // namespace fglocus

#endif
