#ifndef FGLOCUS_MONOMIAL_HPP
#define FGLOCUS_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fglocus/face.hpp"
#include "fglocus/ring_context.hpp"

namespace fglocus {

/// A monomial x_1^{a_1} ... x_n^{a_n}, stored as its exponent vector.
class Monomial {
public:
  using Exponent = std::uint32_t;
  /// Largest exponent any operation may produce; exceeding it throws ExponentOverflow.
  static constexpr Exponent kMaxExponent = Exponent{1} << 16;

  /// The constant monomial 1.
  explicit Monomial(RingPtr ring);
  Monomial(RingPtr ring, std::vector<Exponent> exponents);

  static Monomial one(RingPtr ring) { return Monomial(std::move(ring)); }
  static Monomial variable(RingPtr ring, std::size_t i);
  /// The squarefree monomial x_F.
  static Monomial from_face(RingPtr ring, Face face);

  const RingContext& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  std::span<const Exponent> exponents() const { return exponents_; }
  Exponent exponent(std::size_t i) const { return exponents_.at(i); }
  std::uint64_t degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  Face support() const;

  /// Sets every variable in `vars` to 1.
  Monomial without_variables(Face vars) const;

  /// "x*w^2", or "1" for the constant monomial.
  std::string to_string() const;

  bool operator==(const Monomial& other) const { return exponents_ == other.exponents_; }
  /// Lexicographic on exponent vectors.
  std::strong_ordering operator<=>(const Monomial& other) const {
    return exponents_ <=> other.exponents_;
  }

private:
  RingPtr ring_;
  std::vector<Exponent> exponents_;
};

/// a | b componentwise.
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
/// a / b; throws InvalidArgument unless b | a.
Monomial quotient_exact(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
Monomial pow(const Monomial& m, std::uint64_t q);

} // namespace fglocus

#endif
