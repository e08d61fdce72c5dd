#ifndef FGLOCUS_FROBENIUS_HPP
#define FGLOCUS_FROBENIUS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fglocus/monomial.hpp"
#include "fglocus/monomial_ideal.hpp"

namespace fglocus {

/// Finite-generation test for the Frobenius algebra of k[x]/K, K squarefree:
///
///   (K^[2] : K) = K^[2] + (lcm of the minimal generators of K).
///
/// The right-hand side is always contained in the left, so the test fails
/// exactly when some generator of (K^[2] : K) escapes it. True means the
/// algebra is principally generated; false means it is not finitely generated.
/// The zero ideal passes. Throws InvalidArgument for the unit ideal or a
/// non-squarefree ideal.
bool fg_criterion(const MonomialIdeal& k);

/// The first minimal generator of (K^[2] : K) outside K^[2] + (lcm), or
/// nullopt when the criterion holds.
std::optional<Monomial> fg_criterion_witness(const MonomialIdeal& k);

/// Parameters for the bounded degree-wise generation check.
struct OracleParams {
  unsigned p = 2;     ///< characteristic, one of 2, 3, 5
  unsigned e_max = 3; ///< highest Frobenius degree examined, 2..4
  unsigned k = 1;     ///< generation threshold

  /// Throws InvalidArgument when a field is out of range.
  void validate() const;
};

/// p^e, checked against the monomial exponent ceiling.
std::uint64_t frobenius_power(unsigned p, unsigned e);

/// K_e = (I^[p^e] : I). Throws InvalidArgument for the zero or unit ideal.
MonomialIdeal frobenius_colon(const MonomialIdeal& ideal, unsigned p, unsigned e);

/// L_e: the sum over compositions (a_1, ..., a_s) of e with every part in
/// [1, e-1] of K_{a_1} K_{a_2}^[p^{a_1}] ... K_{a_s}^[p^{a_1+...+a_{s-1}}].
/// Throws InvalidArgument when e < 2.
MonomialIdeal generation_ideal(const MonomialIdeal& ideal, unsigned p, unsigned e);

/// Degree e of the algebra is generated by lower degrees, i.e.
/// K_e = L_e + I^[p^e]. The I^[p^e] term is the zero of the degree-e piece
/// K_e / I^[p^e].
bool ce_vanishes(const MonomialIdeal& ideal, unsigned p, unsigned e);

struct DegreeCheck {
  unsigned e;
  bool vanishes;
};

struct OracleReport {
  std::vector<DegreeCheck> degrees; ///< one entry per e in (k, e_max]
  bool generated = true;            ///< every listed degree vanishes
};

/// Runs ce_vanishes for k < e <= e_max. A bounded check: it can refute
/// k-generation but only supports it up to e_max.
OracleReport check_k_generation(const MonomialIdeal& ideal, const OracleParams& params);
bool is_k_generated_up_to(const MonomialIdeal& ideal, const OracleParams& params);

} // namespace fglocus

#endif
