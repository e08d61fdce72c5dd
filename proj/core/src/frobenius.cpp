#include "fglocus/frobenius.hpp"

#include <map>

#include "fglocus/error.hpp"

namespace fglocus {

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal) {
  if (ideal.is_zero())
    throw InvalidArgument("the Frobenius colon of the zero ideal is undefined");
  if (ideal.is_unit())
    throw InvalidArgument("the unit ideal is not a valid input");
}

// K_a for a single ideal, computed on demand.
class ColonTower {
public:
  ColonTower(const MonomialIdeal& ideal, unsigned p) : ideal_(ideal), p_(p) {}

  const MonomialIdeal& at(unsigned a) {
    auto it = cache_.find(a);
    if (it == cache_.end())
      it = cache_.emplace(a, frobenius_colon(ideal_, p_, a)).first;
    return it->second;
  }

private:
  const MonomialIdeal& ideal_;
  unsigned p_;
  std::map<unsigned, MonomialIdeal> cache_;
};

void accumulate_compositions(ColonTower& tower, unsigned p, unsigned e, unsigned remaining,
                             unsigned shift, const std::optional<MonomialIdeal>& prefix,
                             MonomialIdeal& total) {
  for (unsigned a = 1; a <= remaining && a <= e - 1; ++a) {
    MonomialIdeal factor = bracket_power(tower.at(a), frobenius_power(p, shift));
    MonomialIdeal term = prefix ? product(*prefix, factor) : std::move(factor);
    if (a == remaining)
      total = sum(total, term);
    else
      accumulate_compositions(tower, p, e, remaining - a, shift + a, term, total);
  }
}

} // namespace

std::optional<Monomial> fg_criterion_witness(const MonomialIdeal& k) {
  if (k.is_unit())
    throw InvalidArgument("the unit ideal is not a valid input");
  if (!k.is_squarefree())
    throw InvalidArgument("ideal " + k.to_string() + " is not squarefree");
  if (k.is_zero())
    return std::nullopt;
  const MonomialIdeal square = bracket_power(k, 2);
  const MonomialIdeal lhs = colon(square, k);
  const MonomialIdeal rhs = sum(square, generator_lcm_ideal(k));
  for (const auto& g : lhs.gens())
    if (!rhs.contains(g))
      return g;
  return std::nullopt;
}

bool fg_criterion(const MonomialIdeal& k) { return !fg_criterion_witness(k).has_value(); }

void OracleParams::validate() const {
  if (p != 2 && p != 3 && p != 5)
    throw InvalidArgument("characteristic must be 2, 3 or 5, got " + std::to_string(p));
  if (e_max < 2 || e_max > 4)
    throw InvalidArgument("e_max must lie in [2, 4], got " + std::to_string(e_max));
  if (k < 1)
    throw InvalidArgument("generation threshold k must be at least 1");
}

std::uint64_t frobenius_power(unsigned p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > Monomial::kMaxExponent)
      throw ExponentOverflow(std::to_string(p) + "^" + std::to_string(e) +
                             " exceeds the exponent ceiling");
  }
  return q;
}

MonomialIdeal frobenius_colon(const MonomialIdeal& ideal, unsigned p, unsigned e) {
  require_proper_nonzero(ideal);
  return colon(bracket_power(ideal, frobenius_power(p, e)), ideal);
}

MonomialIdeal generation_ideal(const MonomialIdeal& ideal, unsigned p, unsigned e) {
  if (e < 2)
    throw InvalidArgument("L_e is defined for e >= 2");
  require_proper_nonzero(ideal);
  ColonTower tower(ideal, p);
  MonomialIdeal total = MonomialIdeal::zero(ideal.ring_ptr());
  accumulate_compositions(tower, p, e, e, 0, std::nullopt, total);
  return total;
}

bool ce_vanishes(const MonomialIdeal& ideal, unsigned p, unsigned e) {
  const MonomialIdeal k_e = frobenius_colon(ideal, p, e);
  const MonomialIdeal generated =
      sum(generation_ideal(ideal, p, e), bracket_power(ideal, frobenius_power(p, e)));
  return k_e == generated;
}

OracleReport check_k_generation(const MonomialIdeal& ideal, const OracleParams& params) {
  params.validate();
  OracleReport report;
  for (unsigned e = std::max(params.k + 1, 2U); e <= params.e_max; ++e) {
    bool vanishes = ce_vanishes(ideal, params.p, e);
    report.degrees.push_back({e, vanishes});
    report.generated = report.generated && vanishes;
  }
  return report;
}

bool is_k_generated_up_to(const MonomialIdeal& ideal, const OracleParams& params) {
  return check_k_generation(ideal, params).generated;
}

} // namespace fglocus
