#include "fglocus/monomial_ideal.hpp"

#include <algorithm>

#include "fglocus/error.hpp"

namespace fglocus {

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  fglocus::require_same_ring(a.ring(), b.ring());
}

// Minimal elements under divisibility, sorted in descending lex order.
std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    auto da = a.degree();
    auto db = b.degree();
    return da != db ? da < db : a > b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<Monomial> kept;
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return divides(k, g); });
    if (!redundant)
      kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end(), std::greater<>());
  return kept;
}

} // namespace

MonomialIdeal::MonomialIdeal(RingPtr ring) : ring_(std::move(ring)) {}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> gens, Face inverted)
    : ring_(std::move(ring)), inverted_(inverted) {
  for (const auto& g : gens)
    fglocus::require_same_ring(*ring_, g.ring());
  gens_ = minimal_generators(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(RingPtr ring) {
  Monomial one(ring);
  return MonomialIdeal(std::move(ring), {std::move(one)});
}

MonomialIdeal MonomialIdeal::generated_by_variables(RingPtr ring, Face vars) {
  std::vector<Monomial> gens;
  for (auto v : vars.vertices())
    gens.push_back(Monomial::variable(ring, v));
  return MonomialIdeal(std::move(ring), std::move(gens));
}

MonomialIdeal MonomialIdeal::with_inverted(Face vars) const {
  MonomialIdeal copy = *this;
  copy.inverted_ = vars;
  return copy;
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

Face MonomialIdeal::support() const {
  Face s;
  for (const auto& g : gens_)
    s = s | g.support();
  return s;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  fglocus::require_same_ring(*ring_, m.ring());
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_ring(*this, other);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty())
    return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i != 0)
      s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
  require_same_ring(*this, other);
  return gens_ == other.gens_;
}

MonomialIdeal minimalize(RingPtr ring, std::vector<Monomial> gens) {
  return MonomialIdeal(std::move(ring), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.ring_ptr(), std::move(gens), a.inverted() | b.inverted());
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& x : a.gens())
    for (const auto& y : b.gens())
      gens.push_back(x * y);
  return MonomialIdeal(a.ring_ptr(), std::move(gens), a.inverted() | b.inverted());
}

MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& x : a.gens())
    for (const auto& y : b.gens())
      gens.push_back(lcm(x, y));
  return MonomialIdeal(a.ring_ptr(), std::move(gens), a.inverted() | b.inverted());
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f) {
  fglocus::require_same_ring(ideal.ring(), f.ring());
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& m : ideal.gens())
    gens.push_back(quotient_exact(m, gcd(m, f)));
  return MonomialIdeal(ideal.ring_ptr(), std::move(gens), ideal.inverted());
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  require_same_ring(ideal, by);
  if (by.is_zero())
    throw InvalidArgument("colon by the zero ideal");
  std::optional<MonomialIdeal> acc;
  for (const auto& f : by.gens()) {
    auto part = colon(ideal, f);
    acc = acc ? intersection(*acc, part) : std::move(part);
  }
  return acc->with_inverted(ideal.inverted());
}

MonomialIdeal bracket_power(const MonomialIdeal& ideal, std::uint64_t q) {
  if (q == 0)
    throw InvalidArgument("bracket power exponent must be positive");
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& m : ideal.gens())
    gens.push_back(pow(m, q));
  return MonomialIdeal(ideal.ring_ptr(), std::move(gens), ideal.inverted());
}

MonomialIdeal lcm_pairs_ideal(const MonomialIdeal& ideal) {
  const auto& g = ideal.gens();
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      gens.push_back(lcm(g[i], g[j]));
  return MonomialIdeal(ideal.ring_ptr(), std::move(gens), ideal.inverted());
}

MonomialIdeal generator_lcm_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_zero())
    return MonomialIdeal(ideal.ring_ptr(), {}, ideal.inverted());
  Monomial acc(ideal.ring_ptr());
  for (const auto& m : ideal.gens())
    acc = lcm(acc, m);
  return MonomialIdeal(ideal.ring_ptr(), {std::move(acc)}, ideal.inverted());
}

MonomialIdeal monomial_localization(const MonomialIdeal& ideal, Face face) {
  if (!face.is_subset_of(Face::full(ideal.ring().size())))
    throw InvalidArgument("face " + face.to_string() + " exceeds the variable range");
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& m : ideal.gens())
    gens.push_back(m.without_variables(face));
  return MonomialIdeal(ideal.ring_ptr(), std::move(gens), ideal.inverted() | face);
}

bool is_complete_intersection(const MonomialIdeal& ideal) {
  if (ideal.is_unit())
    return false;
  Face seen;
  for (const auto& m : ideal.gens()) {
    Face s = m.support();
    if (s.intersects(seen))
      return false;
    seen = seen | s;
  }
  return true;
}

} // namespace fglocus
