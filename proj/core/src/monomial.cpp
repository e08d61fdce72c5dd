#include "fglocus/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "fglocus/error.hpp"

namespace fglocus {

namespace {

Monomial::Exponent checked(std::uint64_t e) {
  if (e > Monomial::kMaxExponent)
    throw ExponentOverflow("exponent " + std::to_string(e) + " exceeds ceiling " +
                           std::to_string(Monomial::kMaxExponent));
  return static_cast<Monomial::Exponent>(e);
}

template <typename Op>
Monomial zip(const Monomial& a, const Monomial& b, Op op) {
  require_same_ring(a.ring(), b.ring());
  auto ea = a.exponents();
  auto eb = b.exponents();
  std::vector<Monomial::Exponent> out(ea.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = op(ea[i], eb[i]);
  return Monomial(a.ring_ptr(), std::move(out));
}

} // namespace

Monomial::Monomial(RingPtr ring) : ring_(std::move(ring)), exponents_(ring_->size(), 0) {}

Monomial::Monomial(RingPtr ring, std::vector<Exponent> exponents)
    : ring_(std::move(ring)), exponents_(std::move(exponents)) {
  if (exponents_.size() != ring_->size())
    throw InvalidArgument("exponent vector length does not match the ring");
  for (auto e : exponents_)
    checked(e);
}

Monomial Monomial::variable(RingPtr ring, std::size_t i) {
  Monomial m(std::move(ring));
  if (i >= m.exponents_.size())
    throw InvalidArgument("variable index out of range");
  m.exponents_[i] = 1;
  return m;
}

Monomial Monomial::from_face(RingPtr ring, Face face) {
  Monomial m(std::move(ring));
  if (!face.is_subset_of(Face::full(m.exponents_.size())))
    throw InvalidArgument("face " + face.to_string() + " exceeds the variable range");
  for (auto v : face.vertices())
    m.exponents_[v] = 1;
  return m;
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e <= 1; });
}

Face Monomial::support() const {
  Face f;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] != 0)
      f = f.with(i);
  return f;
}

Monomial Monomial::without_variables(Face vars) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < m.exponents_.size(); ++i)
    if (vars.contains(i))
      m.exponents_[i] = 0;
  return m;
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0)
      continue;
    if (!s.empty())
      s += '*';
    s += ring_->name(i);
    if (exponents_[i] > 1)
      s += '^' + std::to_string(exponents_[i]);
  }
  return s.empty() ? "1" : s;
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_ring(a.ring(), b.ring());
  auto ea = a.exponents();
  auto eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (ea[i] > eb[i])
      return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  return zip(a, b, [](auto x, auto y) { return std::max(x, y); });
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  return zip(a, b, [](auto x, auto y) { return std::min(x, y); });
}

Monomial quotient_exact(const Monomial& a, const Monomial& b) {
  if (!divides(b, a))
    throw InvalidArgument(b.to_string() + " does not divide " + a.to_string());
  return zip(a, b, [](auto x, auto y) { return x - y; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  return zip(a, b, [](auto x, auto y) { return checked(std::uint64_t{x} + y); });
}

Monomial pow(const Monomial& m, std::uint64_t q) {
  std::vector<Monomial::Exponent> out(m.exponents().begin(), m.exponents().end());
  for (auto& e : out) {
    if (e != 0 && q > Monomial::kMaxExponent)
      throw ExponentOverflow("power " + std::to_string(q) + " exceeds the exponent ceiling");
    e = checked(std::uint64_t{e} * q);
  }
  return Monomial(m.ring_ptr(), std::move(out));
}

} // namespace fglocus
