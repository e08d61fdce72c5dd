#include "problem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace fglocus::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

std::uint64_t parse_unsigned(std::string_view digits, std::string_view context) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
    throw ParseError("expected a number in '" + std::string(context) + "'");
  return value;
}

} // namespace

MonomialIdeal ProblemSpec::ideal() const {
  if (auto* i = std::get_if<MonomialIdeal>(&source))
    return *i;
  return to_ideal(std::get<SimplicialComplex>(source), ring);
}

SimplicialComplex ProblemSpec::complex() const {
  if (auto* c = std::get_if<SimplicialComplex>(&source))
    return *c;
  return from_ideal(std::get<MonomialIdeal>(source));
}

Monomial parse_monomial(std::string_view text, const RingPtr& ring) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      compact += c;
  if (compact.empty())
    throw ParseError("empty monomial");

  std::vector<std::uint64_t> exps(ring->size(), 0);
  for (auto factor : split(compact, '*')) {
    if (factor.empty())
      throw ParseError("malformed monomial '" + std::string(text) + "'");
    std::string_view base = factor;
    std::uint64_t power = 1;
    if (auto caret = factor.find('^'); caret != std::string_view::npos) {
      base = factor.substr(0, caret);
      power = parse_unsigned(factor.substr(caret + 1), factor);
    }
    if (base == "1")
      continue;
    if (!RingContext::is_valid_name(base))
      throw ParseError("malformed token '" + std::string(factor) + "'");
    auto index = ring->index_of(base);
    if (!index)
      throw ParseError("unknown variable '" + std::string(base) + "'");
    exps[*index] += power;
    if (exps[*index] > Monomial::kMaxExponent)
      throw ExponentOverflow("exponent of " + std::string(base) + " exceeds the ceiling " +
                             std::to_string(Monomial::kMaxExponent));
  }
  return Monomial(ring, std::vector<Monomial::Exponent>(exps.begin(), exps.end()));
}

MonomialIdeal parse_generators(std::string_view text, const RingPtr& ring) {
  std::vector<Monomial> gens;
  if (!trim(text).empty()) {
    for (auto item : split(text, ',')) {
      auto m = parse_monomial(item, ring);
      if (!m.is_squarefree())
        throw ParseError("generator '" + m.to_string() + "' is not squarefree");
      gens.push_back(std::move(m));
    }
  }
  return MonomialIdeal(ring, std::move(gens));
}

Face parse_face(std::string_view text, std::size_t n) {
  std::string cleaned;
  for (char c : text)
    cleaned += (c == ',' || c == '{' || c == '}') ? ' ' : c;
  std::istringstream in(cleaned);
  Face face;
  std::string token;
  while (in >> token) {
    auto v = parse_unsigned(token, text);
    if (v < 1 || v > n)
      throw ParseError("vertex " + token + " is outside [1, " + std::to_string(n) + "]");
    face = face.with(static_cast<std::size_t>(v - 1));
  }
  return face;
}

ProblemSpec parse_problem(std::string_view text) {
  std::optional<RingPtr> ring;
  std::optional<std::string> ideal_text;
  std::optional<std::string> facets_text;

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    auto body = trim(line);
    if (body.empty())
      continue;
    auto colon = body.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("expected 'key: value', got '" + std::string(body) + "'");
    auto key = trim(body.substr(0, colon));
    auto value = trim(body.substr(colon + 1));
    if (key == "vars") {
      if (ring)
        throw ParseError("duplicate 'vars' line");
      std::vector<std::string> names;
      for (auto name : split(value, ','))
        names.emplace_back(trim(name));
      ring = RingContext::make(std::move(names));
    } else if (key == "ideal") {
      if (ideal_text || facets_text)
        throw ParseError("exactly one of 'ideal' or 'facets' is allowed");
      ideal_text = std::string(value);
    } else if (key == "facets") {
      if (ideal_text || facets_text)
        throw ParseError("exactly one of 'ideal' or 'facets' is allowed");
      facets_text = std::string(value);
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'");
    }
  }
  if (!ring)
    throw ParseError("missing 'vars' line");
  if (!ideal_text && !facets_text)
    throw ParseError("missing 'ideal' or 'facets' line");

  if (ideal_text)
    return ProblemSpec{*ring, parse_generators(*ideal_text, *ring)};

  const std::size_t n = (*ring)->size();
  std::vector<Face> facets;
  if (!trim(*facets_text).empty())
    for (auto item : split(*facets_text, ';'))
      facets.push_back(parse_face(item, n));
  return ProblemSpec{*ring, SimplicialComplex(n, std::move(facets))};
}

} // namespace fglocus::cli
