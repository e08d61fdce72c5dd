#ifndef FGLOCUS_TOOLS_PROBLEM_HPP
#define FGLOCUS_TOOLS_PROBLEM_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "fglocus/error.hpp"
#include "fglocus/face.hpp"
#include "fglocus/monomial.hpp"
#include "fglocus/monomial_ideal.hpp"
#include "fglocus/ring_context.hpp"
#include "fglocus/simplicial_complex.hpp"

namespace fglocus::cli {

class ParseError : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

/// A parsed input file: the ring plus either generators or facets.
///
///   vars: x, y, z, w, a, b
///   ideal: x*w, y*w, x*a
/// or
///   facets: 1 2 3; 1 2 6; 3 4 5
///
/// `#` starts a comment. Facet indices are 1-based; `{}` is the empty face.
struct ProblemSpec {
  RingPtr ring;
  std::variant<MonomialIdeal, SimplicialComplex> source;

  bool from_facets() const { return std::holds_alternative<SimplicialComplex>(source); }
  /// The ideal itself, or the Stanley-Reisner ideal of the facets.
  MonomialIdeal ideal() const;
  /// The complex itself, or Δ(I). Throws for the unit ideal.
  SimplicialComplex complex() const;
};

/// Products of variables joined by `*`, each with an optional `^k`; "1" is the
/// constant monomial. Whitespace is ignored.
Monomial parse_monomial(std::string_view text, const RingPtr& ring);

/// Comma-separated generators; an empty list is the zero ideal. Generators
/// must be squarefree.
MonomialIdeal parse_generators(std::string_view text, const RingPtr& ring);

/// 1-based vertex indices separated by spaces or commas, optionally in braces.
/// The empty string is the empty face.
Face parse_face(std::string_view text, std::size_t n);

ProblemSpec parse_problem(std::string_view text);

} // namespace fglocus::cli

#endif
