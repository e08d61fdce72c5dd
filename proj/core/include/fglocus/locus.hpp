#ifndef FGLOCUS_LOCUS_HPP
#define FGLOCUS_LOCUS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fglocus/face.hpp"
#include "fglocus/monomial.hpp"
#include "fglocus/monomial_ideal.hpp"
#include "fglocus/simplicial_complex.hpp"

namespace fglocus {

enum class Method { algebraic, combinatorial, both, nci };

std::string_view to_string(Method method);
/// Accepts "algebraic", "combinatorial", "both"; throws InvalidArgument otherwise.
Method parse_method(std::string_view text);

/// Why a face belongs to the locus.
struct Witness {
  /// A generator of (K^[2] : K) outside K^[2] + (lcm), with K = (I : x_F).
  std::optional<Monomial> algebraic;
  /// A free face of the cone-reduced link of F.
  std::optional<Face> combinatorial;
};

struct LocusEntry {
  Face face;
  Witness witness;
};

/// The faces F whose localized Frobenius algebra is not finitely generated,
/// and J = ∩ p_F. The closed set V(J) is the non-finitely-generated locus;
/// J = (1) encodes the empty locus.
struct LocusResult {
  std::vector<LocusEntry> igl; ///< downward closed, canonical face order
  std::vector<Face> maximal;   ///< inclusion-maximal faces of igl
  MonomialIdeal j_ideal;
  Method method;

  bool empty() const { return igl.empty(); }
  std::vector<Face> faces() const;
};

struct LocusOptions {
  /// Skip testing F when a codimension-one subface of F is already known to be
  /// outside the locus. The locus is downward closed, so F is outside too.
  bool prune = true;
};

/// ∩ p_F over `faces`, or (1) when there are none.
MonomialIdeal defining_ideal(const std::vector<Face>& faces, const RingPtr& ring);

/// Tests K = (I : x_F) with the finite-generation criterion for every face F
/// of Δ(I). Throws InvalidArgument for the unit ideal or non-squarefree input.
LocusResult igl_algebraic(const MonomialIdeal& ideal, LocusOptions options = {});

/// F is in the locus iff the cone reduction of link(F) has a free face.
LocusResult igl_combinatorial(const SimplicialComplex& complex, const RingPtr& ring,
                              LocusOptions options = {});
LocusResult igl_combinatorial(const SimplicialComplex& complex, LocusOptions options = {});

/// A free face of the cone-reduced link of F, if one exists.
std::optional<Face> link_obstruction(const SimplicialComplex& complex, Face face);

/// Runs one or both routes. With Method::both the face sets must coincide,
/// otherwise MethodDisagreement is thrown; witnesses from both are merged.
LocusResult compute_locus(const MonomialIdeal& ideal, Method method, LocusOptions options = {});
LocusResult compute_locus(const SimplicialComplex& complex, const RingPtr& ring, Method method,
                          LocusOptions options = {});

/// Nearly complete intersection: squarefree, every generator of degree >= 2,
/// not a complete intersection, and I(p_{([n] \ supp I) ∪ {i}}) is a complete
/// intersection for every i in supp I.
bool is_nci(const MonomialIdeal& ideal);

/// For an NCI ideal the locus is empty or V(x_i : i in supp I).
/// Throws InvalidArgument if the ideal is not NCI.
LocusResult nci_locus(const MonomialIdeal& ideal);

} // namespace fglocus

#endif
