#ifndef FGLOCUS_SIMPLICIAL_COMPLEX_HPP
#define FGLOCUS_SIMPLICIAL_COMPLEX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "fglocus/face.hpp"
#include "fglocus/monomial.hpp"
#include "fglocus/monomial_ideal.hpp"
#include "fglocus/ring_context.hpp"

namespace fglocus {

/// A simplicial complex given by its facets, living on a ground set of vertices
/// inside {0, ..., n-1}.
///
/// Ground vertices need not be faces. Those vertices become linear generators of
/// the Stanley-Reisner ideal. Vertices outside the ground set are not part of
/// the complex at all. The ground set is everything by default; links shrink it
/// by the face they are taken at. The void complex (no facets) and the
/// irrelevant complex {∅} are distinct.
class SimplicialComplex {
public:
  /// Facets are reduced to the inclusion-maximal ones and sorted canonically.
  SimplicialComplex(std::size_t n, std::vector<Face> facets);
  SimplicialComplex(std::size_t n, std::vector<Face> facets, Face ground);

  static SimplicialComplex void_complex(std::size_t n) { return SimplicialComplex(n, {}); }
  static SimplicialComplex irrelevant(std::size_t n) { return SimplicialComplex(n, {Face{}}); }
  static SimplicialComplex simplex(std::size_t n) { return SimplicialComplex(n, {Face::full(n)}); }

  std::size_t n() const { return n_; }
  Face ground() const { return ground_; }
  const std::vector<Face>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool is_face(Face f) const;
  /// Number of facets containing `f`.
  std::size_t facet_count_containing(Face f) const;

  /// "[{1,2},{2,3}]" with 1-based labels.
  std::string to_string() const;

  bool operator==(const SimplicialComplex&) const = default;

private:
  std::size_t n_;
  std::vector<Face> facets_;
  Face ground_;
};

/// Every face exactly once: the empty face first, then by increasing size,
/// lexicographic within a size.
std::vector<Face> faces(const SimplicialComplex& complex);

/// {G : G ∩ F = ∅, G ∪ F ∈ Δ}, on the ground set of Δ minus F.
/// Throws InvalidArgument if F is not a face.
SimplicialComplex link(const SimplicialComplex& complex, Face face);

/// Nonempty faces that are not facets and lie in exactly one facet.
std::vector<Face> free_faces(const SimplicialComplex& complex);
bool has_free_face(const SimplicialComplex& complex);

/// Vertices lying in every facet (empty for the void complex).
Face cone_points(const SimplicialComplex& complex);
/// Δ with its cone points deleted from every facet and from the ground set.
SimplicialComplex cone_reduction(const SimplicialComplex& complex);

/// The Stanley-Reisner ideal: x_G over the minimal non-faces G inside the
/// ground set. Variables outside the ground set are recorded as inverted.
MonomialIdeal to_ideal(const SimplicialComplex& complex, const RingPtr& ring);

/// The complex {G : x_G ∉ I} on the non-inverted variables of I.
/// Facets are complements of the minimal primes of I.
/// Throws InvalidArgument for the unit ideal or a non-squarefree ideal.
SimplicialComplex from_ideal(const MonomialIdeal& ideal);

/// Minimal subsets of `universe` meeting every edge; none if an edge misses the universe.
std::vector<Face> minimal_transversals(std::vector<Face> edges, Face universe);

/// p_F = (x_i : i ∉ F).
MonomialIdeal face_prime(Face face, const RingPtr& ring);
/// x_F.
Monomial face_monomial(Face face, const RingPtr& ring);

} // namespace fglocus

#endif
