#include "fglocus/simplicial_complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "fglocus/error.hpp"

namespace fglocus {

namespace {

std::vector<Face> maximal_sets(std::vector<Face> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Face> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < sets.size() && !covered; ++j)
      covered = j != i && sets[i].is_subset_of(sets[j]);
    if (!covered)
      out.push_back(sets[i]);
  }
  return out;
}

std::vector<Face> minimal_sets(std::vector<Face> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Face> out;
  // Canonical order is by size, so any proper subset appears earlier.
  for (Face s : sets)
    if (std::none_of(out.begin(), out.end(), [&](Face m) { return m.is_subset_of(s); }))
      out.push_back(s);
  return out;
}

void collect_transversals(const std::vector<Face>& edges, Face universe, Face cover,
                          std::vector<Face>& found) {
  if (std::any_of(found.begin(), found.end(), [&](Face t) { return t.is_subset_of(cover); }))
    return;
  const Face* unhit = nullptr;
  for (const auto& e : edges) {
    if (e.intersects(cover))
      continue;
    if (unhit == nullptr || (e & universe).size() < (*unhit & universe).size())
      unhit = &e;
  }
  if (unhit == nullptr) {
    found.push_back(cover);
    return;
  }
  for (auto v : (*unhit & universe).vertices())
    collect_transversals(edges, universe, cover.with(v), found);
}

} // namespace

SimplicialComplex::SimplicialComplex(std::size_t n, std::vector<Face> facets)
    : SimplicialComplex(n, std::move(facets), Face::full(n)) {}

SimplicialComplex::SimplicialComplex(std::size_t n, std::vector<Face> facets, Face ground)
    : n_(n), ground_(ground) {
  if (n == 0 || n > RingContext::kMaxVariables)
    throw InvalidArgument("vertex count must lie in [1, " +
                          std::to_string(RingContext::kMaxVariables) + "]");
  if (!ground.is_subset_of(Face::full(n)))
    throw InvalidArgument("ground set exceeds the vertex range");
  for (Face f : facets)
    if (!f.is_subset_of(ground))
      throw InvalidArgument("facet " + f.to_string() + " is not inside the ground set");
  facets_ = maximal_sets(std::move(facets));
}

bool SimplicialComplex::is_face(Face f) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](Face g) { return f.is_subset_of(g); });
}

std::size_t SimplicialComplex::facet_count_containing(Face f) const {
  return static_cast<std::size_t>(
      std::count_if(facets_.begin(), facets_.end(), [&](Face g) { return f.is_subset_of(g); }));
}

std::string SimplicialComplex::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (i != 0)
      s += ',';
    s += facets_[i].to_string();
  }
  return s + "]";
}

std::vector<Face> faces(const SimplicialComplex& complex) {
  std::unordered_set<Face::Bits> seen;
  std::vector<Face> out;
  for (Face facet : complex.facets()) {
    const Face::Bits mask = facet.bits();
    // Every submask of the facet, including the facet itself and the empty set.
    for (Face::Bits sub = mask;; sub = (sub - 1) & mask) {
      if (seen.insert(sub).second)
        out.emplace_back(sub);
      if (sub == 0)
        break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex link(const SimplicialComplex& complex, Face face) {
  if (!complex.is_face(face))
    throw InvalidArgument(face.to_string() + " is not a face of " + complex.to_string());
  std::vector<Face> facets;
  for (Face g : complex.facets())
    if (face.is_subset_of(g))
      facets.push_back(g - face);
  return SimplicialComplex(complex.n(), std::move(facets), complex.ground() - face);
}

std::vector<Face> free_faces(const SimplicialComplex& complex) {
  std::vector<Face> out;
  for (Face f : faces(complex)) {
    if (f.empty())
      continue;
    Face only;
    std::size_t count = 0;
    for (Face g : complex.facets()) {
      if (f.is_subset_of(g)) {
        only = g;
        ++count;
      }
    }
    if (count == 1 && only != f)
      out.push_back(f);
  }
  return out;
}

bool has_free_face(const SimplicialComplex& complex) { return !free_faces(complex).empty(); }

Face cone_points(const SimplicialComplex& complex) {
  if (complex.is_void())
    return {};
  Face common = complex.facets().front();
  for (Face g : complex.facets())
    common = common & g;
  return common;
}

SimplicialComplex cone_reduction(const SimplicialComplex& complex) {
  const Face apex = cone_points(complex);
  std::vector<Face> facets;
  facets.reserve(complex.facets().size());
  for (Face g : complex.facets())
    facets.push_back(g - apex);
  return SimplicialComplex(complex.n(), std::move(facets), complex.ground() - apex);
}

std::vector<Face> minimal_transversals(std::vector<Face> edges, Face universe) {
  edges = minimal_sets(std::move(edges));
  std::vector<Face> found;
  collect_transversals(edges, universe, Face{}, found);
  return minimal_sets(std::move(found));
}

MonomialIdeal to_ideal(const SimplicialComplex& complex, const RingPtr& ring) {
  if (ring->size() != complex.n())
    throw InvalidArgument("ring size does not match the complex");
  // A subset of the ground set is a non-face iff it meets the complement of every facet.
  std::vector<Face> complements;
  complements.reserve(complex.facets().size());
  for (Face g : complex.facets())
    complements.push_back(complex.ground() - g);
  std::vector<Monomial> gens;
  for (Face nonface : minimal_transversals(std::move(complements), complex.ground()))
    gens.push_back(Monomial::from_face(ring, nonface));
  return MonomialIdeal(ring, std::move(gens), Face::full(complex.n()) - complex.ground());
}

SimplicialComplex from_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_unit())
    throw InvalidArgument("the unit ideal has no simplicial complex");
  if (!ideal.is_squarefree())
    throw InvalidArgument("ideal " + ideal.to_string() + " is not squarefree");
  const std::size_t n = ideal.ring().size();
  const Face ground = Face::full(n) - ideal.inverted();
  std::vector<Face> supports;
  supports.reserve(ideal.size());
  for (const auto& g : ideal.gens())
    supports.push_back(g.support());
  std::vector<Face> facets;
  for (Face prime : minimal_transversals(std::move(supports), ground))
    facets.push_back(ground - prime);
  return SimplicialComplex(n, std::move(facets), ground);
}

MonomialIdeal face_prime(Face face, const RingPtr& ring) {
  return MonomialIdeal::generated_by_variables(ring, Face::full(ring->size()) - face);
}

Monomial face_monomial(Face face, const RingPtr& ring) { return Monomial::from_face(ring, face); }

} // namespace fglocus
