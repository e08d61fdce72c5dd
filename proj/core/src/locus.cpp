#include "fglocus/locus.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "fglocus/error.hpp"
#include "fglocus/frobenius.hpp"

namespace fglocus {

namespace {

using FaceTest = std::function<std::optional<Witness>(Face)>;

std::vector<Face> maximal_faces(const std::vector<LocusEntry>& igl) {
  std::vector<Face> out;
  for (const auto& a : igl) {
    bool dominated = std::any_of(igl.begin(), igl.end(), [&](const LocusEntry& b) {
      return b.face != a.face && a.face.is_subset_of(b.face);
    });
    if (!dominated)
      out.push_back(a.face);
  }
  return out;
}

LocusResult assemble(std::vector<LocusEntry> igl, const RingPtr& ring, Method method) {
  auto maximal = maximal_faces(igl);
  auto j = defining_ideal(maximal, ring);
  return LocusResult{std::move(igl), std::move(maximal), std::move(j), method};
}

// Faces arrive in canonical order, so all proper subfaces of F precede F.
std::vector<LocusEntry> scan_faces(const std::vector<Face>& candidates, const FaceTest& test,
                                   LocusOptions options) {
  std::vector<LocusEntry> igl;
  std::unordered_set<Face::Bits> in_locus;
  for (Face f : candidates) {
    if (options.prune) {
      auto verts = f.vertices();
      bool below_fails = std::any_of(verts.begin(), verts.end(), [&](std::size_t v) {
        return !in_locus.contains(f.without(v).bits());
      });
      if (below_fails)
        continue;
    }
    if (auto witness = test(f)) {
      igl.push_back({f, std::move(*witness)});
      in_locus.insert(f.bits());
    }
  }
  return igl;
}

void require_locus_input(const MonomialIdeal& ideal) {
  if (ideal.is_unit())
    throw InvalidArgument("the unit ideal is not a valid input");
  if (!ideal.is_squarefree())
    throw InvalidArgument("ideal " + ideal.to_string() + " is not squarefree");
}

std::string describe(const std::vector<Face>& faces) {
  std::string s;
  for (Face f : faces)
    s += f.to_string();
  return s.empty() ? "none" : s;
}

LocusResult merge_both(LocusResult algebraic, const LocusResult& combinatorial) {
  auto a = algebraic.faces();
  auto c = combinatorial.faces();
  if (a != c)
    throw MethodDisagreement("algebraic locus " + describe(a) + " differs from combinatorial " +
                             describe(c));
  for (std::size_t i = 0; i < algebraic.igl.size(); ++i)
    algebraic.igl[i].witness.combinatorial = combinatorial.igl[i].witness.combinatorial;
  algebraic.method = Method::both;
  return algebraic;
}

} // namespace

std::string_view to_string(Method method) {
  switch (method) {
  case Method::algebraic:
    return "algebraic";
  case Method::combinatorial:
    return "combinatorial";
  case Method::both:
    return "both";
  case Method::nci:
    return "nci";
  }
  return "unknown";
}

Method parse_method(std::string_view text) {
  if (text == "algebraic")
    return Method::algebraic;
  if (text == "combinatorial")
    return Method::combinatorial;
  if (text == "both")
    return Method::both;
  throw InvalidArgument("unknown method '" + std::string(text) + "'");
}

std::vector<Face> LocusResult::faces() const {
  std::vector<Face> out;
  out.reserve(igl.size());
  for (const auto& e : igl)
    out.push_back(e.face);
  return out;
}

MonomialIdeal defining_ideal(const std::vector<Face>& faces, const RingPtr& ring) {
  if (faces.empty())
    return MonomialIdeal::unit(ring);
  MonomialIdeal j = face_prime(faces.front(), ring);
  for (std::size_t i = 1; i < faces.size(); ++i)
    j = intersection(j, face_prime(faces[i], ring));
  return j;
}

LocusResult igl_algebraic(const MonomialIdeal& ideal, LocusOptions options) {
  require_locus_input(ideal);
  const RingPtr& ring = ideal.ring_ptr();
  if (ideal.is_zero())
    return assemble({}, ring, Method::algebraic);
  const auto complex = from_ideal(ideal);
  auto test = [&](Face f) -> std::optional<Witness> {
    auto k = colon(ideal, face_monomial(f, ring));
    if (auto w = fg_criterion_witness(k))
      return Witness{std::move(w), std::nullopt};
    return std::nullopt;
  };
  return assemble(scan_faces(faces(complex), test, options), ring, Method::algebraic);
}

std::optional<Face> link_obstruction(const SimplicialComplex& complex, Face face) {
  auto reduced = cone_reduction(link(complex, face));
  auto free = free_faces(reduced);
  if (free.empty())
    return std::nullopt;
  return free.front();
}

LocusResult igl_combinatorial(const SimplicialComplex& complex, const RingPtr& ring,
                              LocusOptions options) {
  if (ring->size() != complex.n())
    throw InvalidArgument("ring size does not match the complex");
  auto test = [&](Face f) -> std::optional<Witness> {
    if (auto w = link_obstruction(complex, f))
      return Witness{std::nullopt, w};
    return std::nullopt;
  };
  return assemble(scan_faces(faces(complex), test, options), ring, Method::combinatorial);
}

LocusResult igl_combinatorial(const SimplicialComplex& complex, LocusOptions options) {
  return igl_combinatorial(complex, RingContext::indexed(complex.n()), options);
}

LocusResult compute_locus(const MonomialIdeal& ideal, Method method, LocusOptions options) {
  switch (method) {
  case Method::algebraic:
    return igl_algebraic(ideal, options);
  case Method::combinatorial:
    require_locus_input(ideal);
    return igl_combinatorial(from_ideal(ideal), ideal.ring_ptr(), options);
  case Method::both: {
    auto algebraic = igl_algebraic(ideal, options);
    require_locus_input(ideal);
    auto combinatorial = igl_combinatorial(from_ideal(ideal), ideal.ring_ptr(), options);
    return merge_both(std::move(algebraic), combinatorial);
  }
  case Method::nci:
    return nci_locus(ideal);
  }
  throw InvalidArgument("unknown method");
}

LocusResult compute_locus(const SimplicialComplex& complex, const RingPtr& ring, Method method,
                          LocusOptions options) {
  if (method == Method::combinatorial)
    return igl_combinatorial(complex, ring, options);
  auto ideal = to_ideal(complex, ring);
  if (method == Method::both) {
    auto algebraic = igl_algebraic(ideal, options);
    return merge_both(std::move(algebraic), igl_combinatorial(complex, ring, options));
  }
  return compute_locus(ideal, method, options);
}

bool is_nci(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree() || ideal.is_zero() || ideal.is_unit())
    return false;
  if (std::any_of(ideal.gens().begin(), ideal.gens().end(),
                  [](const Monomial& m) { return m.degree() < 2; }))
    return false;
  if (is_complete_intersection(ideal))
    return false;
  const Face supp = ideal.support();
  const Face outside = Face::full(ideal.ring().size()) - supp;
  auto verts = supp.vertices();
  return std::all_of(verts.begin(), verts.end(), [&](std::size_t i) {
    return is_complete_intersection(monomial_localization(ideal, outside.with(i)));
  });
}

LocusResult nci_locus(const MonomialIdeal& ideal) {
  if (!is_nci(ideal))
    throw InvalidArgument("ideal " + ideal.to_string() + " is not a nearly complete intersection");
  const RingPtr& ring = ideal.ring_ptr();
  auto witness = fg_criterion_witness(ideal);
  if (!witness)
    return assemble({}, ring, Method::nci);
  // Every subface G of [n] \ supp I has (I : x_G) = I, so all share the witness.
  const Face top = Face::full(ring->size()) - ideal.support();
  std::vector<LocusEntry> igl;
  for (Face f : faces(SimplicialComplex(ring->size(), {top})))
    igl.push_back({f, Witness{witness, std::nullopt}});
  return assemble(std::move(igl), ring, Method::nci);
}

} // namespace fglocus
