#include "report.hpp"

#include <sstream>

namespace fglocus::cli {

using nlohmann::json;

namespace {

// ---- formatting helpers ----------------------------------------------------

std::string face_text(const VertexList& face) {
  std::string s = "{";
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i != 0)
      s += ',';
    s += std::to_string(face[i]);
  }
  return s + "}";
}

std::string ideal_text(const IdealView& ideal) {
  if (ideal.empty())
    return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i != 0)
      s += ", ";
    s += ideal[i].text;
  }
  return s + ")";
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0)
      s += sep;
    s += items[i];
  }
  return s;
}

std::string faces_text(const std::vector<VertexList>& faces) {
  if (faces.empty())
    return "none";
  std::vector<std::string> parts;
  for (const auto& f : faces)
    parts.push_back(face_text(f));
  return join(parts, " ");
}

// ---- json helpers ----------------------------------------------------------

json monomial_json(const MonomialView& m) { return {{"exponents", m.exponents}, {"text", m.text}}; }

MonomialView monomial_from(const json& j) {
  return {j.at("exponents").get<std::vector<std::uint32_t>>(), j.at("text").get<std::string>()};
}

json ideal_json(const IdealView& ideal) {
  json arr = json::array();
  for (const auto& m : ideal)
    arr.push_back(monomial_json(m));
  return arr;
}

IdealView ideal_from(const json& j) {
  IdealView out;
  for (const auto& m : j)
    out.push_back(monomial_from(m));
  return out;
}

json optional_monomial_json(const std::optional<MonomialView>& m) {
  return m ? monomial_json(*m) : json(nullptr);
}

std::optional<MonomialView> optional_monomial_from(const json& j) {
  if (j.is_null())
    return std::nullopt;
  return monomial_from(j);
}

std::vector<VertexList> faces_from(const json& j) { return j.get<std::vector<VertexList>>(); }

// ---- per-report json -------------------------------------------------------

json locus_json(const LocusReport& r) {
  json igl = json::array();
  for (const auto& e : r.igl) {
    json witness = {{"algebraic", optional_monomial_json(e.algebraic_witness)},
                    {"combinatorial",
                     e.combinatorial_witness ? json(*e.combinatorial_witness) : json(nullptr)}};
    igl.push_back({{"face", e.face}, {"prime", ideal_json(e.prime)}, {"witness", witness}});
  }
  return {{"command", "locus"},         {"vars", r.vars},
          {"ideal", ideal_json(r.ideal)}, {"igl", igl},
          {"igl_maximal", r.igl_maximal}, {"j_ideal", ideal_json(r.j_ideal)},
          {"empty_locus", r.empty_locus}, {"method", r.method}};
}

LocusReport locus_from(const json& j) {
  LocusReport r;
  r.vars = j.at("vars").get<std::vector<std::string>>();
  r.ideal = ideal_from(j.at("ideal"));
  for (const auto& e : j.at("igl")) {
    LocusEntryView entry;
    entry.face = e.at("face").get<VertexList>();
    entry.prime = ideal_from(e.at("prime"));
    const auto& w = e.at("witness");
    entry.algebraic_witness = optional_monomial_from(w.at("algebraic"));
    if (!w.at("combinatorial").is_null())
      entry.combinatorial_witness = w.at("combinatorial").get<VertexList>();
    r.igl.push_back(std::move(entry));
  }
  r.igl_maximal = faces_from(j.at("igl_maximal"));
  r.j_ideal = ideal_from(j.at("j_ideal"));
  r.empty_locus = j.at("empty_locus").get<bool>();
  r.method = j.at("method").get<std::string>();
  return r;
}

json check_json(const CheckReport& r) {
  return {{"command", "check"},
          {"vars", r.vars},
          {"ideal", ideal_json(r.ideal)},
          {"face", r.face},
          {"colon", ideal_json(r.colon)},
          {"finitely_generated", r.finitely_generated},
          {"witness", optional_monomial_json(r.witness)}};
}

CheckReport check_from(const json& j) {
  return {j.at("vars").get<std::vector<std::string>>(),
          ideal_from(j.at("ideal")),
          j.at("face").get<VertexList>(),
          ideal_from(j.at("colon")),
          j.at("finitely_generated").get<bool>(),
          optional_monomial_from(j.at("witness"))};
}

json link_json(const LinkReport& r) {
  return {{"command", "link"},         {"vars", r.vars},
          {"face", r.face},            {"facets", r.facets},
          {"ideal", ideal_json(r.ideal)}, {"cone_points", r.cone_points},
          {"free_faces", r.free_faces}, {"obstructed", r.obstructed}};
}

LinkReport link_from(const json& j) {
  return {j.at("vars").get<std::vector<std::string>>(),
          j.at("face").get<VertexList>(),
          faces_from(j.at("facets")),
          ideal_from(j.at("ideal")),
          j.at("cone_points").get<VertexList>(),
          faces_from(j.at("free_faces")),
          j.at("obstructed").get<bool>()};
}

json oracle_json(const OracleRunReport& r) {
  json degrees = json::array();
  for (const auto& d : r.degrees)
    degrees.push_back({{"e", d.e}, {"vanishes", d.vanishes}});
  return {{"command", "oracle"},  {"vars", r.vars},   {"ideal", ideal_json(r.ideal)},
          {"p", r.p},             {"e_max", r.e_max}, {"k", r.k},
          {"degrees", degrees},   {"generated", r.generated},
          {"fg_criterion", r.fg_criterion}};
}

OracleRunReport oracle_from(const json& j) {
  OracleRunReport r;
  r.vars = j.at("vars").get<std::vector<std::string>>();
  r.ideal = ideal_from(j.at("ideal"));
  r.p = j.at("p").get<unsigned>();
  r.e_max = j.at("e_max").get<unsigned>();
  r.k = j.at("k").get<unsigned>();
  for (const auto& d : j.at("degrees"))
    r.degrees.push_back({d.at("e").get<unsigned>(), d.at("vanishes").get<bool>()});
  r.generated = j.at("generated").get<bool>();
  r.fg_criterion = j.at("fg_criterion").get<bool>();
  return r;
}

json nci_json(const NciReport& r) {
  return {{"command", "nci"},
          {"vars", r.vars},
          {"ideal", ideal_json(r.ideal)},
          {"is_nci", r.is_nci},
          {"locus", r.locus ? locus_json(*r.locus) : json(nullptr)}};
}

NciReport nci_from(const json& j) {
  NciReport r;
  r.vars = j.at("vars").get<std::vector<std::string>>();
  r.ideal = ideal_from(j.at("ideal"));
  r.is_nci = j.at("is_nci").get<bool>();
  if (!j.at("locus").is_null())
    r.locus = locus_from(j.at("locus"));
  return r;
}

// ---- text ------------------------------------------------------------------

void locus_text(std::ostream& out, const LocusReport& r) {
  out << "ring: " << join(r.vars, ", ") << '\n';
  out << "ideal: " << ideal_text(r.ideal) << '\n';
  out << "method: " << r.method << '\n';
  if (r.empty_locus) {
    out << "locus: empty (finitely generated at every prime)\n";
  } else {
    out << "locus: not finitely generated on V(J)\n";
    out << "IGL faces (" << r.igl.size() << "):\n";
    for (const auto& e : r.igl) {
      out << "  " << face_text(e.face) << "  prime " << ideal_text(e.prime);
      if (e.algebraic_witness)
        out << "  algebraic witness " << e.algebraic_witness->text;
      if (e.combinatorial_witness)
        out << "  free face " << face_text(*e.combinatorial_witness);
      out << '\n';
    }
    out << "maximal faces: " << faces_text(r.igl_maximal) << '\n';
  }
  out << "J = " << ideal_text(r.j_ideal) << '\n';
}

struct TextRenderer {
  std::ostream& out;

  void operator()(const LocusReport& r) const { locus_text(out, r); }

  void operator()(const CheckReport& r) const {
    out << "ring: " << join(r.vars, ", ") << '\n';
    out << "ideal: " << ideal_text(r.ideal) << '\n';
    out << "face: " << face_text(r.face) << '\n';
    out << "(I : x_F) = " << ideal_text(r.colon) << '\n';
    if (r.finitely_generated) {
      out << "finitely generated\n";
    } else {
      out << "not finitely generated";
      if (r.witness)
        out << " (witness " << r.witness->text << ")";
      out << '\n';
    }
  }

  void operator()(const LinkReport& r) const {
    out << "ring: " << join(r.vars, ", ") << '\n';
    out << "face: " << face_text(r.face) << '\n';
    out << "link facets: " << faces_text(r.facets) << '\n';
    out << "link ideal: " << ideal_text(r.ideal) << '\n';
    out << "cone points: " << face_text(r.cone_points) << '\n';
    out << "free faces after cone reduction: " << faces_text(r.free_faces) << '\n';
    out << (r.obstructed ? "obstructed\n" : "unobstructed\n");
  }

  void operator()(const OracleRunReport& r) const {
    out << "ring: " << join(r.vars, ", ") << '\n';
    out << "ideal: " << ideal_text(r.ideal) << '\n';
    out << "oracle: p = " << r.p << ", e_max = " << r.e_max << ", k = " << r.k << '\n';
    for (const auto& d : r.degrees)
      out << "  e = " << d.e << ": " << (d.vanishes ? "vanishes" : "does not vanish") << '\n';
    out << "k-generated up to e_max: " << (r.generated ? "yes" : "no") << '\n';
    out << "criterion: " << (r.fg_criterion ? "finitely generated" : "not finitely generated")
        << '\n';
  }

  void operator()(const NciReport& r) const {
    if (r.locus) {
      out << "nearly complete intersection: yes\n";
      locus_text(out, *r.locus);
    } else {
      out << "ring: " << join(r.vars, ", ") << '\n';
      out << "ideal: " << ideal_text(r.ideal) << '\n';
      out << "nearly complete intersection: no\n";
    }
  }
};

} // namespace

MonomialView view(const Monomial& m) {
  return {std::vector<std::uint32_t>(m.exponents().begin(), m.exponents().end()), m.to_string()};
}

IdealView view(const MonomialIdeal& ideal) {
  IdealView out;
  out.reserve(ideal.size());
  for (const auto& g : ideal.gens())
    out.push_back(view(g));
  return out;
}

VertexList view(Face face) {
  VertexList out;
  for (auto v : face.vertices())
    out.push_back(v + 1);
  return out;
}

LocusReport make_locus_report(const MonomialIdeal& ideal, const LocusResult& result) {
  LocusReport r;
  r.vars = ideal.ring().names();
  r.ideal = view(ideal);
  for (const auto& e : result.igl) {
    LocusEntryView entry;
    entry.face = view(e.face);
    entry.prime = view(face_prime(e.face, ideal.ring_ptr()));
    if (e.witness.algebraic)
      entry.algebraic_witness = view(*e.witness.algebraic);
    if (e.witness.combinatorial)
      entry.combinatorial_witness = view(*e.witness.combinatorial);
    r.igl.push_back(std::move(entry));
  }
  for (Face f : result.maximal)
    r.igl_maximal.push_back(view(f));
  r.j_ideal = view(result.j_ideal);
  r.empty_locus = result.empty();
  r.method = std::string(to_string(result.method));
  return r;
}

CheckReport make_check_report(const MonomialIdeal& ideal, Face face) {
  auto complex = from_ideal(ideal);
  if (!complex.is_face(face))
    throw InvalidArgument(face.to_string() + " is not a face of " + complex.to_string());
  auto k = colon(ideal, face_monomial(face, ideal.ring_ptr()));
  auto witness = fg_criterion_witness(k);
  CheckReport r;
  r.vars = ideal.ring().names();
  r.ideal = view(ideal);
  r.face = view(face);
  r.colon = view(k);
  r.finitely_generated = !witness;
  if (witness)
    r.witness = view(*witness);
  return r;
}

LinkReport make_link_report(const SimplicialComplex& complex, const RingPtr& ring, Face face) {
  auto lk = link(complex, face);
  auto reduced = cone_reduction(lk);
  LinkReport r;
  r.vars = ring->names();
  r.face = view(face);
  for (Face f : lk.facets())
    r.facets.push_back(view(f));
  r.ideal = view(to_ideal(lk, ring));
  r.cone_points = view(cone_points(lk));
  for (Face f : free_faces(reduced))
    r.free_faces.push_back(view(f));
  r.obstructed = !r.free_faces.empty();
  return r;
}

OracleRunReport make_oracle_report(const MonomialIdeal& ideal, const OracleParams& params) {
  auto oracle = check_k_generation(ideal, params);
  OracleRunReport r;
  r.vars = ideal.ring().names();
  r.ideal = view(ideal);
  r.p = params.p;
  r.e_max = params.e_max;
  r.k = params.k;
  for (const auto& d : oracle.degrees)
    r.degrees.push_back({d.e, d.vanishes});
  r.generated = oracle.generated;
  r.fg_criterion = fg_criterion(ideal);
  return r;
}

NciReport make_nci_report(const MonomialIdeal& ideal) {
  NciReport r;
  r.vars = ideal.ring().names();
  r.ideal = view(ideal);
  r.is_nci = is_nci(ideal);
  if (r.is_nci)
    r.locus = make_locus_report(ideal, nci_locus(ideal));
  return r;
}

nlohmann::json to_json(const Report& report) {
  return std::visit(
      [](const auto& r) -> json {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, LocusReport>)
          return locus_json(r);
        else if constexpr (std::is_same_v<T, CheckReport>)
          return check_json(r);
        else if constexpr (std::is_same_v<T, LinkReport>)
          return link_json(r);
        else if constexpr (std::is_same_v<T, OracleRunReport>)
          return oracle_json(r);
        else
          return nci_json(r);
      },
      report);
}

Report report_from_json(const nlohmann::json& j) {
  const auto command = j.at("command").get<std::string>();
  if (command == "locus")
    return locus_from(j);
  if (command == "check")
    return check_from(j);
  if (command == "link")
    return link_from(j);
  if (command == "oracle")
    return oracle_from(j);
  if (command == "nci")
    return nci_from(j);
  throw ParseError("unknown report command '" + command + "'");
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  std::visit(TextRenderer{out}, report);
  return out.str();
}

} // namespace fglocus::cli
