#ifndef FGLOCUS_TOOLS_REPORT_HPP
#define FGLOCUS_TOOLS_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fglocus/frobenius.hpp"
#include "fglocus/locus.hpp"
#include "problem.hpp"

namespace fglocus::cli {

using VertexList = std::vector<std::size_t>; // 1-based

struct MonomialView {
  std::vector<std::uint32_t> exponents;
  std::string text;
  bool operator==(const MonomialView&) const = default;
};
using IdealView = std::vector<MonomialView>;

struct LocusEntryView {
  VertexList face;
  IdealView prime;
  std::optional<MonomialView> algebraic_witness;
  std::optional<VertexList> combinatorial_witness;
  bool operator==(const LocusEntryView&) const = default;
};

struct LocusReport {
  std::vector<std::string> vars;
  IdealView ideal;
  std::vector<LocusEntryView> igl;
  std::vector<VertexList> igl_maximal;
  IdealView j_ideal;
  bool empty_locus = true;
  std::string method;
  bool operator==(const LocusReport&) const = default;
};

struct CheckReport {
  std::vector<std::string> vars;
  IdealView ideal;
  VertexList face;
  IdealView colon;
  bool finitely_generated = true;
  std::optional<MonomialView> witness;
  bool operator==(const CheckReport&) const = default;
};

struct LinkReport {
  std::vector<std::string> vars;
  VertexList face;
  std::vector<VertexList> facets;
  IdealView ideal;
  VertexList cone_points;
  std::vector<VertexList> free_faces;
  bool obstructed = false;
  bool operator==(const LinkReport&) const = default;
};

struct OracleDegreeView {
  unsigned e = 0;
  bool vanishes = true;
  bool operator==(const OracleDegreeView&) const = default;
};

struct OracleRunReport {
  std::vector<std::string> vars;
  IdealView ideal;
  unsigned p = 2;
  unsigned e_max = 3;
  unsigned k = 1;
  std::vector<OracleDegreeView> degrees;
  bool generated = true;
  bool fg_criterion = true;
  bool operator==(const OracleRunReport&) const = default;
};

struct NciReport {
  std::vector<std::string> vars;
  IdealView ideal;
  bool is_nci = false;
  std::optional<LocusReport> locus;
  bool operator==(const NciReport&) const = default;
};

using Report = std::variant<LocusReport, CheckReport, LinkReport, OracleRunReport, NciReport>;

MonomialView view(const Monomial& m);
IdealView view(const MonomialIdeal& ideal);
VertexList view(Face face);

LocusReport make_locus_report(const MonomialIdeal& ideal, const LocusResult& result);
CheckReport make_check_report(const MonomialIdeal& ideal, Face face);
LinkReport make_link_report(const SimplicialComplex& complex, const RingPtr& ring, Face face);
OracleRunReport make_oracle_report(const MonomialIdeal& ideal, const OracleParams& params);
NciReport make_nci_report(const MonomialIdeal& ideal);

nlohmann::json to_json(const Report& report);
/// Inverse of to_json; dispatches on the "command" field.
Report report_from_json(const nlohmann::json& j);
std::string render_text(const Report& report);

} // namespace fglocus::cli

#endif
