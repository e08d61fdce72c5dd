#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "report.hpp"

namespace fglocus::cli {

namespace {

struct Options {
  std::string input = "-";
  std::string method = "both";
  std::string format = "text";
  std::string face;
  unsigned p = 2;
  unsigned e_max = 3;
  unsigned k = 1;
  bool no_prune = false;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file)
    throw ParseError("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

Report run_locus(const ProblemSpec& problem, const Options& opts) {
  LocusOptions locus_opts{.prune = !opts.no_prune};
  Method method = parse_method(opts.method);
  auto ideal = problem.ideal();
  auto result = problem.from_facets()
                    ? compute_locus(std::get<SimplicialComplex>(problem.source), problem.ring,
                                    method, locus_opts)
                    : compute_locus(ideal, method, locus_opts);
  return make_locus_report(ideal, result);
}

Report run_link(const ProblemSpec& problem, const Options& opts) {
  auto complex = problem.complex();
  return make_link_report(complex, problem.ring, parse_face(opts.face, problem.ring->size()));
}

void add_common_options(CLI::App& app, Options& opts) {
  app.add_option("input", opts.input, "Problem file ('-' or omitted for stdin)");
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opts;
  CLI::App app{"Non-finitely-generated locus of Frobenius algebras of Stanley-Reisner rings",
               "fglocus"};
  app.require_subcommand(0, 1);
  add_common_options(app, opts);
  app.add_option("--method", opts.method, "Locus algorithm")
      ->check(CLI::IsMember({"algebraic", "combinatorial", "both"}));
  app.add_flag("--no-prune", opts.no_prune, "Test every face instead of pruning by closure");

  auto* locus = app.add_subcommand("locus", "Compute IGL and the defining ideal J (default)");
  add_common_options(*locus, opts);
  locus->add_option("--method", opts.method, "Locus algorithm")
      ->check(CLI::IsMember({"algebraic", "combinatorial", "both"}));
  locus->add_flag("--no-prune", opts.no_prune, "Test every face instead of pruning by closure");

  auto* check = app.add_subcommand("check", "Finite-generation criterion on (I : x_F)");
  add_common_options(*check, opts);
  check->add_option("--face", opts.face, "1-based vertices of F, e.g. \"1 3\"")->required();

  auto* link_cmd = app.add_subcommand("link", "Facets and free faces of link(F)");
  add_common_options(*link_cmd, opts);
  link_cmd->add_option("--face", opts.face, "1-based vertices of F")->required();

  auto* oracle = app.add_subcommand("oracle", "Degree-wise K_e = L_e + I^[p^e] table");
  add_common_options(*oracle, opts);
  oracle->add_option("--char", opts.p, "Characteristic p (2, 3 or 5)");
  oracle->add_option("--emax", opts.e_max, "Highest Frobenius degree (2..4)");
  oracle->add_option("-k,--k", opts.k, "Generation threshold");

  auto* nci = app.add_subcommand("nci", "Nearly-complete-intersection test and shortcut locus");
  add_common_options(*nci, opts);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    ProblemSpec problem = parse_problem(read_input(opts.input, in));
    Report report;
    if (check->parsed()) {
      report = make_check_report(problem.ideal(), parse_face(opts.face, problem.ring->size()));
    } else if (link_cmd->parsed()) {
      report = run_link(problem, opts);
    } else if (oracle->parsed()) {
      report = make_oracle_report(problem.ideal(), OracleParams{opts.p, opts.e_max, opts.k});
    } else if (nci->parsed()) {
      report = make_nci_report(problem.ideal());
    } else {
      report = run_locus(problem, opts);
    }
    if (opts.format == "json")
      out << to_json(report).dump(2) << '\n';
    else
      out << render_text(report);
    return kSuccess;
  } catch (const MethodDisagreement& e) {
    err << "error: " << e.what() << '\n';
    return kMethodDisagreement;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

} // namespace fglocus::cli
