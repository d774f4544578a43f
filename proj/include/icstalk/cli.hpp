#pragma once

// Command-line driver. run() is kept separate from main() so the test suite
// can exercise every subcommand in-process.
//
// Exit codes:
//   0  success
//   1  malformed input (command line, JSON parse or schema, bad parameters)
//   2  a named mathematical precondition fails
//   3  paper-examples found a verdict that differs from the published one
//   4  internal inconsistency

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "icstalk/bott.hpp"
#include "icstalk/errors.hpp"
#include "icstalk/json_io.hpp"
#include "icstalk/monodromy.hpp"
#include "icstalk/points.hpp"
#include "icstalk/reproduction.hpp"
#include "icstalk/tables.hpp"

namespace icstalk::cli {

enum ExitCode : int {
  kOk = 0,
  kMalformedInput = 1,
  kPrecondition = 2,
  kReproductionMismatch = 3,
  kInternal = 4,
};

namespace detail {

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read input file \"" + path + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

// Writes to --out when given, otherwise to the stream.
inline void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw InputError("cannot write output file \"" + out_path + "\"");
  f << text;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact IC stalks, node conditions and vanishing chases for nodal hypersurfaces",
               "icstalk"};
  app.require_subcommand(1);

  std::string input;
  std::string out_path;
  bool as_json = false;
  int sign = kDefaultPLSign;
  std::int64_t degree = 0;
  std::int64_t twist = 0;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t quadrics = 0;
  std::vector<std::int64_t> degrees;
  ReproductionLimits limits;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", as_json, "Emit the JSON report instead of a table");
    sub->add_option("--out", out_path, "Write the report to this file");
  };

  auto* ic = app.add_subcommand("ic-stalk", "IC stalk cohomology from vanishing-cycle data");
  ic->add_option("--input", input, "Monodromy JSON document")->required();
  ic->add_option("--sign", sign, "Picard-Lefschetz sign")->check(CLI::IsMember({-1, 1}));
  common(ic);

  auto* pts = app.add_subcommand("points", "Conditions imposed by a point set on degree-d forms");
  pts->add_option("--input", input, "Point set JSON document")->required();
  pts->add_option("--degree", degree, "Degree d of the forms")->required()->check(CLI::NonNegativeNumber);
  common(pts);

  auto* chase = app.add_subcommand("chase", "h1 vanishing chase through a line-bundle resolution");
  chase->add_option("--input", input, "Resolution JSON document")->required();
  chase->add_option("--twist", twist, "Target twist t")->required();
  common(chase);

  auto* kos = app.add_subcommand("koszul", "Koszul resolution of a complete intersection and chase");
  kos->add_option("--n", n, "Projective space dimension")->required();
  kos->add_option("--degrees", degrees, "Comma-separated form degrees")->required()->delimiter(',');
  kos->add_option("--twist", twist, "Target twist t")->required();
  common(kos);

  auto* en = app.add_subcommand("eagon-northcott",
                                "Eagon-Northcott resolution of a determinantal node set and chase");
  en->add_option("--n", n, "Projective space dimension")->required();
  en->add_option("--quadrics", quadrics, "Number h of quadrics")->required();
  twist = 2;
  en->add_option("--twist", twist, "Target twist t (default 2)");
  common(en);

  auto* grid = app.add_subcommand("grid", "Grid node set of a complete intersection (JSON)");
  grid->add_option("--n", n, "Projective space dimension")->required();
  grid->add_option("--k", k, "Hypersurface degree k (forms of degree k-1)")->required();
  grid->add_option("--out", out_path, "Write the point set to this file");

  auto* repro = app.add_subcommand("paper-examples", "Reproduce the published vanishing tables");
  repro->add_option("--max-n", limits.max_n, "Largest n (default 6)");
  repro->add_option("--max-k", limits.max_k, "Largest k (default 8)");
  repro->add_option("--max-h", limits.max_h, "Largest number of quadrics (default 6)");
  repro->add_option("--grid-cap", limits.grid_cap,
                    "Largest node count for the grid rank oracle (default 512)");
  common(repro);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("icstalk");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  }

  try {
    if (ic->parsed()) {
      const auto data = monodromy_from_json(detail::read_json_file(input));
      const auto report = ic_stalk(data, sign);
      detail::emit(as_json ? detail::dump(to_json(report)) : tables::render(report), out_path, out);
    } else if (pts->parsed()) {
      const auto set = point_set_from_json(detail::read_json_file(input));
      const auto cond = conditions_report(set, degree);
      const auto span = node_span_dim(set);
      const auto nc = normal_crossing_check(set);
      if (as_json) {
        Json j{{"conditions", to_json(cond)},
               {"span_dim", span},
               {"normal_crossing", to_json(nc)}};
        detail::emit(detail::dump(j), out_path, out);
      } else {
        detail::emit(tables::render(cond, span, nc), out_path, out);
      }
    } else if (chase->parsed()) {
      const auto res = resolution_from_json(detail::read_json_file(input));
      const auto v = h1_vanishing_chase(res, twist);
      detail::emit(as_json ? detail::dump(to_json(v)) : tables::render(res) + tables::render(v),
                   out_path, out);
    } else if (kos->parsed() || en->parsed()) {
      const auto res = kos->parsed() ? koszul_resolution(n, degrees)
                                     : eagon_northcott_resolution(n, quadrics);
      const auto v = h1_vanishing_chase(res, twist);
      if (as_json) {
        Json j{{"resolution", to_json(res)}, {"verdict", to_json(v)}};
        if (en->parsed()) j["node_count"] = node_count_quadrics(n, quadrics);
        detail::emit(detail::dump(j), out_path, out);
      } else {
        std::string text = tables::render(res) + tables::render(v);
        if (en->parsed())
          text += "  nodes: " + std::to_string(node_count_quadrics(n, quadrics)) + "\n";
        detail::emit(text, out_path, out);
      }
    } else if (grid->parsed()) {
      if (n < 1) throw InputError("grid needs n >= 1");
      detail::emit(detail::dump(to_json(grid_nodes(static_cast<std::size_t>(n), k))), out_path, out);
    } else if (repro->parsed()) {
      const auto rep = paper_examples(limits);
      detail::emit(as_json ? detail::dump(to_json(rep)) : tables::render(rep), out_path, out);
      if (!rep.reproduced()) {
        err << "error: " << rep.deviations.size() << " cell(s) deviate from the published verdicts\n";
        return kReproductionMismatch;
      }
    }
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const InputError& e) {
    err << "malformed input: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const std::overflow_error& e) {
    err << "malformed input: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const Json::exception& e) {
    err << "malformed input: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}

}  // namespace icstalk::cli
