#include "sarkisov/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sarkisov/anchors.hpp"
#include "sarkisov/dataset_io.hpp"
#include "sarkisov/report.hpp"

namespace sarkisov {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitInvalid = 2;

struct Options {
  std::string format = "json";
  std::string tables;
  bool trail = false;
  unsigned jobs = 1;

  std::int64_t d = 0;
  int d1 = 0;
  std::int64_t rhs_q = 0;
  std::int64_t rhs_l = 0;
  bool half = false;

  std::string analysis;
  int g_max = BirationalBounds{}.g_max;
  std::int64_t dc_max = BirationalBounds{}.dc_max;
};

Dataset resolve_dataset(const Options& opts) {
  if (!opts.tables.empty()) return load_dataset(opts.tables);
  if (const char* env = std::getenv("SARKISOV_TABLES"); env != nullptr && *env != '\0') {
    return load_dataset(env);
  }
  return default_dataset();
}

int finish(const AnchorChecks& checks, std::ostream& err) {
  int status = kExitOk;
  for (const auto& check : checks) {
    if (!check.passed) {
      err << "anchor check failed: " << check.name;
      if (!check.detail.empty()) err << " (" << check.detail << ")";
      err << "\n";
      status = kExitInconsistent;
    }
  }
  return status;
}

void append(AnchorChecks& into, const AnchorChecks& more) {
  into.insert(into.end(), more.begin(), more.end());
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Exact numerical case analysis of one-nodal non-factorial Fano threefolds",
               "sarkisov"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "md", "csv"}));
  app.add_option("--tables", opts.tables, "Dataset override (JSON); beats $SARKISOV_TABLES");
  app.add_flag("--trail", opts.trail, "Include derivation trails");
  app.add_option("--jobs", opts.jobs, "Run case analyses concurrently")->check(CLI::Range(1u, 64u));

  auto* classify = app.add_subcommand("classify", "Run every analysis and print the 17 link types");
  classify->add_option("--g-max", opts.g_max, "Genus bound for curve blow-ups");
  classify->add_option("--dc-max", opts.dc_max, "Anticanonical curve-degree bound");

  auto* diamond = app.add_subcommand("diamond", "Print the admissible (d, h12, d1) triples");

  auto* solve = app.add_subcommand("solve", "Solve one transfer system exactly");
  solve->add_option("--d", opts.d, "-K^3 of the conic-bundle side")->required();
  solve->add_option("--d1", opts.d1, "Discriminant degree")->required();
  solve->add_option("--rhs-q", opts.rhs_q, "Right-hand side -K.D^2")->required();
  solve->add_option("--rhs-l", opts.rhs_l, "Right-hand side (-K)^2.D")->required();
  solve->add_flag("--half", opts.half, "Half-integer mode (only valid for d1 = 0)");

  auto* cases = app.add_subcommand("case", "Run a single case analysis");
  cases->add_option("analysis", opts.analysis, "conic-point | conic-curve | conic-conic | birational")
      ->required()
      ->check(CLI::IsMember({"conic-point", "conic-curve", "conic-conic", "birational"}));
  cases->add_option("--g-max", opts.g_max, "Genus bound (birational)");
  cases->add_option("--dc-max", opts.dc_max, "Curve-degree bound (birational)");

  auto* lattice = app.add_subcommand("lattice", "Check the Picard-lattice computations");
  auto* tables = app.add_subcommand("tables", "Dump the datasets in use");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInvalid;
  }

  try {
    const Format format = parse_format(opts.format);
    const Dataset dataset = resolve_dataset(opts);
    const BirationalBounds bounds{opts.g_max, opts.dc_max};

    if (classify->parsed()) {
      auto rows = assemble_classification(dataset, bounds, opts.jobs);
      const ReportMeta meta{dataset_hash(dataset), bounds};
      out << emit_report(rows, format, meta, opts.trail);
      return finish(check_classification(rows), err);
    }
    if (diamond->parsed()) {
      auto list = derive_diamond_list(dataset);
      out << emit_diamond(list, format);
      AnchorChecks checks = check_discriminants(admissible_discriminants(dataset));
      append(checks, check_diamond(list));
      return finish(checks, err);
    }
    if (solve->parsed()) {
      DiophantineSystem sys{opts.d, opts.d1, opts.rhs_q, opts.rhs_l,
                            opts.half ? Integrality::HalfIntegers
                                      : DiophantineSystem::mode_for(opts.d1)};
      try {
        out << emit_solutions(solve_system(sys), format);
      } catch (const DegenerateSystem& e) {
        const auto& line = e.line();
        out << nlohmann::json{{"family",
                               {{"intercept", line.intercept.fraction()},
                                {"slope", line.slope.fraction()}}}}
                   .dump()
            << "\n";
        err << e.what() << "\n";
      }
      return kExitOk;
    }
    if (cases->parsed()) {
      CaseReport report;
      AnchorChecks checks;
      if (opts.analysis == "conic-point") {
        report = case_conic_times_point(dataset);
        checks = check_conic_point(report);
      } else if (opts.analysis == "conic-curve") {
        report = case_conic_times_curve_blowup(dataset);
        checks = check_conic_curve(report);
      } else if (opts.analysis == "conic-conic") {
        report = case_conic_times_conic(dataset);
        checks = check_conic_conic(report);
      } else {
        report = case_birational_times_birational(dataset, bounds);
        checks = check_birational(report);
      }
      out << emit_case(opts.analysis, report, format, opts.trail);
      return finish(checks, err);
    }
    if (lattice->parsed()) {
      auto checks = check_lattice();
      out << emit_checks(checks, format);
      return finish(checks, err);
    }
    if (tables->parsed()) {
      out << emit_dataset(dataset, format);
      return kExitOk;
    }
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const DatasetError& e) {
    err << "invalid tables: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InvalidSystem& e) {
    err << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInconsistent;
  }
  err << app.help();
  return kExitInvalid;
}

}  // namespace sarkisov
