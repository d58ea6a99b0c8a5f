// Command-line front end: constructs concurrent-observable sets for N-qudit
// GHZ states, verifies the perfect correlations by exact simulation, and
// certifies all-versus-nothing contradictions against local-realistic models
// by exhaustive search plus the gcd solvability test.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ghzq/errors.hpp"
#include "ghzq/report.hpp"

namespace {

struct RangeSpec {
  int from = 0;
  int to = 0;
};

// "3..5" or a bare "4".
RangeSpec parse_range(const std::string& text) {
  const std::size_t sep = text.find("..");
  RangeSpec range;
  try {
    if (sep == std::string::npos) {
      range.from = range.to = std::stoi(text);
    } else {
      range.from = std::stoi(text.substr(0, sep));
      range.to = std::stoi(text.substr(sep + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range '" + text + "' (expected A or A..B)");
  }
  if (range.from > range.to) throw std::invalid_argument("bad range '" + text + "' (A > B)");
  return range;
}

void validate_common(const ghzq::RunConfig& cfg) {
  if (cfg.tolerance <= 0.0) throw std::invalid_argument("--tolerance must be positive");
  if (cfg.lhv_bound < 1) throw std::invalid_argument("--lhv-bound must be positive");
  if (cfg.amp_bound < 1) throw std::invalid_argument("--amp-bound must be positive");
}

int emit(const ghzq::RunOutcome& outcome, const ghzq::RunConfig& cfg) {
  const std::string text = ghzq::dump_report(outcome.report);
  std::cout << text;
  if (cfg.out_path) ghzq::write_report_file(outcome.report, *cfg.out_path);
  return outcome.exit_code;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"ghzq: all-versus-nothing GHZ contradiction certifier for N qudits"};
  app.require_subcommand(1);

  ghzq::RunConfig cfg;
  std::string parties_range;
  std::string dim_range;
  std::string out_path;
  int n2 = 0;
  int divisor = 0;

  auto add_bounds = [&](CLI::App* cmd) {
    cmd->add_option("--tolerance", cfg.tolerance, "eigenstate residual tolerance")
        ->capture_default_str();
    cmd->add_option("--lhv-bound", cfg.lhv_bound, "max LHV assignment-space size to search")
        ->capture_default_str();
    cmd->add_option("--amp-bound", cfg.amp_bound, "max state-vector amplitudes")
        ->capture_default_str();
    cmd->add_option("--out", out_path, "also write the JSON report to this file");
  };

  CLI::App* check = app.add_subcommand("check", "divisor criterion only; no state vectors");
  check->add_option("--parties", cfg.parties, "party count N")->required();
  check->add_option("--dim", cfg.dim, "local dimension D")->required();
  check->add_option("--out", out_path, "also write the JSON report to this file");

  CLI::App* certify = app.add_subcommand("certify", "full certificate: quantum + LHV + analytic");
  certify->add_option("--parties", cfg.parties, "party count N")->required();
  certify->add_option("--dim", cfg.dim, "local dimension D")->required();
  CLI::Option* n2_opt = certify->add_option("--n2", n2, "force the Y-factor count N2");
  certify->add_option("--divisor", divisor, "force a nonunit divisor g of D")->excludes(n2_opt);
  add_bounds(certify);

  CLI::App* sweep = app.add_subcommand("sweep", "existence table over an (N, D) grid");
  sweep->add_option("--parties", parties_range, "party range A..B")->required();
  sweep->add_option("--dim", dim_range, "dimension range C..E")->required();
  add_bounds(sweep);

  CLI::App* genuineness = app.add_subcommand("genuineness", "N-partiteness and D-dimensionality checks");
  genuineness->add_option("--parties", cfg.parties, "party count N")->required();
  genuineness->add_option("--dim", cfg.dim, "local dimension D")->required();
  genuineness->add_option("--out", out_path, "also write the JSON report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ghzq::exit_code::kUsage;
  }

  if (!out_path.empty()) cfg.out_path = out_path;
  if (certify->count("--n2") > 0) cfg.n2 = n2;
  if (certify->count("--divisor") > 0) cfg.divisor = divisor;

  try {
    validate_common(cfg);
    if (check->parsed()) {
      cfg.command = "check";
      return emit(ghzq::run_check(cfg), cfg);
    }
    if (certify->parsed()) {
      cfg.command = "certify";
      return emit(ghzq::run_certify(cfg), cfg);
    }
    if (sweep->parsed()) {
      cfg.command = "sweep";
      const RangeSpec parties = parse_range(parties_range);
      const RangeSpec dims = parse_range(dim_range);
      cfg.parties_from = parties.from;
      cfg.parties_to = parties.to;
      cfg.dim_from = dims.from;
      cfg.dim_to = dims.to;
      return emit(ghzq::run_sweep(cfg), cfg);
    }
    cfg.command = "genuineness";
    return emit(ghzq::run_genuineness(cfg), cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return ghzq::exit_code::kUsage;
  } catch (const ghzq::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return ghzq::exit_code::kResourceLimit;
  } catch (const ghzq::ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return ghzq::exit_code::kConsistencyFailure;
  }
}
