#include "ghzq/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "ghzq/errors.hpp"

namespace ghzq {

using nlohmann::json;

nlohmann::json to_json(const ConstructionParams& p) {
  return json{{"parties", p.parties}, {"dim", p.dim}, {"n1", p.n1}, {"n2", p.n2},
              {"g", p.g},             {"d", p.d},     {"eta", p.eta}};
}

nlohmann::json to_json(const CriterionResult& r) {
  json admissible = json::array();
  for (const AdmissibleN2& a : r.admissible)
    admissible.push_back(json{{"n2", a.n2}, {"gcd", a.gcd_value}});
  json out{{"parties", r.parties}, {"dim", r.dim}, {"admissible", admissible}};
  out["chosen"] = r.chosen ? to_json(*r.chosen) : json(nullptr);
  out["verdict"] = r.chosen ? "contradiction-available" : "no contradiction via this construction";
  return out;
}

nlohmann::json to_json(const ContradictionCertificate& c) {
  json satisfying(nullptr);
  if (c.lhv_search.satisfying) {
    satisfying = json{{"x", c.lhv_search.satisfying->x}, {"y", c.lhv_search.satisfying->y}};
  }
  return json{
      {"params", to_json(c.params)},
      {"quantum",
       {{"residuals", c.quantum_residuals},
        {"max_residual", c.quantum_max_residual},
        {"tolerance", c.tolerance}}},
      {"lhv_search",
       {{"space_size", c.lhv_search.space_size},
        {"searched", c.lhv_search.searched},
        {"satisfying", satisfying}}},
      {"analytic", {{"gcd_value", c.analytic.gcd_value}, {"divides_N", c.analytic.divides_parties}}},
      {"verdict", {{"contradiction", c.contradiction}, {"analytic_only", !c.lhv_search.searched}}}};
}

nlohmann::json to_json(const NPartiteReport& r) {
  json removals = json::array();
  for (const PartyRemovalResult& row : r.removals) {
    removals.push_back(json{{"removed_party", row.removed_party},
                            {"residuals", row.residuals},
                            {"failing", row.failing},
                            {"oracle_failing", row.oracle_failing}});
  }
  return json{{"removals", removals},
              {"residual_threshold", r.residual_threshold},
              {"genuinely_npartite", r.genuinely_npartite}};
}

nlohmann::json to_json(const DDimReport& r, const Rational& alpha, const Rational& beta) {
  return json{{"alpha", to_string(alpha)},
              {"beta", to_string(beta)},
              {"min_overlap", r.min_overlap},
              {"argmin", {{"n", r.argmin_n}, {"m", r.argmin_m}}},
              {"positive", r.positive}};
}

namespace {

constexpr const char* kIndexingNote = "mixed-radix; party 1 most significant";

json config_echo(const RunConfig& cfg) {
  json out{{"command", cfg.command},
           {"tolerance", cfg.tolerance},
           {"lhv_bound", cfg.lhv_bound},
           {"amp_bound", cfg.amp_bound},
           {"indexing", kIndexingNote}};
  if (cfg.command == "sweep") {
    out["parties_from"] = cfg.parties_from;
    out["parties_to"] = cfg.parties_to;
    out["dim_from"] = cfg.dim_from;
    out["dim_to"] = cfg.dim_to;
  } else {
    out["parties"] = cfg.parties;
    out["dim"] = cfg.dim;
  }
  if (cfg.command == "certify") {
    out["n2"] = cfg.n2 ? json(*cfg.n2) : json(nullptr);
    out["divisor"] = cfg.divisor ? json(*cfg.divisor) : json(nullptr);
  }
  return out;
}

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    const auto now = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(now - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

json base_report(const RunConfig& cfg) {
  return json{{"schema_version", kReportSchemaVersion}, {"config", config_echo(cfg)}};
}

void finish(json& report, const Stopwatch& watch) {
  report["timing"] = json{{"elapsed_ms", watch.elapsed_ms()}};
}

// Resolves the construction a certify run should use: forced N2, forced
// divisor (largest N2 = multiple of g that fits), or the criterion's choice.
// Returns nullopt when the criterion admits nothing.
std::optional<ConstructionParams> resolve_params(const RunConfig& cfg, const CriterionResult& crit) {
  if (cfg.n2 && cfg.divisor)
    throw std::invalid_argument("certify: --n2 and --divisor are mutually exclusive");
  if (cfg.n2) {
    if (*cfg.n2 < 1 || *cfg.n2 > cfg.parties - 1)
      throw std::invalid_argument("certify: --n2 must lie in [1, parties-1]");
    return make_construction(cfg.parties, cfg.dim, *cfg.n2);
  }
  if (cfg.divisor) {
    const int g = *cfg.divisor;
    if (g < 2 || cfg.dim % g != 0)
      throw std::invalid_argument("certify: --divisor must be a nonunit divisor of dim");
    const int n2 = (cfg.parties - 1) / g * g;  // largest multiple of g <= N-1
    if (n2 < g) throw std::invalid_argument("certify: no multiple of --divisor fits in [1, parties-1]");
    return make_construction(cfg.parties, cfg.dim, n2, g);
  }
  return crit.chosen;
}

json genuineness_json(const ConstructionParams& p, std::int64_t amp_bound) {
  const NPartiteReport npartite = genuinely_npartite_check(p, amp_bound);
  const Rational alpha(0);
  const Rational beta(1, p.n2);
  const DDimReport ddim = genuinely_ddim_check(p.dim, alpha, beta);
  return json{{"npartite", to_json(npartite)}, {"ddim", to_json(ddim, alpha, beta)}};
}

} // namespace

RunOutcome run_check(const RunConfig& cfg) {
  Stopwatch watch;
  const CriterionResult crit = admissible_constructions(cfg.parties, cfg.dim);
  json report = base_report(cfg);
  report["criterion"] = to_json(crit);
  finish(report, watch);
  return RunOutcome{report, crit.chosen ? exit_code::kContradiction : exit_code::kNoContradiction};
}

RunOutcome run_certify(const RunConfig& cfg) {
  Stopwatch watch;
  const CriterionResult crit = admissible_constructions(cfg.parties, cfg.dim);
  const std::optional<ConstructionParams> params = resolve_params(cfg, crit);

  json report = base_report(cfg);
  report["criterion"] = to_json(crit);
  if (!params) {
    report["certificate"] = nullptr;
    report["genuineness"] = nullptr;
    finish(report, watch);
    return RunOutcome{report, exit_code::kNoContradiction};
  }

  CertifyOptions opt;
  opt.tolerance = cfg.tolerance;
  opt.lhv_bound = cfg.lhv_bound;
  opt.amp_bound = cfg.amp_bound;
  const ContradictionCertificate cert = certify(*params, opt);
  report["certificate"] = to_json(cert);
  report["genuineness"] = genuineness_json(*params, cfg.amp_bound);
  finish(report, watch);
  return RunOutcome{report,
                    cert.contradiction ? exit_code::kContradiction : exit_code::kNoContradiction};
}

RunOutcome run_sweep(const RunConfig& cfg) {
  Stopwatch watch;
  if (cfg.parties_from < 3 || cfg.parties_from > cfg.parties_to)
    throw std::invalid_argument("sweep: need 3 <= parties range A..B with A <= B");
  if (cfg.dim_from < 2 || cfg.dim_from > cfg.dim_to)
    throw std::invalid_argument("sweep: need 2 <= dim range C..E with C <= E");

  json report = base_report(cfg);
  json rows = json::array();
  for (int parties = cfg.parties_from; parties <= cfg.parties_to; ++parties) {
    for (int dim = cfg.dim_from; dim <= cfg.dim_to; ++dim) {
      const CriterionResult crit = admissible_constructions(parties, dim);
      json row{{"parties", parties}, {"dim", dim}, {"criterion", to_json(crit)}};
      // contradiction: true/false once certified, null when there is no
      // construction to certify or the cell hit a resource limit.
      row["certificate"] = nullptr;
      row["contradiction"] = nullptr;
      row["error"] = nullptr;
      if (crit.chosen) {
        CertifyOptions opt;
        opt.tolerance = cfg.tolerance;
        opt.lhv_bound = cfg.lhv_bound;
        opt.amp_bound = cfg.amp_bound;
        try {
          const ContradictionCertificate cert = certify(*crit.chosen, opt);
          row["certificate"] = to_json(cert);
          row["contradiction"] = cert.contradiction;
        } catch (const ResourceLimitError& e) {
          // Cell too large even for the quantum side; reported in-row.
          row["error"] = std::string("resource-limit: ") + e.what();
        }
      }
      rows.push_back(std::move(row));
    }
  }
  report["rows"] = rows;
  finish(report, watch);
  return RunOutcome{report, exit_code::kContradiction};
}

RunOutcome run_genuineness(const RunConfig& cfg) {
  Stopwatch watch;
  const CriterionResult crit = admissible_constructions(cfg.parties, cfg.dim);
  json report = base_report(cfg);
  report["criterion"] = to_json(crit);
  if (!crit.chosen) {
    report["genuineness"] = nullptr;
    finish(report, watch);
    return RunOutcome{report, exit_code::kNoContradiction};
  }
  report["genuineness"] = genuineness_json(*crit.chosen, cfg.amp_bound);
  const bool pass = report["genuineness"]["npartite"]["genuinely_npartite"].get<bool>() &&
                    report["genuineness"]["ddim"]["positive"].get<bool>();
  finish(report, watch);
  return RunOutcome{report, pass ? exit_code::kContradiction : exit_code::kNoContradiction};
}

namespace {

void dump_value(const json& j, std::string& out, int level) {
  const std::string pad(static_cast<std::size_t>(level) * 2, ' ');
  const std::string pad_in(static_cast<std::size_t>(level + 1) * 2, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.cbegin(); it != j.cend(); ++it) {  // std::map order: sorted keys
        if (!first) out += ",\n";
        first = false;
        out += pad_in + json(it.key()).dump() + ": ";
        dump_value(it.value(), out, level + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const json& item : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        dump_value(item, out, level + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) throw std::invalid_argument("dump_report: non-finite float");
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out += buf;
      // Keep the value typed as a float on re-parse.
      if (std::strpbrk(buf, ".eE") == nullptr) out += ".0";
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

} // namespace

std::string dump_report(const nlohmann::json& j) {
  std::string out;
  dump_value(j, out, 0);
  out += "\n";
  return out;
}

nlohmann::json parse_report(const std::string& text) { return json::parse(text); }

void write_report_file(const nlohmann::json& j, const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open report file: " + path);
  file << dump_report(j);
  file.flush();
  if (!file) throw std::runtime_error("failed writing report file: " + path);
}

} // namespace ghzq
