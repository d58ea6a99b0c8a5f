#ifndef GHZQ_REPORT_HPP
#define GHZQ_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "ghzq/criterion.hpp"

namespace ghzq {

inline constexpr const char* kReportSchemaVersion = "ghzq-report/1";

// Process exit codes shared by the CLI and the report layer.
namespace exit_code {
inline constexpr int kContradiction = 0;  // also: check/genuineness succeeded
inline constexpr int kNoContradiction = 1;
inline constexpr int kUsage = 2;
inline constexpr int kResourceLimit = 3;
inline constexpr int kConsistencyFailure = 4;
} // namespace exit_code

/// One fully-validated invocation. No randomness anywhere: identical configs
/// produce byte-identical reports apart from the "timing" field.
struct RunConfig {
  std::string command;  // check | certify | sweep | genuineness
  int parties = 0;
  int dim = 0;
  std::optional<int> n2;       // certify: forced N2
  std::optional<int> divisor;  // certify: forced nonunit divisor g
  // sweep ranges (inclusive)
  int parties_from = 0, parties_to = 0;
  int dim_from = 0, dim_to = 0;
  double tolerance = 1e-10;
  std::int64_t lhv_bound = kDefaultLhvBound;
  std::int64_t amp_bound = kDefaultAmpBound;
  std::optional<std::string> out_path;
};

struct RunOutcome {
  nlohmann::json report;
  int exit_code = 0;
};

RunOutcome run_check(const RunConfig& cfg);
RunOutcome run_certify(const RunConfig& cfg);
RunOutcome run_sweep(const RunConfig& cfg);
RunOutcome run_genuineness(const RunConfig& cfg);

// JSON views of the domain results (used by the runners and by tests).
nlohmann::json to_json(const ConstructionParams& p);
nlohmann::json to_json(const CriterionResult& r);
nlohmann::json to_json(const ContradictionCertificate& c);
nlohmann::json to_json(const NPartiteReport& r);
nlohmann::json to_json(const DDimReport& r, const Rational& alpha, const Rational& beta);

/// Canonical textual form: keys sorted, 2-space indent, floats rendered with
/// 17 significant digits (lossless for binary64). parse(dump(j)) == j.
std::string dump_report(const nlohmann::json& j);
nlohmann::json parse_report(const std::string& text);

/// Serializes with dump_report and writes atomically-enough for tests
/// (truncate + write + flush). Throws std::runtime_error on I/O failure.
void write_report_file(const nlohmann::json& j, const std::string& path);

} // namespace ghzq

#endif
