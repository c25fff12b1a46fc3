#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace rooklab {

enum class Status { kPass, kFail, kReported };

std::string_view status_name(Status s);

struct VerificationReport {
  std::string claim;
  Status status = Status::kPass;
  nlohmann::json expected;
  nlohmann::json actual;
  double runtime_ms = 0;
  /// Acceptance criterion this check belongs to (1..13).
  int criterion = 0;

  nlohmann::json to_json() const;
};

struct VerifyOptions {
  /// Checks on graphs with more vertices are skipped (reported, not failed).
  std::size_t max_vertices = 1000;
  /// Upper bound on the class count explored by the switching closure.
  std::size_t closure_limit = 400;
};

using ReportSink = std::function<void(const VerificationReport&)>;

/// "all", "spectra", "partitions", "invariants", "switching", "gamma".
const std::vector<std::string>& suite_names();

/// Runs one suite, passing each report to sink as soon as it is produced.
/// Throws Error for an unknown suite name.
void run_suite(std::string_view suite, const VerifyOptions& options, const ReportSink& sink);

std::vector<VerificationReport> run_suite(std::string_view suite, const VerifyOptions& options = {});

}  // namespace rooklab
