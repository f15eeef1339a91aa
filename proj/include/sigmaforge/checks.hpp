#pragma once

// Named verification suites over the ideal generated by [x_i, sigma_k].
// Each suite emits report lines {check, n, degree, status, witness}.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sigmaforge {

struct ReportLine {
  std::string check;
  int n = 0;
  std::optional<int> degree;
  std::string status; ///< "pass", "fail" or "skipped"
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

struct CheckReport {
  std::vector<ReportLine> lines;

  bool passed() const;
  void add(ReportLine line) { lines.push_back(std::move(line)); }
  void append(const CheckReport& other);
};

struct CheckParams {
  /// 0 selects default_max_degree(n).
  int max_degree = 0;
  int jobs = 1;
};

/// Names accepted by run_check.
const std::vector<std::string>& check_names();

/// Throws DomainError for an unknown name or n < 3.
CheckReport run_check(const std::string& name, int n, const CheckParams& params = {});

} // namespace sigmaforge
