#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qtpos/delta_e3.hpp"
#include "qtpos/shapes.hpp"

namespace qtpos {

enum class Status { Pass, Fail, Warn };

const char *status_name(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::Pass;
  nlohmann::json payload = nlohmann::json::object();
};

struct RunReport {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  std::vector<CheckResult> results;
  double elapsed_seconds = 0;

  void add(CheckResult r) { results.push_back(std::move(r)); }
  void append(std::vector<CheckResult> rs);
  bool failed() const;
  int exit_code() const { return failed() ? 1 : 0; }
  /// Deterministic: leaves out the elapsed time.
  nlohmann::json to_json() const;
};

/// Partitions of n with largest part at most 3, in reverse-lex order.
std::vector<Partition> three_column_partitions(int n);

CheckResult check(std::string name, bool ok, nlohmann::json payload = nlohmann::json::object());

/// Counts, leftovers and map diagnostics for enriched tableaux of shape lambda'.
std::vector<CheckResult> injection_checks(const Partition &lambda);
std::vector<CheckResult> injection_suite(int max_n);

/// g via five routes for all lambda |- n <= max_n with lambda_1 <= 3.
std::vector<CheckResult> agreement_suite(int max_n);
/// Certificates of f_poly are positive and reconstruct g.
std::vector<CheckResult> positivity_suite(int max_n);
/// Closed forms of the recursion against brute force and printed values.
std::vector<CheckResult> closed_form_suite(int max_a, int max_k);
std::vector<CheckResult> recursion_suite(int max_n);

std::vector<CheckResult> series_suite(int degree);

std::vector<CheckResult> delta1_suite(int max_n);
std::vector<CheckResult> delta3_suite(int max_n, const std::vector<RationalPoint> &samples);

std::vector<CheckResult> specialization_suite(int max_n, const std::vector<mpq_class> &samples);

/// Default generic points for the delta3 sample check.
std::vector<RationalPoint> default_delta3_samples();

} // namespace qtpos
