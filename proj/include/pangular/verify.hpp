#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pangular/parallel.hpp"

namespace pangular {

struct AcceptanceOptions {
  std::uint64_t seed = 20240611;
  Execution execution = Execution::parallel;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  nlohmann::json metrics;
};

/// The nine acceptance checks, each runnable on its own.
CriterionResult check_kernel_identities(const AcceptanceOptions& opts);
CriterionResult check_closed_form(const AcceptanceOptions& opts);
CriterionResult check_bound_sandwich(const AcceptanceOptions& opts);
CriterionResult check_best_constants(const AcceptanceOptions& opts);
CriterionResult check_hermite_hadamard_chain(const AcceptanceOptions& opts);
CriterionResult check_series_oracle(const AcceptanceOptions& opts);
CriterionResult check_metric_audits(const AcceptanceOptions& opts);
CriterionResult check_certifier(const AcceptanceOptions& opts);
CriterionResult check_topology(const AcceptanceOptions& opts);

using AcceptanceCheck = std::function<CriterionResult(const AcceptanceOptions&)>;
const std::vector<AcceptanceCheck>& acceptance_checks();

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

/// "PASS [3] bound sandwich: ..." style line.
std::string format_result_line(const CriterionResult& r);

}  // namespace pangular
