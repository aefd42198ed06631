#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plucker/io.hpp"

namespace plucker {

struct AcceptanceOptions {
  std::uint64_t seed = 0;
  int trials = 500;
  int jobs = 0;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  json details;
  double seconds = 0;
};

// Suites: hilbert, ideals, rep, toric, relations, all. Throws std::invalid_argument otherwise.
std::vector<int> suite_criteria(const std::string& suite);
CriterionResult run_criterion(int id, const AcceptanceOptions& opt);
json criterion_to_json(const CriterionResult& r, bool with_timing = true);

}  // namespace plucker
