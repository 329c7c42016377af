#ifndef INVTENSOR_SUITE_SUITE_HPP
#define INVTENSOR_SUITE_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "invtensor/io.hpp"

namespace invtensor::suite {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  double time_limit = 0.0;
  Json detail;  ///< {"checks": [...], ...}
};

inline constexpr int kCriteria = 12;

/// Runs one acceptance criterion (1..12); randomness derives from `seed`.
CriterionResult run_criterion(int id, std::uint64_t seed);

std::vector<CriterionResult> run_suite(std::uint64_t seed, const std::vector<int>& ids = {});

Json to_json(const CriterionResult& r);
Json report(const std::vector<CriterionResult>& results, std::uint64_t seed);

/// "PASS  3  name  (0.01 s)" style line.
std::string summary_line(const CriterionResult& r);

}  // namespace invtensor::suite

#endif
