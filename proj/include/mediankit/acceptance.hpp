#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mediankit {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

inline constexpr std::uint64_t kAcceptanceSeed = 20261019;

std::vector<CriterionResult> runAcceptance(std::uint64_t seed = kAcceptanceSeed);
CriterionResult runCriterion(int id, std::uint64_t seed = kAcceptanceSeed);

}  // namespace mediankit
