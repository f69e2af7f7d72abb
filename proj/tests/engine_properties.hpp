#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace defring::testing {

struct PropertyTally {
  std::string name;
  int instances = 0;
  int failures = 0;
  std::string first_failure;
};

// Randomized identity suites for the ideal engine: membership linearity,
// intersection and saturation containments, preimage correspondence.
std::vector<PropertyTally> run_engine_properties(int instances, std::uint64_t seed);

}  // namespace defring::testing
