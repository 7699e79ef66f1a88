#pragma once

#include <cstdint>
#include <string>

namespace bigreedy {

/// Outcome of one optimizer run on one instance.  `oracle_calls` counts
/// objective evaluations for the sampling-based algorithm ("game") and
/// derivative evaluations for the binary-search algorithm ("binary").
struct TrialReport {
  std::uint64_t instance_seed = 0;
  std::string algorithm;
  double objective_value = 0.0;
  std::uint64_t oracle_calls = 0;
  double elapsed_ms = 0.0;
};

}  // namespace bigreedy
