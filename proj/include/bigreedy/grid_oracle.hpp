#pragma once

#include <cstdint>
#include <stdexcept>

#include "bigreedy/objective.hpp"

namespace bigreedy {

/// Raised when a requested computation would exceed its documented cost
/// guard; the CLI maps it to exit code 3.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct GridOracleResult {
  Vector point;
  double value = 0.0;
  std::uint64_t evaluations = 0;
};

/// Exhaustive maximum of F over the lattice {0, 1/k, ..., 1}^n.  Ties go to
/// the lexicographically smallest point (coordinate 0 most significant).
/// Throws BudgetExceeded when k^n > 1e8.  Parallelized with OpenMP when
/// available; the reduction reproduces the serial scan exactly.
GridOracleResult grid_oracle(const Objective& obj, int resolution);

/// Single-threaded reference implementation with identical semantics, kept
/// for differential testing and benchmarking against the parallel kernel.
GridOracleResult grid_oracle_serial(const Objective& obj, int resolution);

}  // namespace bigreedy
