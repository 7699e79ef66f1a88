#pragma once

#include <vector>

#include "bigreedy/objective.hpp"
#include "bigreedy/report.hpp"

namespace bigreedy {

/// How a coordinate was fixed by the binary-search sweep.
enum class StrongBranch { clamp_zero, clamp_one, bisect };

struct StrongCoordinateTrace {
  int i = -1;
  StrongBranch branch = StrongBranch::bisect;
  int iterations = 0;  // bisection iterations (0 for the clamp branches)
  double z = 0.0;
};

struct StrongRunResult {
  Vector point;
  TrialReport report;
  std::vector<StrongCoordinateTrace> trace;  // empty unless record_trace
};

/// Weighted derivative balance dF/dx_i(z, X_-i) (1 - z) + dF/dx_i(z, Y_-i) z.
/// For strongly DR-submodular F this is non-increasing in z, and its root is
/// the equilibrium of the per-coordinate game.  Costs two derivative
/// evaluations.
double equilibrium_value(const Objective& obj, const Vector& X, const Vector& Y, int i, double z);

/// Deterministic bi-greedy sweep for strongly DR-submodular objectives.
/// Each coordinate is clamped to 0 or 1 when the endpoint derivatives agree
/// in sign, and otherwise fixed by bisecting the sign of equilibrium_value
/// until the bracket is at most epsilon/n wide (an exact zero at the midpoint
/// moves the bracket left).  Asserts the derivative-evaluation budget
/// n * (2 + 2 ceil(log2(n/epsilon))) and reports under the "binary"
/// algorithm tag.
StrongRunResult run_strong_bigreedy(const Objective& obj, double epsilon, bool record_trace = false);

}  // namespace bigreedy
