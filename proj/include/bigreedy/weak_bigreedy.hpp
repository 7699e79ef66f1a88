#pragma once

#include <functional>
#include <vector>

#include "bigreedy/envelope.hpp"
#include "bigreedy/objective.hpp"
#include "bigreedy/report.hpp"
#include "bigreedy/rng.hpp"

namespace bigreedy {

enum class CoordinateOrder { sequential, random };

struct RunConfig {
  double epsilon = 0.01;  // shared grid spacing for 1-D argmax and curve sampling; must be in (0, 0.5]
  CoordinateOrder order = CoordinateOrder::sequential;
  std::uint64_t seed = 0;
  bool record_trace = false;
};

/// Paired iterates of the bi-greedy sweep: `lower` starts at the all-zeros
/// point and `upper` at the all-ones point, and they agree on every
/// coordinate that has already been fixed.
struct BiGreedyState {
  Vector lower;
  Vector upper;
};

/// Per-coordinate record of one sweep step.  `z_lo`/`z_hi` are the two 1-D
/// argmax locations; the remaining fields describe the mixed strategy when
/// the step was randomized (z_hi > z_lo).  `samples` is filled only when
/// tracing is requested.
struct CoordinateTrace {
  int i = -1;
  double z_lo = 0.0;
  double z_hi = 0.0;
  bool randomized = false;
  double alpha = 0.0;
  double beta = 0.0;
  double lambda = 1.0;
  double z1 = 0.0;
  double z2 = 0.0;
  double chosen = 0.0;
  std::vector<CurveSample> samples;
};

struct WeakRunResult {
  Vector point;
  TrialReport report;
  std::vector<CoordinateTrace> trace;  // empty unless record_trace
};

/// Grid scan of f over {0, delta/C, 2 delta/C, ...} with the endpoint 1
/// always included; returns the first grid point attaining the maximum
/// (improvements must be strict, so ties go to the smaller z).  The result is
/// within delta of the true maximum for C-Lipschitz f.
double approx_argmax_1d(const std::function<double(double)>& f, double delta, double C);

/// Fixes coordinate i of the paired state: computes the two 1-D argmax
/// locations, and either takes the deterministic choice (z_hi <= z_lo) or
/// samples the gain curve, builds its upper concave envelope, intersects it
/// with the equalizing line and draws from the resulting one- or two-point
/// strategy (consuming exactly one uniform draw).  Returns the fixed value
/// and writes it into both iterates.
double coordinate_step(const Objective& obj, BiGreedyState& state, int i, double eps,
                       SplitMix64& rng, CoordinateTrace* trace = nullptr);

/// Full randomized bi-greedy sweep for weakly DR-submodular objectives.
/// Visits each coordinate once (optionally in a seeded shuffled order),
/// asserts the evaluation budget 8n/eps + 12n, and reports the final value
/// under the "game" algorithm tag.
WeakRunResult run_weak_bigreedy(const Objective& obj, const RunConfig& config);

}  // namespace bigreedy
