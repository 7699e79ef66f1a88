#pragma once

#include <span>

#include "bigreedy/envelope.hpp"

namespace bigreedy {

/// A point in the (g, h) plane of the per-coordinate zero-sum game.
struct PlanarPoint {
  double g = 0.0;
  double h = 0.0;
};

/// Pentagonal region of adversary points against which a mixed strategy with
/// support {P1, P2} has non-negative expected utility.  The boundary runs
/// m0(-1,-1) -> (g of m2, -1) -> q2 -> q1 -> (-1, h of m1) -> m0, where the
/// q1 -> q2 edge cuts the corner between the slope-one lines through P1 and
/// P2.  For a pure strategy q1 == q2 and the region is a rectangle.
struct Pentagon {
  PlanarPoint m0;
  PlanarPoint m1;
  PlanarPoint m2;
  PlanarPoint q1;
  PlanarPoint q2;
};

/// Utility of playing (g_hat, h_hat) against an adversary at (g_star,
/// h_star): the average of the two gains minus the adversary's best
/// single-sided improvement, 0.5 g_hat + 0.5 h_hat - max(g_star - g_hat,
/// h_star - h_hat).
double game_utility(double g_hat, double h_hat, double g_star, double h_star);

/// Region of guaranteed non-negative expected utility for the mixed strategy
/// (p1 w.p. lambda, else p2).  Inputs are reordered internally so that
/// h - g is non-increasing from p1 to p2.
Pentagon positive_region(PlanarPoint p1, PlanarPoint p2, double lambda);

/// Minimum over the curve samples of the strategy's expected utility when the
/// adversary plays that sample.
double expected_utility_min(const MixedStrategy& strategy, std::span<const CurveSample> curve);

/// Membership test with absolute tolerance scaled by the region size.
bool point_in_region(const Pentagon& region, PlanarPoint p, double tol = 1e-9);

}  // namespace bigreedy
