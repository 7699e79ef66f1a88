#include "bigreedy/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bigreedy {

double game_utility(double g_hat, double h_hat, double g_star, double h_star) {
  return 0.5 * g_hat + 0.5 * h_hat - std::max(g_star - g_hat, h_star - h_hat);
}

Pentagon positive_region(PlanarPoint p1, PlanarPoint p2, double lambda) {
  // A degenerate weight means the other support point is never played and
  // must not influence the region.
  if (lambda >= 1.0) {
    p2 = p1;
  } else if (lambda <= 0.0) {
    p1 = p2;
    lambda = 1.0;
  }
  if (p1.h - p1.g < p2.h - p2.g) {
    std::swap(p1, p2);
    lambda = 1.0 - lambda;
  }
  Pentagon region;
  region.m0 = {-1.0, -1.0};
  region.m1 = {-1.0, lambda * (1.5 * p1.h + 0.5 * p1.g) + (1.0 - lambda) * (1.5 * p2.h + 0.5 * p2.g)};
  region.m2 = {lambda * (1.5 * p1.g + 0.5 * p1.h) + (1.0 - lambda) * (1.5 * p2.g + 0.5 * p2.h), -1.0};
  // q1: slope-one line through p1 meets the horizontal boundary through m1;
  // q2: slope-one line through p2 meets the vertical boundary through m2.
  region.q1 = {p1.g + (region.m1.h - p1.h), region.m1.h};
  region.q2 = {region.m2.g, p2.h + (region.m2.g - p2.g)};
  return region;
}

double expected_utility_min(const MixedStrategy& strategy, std::span<const CurveSample> curve) {
  double worst = std::numeric_limits<double>::infinity();
  for (const CurveSample& adv : curve) {
    double u = game_utility(strategy.p1.g, strategy.p1.h, adv.g, adv.h);
    if (strategy.support == 2) {
      u = strategy.lambda * u +
          (1.0 - strategy.lambda) * game_utility(strategy.p2.g, strategy.p2.h, adv.g, adv.h);
    }
    worst = std::min(worst, u);
  }
  return worst;
}

bool point_in_region(const Pentagon& region, PlanarPoint p, double tol) {
  const double scale = std::max({1.0, std::abs(region.m1.h), std::abs(region.m2.g)});
  const double slack = tol * scale;

  if (p.g < region.m0.g - slack || p.h < region.m0.h - slack) return false;
  if (p.h > region.m1.h + slack) return false;
  if (p.g > region.m2.g + slack) return false;

  // Corner-cutting edge from q1 to q2; degenerate (pure strategy) regions
  // reduce to the rectangle, whose corner is exactly q1 == q2.
  const double eg = region.q2.g - region.q1.g;
  const double eh = region.q2.h - region.q1.h;
  if (std::abs(eg) <= slack && std::abs(eh) <= slack) return true;
  const double cross = eg * (p.h - region.q1.h) - eh * (p.g - region.q1.g);
  return cross <= slack * std::max(std::abs(eg), std::abs(eh)) + slack;
}

}  // namespace bigreedy
