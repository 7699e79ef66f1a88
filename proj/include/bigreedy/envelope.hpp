#pragma once

#include <functional>
#include <span>
#include <vector>

namespace bigreedy {

/// One sample of the planar curve z -> (g(z), h(z)) traced by a coordinate of
/// the bi-greedy game: z is the coordinate value, g the gain over the lower
/// point and h the gain over the upper point.
struct CurveSample {
  double z = 0.0;
  double g = 0.0;
  double h = 0.0;
};

/// Upper concave envelope of a sampled curve, annotated with the z that
/// produced each vertex.  Vertices are strictly increasing in g with strictly
/// decreasing chord slopes; alpha = g of the last input sample and beta = h of
/// the first input sample (negative round-off above -1e-9 is clamped to 0).
struct Envelope {
  std::vector<CurveSample> vertices;
  double alpha = 0.0;
  double beta = 0.0;
};

/// Randomized choice over at most two envelope points: play p1 with
/// probability lambda, else p2.  Pure strategies have support == 1 and
/// lambda == 1.
struct MixedStrategy {
  CurveSample p1;
  CurveSample p2;
  double lambda = 1.0;
  int support = 1;
};

/// Samples (z, g(z), h(z)) on the grid z_lo, z_lo + eps, ... plus the
/// endpoint z_hi; the sample count is ceil((z_hi - z_lo)/eps) + 1.  Throws
/// std::invalid_argument for an empty interval or non-positive eps and
/// std::runtime_error (naming z) if either function returns a non-finite
/// value.
std::vector<CurveSample> sample_curve(const std::function<double(double)>& g,
                                      const std::function<double(double)>& h, double z_lo,
                                      double z_hi, double eps);

/// Single monotone-stack pass over z-ordered samples: a sample is admitted
/// only if its g strictly exceeds the top of the stack, and the stack pops
/// while the slope from second-to-top to top does not exceed the slope from
/// top to the incoming sample (so collinear interior points collapse).
/// Runs in linear time.
Envelope upper_concave_envelope(std::span<const CurveSample> samples);

/// Intersects the envelope with the line h' - beta = g' - alpha and returns
/// the equalizing strategy: the two vertices of the crossed edge weighted so
/// that the mixture sits exactly on the line.  A crossing within
/// 1e-9 * max(1, alpha, beta) of a vertex, or a zero alpha (beta), collapses
/// to a pure strategy.  Throws std::runtime_error when no envelope edge
/// straddles the line.
MixedStrategy intersect_diagonal(const Envelope& envelope);

}  // namespace bigreedy
