#include "bigreedy/envelope.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bigreedy {

std::vector<CurveSample> sample_curve(const std::function<double(double)>& g,
                                      const std::function<double(double)>& h, double z_lo,
                                      double z_hi, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("sample_curve: eps must be positive");
  if (!(z_lo < z_hi)) throw std::invalid_argument("sample_curve: need z_lo < z_hi");

  // ceil with a small backoff so that an exactly divisible interval does not
  // gain a spurious extra point from floating-point round-up.
  const auto grid_steps = static_cast<std::size_t>(std::ceil((z_hi - z_lo) / eps - 1e-12));
  std::vector<CurveSample> samples;
  samples.reserve(grid_steps + 1);

  const auto eval_at = [&](double z) {
    CurveSample s;
    s.z = z;
    s.g = g(z);
    s.h = h(z);
    if (!std::isfinite(s.g) || !std::isfinite(s.h)) {
      std::ostringstream msg;
      msg << "sample_curve: non-finite curve value at z=" << z;
      throw std::runtime_error(msg.str());
    }
    return s;
  };

  for (std::size_t k = 0; k < grid_steps; ++k) {
    const double z = z_lo + static_cast<double>(k) * eps;
    if (z >= z_hi) break;  // guard against round-off landing on the endpoint
    samples.push_back(eval_at(z));
  }
  samples.push_back(eval_at(z_hi));
  return samples;
}

namespace {

// slope(a->b) <= slope(b->c) expressed as a cross product; valid when
// b.g > a.g and c.g > b.g.
bool chain_bends_up(const CurveSample& a, const CurveSample& b, const CurveSample& c) {
  return (b.g - a.g) * (c.h - b.h) - (b.h - a.h) * (c.g - b.g) >= 0.0;
}

}  // namespace

Envelope upper_concave_envelope(std::span<const CurveSample> samples) {
  if (samples.size() < 2) {
    throw std::invalid_argument("upper_concave_envelope: need at least 2 samples");
  }
  for (std::size_t k = 1; k < samples.size(); ++k) {
    if (!(samples[k - 1].z < samples[k].z)) {
      throw std::invalid_argument("upper_concave_envelope: samples must strictly increase in z");
    }
  }

  Envelope env;
  auto& stack = env.vertices;
  stack.reserve(samples.size());
  for (const CurveSample& s : samples) {
    if (!stack.empty() && !(s.g > stack.back().g)) continue;
    while (stack.size() >= 2 && chain_bends_up(stack[stack.size() - 2], stack.back(), s)) {
      stack.pop_back();
    }
    stack.push_back(s);
  }

  const auto clamp_tiny = [](double v) { return v < 0.0 && v >= -1e-9 ? 0.0 : v; };
  env.alpha = clamp_tiny(samples.back().g);
  env.beta = clamp_tiny(samples.front().h);
  return env;
}

MixedStrategy intersect_diagonal(const Envelope& envelope) {
  const auto& verts = envelope.vertices;
  if (verts.empty()) throw std::invalid_argument("intersect_diagonal: empty envelope");
  const double alpha = envelope.alpha;
  const double beta = envelope.beta;
  if (alpha < 0.0 || beta < 0.0) {
    throw std::invalid_argument("intersect_diagonal: alpha and beta must be non-negative");
  }

  const auto pure = [](const CurveSample& p) {
    MixedStrategy s;
    s.p1 = s.p2 = p;
    s.lambda = 1.0;
    s.support = 1;
    return s;
  };

  // Degenerate endpoints: with alpha = 0 the line h' - beta = g' - alpha
  // already passes through the first envelope point (which dominates
  // (0, beta)); symmetrically for beta = 0 and the last point.
  if (alpha <= 0.0) return pure(verts.front());
  if (beta <= 0.0) return pure(verts.back());

  const double target = beta - alpha;  // value of h' - g' on the line
  const double tol = 1e-9 * std::max({1.0, alpha, beta});

  for (std::size_t k = 0; k < verts.size(); ++k) {
    const double dk = verts[k].h - verts[k].g;
    if (std::abs(dk - target) <= tol) return pure(verts[k]);
    if (k + 1 == verts.size()) break;
    const double dn = verts[k + 1].h - verts[k + 1].g;
    if (dk > target && target > dn) {
      MixedStrategy s;
      s.p1 = verts[k];
      s.p2 = verts[k + 1];
      s.lambda = (target - dn) / (dk - dn);
      s.support = 2;
      return s;
    }
  }
  throw std::runtime_error(
      "intersect_diagonal: no envelope edge straddles the line (single-crossing violated)");
}

}  // namespace bigreedy
