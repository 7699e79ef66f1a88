#include "bigreedy/weak_bigreedy.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bigreedy {

namespace {

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || epsilon > 0.5) {
    std::ostringstream msg;
    msg << "epsilon must lie in (0, 0.5], got " << epsilon;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

double approx_argmax_1d(const std::function<double(double)>& f, double delta, double C) {
  if (!(delta > 0.0)) throw std::invalid_argument("approx_argmax_1d: delta must be positive");
  if (!(C > 0.0)) throw std::invalid_argument("approx_argmax_1d: C must be positive");
  const double eps = delta / C;

  double best_z = 0.0;
  double best_f = f(0.0);
  const auto consider = [&](double z) {
    const double v = f(z);
    if (v > best_f) {  // strict, so ties keep the smaller z
      best_f = v;
      best_z = z;
    }
  };
  const auto steps = static_cast<std::size_t>(std::ceil(1.0 / eps - 1e-12));
  for (std::size_t k = 1; k < steps; ++k) {
    const double z = static_cast<double>(k) * eps;
    if (z >= 1.0) break;
    consider(z);
  }
  consider(1.0);
  return best_z;
}

double coordinate_step(const Objective& obj, BiGreedyState& state, int i, double eps,
                       SplitMix64& rng, CoordinateTrace* trace) {
  check_epsilon(eps);
  if (i < 0 || i >= obj.dimension()) {
    throw std::invalid_argument("coordinate_step: coordinate index out of range");
  }
  const double C = obj.lipschitz_bound();
  if (!(C > 0.0)) throw std::invalid_argument("coordinate_step: objective needs a positive Lipschitz bound");

  Vector lower_probe = state.lower;
  Vector upper_probe = state.upper;
  const auto f_lower = [&](double z) {  // F(z, X_{-i})
    lower_probe[i] = z;
    return obj.value(lower_probe);
  };
  const auto f_upper = [&](double z) {  // F(z, Y_{-i})
    upper_probe[i] = z;
    return obj.value(upper_probe);
  };

  const double z_lo = approx_argmax_1d(f_upper, eps * C, C);
  const double z_hi = approx_argmax_1d(f_lower, eps * C, C);

  double chosen;
  if (trace) {
    trace->i = i;
    trace->z_lo = z_lo;
    trace->z_hi = z_hi;
  }

  if (z_hi <= z_lo) {
    chosen = z_lo;
    if (trace) {
      trace->randomized = false;
      trace->lambda = 1.0;
      trace->z1 = trace->z2 = chosen;
    }
  } else {
    // Gains relative to the two argmax values.  Both reference evaluations
    // reuse the same code path as the grid scan, so g(z_lo) == 0 and
    // h(z_hi) == 0 hold exactly and the argmax property makes g <= alpha and
    // h <= beta exact on the shared grid.
    const double ref_lower = f_lower(z_lo);
    const double ref_upper = f_upper(z_hi);
    const auto g_fn = [&](double z) { return f_lower(z) - ref_lower; };
    const auto h_fn = [&](double z) { return f_upper(z) - ref_upper; };

    const auto samples = sample_curve(g_fn, h_fn, z_lo, z_hi, eps);
    const Envelope env = upper_concave_envelope(samples);
    const MixedStrategy strat = intersect_diagonal(env);
    const double u = rng.uniform();  // consumed even for a pure strategy
    chosen = u < strat.lambda ? strat.p1.z : strat.p2.z;
    if (trace) {
      trace->randomized = true;
      trace->alpha = env.alpha;
      trace->beta = env.beta;
      trace->lambda = strat.lambda;
      trace->z1 = strat.p1.z;
      trace->z2 = strat.p2.z;
      trace->samples = samples;
    }
  }

  if (trace) trace->chosen = chosen;
  state.lower[i] = chosen;
  state.upper[i] = chosen;
  return chosen;
}

WeakRunResult run_weak_bigreedy(const Objective& obj, const RunConfig& config) {
  check_epsilon(config.epsilon);
  const auto started = std::chrono::steady_clock::now();
  const int n = obj.dimension();

  CountingObjective counted(obj);
  SplitMix64 rng(config.seed);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (config.order == CoordinateOrder::random) {
    for (int i = n - 1; i > 0; --i) {
      const auto j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
      std::swap(order[i], order[j]);
    }
  }

  WeakRunResult result;
  BiGreedyState state{Vector::Zero(n), Vector::Ones(n)};
  if (config.record_trace) result.trace.resize(n);
  for (int k = 0; k < n; ++k) {
    CoordinateTrace* trace = config.record_trace ? &result.trace[k] : nullptr;
    coordinate_step(counted, state, order[k], config.epsilon, rng, trace);
  }

  result.point = state.lower;
  result.report.instance_seed = config.seed;
  result.report.algorithm = "game";
  result.report.objective_value = counted.value(result.point);
  result.report.oracle_calls = counted.value_calls();

  const double budget = 8.0 * n / config.epsilon + 12.0 * n;
  if (static_cast<double>(result.report.oracle_calls) > budget) {
    std::ostringstream msg;
    msg << "objective-evaluation budget exceeded: " << result.report.oracle_calls << " > "
        << budget;
    throw std::logic_error(msg.str());
  }

  result.report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace bigreedy
