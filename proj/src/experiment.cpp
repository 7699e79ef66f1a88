#include "bigreedy/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bigreedy/strong_bigreedy.hpp"
#include "bigreedy/weak_bigreedy.hpp"

namespace bigreedy {

std::string algorithm_name(Algorithm algorithm) {
  return algorithm == Algorithm::game ? "game" : "binary";
}

SummaryStats summarize(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("summarize: empty sample");
  SummaryStats stats;
  stats.mean = std::accumulate(values.begin(), values.end(), 0.0) / values.size();
  std::sort(values.begin(), values.end());
  const auto quantile = [&](double q) {
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= values.size()) return values.back();
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[lo + 1] - values[lo]);
  };
  stats.min = values.front();
  stats.q1 = quantile(0.25);
  stats.median = quantile(0.5);
  stats.q3 = quantile(0.75);
  stats.max = values.back();
  return stats;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  if (config.trials <= 0) throw std::invalid_argument("run_experiment: trials must be positive");
  if (config.algorithms.empty()) {
    throw std::invalid_argument("run_experiment: no algorithms requested");
  }
  const auto started = std::chrono::steady_clock::now();

  ExperimentResult result;
  result.config = config;
  result.trials.resize(config.trials);

  std::vector<std::exception_ptr> failures(config.trials);

  const auto run_trial = [&](int t) {
    TrialRecord record;
    record.trial = t;
    record.seed = config.master_seed + static_cast<std::uint64_t>(t);
    const auto obj = generate_instance(config.family, config.n, record.seed);

    const auto validation = validate_submodularity(*obj, family_variant(config.family),
                                                   config.validator_probes, record.seed);
    if (!validation.passed) {
      std::ostringstream msg;
      msg << "instance validation failed for seed " << record.seed << " (family "
          << family_name(config.family) << "): worst Hessian entry " << validation.worst_violation
          << " exceeds tolerance " << validation.tolerance;
      throw ValidationFailure(record.seed, msg.str());
    }

    for (const Algorithm algorithm : config.algorithms) {
      TrialReport report;
      if (algorithm == Algorithm::game) {
        RunConfig rc;
        rc.epsilon = config.epsilon;
        rc.order = CoordinateOrder::random;
        rc.seed = record.seed;
        report = run_weak_bigreedy(*obj, rc).report;
      } else {
        report = run_strong_bigreedy(*obj, config.epsilon).report;
      }
      report.instance_seed = record.seed;
      record.reports.push_back(std::move(report));
    }
    result.trials[t] = std::move(record);
  };

#ifdef _OPENMP
  const int threads = config.threads > 0 ? config.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int t = 0; t < config.trials; ++t) {
    try {
      run_trial(t);
    } catch (...) {
      failures[t] = std::current_exception();
    }
  }
#else
  for (int t = 0; t < config.trials; ++t) {
    try {
      run_trial(t);
    } catch (...) {
      failures[t] = std::current_exception();
    }
  }
#endif

  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
    std::vector<double> values;
    values.reserve(result.trials.size());
    for (const TrialRecord& record : result.trials) {
      values.push_back(record.reports[a].objective_value);
    }
    result.summary[algorithm_name(config.algorithms[a])] = summarize(std::move(values));
  }

  result.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace bigreedy
