#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigreedy/objective.hpp"
#include "bigreedy/report.hpp"

namespace bigreedy {

enum class Algorithm { game, binary };

std::string algorithm_name(Algorithm algorithm);

struct ExperimentConfig {
  Family family = Family::nqp_strong;
  int n = 100;
  int trials = 20;
  std::uint64_t master_seed = 0;
  double epsilon = 0.01;
  std::vector<Algorithm> algorithms = {Algorithm::game, Algorithm::binary};
  int threads = 0;           // 0 = OpenMP default
  int validator_probes = 2;  // submodularity probes per generated instance
};

struct SummaryStats {
  double mean = 0.0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

struct TrialRecord {
  int trial = 0;
  std::uint64_t seed = 0;
  std::vector<TrialReport> reports;  // one per requested algorithm, in order
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<TrialRecord> trials;
  std::map<std::string, SummaryStats> summary;
  double elapsed_ms = 0.0;
};

/// Raised when a generated instance fails its family's submodularity
/// validator; the CLI maps it to exit code 2.
class ValidationFailure : public std::runtime_error {
public:
  ValidationFailure(std::uint64_t seed, const std::string& message)
      : std::runtime_error(message), seed_(seed) {}
  std::uint64_t seed() const noexcept { return seed_; }

private:
  std::uint64_t seed_;
};

/// Mean and linear-interpolation quartiles of a non-empty sample.
SummaryStats summarize(std::vector<double> values);

/// Runs `trials` independent trials: trial t generates an instance with seed
/// master_seed + t, validates it with the family's variant, and runs each
/// requested algorithm (the randomized one with a shuffled coordinate order
/// seeded by the trial seed).  Trials execute in an OpenMP work pool; the
/// output is identical for any thread count.
ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace bigreedy
