// Benchmark comparing the OpenMP-parallel kernels against their serial
// reference implementations, which are kept for differential testing.  Both
// paths must produce identical results; this tool reports the timings side
// by side and fails loudly if the outputs ever diverge.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bigreedy/experiment.hpp"
#include "bigreedy/grid_oracle.hpp"
#include "bigreedy/io.hpp"
#include "bigreedy/objective.hpp"

namespace {

double time_ms(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void print_row(const std::string& kernel, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-34s %12.1f %12.1f %9.2fx   %s\n", kernel.c_str(), serial_ms, parallel_ms,
              serial_ms / parallel_ms, equal ? "identical" : "DIVERGED");
}

bool same_bits(const bigreedy::Vector& a, const bigreedy::Vector& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

bool same_result(const bigreedy::GridOracleResult& a, const bigreedy::GridOracleResult& b) {
  return a.value == b.value && same_bits(a.point, b.point) && a.evaluations == b.evaluations;
}

// Strips wall-clock fields so that serial and pooled runs can be compared.
std::string stable_dump(bigreedy::ExperimentResult result) {
  result.elapsed_ms = 0.0;
  for (auto& record : result.trials) {
    for (auto& report : record.reports) report.elapsed_ms = 0.0;
  }
  return bigreedy::experiment_to_json(result).dump();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; the parallel kernels run serially\n\n");
#endif
  std::printf("%-34s %12s %12s %10s\n", "kernel", "serial ms", "parallel ms", "speedup");

  int divergences = 0;

  {
    const bigreedy::QuadraticObjective obj = bigreedy::gen_nqp(4, 2024, bigreedy::Variant::strong);
    bigreedy::GridOracleResult serial, parallel;
    const double serial_ms = time_ms([&] { serial = bigreedy::grid_oracle_serial(obj, 48); });
    const double parallel_ms = time_ms([&] { parallel = bigreedy::grid_oracle(obj, 48); });
    const bool equal = same_result(serial, parallel);
    divergences += equal ? 0 : 1;
    print_row("lattice oracle, quadratic n=4 k=48", serial_ms, parallel_ms, equal);
  }

  {
    const bigreedy::SoftmaxObjective obj = bigreedy::gen_softmax(3, 2025);
    bigreedy::GridOracleResult serial, parallel;
    const double serial_ms = time_ms([&] { serial = bigreedy::grid_oracle_serial(obj, 64); });
    const double parallel_ms = time_ms([&] { parallel = bigreedy::grid_oracle(obj, 64); });
    const bool equal = same_result(serial, parallel);
    divergences += equal ? 0 : 1;
    print_row("lattice oracle, softmax n=3 k=64", serial_ms, parallel_ms, equal);
  }

  {
    bigreedy::ExperimentConfig config;
    config.family = bigreedy::Family::nqp_strong;
    config.n = 40;
    config.trials = 8;
    config.master_seed = 99;
    config.epsilon = 0.01;

    config.threads = 1;
    std::string serial_json;
    const double serial_ms =
        time_ms([&] { serial_json = stable_dump(bigreedy::run_experiment(config)); });
    config.threads = 0;
    std::string pooled_json;
    const double parallel_ms =
        time_ms([&] { pooled_json = stable_dump(bigreedy::run_experiment(config)); });
    const bool equal = serial_json == pooled_json;
    divergences += equal ? 0 : 1;
    print_row("trial pool, nqp-strong n=40 T=8", serial_ms, parallel_ms, equal);
  }

  if (divergences > 0) {
    std::printf("\n%d kernel(s) diverged from the serial reference\n", divergences);
    return 1;
  }
  std::printf("\nall parallel kernels match their serial references\n");
  return 0;
}
