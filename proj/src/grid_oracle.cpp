#include "bigreedy/grid_oracle.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bigreedy {

namespace {

std::uint64_t checked_lattice_size(const Objective& obj, int resolution) {
  if (resolution < 1) throw std::invalid_argument("grid_oracle: resolution must be at least 1");
  const int n = obj.dimension();
  const double k = static_cast<double>(resolution);
  if (n * std::log(k) > std::log(1e8) + 1e-9 || std::pow(k + 1.0, n) > 2e8) {
    std::ostringstream msg;
    msg << "grid budget exceeded: " << resolution << "^" << n
        << " points is over the 1e8 limit; reduce n or the grid resolution";
    throw BudgetExceeded(msg.str());
  }
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(resolution) + 1;
  return total;
}

// Coordinate 0 is the most significant digit, so increasing linear index
// enumerates lattice points in lexicographic order.
void decode_point(std::uint64_t index, int resolution, Vector& out) {
  const auto base = static_cast<std::uint64_t>(resolution) + 1;
  for (int j = static_cast<int>(out.size()) - 1; j >= 0; --j) {
    out[j] = static_cast<double>(index % base) / resolution;
    index /= base;
  }
}

struct Best {
  double value = -std::numeric_limits<double>::infinity();
  std::uint64_t index = 0;
  bool valid = false;

  void consider(double v, std::uint64_t idx) {
    if (!valid || v > value || (v == value && idx < index)) {
      value = v;
      index = idx;
      valid = true;
    }
  }
};

Best scan_range(const Objective& obj, int resolution, std::uint64_t begin, std::uint64_t end) {
  Best best;
  Vector x(obj.dimension());
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    decode_point(idx, resolution, x);
    best.consider(obj.value(x), idx);
  }
  return best;
}

GridOracleResult finish(const Objective& obj, int resolution, const Best& best,
                        std::uint64_t total) {
  GridOracleResult result;
  result.point = Vector(obj.dimension());
  decode_point(best.index, resolution, result.point);
  result.value = best.value;
  result.evaluations = total;
  return result;
}

}  // namespace

GridOracleResult grid_oracle_serial(const Objective& obj, int resolution) {
  const std::uint64_t total = checked_lattice_size(obj, resolution);
  // The strict comparison in Best::consider keeps the first (lexicographically
  // smallest) maximizer.
  const Best best = scan_range(obj, resolution, 0, total);
  return finish(obj, resolution, best, total);
}

GridOracleResult grid_oracle(const Objective& obj, int resolution) {
#ifdef _OPENMP
  const std::uint64_t total = checked_lattice_size(obj, resolution);
  Best best;
#pragma omp parallel
  {
    const int threads = omp_get_num_threads();
    const int rank = omp_get_thread_num();
    const std::uint64_t chunk = (total + threads - 1) / threads;
    const std::uint64_t begin = std::min<std::uint64_t>(chunk * rank, total);
    const std::uint64_t end = std::min<std::uint64_t>(begin + chunk, total);
    const Best local = scan_range(obj, resolution, begin, end);
#pragma omp critical
    {
      // Deterministic regardless of merge order: value with smallest index wins.
      if (local.valid) best.consider(local.value, local.index);
    }
  }
  return finish(obj, resolution, best, total);
#else
  return grid_oracle_serial(obj, resolution);
#endif
}

}  // namespace bigreedy
