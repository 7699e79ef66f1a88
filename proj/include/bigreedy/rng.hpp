#pragma once

#include <cstdint>
#include <cmath>

namespace bigreedy {

/// Counter-based pseudo-random generator (SplitMix64).
///
/// The state advances by a fixed odd constant and every output is a finalizer
/// hash of the state, so the k-th draw for a given seed is identical on every
/// platform and independent of how earlier draws were consumed.  All
/// randomized components of the library (instance generators, coordinate
/// shuffles, mixed-strategy draws) consume this stream and nothing else,
/// which makes runs reproducible from a single 64-bit seed.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform draw in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller; consumes exactly two uniforms per call
  /// (no cached spare, so the stream position stays easy to reason about).
  double normal() {
    double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

private:
  std::uint64_t state_;
};

}  // namespace bigreedy
