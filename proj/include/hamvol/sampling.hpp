#pragma once

#include "hamvol/rational.hpp"

#include <cstdint>

namespace hamvol {

// Counter-style generator (splitmix64). Cheap to seed, so every sample of a
// sweep gets its own stream derived from (seed, sample index); parallel and
// serial evaluation orders then produce identical results.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in (0, 1), 53 usable bits.
  double next_unit() {
    for (;;) {
      const std::uint64_t m = next() >> 11;
      if (m != 0) return static_cast<double>(m) * 0x1.0p-53;
    }
  }

 private:
  std::uint64_t state_;
};

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform point of the open standard simplex {x > 0, sum x < 1} in Q^n:
/// n+1 exponential spacings normalised to sum 1, first n coordinates kept,
/// each rounded to denominator 2^53. Redraws until the rounded point is
/// strictly interior.
RatVec sample_simplex_interior(int n, SplitMix64& rng);

/// Random strictly positive rational with numerator in [1, max_num] and
/// denominator in [1, max_den].
Rat sample_positive_rat(SplitMix64& rng, int max_num, int max_den);

}  // namespace hamvol
