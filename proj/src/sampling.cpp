#include "hamvol/sampling.hpp"

#include <cmath>
#include <cstdlib>

namespace hamvol {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::int64_t kDen = std::int64_t(1) << 53;

}  // namespace

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed ^ mix64(index + 0x9e3779b97f4a7c15ULL));
}

RatVec sample_simplex_interior(int n, SplitMix64& rng) {
  if (n < 1) throw Error(Errc::invalid_argument, "dimension must be >= 1");
  for (;;) {
    // Dirichlet(1,...,1): exponential spacings normalised to sum 1.
    std::vector<double> e(static_cast<std::size_t>(n) + 1);
    double total = 0.0;
    for (double& x : e) {
      x = -std::log(rng.next_unit());
      total += x;
    }
    RatVec coords;
    coords.reserve(static_cast<std::size_t>(n));
    std::int64_t num_sum = 0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const auto num = std::llround(e[static_cast<std::size_t>(i)] / total *
                                    static_cast<double>(kDen));
      if (num <= 0 || num >= kDen) {
        ok = false;
        break;
      }
      num_sum += num;
      coords.emplace_back(Int(num), Int(kDen));
    }
    if (!ok || num_sum >= kDen) continue;  // rounding left the open simplex
    return coords;
  }
}

Rat sample_positive_rat(SplitMix64& rng, int max_num, int max_den) {
  if (max_num < 1 || max_den < 1)
    throw Error(Errc::invalid_argument, "bounds must be >= 1");
  const auto num = 1 + static_cast<std::int64_t>(rng.next() %
                                                 static_cast<std::uint64_t>(max_num));
  const auto den = 1 + static_cast<std::int64_t>(rng.next() %
                                                 static_cast<std::uint64_t>(max_den));
  return Rat(Int(num), Int(den));
}

}  // namespace hamvol
