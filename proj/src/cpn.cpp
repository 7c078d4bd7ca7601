#include "hamvol/cpn.hpp"

#include "hamvol/chekanov.hpp"
#include "hamvol/sampling.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hamvol::cpn {

namespace {

void require_interior(const ChartPoint& p) {
  const int n = static_cast<int>(p.coords.size());
  if (n < 1) throw Error(Errc::invalid_argument, "point must have dimension >= 1");
  if (p.chart < 0 || p.chart > n)
    throw Error(Errc::invalid_argument,
                "chart index " + std::to_string(p.chart) + " outside 0.." + std::to_string(n));
  Rat s = 0;
  for (const Rat& x : p.coords) {
    if (x <= 0)
      throw Error(Errc::outside_interior, "coordinate " + to_string(x) + " is not positive");
    s += x;
  }
  if (s >= 1)
    throw Error(Errc::outside_interior, "coordinate sum " + to_string(s) + " is not < 1");
}

// Chart i -> chart 0. The relation u_i^j = u_0^j (j != i), u_i^i = 1 - |u_0|
// is its own inverse: u_0^i = 1 - |u_i|.
RatVec to_hub(const ChartPoint& p) {
  if (p.chart == 0) return p.coords;
  RatVec hub = p.coords;
  hub[static_cast<std::size_t>(p.chart - 1)] = 1 - sum(p.coords);
  return hub;
}

ChartPoint from_hub(const RatVec& hub, int target) {
  if (target == 0) return ChartPoint{0, hub};
  RatVec out = hub;
  out[static_cast<std::size_t>(target - 1)] = 1 - sum(hub);
  return ChartPoint{target, out};
}

}  // namespace

ChartPoint chart_transform(const ChartPoint& p, int target_chart) {
  require_interior(p);
  const int n = static_cast<int>(p.coords.size());
  if (target_chart < 0 || target_chart > n)
    throw Error(Errc::invalid_argument, "target chart " + std::to_string(target_chart) +
                                            " outside 0.." + std::to_string(n));
  if (target_chart == p.chart) return p;
  const ChartPoint out = from_hub(to_hub(p), target_chart);
  // Interior points stay interior under chart changes.
  require_interior(out);
  return out;
}

ChartPoint find_good_chart(const ChartPoint& p) {
  const ChartPoint hub = chart_transform(p, 0);
  const auto inv = chekanov::invariants(hub.coords);
  if (inv.conorm <= 1) return hub;
  std::size_t argmax = 0;
  for (std::size_t k = 1; k < hub.coords.size(); ++k)
    if (hub.coords[k] > hub.coords[argmax]) argmax = k;
  return chart_transform(hub, static_cast<int>(argmax) + 1);
}

Rat orbit_sqvolume(const ChartPoint& p) {
  require_interior(p);
  return (1 - sum(p.coords)) * product(p.coords);
}

const char* verdict_name(Verdict v) noexcept {
  return v == Verdict::NotVolumeMinimizing ? "NotVolumeMinimizing" : "Unknown";
}

Rat witness_drop_closed_form(const RatVec& u, const cn_tori::WitnessStep& step) {
  const auto inv = chekanov::invariants(u);
  const Rat& ui = u[static_cast<std::size_t>(step.index_i)];
  const Rat& uj = u[static_cast<std::size_t>(step.index_j)];
  return product(u) / uj * (ui - inv.min_val) * (1 - inv.total - uj + ui - inv.min_val);
}

Certificate certify(const ChartPoint& p) {
  const ChartPoint hub = chart_transform(p, 0);
  const int n = static_cast<int>(hub.coords.size());

  Certificate best;
  best.chart = p.chart;
  best.source = p.coords;
  best.sqvol_drop = 0;

  for (int k = 0; k <= n; ++k) {
    const ChartPoint u = k == 0 ? hub : chart_transform(hub, k);
    const auto inv = chekanov::invariants(u.coords);
    if (inv.conorm > 1 || inv.n_distinct < 3) continue;
    const auto step = cn_tori::witness(u.coords);
    const Rat drop = orbit_sqvolume(u) - orbit_sqvolume(ChartPoint{k, step.after});
    if (best.verdict == Verdict::Unknown || drop > best.sqvol_drop) {
      best.verdict = Verdict::NotVolumeMinimizing;
      best.chart = k;
      best.source = u.coords;
      best.target = step.after;
      best.sqvol_drop = drop;
      best.details = step;
    }
  }
  return best;
}

namespace {

bool sample_is_certified(int n, std::uint64_t stream) {
  SplitMix64 rng(stream);
  const RatVec coords = sample_simplex_interior(n, rng);
  return certify(ChartPoint{0, coords}).verdict == Verdict::NotVolumeMinimizing;
}

void require_density_args(int n, std::int64_t samples) {
  if (n < 1) throw Error(Errc::invalid_argument, "dimension must be >= 1");
  if (samples < 1) throw Error(Errc::invalid_argument, "samples must be >= 1");
}

}  // namespace

DensityResult dn_density_serial(int n, std::int64_t samples, std::uint64_t seed) {
  require_density_args(n, samples);
  std::int64_t certified = 0;
  for (std::int64_t k = 0; k < samples; ++k)
    certified += sample_is_certified(n, stream_seed(seed, static_cast<std::uint64_t>(k)));
  return DensityResult{certified, samples};
}

DensityResult dn_density(int n, std::int64_t samples, std::uint64_t seed, int max_threads) {
  require_density_args(n, samples);
  std::int64_t certified = 0;
#ifdef _OPENMP
  const int threads = max_threads > 0 ? max_threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) reduction(+ : certified) num_threads(threads)
  for (std::int64_t k = 0; k < samples; ++k)
    certified += sample_is_certified(n, stream_seed(seed, static_cast<std::uint64_t>(k))) ? 1 : 0;
#else
  (void)max_threads;
  return dn_density_serial(n, samples, seed);
#endif
  return DensityResult{certified, samples};
}

}  // namespace hamvol::cpn
