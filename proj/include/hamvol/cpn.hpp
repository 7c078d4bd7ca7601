#pragma once

#include "hamvol/cn_tori.hpp"
#include "hamvol/rational.hpp"

#include <cstdint>

namespace hamvol::cpn {

// A point of the open moment simplex of CP^n, written in the action
// coordinates of one of the n+1 affine charts. Chart 0 is the hub: the chart
// change 0 -> k replaces the k-th coordinate by 1 - sum(coords) and keeps the
// others in place (an involution through the hub).
struct ChartPoint {
  int chart = 0;
  RatVec coords;
};

/// Rewrites p in the coordinates of target_chart, routing through chart 0.
/// Throws OutsideInterior when p is not strictly inside the simplex.
ChartPoint chart_transform(const ChartPoint& p, int target_chart);

/// Returns a chart representation with conorm (sum + max) <= 1: chart 0 if it
/// already qualifies, otherwise the chart of a maximal chart-0 coordinate
/// (lowest index on ties).
ChartPoint find_good_chart(const ChartPoint& p);

/// Squared volume of the torus orbit over p, as the coefficient of the
/// (positive, chart-independent) metric constant: (1 - sum) * prod.
Rat orbit_sqvolume(const ChartPoint& p);

enum class Verdict {
  NotVolumeMinimizing,
  Unknown,
};

const char* verdict_name(Verdict v) noexcept;

// A certificate that the torus orbit over a point is not volume minimizing
// under Hamiltonian isotopies: an admissible chart (conorm <= 1, at least
// three distinct coordinates), the witness move applied there, and the exact
// squared-volume drop. Unknown means no chart satisfies the hypotheses; it
// never asserts minimality.
struct Certificate {
  Verdict verdict = Verdict::Unknown;
  int chart = -1;
  RatVec source;
  RatVec target;
  Rat sqvol_drop;
  cn_tori::WitnessStep details;
};

/// Scans all n+1 charts and picks the admissible one with the largest exact
/// squared-volume drop (lowest chart index on ties).
Certificate certify(const ChartPoint& p);

/// The factored form of the squared-volume drop for the witness step taken at
/// chart coordinates u: (prod(u)/u_j) * (u_i - min) * (1 - sum - u_j + u_i - min).
/// Equals orbit_sqvolume(before) - orbit_sqvolume(after) identically.
Rat witness_drop_closed_form(const RatVec& u, const cn_tori::WitnessStep& step);

struct DensityResult {
  std::int64_t certified = 0;
  std::int64_t samples = 0;

  double fraction() const {
    return samples == 0 ? 0.0
                        : static_cast<double>(certified) / static_cast<double>(samples);
  }
};

// Fraction of uniform interior points whose orbit gets certified. Per-sample
// RNG streams are derived from (seed, index), so the parallel kernel and the
// serial reference return identical counts. max_threads = 0 lets OpenMP pick.
DensityResult dn_density(int n, std::int64_t samples, std::uint64_t seed,
                         int max_threads = 0);
DensityResult dn_density_serial(int n, std::int64_t samples, std::uint64_t seed);

}  // namespace hamvol::cpn
