#include "hamvol/cn_tori.hpp"

#include "hamvol/chekanov.hpp"

namespace hamvol::cn_tori {

namespace {

void require_positive(const RatVec& v) {
  if (v.empty()) throw Error(Errc::invalid_argument, "vector must have length >= 1");
  for (const Rat& x : v)
    if (x <= 0)
      throw Error(Errc::non_positive_entry, "entry " + to_string(x) + " is not positive");
}

}  // namespace

MomentVec areas_to_moment(const RatVec& areas, AreaUnit unit) {
  require_positive(areas);
  // b_i = 2*pi * a_i: when b is already a multiple of 2*pi the coefficients
  // are the moment values; otherwise they keep a symbolic 1/(2*pi).
  return MomentVec{areas, unit == AreaUnit::two_pi_multiples ? MomentUnit::moment
                                                             : MomentUnit::area_over_2pi};
}

RatVec moment_to_areas(const MomentVec& m) {
  require_positive(m.coords);
  return m.coords;
}

SqVolume product_torus_sqvolume(const RatVec& a) {
  require_positive(a);
  // Circle i has radius sqrt(2 a_i), circumference 2*pi*sqrt(2 a_i).
  const int n = static_cast<int>(a.size());
  Rat coeff = product(a);
  coeff *= Rat(Int(1) << n);
  return SqVolume{coeff, 2 * n};
}

WitnessStep witness(const RatVec& a) {
  const auto inv = chekanov::invariants(a);
  if (inv.n_distinct < 3)
    throw Error(Errc::not_applicable,
                "witness requires at least three distinct entries, got " +
                    std::to_string(inv.n_distinct));

  int i = -1, j = -1;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > inv.min_val && (i < 0 || a[k] < a[static_cast<std::size_t>(i)]))
      i = static_cast<int>(k);
    if (j < 0 || a[k] > a[static_cast<std::size_t>(j)]) j = static_cast<int>(k);
  }
  // Three distinct values force second-smallest < max, hence i != j.

  WitnessStep step;
  step.index_i = i;
  step.index_j = j;
  step.before = a;
  step.after = a;
  step.after[static_cast<std::size_t>(j)] =
      a[static_cast<std::size_t>(j)] - a[static_cast<std::size_t>(i)] + inv.min_val;
  return step;
}

std::vector<WitnessStep> greedy_reduce(const RatVec& a) {
  require_positive(a);
  std::vector<WitnessStep> steps;
  RatVec current = a;
  while (chekanov::invariants(current).n_distinct >= 3) {
    steps.push_back(witness(current));
    current = steps.back().after;
  }
  return steps;
}

}  // namespace hamvol::cn_tori
