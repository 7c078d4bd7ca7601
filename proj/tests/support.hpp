#pragma once

// Generators and independent oracles shared by the toric unit tests and the
// acceptance sweep.

#include "hamvol/chekanov.hpp"
#include "hamvol/sampling.hpp"
#include "hamvol/toric.hpp"

#include <numeric>
#include <vector>

namespace hamvol::testsupport {

inline toric::DelzantPolytope make_cube(int n, const Rat& side) {
  std::vector<toric::Facet> facets;
  for (int i = 0; i < n; ++i) {
    toric::Facet f;
    f.normal.assign(static_cast<std::size_t>(n), Int(0));
    f.normal[static_cast<std::size_t>(i)] = -1;
    f.offset = -side;
    facets.push_back(std::move(f));
  }
  return toric::DelzantPolytope(n, std::move(facets));
}

// Random valid polytope: a box guarantees boundedness and every extra facet
// gets a primitive mixed-sign normal with a negative offset, so the origin
// stays a vertex.
inline toric::DelzantPolytope random_polytope(SplitMix64& rng, int n) {
  std::vector<toric::Facet> facets;
  for (int i = 0; i < n; ++i) {
    toric::Facet f;
    f.normal.assign(static_cast<std::size_t>(n), Int(0));
    f.normal[static_cast<std::size_t>(i)] = -1;
    f.offset = -(Rat(1, 2) + sample_positive_rat(rng, 5, 2));
    facets.push_back(std::move(f));
  }
  const int extra = static_cast<int>(rng.next() % 3);
  for (int e = 0; e < extra; ++e) {
    std::vector<long long> raw(static_cast<std::size_t>(n));
    bool has_negative = false;
    long long g = 0;
    for (auto& v : raw) {
      v = static_cast<long long>(rng.next() % 7) - 3;
      has_negative = has_negative || v < 0;
      g = std::gcd(g, v);
    }
    if (!has_negative || g == 0) {
      --e;
      continue;
    }
    toric::Facet f;
    for (const auto v : raw) f.normal.emplace_back(v / g);
    f.offset = -sample_positive_rat(rng, 4, 3);
    facets.push_back(std::move(f));
  }
  return toric::DelzantPolytope(n, std::move(facets));
}

// Closed containment of the corner simplex of radius s reduces to its
// vertices 0 and s*e_i.
inline bool corner_simplex_fits(const toric::DelzantPolytope& P, const Rat& s) {
  for (std::size_t r = 0; r < P.facets().size(); ++r) {
    const auto& f = P.facets()[r];
    if (-f.offset < 0) return false;
    for (const Int& e : f.normal)
      if (s * Rat(e) - f.offset < 0) return false;
  }
  return true;
}

// Independent estimate of s0 by bisection on the vertex-containment
// predicate; the result brackets the supremum within 2^-log2_width.
inline Rat s0_bisection_oracle(const toric::DelzantPolytope& P, int log2_width) {
  Rat lo = 0, hi = 1;
  int guard = 0;
  while (corner_simplex_fits(P, hi)) {
    lo = hi;
    hi *= 2;
    if (++guard > 64) throw std::logic_error("unbounded corner simplex");
  }
  const Rat width = Rat(Int(1), Int(1) << static_cast<unsigned>(log2_width));
  while (hi - lo > width) {
    const Rat mid = (lo + hi) / 2;
    if (corner_simplex_fits(P, mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

/// Interior polytope point with norm < s0 and at least three distinct
/// entries: a simplex sample scaled into the corner simplex of radius s0/2.
inline RatVec small_norm_point(const toric::DelzantPolytope& P, SplitMix64& rng) {
  const Rat radius = P.s0() / 2;
  for (;;) {
    RatVec a = sample_simplex_interior(P.dim(), rng);
    for (Rat& x : a) x *= radius;
    const auto inv = chekanov::invariants(a);
    if (inv.n_distinct >= 3 && inv.norm < P.s0()) return a;
  }
}

}  // namespace hamvol::testsupport
