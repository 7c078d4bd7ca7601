#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hamvol/chekanov.hpp"
#include "hamvol/cpn.hpp"
#include "hamvol/sampling.hpp"

using namespace hamvol;
using namespace hamvol::cpn;

namespace {

ChartPoint random_interior_point(SplitMix64& rng, int n) {
  return ChartPoint{0, sample_simplex_interior(n, rng)};
}

RatVec barycentre(int n) {
  return RatVec(static_cast<std::size_t>(n), Rat(1, n + 1));
}

}  // namespace

TEST_CASE("chart transform replaces one coordinate through the hub") {
  const ChartPoint p{0, RatVec{Rat(1, 2), Rat(3, 10), Rat(1, 10)}};
  const ChartPoint q = chart_transform(p, 1);
  CHECK(q.chart == 1);
  CHECK(q.coords == RatVec{Rat(1, 10), Rat(3, 10), Rat(1, 10)});
}

TEST_CASE("chart transform to the same chart is the identity") {
  const ChartPoint p{2, RatVec{Rat(1, 5), Rat(1, 4), Rat(1, 8)}};
  const ChartPoint q = chart_transform(p, 2);
  CHECK(q.chart == 2);
  CHECK(q.coords == p.coords);
}

TEST_CASE("hub round trips are the identity") {
  SplitMix64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + static_cast<int>(rng.next() % 4);
    const ChartPoint p = random_interior_point(rng, n);
    for (int k = 0; k <= n; ++k) {
      const ChartPoint q = chart_transform(chart_transform(p, k), p.chart);
      CHECK(q.coords == p.coords);
      CHECK(q.chart == p.chart);
    }
  }
}

TEST_CASE("chart transform rejects boundary and invalid charts") {
  CHECK_THROWS_AS(chart_transform(ChartPoint{0, RatVec{Rat(0), Rat(1, 2)}}, 1), Error);
  CHECK_THROWS_AS(chart_transform(ChartPoint{0, RatVec{Rat(1, 2), Rat(1, 2)}}, 1), Error);
  CHECK_THROWS_AS(chart_transform(ChartPoint{0, RatVec{Rat(1, 4), Rat(1, 4)}}, 3), Error);
  CHECK_THROWS_AS(chart_transform(ChartPoint{5, RatVec{Rat(1, 4), Rat(1, 4)}}, 0), Error);
  try {
    chart_transform(ChartPoint{0, RatVec{Rat(1), Rat(1, 2)}}, 0);
  } catch (const Error& e) {
    CHECK(e.kind() == Errc::outside_interior);
  }
}

TEST_CASE("find_good_chart follows the maximal coordinate") {
  // conorm in chart 0 is 9/10 + 1/2 = 7/5 > 1, the largest coordinate is the
  // first, and chart 1 has conorm 1/2 + 3/10 = 4/5
  const ChartPoint p{0, RatVec{Rat(1, 2), Rat(3, 10), Rat(1, 10)}};
  const ChartPoint g = find_good_chart(p);
  CHECK(g.chart == 1);
  CHECK(g.coords == RatVec{Rat(1, 10), Rat(3, 10), Rat(1, 10)});
  CHECK(chekanov::invariants(g.coords).conorm == Rat(4, 5));
}

TEST_CASE("find_good_chart keeps chart 0 at the barycentre") {
  for (int n = 1; n <= 6; ++n) {
    const ChartPoint g = find_good_chart(ChartPoint{0, barycentre(n)});
    CHECK(g.chart == 0);
    CHECK(chekanov::invariants(g.coords).conorm == 1);
  }
}

TEST_CASE("find_good_chart always reaches conorm <= 1") {
  SplitMix64 rng(77);
  for (int t = 0; t < 400; ++t) {
    const int n = 1 + static_cast<int>(rng.next() % 5);
    const ChartPoint g = find_good_chart(random_interior_point(rng, n));
    CHECK(chekanov::invariants(g.coords).conorm <= 1);
  }
}

TEST_CASE("orbit volume examples") {
  CHECK(orbit_sqvolume(ChartPoint{0, RatVec{Rat(1, 5), Rat(3, 10), Rat(1, 10)}}) ==
        Rat(3, 1250));
  // the same point seen from chart 1
  CHECK(orbit_sqvolume(ChartPoint{1, RatVec{Rat(2, 5), Rat(3, 10), Rat(1, 10)}}) ==
        Rat(3, 1250));
  CHECK(orbit_sqvolume(ChartPoint{0, barycentre(2)}) == Rat(1, 27));
}

TEST_CASE("orbit volume is chart invariant") {
  SplitMix64 rng(12345);
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + static_cast<int>(rng.next() % 4);
    const ChartPoint p = random_interior_point(rng, n);
    const Rat v = orbit_sqvolume(p);
    for (int k = 0; k <= n; ++k) CHECK(orbit_sqvolume(chart_transform(p, k)) == v);
  }
}

TEST_CASE("certify the worked three-dimensional example") {
  const ChartPoint p{0, RatVec{Rat(1, 10), Rat(1, 5), Rat(2, 5)}};
  const Certificate cert = certify(p);
  REQUIRE(cert.verdict == Verdict::NotVolumeMinimizing);
  CHECK(cert.chart == 3);
  CHECK(cert.source == RatVec{Rat(1, 10), Rat(1, 5), Rat(3, 10)});
  CHECK(cert.target == RatVec{Rat(1, 10), Rat(1, 5), Rat(1, 5)});
  CHECK(cert.sqvol_drop == Rat(1, 2500));
  CHECK(chekanov::invariants(cert.source).conorm <= 1);
  CHECK(chekanov::isotopy_equivalent(cert.source, cert.target));
}

TEST_CASE("certify returns Unknown at the barycentre") {
  for (int n = 2; n <= 6; ++n) {
    const Certificate cert = certify(ChartPoint{0, barycentre(n)});
    CHECK(cert.verdict == Verdict::Unknown);
    CHECK(cert.sqvol_drop == 0);
  }
}

TEST_CASE("certify returns Unknown when every chart has too few values") {
  // (a,a,b): at most two distinct coordinates in every chart
  const Certificate cert =
      certify(ChartPoint{0, RatVec{Rat(1, 5), Rat(1, 5), Rat(1, 10)}});
  CHECK(cert.verdict == Verdict::Unknown);
  // low dimensions can never qualify
  CHECK(certify(ChartPoint{0, RatVec{Rat(1, 3)}}).verdict == Verdict::Unknown);
  CHECK(certify(ChartPoint{0, RatVec{Rat(1, 3), Rat(1, 5)}}).verdict == Verdict::Unknown);
}

TEST_CASE("certified drops match the factored closed form and are positive") {
  SplitMix64 rng(999);
  int certified = 0;
  for (int t = 0; t < 150; ++t) {
    const int n = 3 + static_cast<int>(rng.next() % 3);
    const ChartPoint p = random_interior_point(rng, n);
    const Certificate cert = certify(p);
    if (cert.verdict != Verdict::NotVolumeMinimizing) continue;
    ++certified;
    CHECK(cert.sqvol_drop > 0);
    CHECK(cert.sqvol_drop == witness_drop_closed_form(cert.source, cert.details));
    CHECK(cert.sqvol_drop ==
          orbit_sqvolume(ChartPoint{cert.chart, cert.source}) -
              orbit_sqvolume(ChartPoint{cert.chart, cert.target}));
    CHECK(chekanov::invariants(cert.source).conorm <= 1);
    CHECK(chekanov::isotopy_equivalent(cert.source, cert.target));
  }
  CHECK(certified > 100);
}

TEST_CASE("certify is chart-representation independent") {
  SplitMix64 rng(31);
  for (int t = 0; t < 40; ++t) {
    const int n = 3 + static_cast<int>(rng.next() % 2);
    const ChartPoint p = random_interior_point(rng, n);
    const Certificate base = certify(p);
    for (int k = 0; k <= n; ++k) {
      const Certificate other = certify(chart_transform(p, k));
      CHECK(other.verdict == base.verdict);
      CHECK(other.sqvol_drop == base.sqvol_drop);
      if (base.verdict == Verdict::NotVolumeMinimizing) CHECK(other.chart == base.chart);
    }
  }
}

TEST_CASE("density kernels agree and are deterministic") {
  const auto serial = dn_density_serial(3, 400, 42);
  const auto parallel = dn_density(3, 400, 42);
  CHECK(serial.certified == parallel.certified);
  CHECK(serial.samples == 400);
  CHECK(parallel.samples == 400);
  const auto again = dn_density(3, 400, 42);
  CHECK(again.certified == parallel.certified);
  // almost every sample certifies for n = 3
  CHECK(serial.fraction() > 0.99);
}

TEST_CASE("density is zero in low dimensions") {
  CHECK(dn_density(1, 200, 7).certified == 0);
  CHECK(dn_density(2, 200, 7).certified == 0);
}

TEST_CASE("density argument validation") {
  CHECK_THROWS_AS(dn_density(0, 10, 1), Error);
  CHECK_THROWS_AS(dn_density(3, 0, 1), Error);
}
