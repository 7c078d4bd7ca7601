#include "hamvol/toric.hpp"

#include "hamvol/chekanov.hpp"
#include "hamvol/linprog.hpp"
#include "hamvol/sampling.hpp"

#include <utility>

namespace hamvol::toric {

DelzantPolytope::DelzantPolytope(int dim, std::vector<Facet> facets)
    : dim_(dim), facets_(std::move(facets)) {
  if (dim_ < 1) throw Error(Errc::invalid_polytope, "dimension must be >= 1");
  std::vector<std::vector<Int>> rows;
  for (const Facet& f : facets_) {
    if (static_cast<int>(f.normal.size()) != dim_)
      throw Error(Errc::invalid_polytope, "facet normal length differs from dimension");
    if (f.offset >= 0)
      throw Error(Errc::invalid_polytope,
                  "facet offset " + to_string(f.offset) + " must be negative");
    Int g = 0;
    for (const Int& e : f.normal) g = gcd(g, e);
    if (g == 0) throw Error(Errc::invalid_polytope, "facet normal is zero");
    if (g != 1) throw Error(Errc::invalid_polytope, "facet normal is not primitive");
    rows.push_back(f.normal);
  }
  if (cone_has_nonzero_ray(rows, dim_))
    throw Error(Errc::invalid_polytope, "halfspaces describe an unbounded polytope");
}

Rat DelzantPolytope::facet_value(std::size_t r, const RatVec& a) const {
  const Facet& f = facets_.at(r);
  Rat v = -f.offset;
  for (std::size_t i = 0; i < f.normal.size(); ++i) v += Rat(f.normal[i]) * a[i];
  return v;
}

bool DelzantPolytope::strictly_inside(const RatVec& a) const {
  if (static_cast<int>(a.size()) != dim_)
    throw Error(Errc::dimension_mismatch, "point has length " + std::to_string(a.size()) +
                                              ", polytope dimension is " +
                                              std::to_string(dim_));
  for (const Rat& x : a)
    if (x <= 0) return false;
  for (std::size_t r = 0; r < facets_.size(); ++r)
    if (facet_value(r, a) <= 0) return false;
  return true;
}

Rat DelzantPolytope::s0() const {
  bool found = false;
  Rat best;
  for (const Facet& f : facets_) {
    for (const Int& e : f.normal) {
      if (e >= 0) continue;
      const Rat candidate = f.offset / Rat(e);
      if (!found || candidate < best) {
        best = candidate;
        found = true;
      }
    }
  }
  if (!found)
    // Unreachable for validated polytopes: a bounded polytope has a negative
    // normal entry in every coordinate.
    throw std::logic_error("no facet bounds the corner simplex");
  return best;
}

DelzantPolytope projective_space_polytope(int n) {
  Facet f;
  f.normal.assign(static_cast<std::size_t>(n), Int(-1));
  f.offset = -1;
  return DelzantPolytope(n, {std::move(f)});
}

VolumeModel::VolumeModel(Rat delta0) : constant_(std::move(delta0)) {
  if (constant_ <= 0)
    throw Error(Errc::invalid_argument, "delta0 must be strictly positive");
}

VolumeModel::VolumeModel(int dim, std::vector<MonomialTerm> profile)
    : constant_(0), dim_(dim), profile_(std::move(profile)) {
  if (dim_ < 1) throw Error(Errc::invalid_argument, "dimension must be >= 1");
  if (profile_.empty()) throw Error(Errc::invalid_argument, "empty profile");
  for (const MonomialTerm& t : profile_) {
    if (static_cast<int>(t.exps.size()) != dim_)
      throw Error(Errc::invalid_argument, "exponent vector length differs from dimension");
    bool constant_term = true;
    for (unsigned e : t.exps) constant_term = constant_term && e == 0;
    if (constant_term) constant_ += t.coeff;
  }
  if (constant_ <= 0)
    throw Error(Errc::invalid_argument, "profile value at 0 must be strictly positive");
}

Rat VolumeModel::delta0() const { return constant_; }

Rat VolumeModel::eval(const RatVec& a) const {
  if (is_constant()) return constant_;
  if (static_cast<int>(a.size()) != dim_)
    throw Error(Errc::dimension_mismatch, "point length differs from profile dimension");
  Rat value = 0;
  for (const MonomialTerm& t : profile_) {
    Rat term = t.coeff;
    for (std::size_t i = 0; i < t.exps.size(); ++i)
      for (unsigned e = 0; e < t.exps[i]; ++e) term *= a[i];
    value += term;
  }
  return value;
}

Poly VolumeModel::along_ray(const RatVec& a) const {
  if (is_constant()) return Poly::constant(constant_);
  if (static_cast<int>(a.size()) != dim_)
    throw Error(Errc::dimension_mismatch, "point length differs from profile dimension");
  RatVec coeffs;
  for (const MonomialTerm& t : profile_) {
    Rat term = t.coeff;
    unsigned total = 0;
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      total += t.exps[i];
      for (unsigned e = 0; e < t.exps[i]; ++e) term *= a[i];
    }
    if (coeffs.size() <= total) coeffs.resize(total + 1, Rat(0));
    coeffs[total] += term;
  }
  return Poly(std::move(coeffs));
}

bool VolumeModel::positive_on_sample(const DelzantPolytope& P, int samples,
                                     std::uint64_t seed) const {
  if (is_constant()) return constant_ > 0;
  const Rat radius = P.s0();
  for (int k = 0; k < samples; ++k) {
    SplitMix64 rng(stream_seed(seed, static_cast<std::uint64_t>(k)));
    RatVec a = sample_simplex_interior(P.dim(), rng);
    for (Rat& x : a) x *= radius;
    if (eval(a) <= 0) return false;
  }
  return true;
}

namespace {

void require_interior(const DelzantPolytope& P, const RatVec& a) {
  if (!P.strictly_inside(a))
    throw Error(Errc::outside_interior,
                "(" + to_string(a) + ") is not strictly inside the polytope");
}

}  // namespace

Rat toric_orbit_sqvolume(const DelzantPolytope& P, const VolumeModel& V, const RatVec& a) {
  require_interior(P, a);
  const Rat d = V.eval(a);
  if (d <= 0)
    throw Error(Errc::invalid_argument, "volume model is not positive at " + to_string(a));
  Rat v = d * product(a);
  for (std::size_t r = 0; r < P.facets().size(); ++r) v *= P.facet_value(r, a);
  return v;
}

ToricWitness toric_witness(const DelzantPolytope& P, const RatVec& a) {
  require_interior(P, a);
  const auto inv = chekanov::invariants(a);
  if (inv.n_distinct < 3)
    throw Error(Errc::not_applicable,
                "witness requires at least three distinct entries, got " +
                    std::to_string(inv.n_distinct));
  ToricWitness w;
  w.step = cn_tori::witness(a);
  w.after = w.step.after;
  w.support_ok = inv.norm < P.s0();
  if (w.support_ok && !P.strictly_inside(w.after))
    throw std::logic_error("witness left the polytope despite support bound");
  return w;
}

Poly scaled_volume_gap(const DelzantPolytope& P, const VolumeModel& V, const RatVec& a,
                       const RatVec& a_prime) {
  require_interior(P, a);
  require_interior(P, a_prime);

  const auto branch = [&](const RatVec& x) {
    Poly f = V.along_ray(x) * Poly::constant(product(x));
    for (const Facet& facet : P.facets()) {
      Rat slope = 0;
      for (std::size_t i = 0; i < facet.normal.size(); ++i) slope += Rat(facet.normal[i]) * x[i];
      f *= Poly::linear(-facet.offset, slope);  // l_r(c x) = c <x, mu_r> - lambda_r
    }
    return f;
  };
  return branch(a) - branch(a_prime);
}

Rat c_threshold(const DelzantPolytope& P, const VolumeModel& V, const RatVec& a,
                const RatVec& a_prime) {
  if (product(a) <= product(a_prime))
    throw Error(Errc::product_not_decreasing,
                "prod(a) = " + to_string(product(a)) + " does not exceed prod(a') = " +
                    to_string(product(a_prime)));
  const Poly f = scaled_volume_gap(P, V, a, a_prime);
  if (f.eval(0) <= 0) throw std::logic_error("volume gap is not positive at c = 0");

  constexpr int kRefineLog2Width = 40;
  const auto root = smallest_root_in_unit_interval(f, kRefineLog2Width);
  if (!root) return Rat(1);
  return root->value;
}

}  // namespace hamvol::toric
