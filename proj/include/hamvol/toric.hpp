#pragma once

#include "hamvol/cn_tori.hpp"
#include "hamvol/polynomial.hpp"
#include "hamvol/rational.hpp"

#include <vector>

namespace hamvol::toric {

// One non-coordinate facet of a normalised moment polytope, contributing the
// affine functional l_r(a) = <a, normal> - offset. The n coordinate
// halfspaces a_i >= 0 are implicit.
struct Facet {
  std::vector<Int> normal;  // primitive integer inward normal
  Rat offset;               // lambda_r < 0 (the origin is a vertex)
};

// Halfspace description {a >= 0, l_r(a) >= 0} of a compact moment polytope.
// Construction validates the normal form: primitive nonzero integer normals,
// negative offsets, and boundedness (no nonzero recession ray), and rejects
// anything else as InvalidPolytope. Vertex unimodularity is not checked; the
// volume and radius computations only need the halfspace description.
class DelzantPolytope {
 public:
  DelzantPolytope(int dim, std::vector<Facet> facets);

  int dim() const { return dim_; }
  const std::vector<Facet>& facets() const { return facets_; }

  /// l_r(a) for the r-th non-coordinate facet.
  Rat facet_value(std::size_t r, const RatVec& a) const;
  /// Strict interior test: a > 0 and every l_r(a) > 0.
  bool strictly_inside(const RatVec& a) const;

  // Radius of the largest coordinate corner simplex {a >= 0, sum a < s}
  // contained in the polytope. Containment reduces to the simplex vertices
  // s*e_i, so s0 = min over facets r and coordinates i with negative normal
  // entry of offset_r / normal_r[i]. Boundedness guarantees such entries
  // exist in every coordinate.
  Rat s0() const;

 private:
  int dim_;
  std::vector<Facet> facets_;
};

/// The standard simplex polytope of CP^n: one facet with normal (-1,...,-1)
/// and offset -1.
DelzantPolytope projective_space_polytope(int n);

// Multivariate polynomial term: coeff * prod_i x_i^exps[i].
struct MonomialTerm {
  Rat coeff;
  std::vector<unsigned> exps;
};

// The positive density factor of the squared-volume formula. Only its value
// at 0 enters the small-scale threshold argument; a polynomial profile is
// accepted for experiments and defaults to the constant delta0.
class VolumeModel {
 public:
  explicit VolumeModel(Rat delta0);
  VolumeModel(int dim, std::vector<MonomialTerm> profile);

  /// delta(0); strictly positive by construction.
  Rat delta0() const;
  Rat eval(const RatVec& a) const;
  /// delta(c * a) as a univariate polynomial in c.
  Poly along_ray(const RatVec& a) const;
  bool is_constant() const { return profile_.empty(); }

  /// Spot check of strict positivity on the corner simplex of radius s0;
  /// positivity on all of the polytope remains the caller's obligation.
  bool positive_on_sample(const DelzantPolytope& P, int samples, std::uint64_t seed) const;

 private:
  Rat constant_;
  int dim_ = 0;
  std::vector<MonomialTerm> profile_;
};

/// Squared orbit volume over a, as the coefficient of (2*pi)^(2n):
/// delta(a) * prod(a_i) * prod_r l_r(a). Throws OutsideInterior.
Rat toric_orbit_sqvolume(const DelzantPolytope& P, const VolumeModel& V, const RatVec& a);

struct ToricWitness {
  RatVec after;
  bool support_ok = false;  // norm(a) < s0, so the isotopy fits in the corner chart
  cn_tori::WitnessStep step;
};

/// Witness move for the fibre over a; support_ok records whether |a|+min < s0.
/// When support_ok the result is strictly inside the polytope (asserted).
ToricWitness toric_witness(const DelzantPolytope& P, const RatVec& a);

/// F(c) = delta(ca) prod(a) prod_r l_r(ca) - delta(ca') prod(a') prod_r l_r(ca'):
/// the scaled squared-volume gap with the common factor c^n removed.
/// F(0) = delta(0) * prod_r(-lambda_r) * (prod(a) - prod(a')).
Poly scaled_volume_gap(const DelzantPolytope& P, const VolumeModel& V, const RatVec& a,
                       const RatVec& a_prime);

/// Largest c_hat in (0, 1] with F > 0 on (0, c_hat), computed by exact root
/// isolation: 1 when F has no root in (0, 1), otherwise a certified lower
/// endpoint (width 2^-40) for the smallest positive root.
/// Throws ProductNotDecreasing when prod(a) <= prod(a').
Rat c_threshold(const DelzantPolytope& P, const VolumeModel& V, const RatVec& a,
                const RatVec& a_prime);

}  // namespace hamvol::toric
