#pragma once

#include "hamvol/rational.hpp"

#include <vector>

namespace hamvol::cn_tori {

// A product torus is the product of circles bounding areas b_i. Its moment
// vector is b/(2*pi). Because 2*pi is irrational the division is symbolic:
// coefficients pass through unchanged and the unit tag records whether they
// are plain moment values or areas still carrying a 1/(2*pi) factor. Every
// downstream comparison is homogeneous in this unit.
enum class AreaUnit {
  raw,               // entries are areas
  two_pi_multiples,  // entries are areas divided by 2*pi
};

enum class MomentUnit {
  moment,         // entries are moment values
  area_over_2pi,  // entries are areas; the moment is entry/(2*pi)
};

struct MomentVec {
  RatVec coords;
  MomentUnit unit = MomentUnit::moment;
};

/// Converts area coefficients to moment coefficients. Throws NonPositiveEntry.
MomentVec areas_to_moment(const RatVec& areas, AreaUnit unit);

/// Inverse of areas_to_moment; the identity on coefficients.
RatVec moment_to_areas(const MomentVec& m);

// Vol^2 = coeff * (2*pi)^two_pi_power, exactly.
struct SqVolume {
  Rat coeff;
  int two_pi_power = 0;
};

/// Squared volume of the product torus with moment vector a:
/// coeff = 2^n * prod(a), two_pi_power = 2n. Throws NonPositiveEntry.
SqVolume product_torus_sqvolume(const RatVec& a);

// One volume-reducing move inside a Hamiltonian isotopy class: pick indices
// i, j with min < a_i < a_j = max and lower the j-th entry to
// a_j - a_i + min. The move preserves (min, multiplicity, gamma) and strictly
// decreases both prod(a) and the norm |a| + min.
struct WitnessStep {
  int index_i = -1;  // donor, 0-based
  int index_j = -1;  // receiver, 0-based
  RatVec before;
  RatVec after;
};

/// Deterministic witness move: i = lowest index with the second-smallest
/// distinct value, j = lowest index attaining the maximum.
/// Throws NotApplicable when fewer than three distinct entries exist.
WitnessStep witness(const RatVec& a);

/// Applies witness until fewer than three distinct entries remain.
/// Returns the (possibly empty) list of steps taken.
std::vector<WitnessStep> greedy_reduce(const RatVec& a);

}  // namespace hamvol::cn_tori
