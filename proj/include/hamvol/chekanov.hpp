#pragma once

#include "hamvol/rational.hpp"

namespace hamvol::chekanov {

// The complete Hamiltonian-isotopy invariants of a product torus with moment
// vector a, plus the derived norms used by the support-size estimates.
//
//   min_val      smallest entry of a
//   multiplicity number of entries equal to min_val
//   gamma_gen    generator g >= 0 of the subgroup of (Q, +) spanned by the
//                differences a_i - min_val (g = 0 iff all entries coincide)
//   n_distinct   number of distinct entries
//   total        sum of the entries
//   norm         total + min_val
//   conorm       total + max of the entries
struct ChekanovInvariants {
  Rat min_val;
  int multiplicity = 0;
  Rat gamma_gen;
  int n_distinct = 0;
  Rat total;
  Rat norm;
  Rat conorm;

  bool operator==(const ChekanovInvariants&) const = default;
};

/// Computes all invariants in one pass. Throws NonPositiveEntry.
ChekanovInvariants invariants(const RatVec& a);

/// Product tori T(a) and T(b) are Hamiltonian isotopic iff
/// (min, multiplicity, gamma) agree. Throws DimensionMismatch.
bool isotopy_equivalent(const RatVec& a, const RatVec& b);

}  // namespace hamvol::chekanov
