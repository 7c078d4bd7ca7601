#include "hamvol/chekanov.hpp"

#include <algorithm>

namespace hamvol::chekanov {

ChekanovInvariants invariants(const RatVec& a) {
  if (a.empty()) throw Error(Errc::invalid_argument, "vector must have length >= 1");
  for (const Rat& x : a)
    if (x <= 0)
      throw Error(Errc::non_positive_entry, "entry " + to_string(x) + " is not positive");

  RatVec sorted = a;
  std::sort(sorted.begin(), sorted.end());

  ChekanovInvariants inv;
  inv.min_val = sorted.front();
  inv.total = sum(a);
  inv.norm = inv.total + inv.min_val;
  inv.conorm = inv.total + sorted.back();
  inv.multiplicity = 0;
  inv.n_distinct = 1;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] == inv.min_val) ++inv.multiplicity;
    if (i > 0 && sorted[i] != sorted[i - 1]) ++inv.n_distinct;
  }
  inv.gamma_gen = 0;
  for (const Rat& x : sorted) inv.gamma_gen = rat_gcd(inv.gamma_gen, Rat(x - inv.min_val));
  return inv;
}

bool isotopy_equivalent(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size())
    throw Error(Errc::dimension_mismatch, "vectors of length " + std::to_string(a.size()) +
                                              " and " + std::to_string(b.size()));
  const ChekanovInvariants ia = invariants(a);
  const ChekanovInvariants ib = invariants(b);
  return ia.min_val == ib.min_val && ia.multiplicity == ib.multiplicity &&
         ia.gamma_gen == ib.gamma_gen;
}

}  // namespace hamvol::chekanov
