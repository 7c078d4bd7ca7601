#pragma once

#include "hamvol/rational.hpp"

#include <vector>

namespace hamvol {

// Dense exact-rational simplex for the small feasibility problems that back
// polytope validation. Bland's rule, so termination is unconditional.
struct LpResult {
  bool bounded = true;
  Rat value;
  RatVec x;
};

/// max c.x subject to A x <= b, x >= 0. Requires b >= 0 (the slack basis is
/// then a valid starting point).
LpResult simplex_max(const std::vector<RatVec>& A, const RatVec& b, const RatVec& c);

/// Whether a nonzero v >= 0 with <v, row> >= 0 for every row exists, i.e.
/// whether the recession cone of {a >= 0, <a, row_r> >= lambda_r} is
/// nontrivial. Decided by maximising sum(v) under sum(v) <= 1.
bool cone_has_nonzero_ray(const std::vector<std::vector<Int>>& rows, int dim);

}  // namespace hamvol
