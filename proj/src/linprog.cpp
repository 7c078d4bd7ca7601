#include "hamvol/linprog.hpp"

namespace hamvol {

LpResult simplex_max(const std::vector<RatVec>& A, const RatVec& b, const RatVec& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw Error(Errc::invalid_argument, "rhs length mismatch");
  for (const RatVec& row : A)
    if (row.size() != n) throw Error(Errc::invalid_argument, "row length mismatch");
  for (const Rat& bi : b)
    if (bi < 0) throw Error(Errc::invalid_argument, "rhs must be nonnegative");

  // Tableau: columns 0..n-1 structural, n..n+m-1 slack, last column rhs.
  const std::size_t cols = n + m + 1;
  std::vector<RatVec> t(m, RatVec(cols, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = A[i][j];
    t[i][n + i] = 1;
    t[i][cols - 1] = b[i];
  }
  RatVec obj(cols, Rat(0));  // z - c.x = 0
  for (std::size_t j = 0; j < n; ++j) obj[j] = -c[j];
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  for (;;) {
    // Bland: entering column = lowest index with negative reduced cost.
    std::size_t enter = cols - 1;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols - 1) break;  // optimal

    // Ratio test; ties broken by smallest basis variable index.
    std::size_t leave = m;
    Rat best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rat ratio = t[i][cols - 1] / t[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) return LpResult{false, Rat(0), {}};  // unbounded objective

    // Pivot.
    const Rat pivot = t[leave][enter];
    for (Rat& v : t[leave]) v /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rat f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    if (obj[enter] != 0) {
      const Rat f = obj[enter];
      for (std::size_t j = 0; j < cols; ++j) obj[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  LpResult out;
  out.bounded = true;
  out.value = obj[cols - 1];
  out.x.assign(n, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) out.x[basis[i]] = t[i][cols - 1];
  return out;
}

bool cone_has_nonzero_ray(const std::vector<std::vector<Int>>& rows, int dim) {
  if (dim < 1) throw Error(Errc::invalid_argument, "dimension must be >= 1");
  const std::size_t n = static_cast<std::size_t>(dim);
  std::vector<RatVec> A;
  RatVec b;
  for (const auto& row : rows) {
    if (row.size() != n) throw Error(Errc::invalid_argument, "row length mismatch");
    RatVec neg(n);
    for (std::size_t j = 0; j < n; ++j) neg[j] = Rat(-row[j]);  // <v,row> >= 0
    A.push_back(std::move(neg));
    b.emplace_back(0);
  }
  A.emplace_back(n, Rat(1));  // sum(v) <= 1 caps the scale-invariant cone
  b.emplace_back(1);

  const RatVec ones(n, Rat(1));
  const LpResult r = simplex_max(A, b, ones);
  return r.bounded && r.value > 0;
}

}  // namespace hamvol
