#pragma once

#include "hamvol/rational.hpp"

#include <optional>
#include <vector>

namespace hamvol {

// Dense univariate polynomial with exact rational coefficients, coefficient k
// belonging to x^k. Normalised: no zero leading coefficient.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RatVec coeffs);
  static Poly constant(Rat c);
  /// c0 + c1 * x
  static Poly linear(Rat c0, Rat c1);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rat coeff(int k) const;
  const RatVec& coeffs() const { return coeffs_; }

  Rat eval(const Rat& x) const;
  Poly derivative() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  bool operator==(const Poly&) const = default;

 private:
  void trim();
  RatVec coeffs_;
};

/// Euclidean division: a = q * b + r with deg r < deg b. b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

/// p / gcd(p, p'): same roots, all simple.
Poly squarefree_part(const Poly& p);

// Smallest root in the open interval (0, 1), located by Descartes
// sign-variation bisection on the squarefree part and refined by exact sign
// bisection. Requires p(0) != 0. When a root exists the returned value is
// either the root itself (if a bisection midpoint hits it exactly, `exact`
// set) or a strictly positive lower endpoint of an isolating interval of
// width <= 2^-log2_width; in both cases p has no root in (0, value).
struct RootBound {
  Rat value;
  bool exact = false;
};
std::optional<RootBound> smallest_root_in_unit_interval(const Poly& p, int log2_width);

}  // namespace hamvol
