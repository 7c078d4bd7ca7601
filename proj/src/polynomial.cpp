#include "hamvol/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace hamvol {

Poly::Poly(RatVec coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Rat c) { return Poly(RatVec{std::move(c)}); }

Poly Poly::linear(Rat c0, Rat c1) { return Poly(RatVec{std::move(c0), std::move(c1)}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rat Poly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  RatVec out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    out[k - 1] = coeffs_[k] * Rat(static_cast<int>(k));
  return Poly(std::move(out));
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (Rat& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  RatVec out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (Rat& c : coeffs_) c *= s;
  return *this;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::invalid_argument, "polynomial division by zero");
  RatVec rem = a.coeffs();
  const RatVec& div = b.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  RatVec quot(static_cast<std::size_t>(a.degree() - db) + 1, Rat(0));
  for (int k = a.degree(); k >= db; --k) {
    const Rat c = rem[static_cast<std::size_t>(k)] / div[static_cast<std::size_t>(db)];
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k - db + j)] -= c * div[static_cast<std::size_t>(j)];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  // monic normalisation
  const Rat lead = a.coeff(a.degree());
  return a * Rat(1 / lead);
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 1) return p;
  const Poly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p;
  auto [q, r] = poly_divmod(p, g);
  if (!r.is_zero()) throw std::logic_error("squarefree division left a remainder");
  return q;
}

namespace {

// Integer-coefficient image used by the isolation search; index = power.
using IntPoly = std::vector<Int>;

int sign_of(const Int& x) { return x == 0 ? 0 : (x < 0 ? -1 : 1); }

IntPoly clear_denominators(const Poly& p) {
  Int lcm = 1;
  for (const Rat& c : p.coeffs()) {
    const Int d = denominator(c);
    lcm = lcm / gcd(lcm, d) * d;
  }
  IntPoly out;
  out.reserve(p.coeffs().size());
  for (const Rat& c : p.coeffs()) out.push_back(Int(numerator(c) * (lcm / denominator(c))));
  return out;
}

int sign_variations(const IntPoly& p) {
  int variations = 0;
  int last = 0;
  for (const Int& c : p) {
    const int s = sign_of(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

// (1+x)^n P(1/(1+x)): reverse the coefficients, then shift x -> x+1. Its sign
// variation count bounds the number of roots of P in (0,1) and matches it
// modulo 2 (Descartes).
int variations_in_unit_interval(const IntPoly& p) {
  IntPoly t(p.rbegin(), p.rend());
  const std::size_t n = t.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) t[j - 1] += t[j];
  return sign_variations(t);
}

// 2^n P(x/2): maps roots in (0,1) to (0,2).
IntPoly left_half(const IntPoly& p) {
  IntPoly out = p;
  const std::size_t n = out.size();
  for (std::size_t k = 0; k + 1 < n; ++k) out[k] <<= static_cast<unsigned>(n - 1 - k);
  return out;
}

// P(x+1)
void shift_by_one(IntPoly& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) p[j - 1] += p[j];
}

Int eval_int(const IntPoly& p, const Int& x) {
  Int acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Sign of P at the rational q (num/den).
int sign_at(const IntPoly& p, const Rat& q) {
  const Int num = numerator(q);
  const Int den = denominator(q);
  Int acc = 0;
  Int scale = 1;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * num + *it * scale;
    scale *= den;
  }
  return sign_of(acc);
}

struct Isolated {
  Rat lo, hi;
  bool exact = false;  // when set, lo == hi is a root
};

constexpr int kMaxDepth = 128;

// Leftmost root of P in the open interval mapped to (lo, hi). P must have no
// root at lo (P(0) != 0 locally); dyadic midpoints are tested exactly before
// descending right, so recursion only sees endpoint-root-free halves.
std::optional<Isolated> leftmost_root(const IntPoly& p, const Rat& lo, const Rat& hi,
                                      int depth) {
  const int v = variations_in_unit_interval(p);
  if (v == 0) return std::nullopt;
  if (v == 1) return Isolated{lo, hi, false};
  if (depth > kMaxDepth)
    throw std::logic_error("root isolation exceeded depth bound");

  const Rat mid = (lo + hi) / 2;
  const IntPoly pl = left_half(p);
  if (auto left = leftmost_root(pl, lo, mid, depth + 1)) return left;
  if (eval_int(pl, 1) == 0) return Isolated{mid, mid, true};
  IntPoly pr = pl;
  shift_by_one(pr);
  return leftmost_root(pr, mid, hi, depth + 1);
}

}  // namespace

std::optional<RootBound> smallest_root_in_unit_interval(const Poly& p, int log2_width) {
  if (p.is_zero()) throw Error(Errc::invalid_argument, "zero polynomial");
  if (p.eval(0) == 0) throw Error(Errc::invalid_argument, "polynomial vanishes at 0");

  Poly sf = squarefree_part(p);
  if (sf.eval(0) < 0) sf *= Rat(-1);  // normalise to sf(0) > 0
  const IntPoly ip = clear_denominators(sf);

  const auto isolated = leftmost_root(ip, Rat(0), Rat(1), 0);
  if (!isolated) return std::nullopt;
  if (isolated->exact) return RootBound{isolated->lo, true};

  // Exact sign bisection: sf(lo) > 0 holds throughout because lo stays left
  // of the smallest root.
  Rat lo = isolated->lo;
  Rat hi = isolated->hi;
  const Rat width = Rat(Int(1), Int(1) << static_cast<unsigned>(log2_width));
  while (hi - lo > width || lo == 0) {
    const Rat mid = (lo + hi) / 2;
    const int s = sign_at(ip, mid);
    if (s == 0) return RootBound{mid, true};
    if (s > 0)
      lo = mid;
    else
      hi = mid;
  }
  return RootBound{lo, false};
}

}  // namespace hamvol
