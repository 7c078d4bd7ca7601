#include "hamvol/rational.hpp"

#include <algorithm>
#include <cctype>

namespace hamvol {

const char* errc_name(Errc k) noexcept {
  switch (k) {
    case Errc::non_positive_entry: return "NonPositiveEntry";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::not_applicable: return "NotApplicable";
    case Errc::outside_interior: return "OutsideInterior";
    case Errc::invalid_polytope: return "InvalidPolytope";
    case Errc::product_not_decreasing: return "ProductNotDecreasing";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

Error::Error(Errc kind, const std::string& what)
    : std::runtime_error(std::string(errc_name(kind)) + ": " + what), kind_(kind) {}

namespace {

bool digits_only(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

Int parse_int_token(std::string_view s, bool allow_sign, std::string_view whole) {
  bool negative = false;
  if (allow_sign && !s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!digits_only(s))
    throw Error(Errc::parse_error, "malformed rational '" + std::string(whole) + "'");
  Int value{std::string(s)};
  return negative ? Int(-value) : value;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rat(parse_int_token(text, true, text));
  const Int num = parse_int_token(text.substr(0, slash), true, text);
  const Int den = parse_int_token(text.substr(slash + 1), false, text);
  if (den == 0) throw Error(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
  return Rat(num, den);
}

RatVec parse_rat_vector(std::string_view text) {
  if (text.empty()) throw Error(Errc::parse_error, "empty vector");
  RatVec out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos
                                              ? std::string_view::npos
                                              : comma - start);
    out.push_back(parse_rat(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Rat& r) {
  const Int num = numerator(r);
  const Int den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const RatVec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += to_string(v[i]);
  }
  return out;
}

Rat rat_gcd(const Rat& x, const Rat& y) {
  if (x == 0) return abs(y);
  if (y == 0) return abs(x);
  // gcd(p1/q1, p2/q2) = gcd(p1*q2, p2*q1) / (q1*q2)
  const Int n = gcd(Int(numerator(x) * denominator(y)), Int(numerator(y) * denominator(x)));
  return Rat(n, Int(denominator(x) * denominator(y)));
}

Rat product(const RatVec& v) {
  Rat p = 1;
  for (const Rat& x : v) p *= x;
  return p;
}

Rat sum(const RatVec& v) {
  Rat s = 0;
  for (const Rat& x : v) s += x;
  return s;
}

}  // namespace hamvol
