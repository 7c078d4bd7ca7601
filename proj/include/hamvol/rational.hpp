#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hamvol {

// All quantities in this library are exact rationals. Transcendental factors
// (powers of 2*pi) are never materialised as numbers; they are carried as
// symbolic unit tags next to the rational coefficients they scale.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using RatVec = std::vector<Rat>;

// Failure kinds shared across modules. The CLI maps not_applicable (and
// Unknown verdicts) to exit code 2, everything else to 1.
enum class Errc {
  non_positive_entry,
  dimension_mismatch,
  not_applicable,
  outside_interior,
  invalid_polytope,
  product_not_decreasing,
  invalid_argument,
  parse_error,
};

const char* errc_name(Errc k) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc kind, const std::string& what);
  Errc kind() const noexcept { return kind_; }

 private:
  Errc kind_;
};

/// Parses "p/q" (q omitted when 1). Signs allowed on the numerator only.
Rat parse_rat(std::string_view text);

/// Parses a comma separated vector, e.g. "1/10,1/5,2/5". No spaces.
RatVec parse_rat_vector(std::string_view text);

/// "p/q" in lowest terms, "p" when the denominator is 1.
std::string to_string(const Rat& r);
std::string to_string(const RatVec& v);

// gcd of nonnegative rationals: clear to a common denominator and take the
// integer gcd of the numerators there. gcd(0, 0) = 0. This is the generator
// of the subgroup of (Q, +) spanned by the two arguments.
Rat rat_gcd(const Rat& x, const Rat& y);

Rat product(const RatVec& v);
Rat sum(const RatVec& v);

}  // namespace hamvol
