#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hamvol/rational.hpp"

using namespace hamvol;

TEST_CASE("parse_rat handles integers and fractions") {
  CHECK(parse_rat("3") == Rat(3));
  CHECK(parse_rat("-3") == Rat(-3));
  CHECK(parse_rat("1/2") == Rat(1, 2));
  CHECK(parse_rat("-7/4") == Rat(-7, 4));
  CHECK(parse_rat("4/6") == Rat(2, 3));  // canonicalised
  CHECK(parse_rat("123456789012345678901234567890/7") ==
        Rat(Int("123456789012345678901234567890"), 7));
}

TEST_CASE("parse_rat rejects malformed input") {
  CHECK_THROWS_AS(parse_rat(""), Error);
  CHECK_THROWS_AS(parse_rat("a"), Error);
  CHECK_THROWS_AS(parse_rat("1/"), Error);
  CHECK_THROWS_AS(parse_rat("/2"), Error);
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("1/-2"), Error);
  CHECK_THROWS_AS(parse_rat("1.5"), Error);
  CHECK_THROWS_AS(parse_rat("1 /2"), Error);
  try {
    parse_rat("x");
  } catch (const Error& e) {
    CHECK(e.kind() == Errc::parse_error);
  }
}

TEST_CASE("to_string is lowest terms with positive denominator") {
  CHECK(to_string(Rat(4, 6)) == "2/3");
  CHECK(to_string(Rat(-4, 6)) == "-2/3");
  CHECK(to_string(Rat(Rat(1) / Rat(-2))) == "-1/2");
  CHECK(to_string(Rat(5)) == "5");
  CHECK(to_string(Rat(0)) == "0");
}

TEST_CASE("vector parsing round trips") {
  const RatVec v = parse_rat_vector("1/10,1/5,2/5");
  REQUIRE(v.size() == 3);
  CHECK(v[0] == Rat(1, 10));
  CHECK(v[1] == Rat(1, 5));
  CHECK(v[2] == Rat(2, 5));
  CHECK(to_string(v) == "1/10,1/5,2/5");
  CHECK_THROWS_AS(parse_rat_vector("1,,2"), Error);
  CHECK_THROWS_AS(parse_rat_vector(""), Error);
}

TEST_CASE("rat_gcd generates the subgroup spanned by two rationals") {
  CHECK(rat_gcd(Rat(0), Rat(0)) == 0);
  CHECK(rat_gcd(Rat(0), Rat(3, 4)) == Rat(3, 4));
  CHECK(rat_gcd(Rat(1, 2), Rat(1, 3)) == Rat(1, 6));
  CHECK(rat_gcd(Rat(3, 4), Rat(9, 8)) == Rat(3, 8));
  CHECK(rat_gcd(Rat(2), Rat(3)) == Rat(1));
  // every argument is an integer multiple of the gcd
  const Rat g = rat_gcd(Rat(5, 6), Rat(7, 10));
  CHECK(denominator(Rat(Rat(5, 6) / g)) == 1);
  CHECK(denominator(Rat(Rat(7, 10) / g)) == 1);
}

TEST_CASE("product and sum helpers") {
  const RatVec v{Rat(1, 2), Rat(2, 3), Rat(3)};
  CHECK(product(v) == Rat(1));
  CHECK(sum(v) == Rat(1, 2) + Rat(2, 3) + 3);
  CHECK(product(RatVec{}) == 1);
  CHECK(sum(RatVec{}) == 0);
}
