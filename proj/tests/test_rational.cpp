#include <doctest.h>

#include <random>

#include "udt/rational.hpp"

using namespace udt;

TEST_CASE("parse and print round-trip the wire format") {
  CHECK(to_string(parse_rational("17/64")) == "17/64");
  CHECK(to_string(parse_rational("-3/6")) == "-1/2");
  CHECK(to_string(parse_rational("5")) == "5");
  CHECK(to_string(parse_rational("+7/2")) == "7/2");
  CHECK(to_string(parse_rational("0")) == "0");
  CHECK(parse_rational("302/159") == Rational(302, 159));
}

TEST_CASE("parser rejects anything but p/q") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(" 1"), std::invalid_argument);
}

TEST_CASE("round-trip is lossless on random rationals") {
  std::mt19937 gen(7);
  std::uniform_int_distribution<long long> num(-1'000'000, 1'000'000);
  std::uniform_int_distribution<long long> den(1, 1'000'000);
  for (int i = 0; i < 500; ++i) {
    Rational r(num(gen), den(gen));
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("powers") {
  CHECK(pow2(-5) == Rational(1, 32));
  CHECK(pow2(10) == Rational(1024));
  CHECK(pow10(-3) == Rational(1, 1000));
  CHECK(rat_pow(Rational(1, 4), 3) == Rational(1, 64));
  CHECK(rat_pow(Rational(2, 3), 0) == Rational(1));
}

TEST_CASE("decimal rendering is advisory but sane") {
  CHECK(decimal_string(Rational(1, 4)) == "0.25");
  CHECK(decimal_string(Rational(2)) == "2");
  CHECK(decimal_string(Rational(0)) == "0");
  CHECK(decimal_string(Rational(1, 3)) == "0.333333333333");
  CHECK(decimal_string(Rational(-1, 2)) == "-0.5");
  CHECK(decimal_string(Rational(1000)) == "1000");
  CHECK(decimal_string(Rational(16, 159)).substr(0, 6) == "0.1006");
  CHECK(decimal_string(pow2(-100)).find('e') != std::string::npos);
}
