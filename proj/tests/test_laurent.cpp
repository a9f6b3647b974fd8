#include <random>

#include "doctest.h"
#include "forestcalc/errors.hpp"
#include "forestcalc/laurent.hpp"
#include "generators.hpp"

using namespace forestcalc;

TEST_CASE("Laurent arithmetic") {
  auto z = LaurentSeries::monomial(1, Rational(1), -4, 4);
  auto zi = LaurentSeries::monomial(-1, Rational(1), -4, 4);
  CHECK(z * zi == LaurentSeries(Rational(1), -4, 4));
  CHECK((zi * zi).coefficient(-2) == 1);
  auto big = LaurentSeries::monomial(3, Rational(1), -4, 4);
  CHECK((big * big).is_zero());  // truncated above the window
  auto deep = LaurentSeries::monomial(-3, Rational(1), -4, 4);
  CHECK_THROWS_AS(deep * deep, WindowOverflow);
  CHECK_THROWS_AS(z + LaurentSeries::monomial(1, Rational(1), -3, 3), MismatchError);
}

TEST_CASE("polar and regular parts") {
  auto a = parse_laurent("z^-1:1/1,z^0:2/1,z^1:1/1", -4, 4);
  CHECK(a.polar_part() == parse_laurent("z^-1:1/1", -4, 4));
  CHECK(a.polar_part() + a.regular_part() == a);
  CHECK(a.polar_part().polar_part() == a.polar_part());
  auto b = parse_laurent("z^-2:3/1,z^-1:-1/1", -4, 4);
  CHECK(b.polar_part() == b);
}

TEST_CASE("Laurent text format") {
  auto a = parse_laurent("z^-2:3/1, z^1:-1/2");
  CHECK(to_string(a) == "z^-2:3/1,z^1:-1/2");
  CHECK(to_string(LaurentSeries()) == "0");
  CHECK(parse_laurent("0").is_zero());
  CHECK_THROWS_AS(parse_laurent("x^2:1"), ParseError);
  CHECK_THROWS_AS(parse_laurent("z^a:1"), ParseError);
  CHECK_THROWS_AS(parse_laurent("z^-20:1"), WindowOverflow);
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    auto r = gen::laurent(rng, -3, 3, -6, 6);
    CHECK(parse_laurent(to_string(r), -6, 6) == r);
  }
}
