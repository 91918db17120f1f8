#include <doctest.h>

#include "lplab/errors.hpp"
#include "lplab/generators.hpp"
#include "lplab/geometry.hpp"
#include "lplab/rational.hpp"

using namespace lplab;

TEST_CASE("parse rationals") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-0.25") == Rational(-1, 4));
    CHECK(parse_rational("1.5e2") == Rational(150));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("limit_denominator matches continued fractions") {
    CHECK(limit_denominator(Rational(314159, 100000), 100) == Rational(311, 99));
    CHECK(limit_denominator(Rational(1, 3), 10) == Rational(1, 3));
}

TEST_CASE("norm parsing") {
    CHECK(PNorm::parse("inf").is_infinity());
    CHECK(PNorm::parse("p:3").p() == 3);
    CHECK_THROWS_AS(PNorm::parse("p:0"), Error);
}

TEST_CASE("distance keys compare exactly") {
    Point o{0, 0}, a{3, 4}, b{5, 0};
    auto l2 = PNorm::finite(2);
    CHECK(compare_distances(o, a, o, b, l2) == std::strong_ordering::equal);
    CHECK(compare_distances(o, a, o, b, PNorm::infinity()) == std::strong_ordering::less);
    CHECK(compare_distances(o, a, o, b, PNorm::finite(1)) == std::strong_ordering::greater);
}

TEST_CASE("l1 to linf transform preserves distances") {
    Point a{1, 2}, b{-3, Rational(1, 2)};
    auto ta = l1_to_linf(a), tb = l1_to_linf(b);
    CHECK(lp_key_value(a, b, PNorm::finite(1)) == lp_key_value(ta, tb, PNorm::infinity()));
}

TEST_CASE("generators") {
    CHECK(grid(4).size() == 16);
    CHECK(row_construction(3).size() == 9);
    CHECK_THROWS_AS(grid(1), Error);
    Box box{0, 1, 0, 1};
    auto a = random_rational(20, 7, box, 10), b = random_rational(20, 7, box, 10);
    CHECK(a.points()[5] == b.points()[5]);
    CHECK_THROWS_AS(random_rational(200, 1, box, 10), Error);
}
