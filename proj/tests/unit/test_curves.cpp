#include <doctest.h>

#include <cmath>

#include "lplab/curves.hpp"
#include "lplab/errors.hpp"

using namespace lplab;

namespace {

AbsPowerCurve circle(int p, Rational cx, Rational cy, Rational r) {
    return AbsPowerCurve(p, {{1, cx}}, {{1, cy}}, -r);
}

// Sign changes of F2 along a dense sampling of curve 1, parametrised as
// y = f(x) on upper and lower branches of a circle.
int sampled_crossings(int p, double cx1, double cy1, double r1, double cx2, double cy2, double r2) {
    const int N = 200000;
    double R = std::pow(r1, 1.0 / p);
    int count = 0;
    for (int branch : {1, -1}) {
        double prev = 0;
        bool have = false;
        for (int i = 0; i <= N; ++i) {
            double x = cx1 - R + 2 * R * i / N;
            double t = r1 - std::pow(std::abs(x - cx1), p);
            double y = cy1 + branch * std::pow(std::max(t, 0.0), 1.0 / p);
            double v = std::pow(std::abs(x - cx2), p) + std::pow(std::abs(y - cy2), p) - r2;
            if (have && ((prev < 0) != (v < 0))) ++count;
            prev = v;
            have = true;
        }
    }
    return count;
}

}  // namespace

TEST_CASE("euclidean circles meet in two points") {
    auto c1 = circle(2, 0, 0, 25), c2 = circle(2, 6, 0, 25);
    auto pts = intersect(c1, c2);
    REQUIRE(pts.size() == 2);
    for (auto& p : pts) {
        p.refine(Rational(1, 1000));
        CHECK(p.exact_x().value() == 3);
        CHECK(abs(p.exact_y().value()) == 4);
    }
}

TEST_CASE("l3 circle crossings agree with sampling") {
    struct Case {
        int cx1, cy1, r1, cx2, cy2, r2;
    };
    for (auto c : {Case{0, 0, 8, 1, 1, 8}, Case{0, 0, 27, 3, 1, 5}, Case{0, 0, 8, 10, 0, 1}, Case{2, -1, 30, 0, 2, 9}}) {
        auto pts = intersect(circle(3, c.cx1, c.cy1, c.r1), circle(3, c.cx2, c.cy2, c.r2));
        int expected = sampled_crossings(3, c.cx1, c.cy1, c.r1, c.cx2, c.cy2, c.r2);
        CHECK(static_cast<int>(pts.size()) == expected);
        for (auto& p : pts) {
            p.refine(Rational(1, 1 << 30));
            double x = to_double(p.x().lo), y = to_double(p.y().lo);
            double v1 = std::pow(std::abs(x - c.cx1), 3) + std::pow(std::abs(y - c.cy1), 3) - c.r1;
            CHECK(std::abs(v1) < 1e-6);
        }
    }
}

TEST_CASE("tangent circles are reported as degenerate") {
    CHECK_THROWS_AS(intersect(circle(2, 0, 0, 1), circle(2, 2, 0, 1)), Error);
}

TEST_CASE("line through a circle") {
    auto pts = intersect_line(circle(4, 0, 0, 1), 1, -1, 0);
    CHECK(pts.size() == 2);
    auto v = intersect_line(circle(4, 0, 0, 1), 1, 0, 0);
    REQUIRE(v.size() == 2);
    v[0].refine(Rational(1, 1000));
    CHECK(abs(v[0].exact_y().value()) == 1);
}
