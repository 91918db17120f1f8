#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "lplab/bisector.hpp"
#include "lplab/errors.hpp"

using namespace lplab;

namespace {

// Double-precision graph of the bisector, y = f(x), by bisection on the
// defining function; independent of the library's exact evaluator.
double graph_y(double ux, double uy, double vx, double vy, int p, double x) {
    auto F = [&](double y) {
        return std::pow(std::fabs(x - ux), p) + std::pow(std::fabs(y - uy), p) - std::pow(std::fabs(x - vx), p) -
               std::pow(std::fabs(y - vy), p);
    };
    double lo = -1e6, hi = 1e6;
    bool inc = F(hi) > F(lo);
    for (int i = 0; i < 90; ++i) {
        double mid = (lo + hi) / 2;
        if ((F(mid) < 0) == inc) lo = mid;
        else hi = mid;
    }
    return (lo + hi) / 2;
}

int cell(double t, double a, double b) {
    double lo = std::min(a, b), hi = std::max(a, b);
    return t <= lo ? 0 : (t <= hi ? 1 : 2);
}

std::set<std::pair<int, int>> sampled_regions(double ux, double uy, double vx, double vy, int p) {
    std::set<std::pair<int, int>> out;
    double d = std::max(std::fabs(ux - vx), std::fabs(uy - vy));
    for (int i = 0; i <= 20000; ++i) {
        double x = (ux + vx) / 2 - 50 * d + 100 * d * i / 20000.0;
        double y = graph_y(ux, uy, vx, vy, p, x);
        out.insert({cell(x, ux, vx), cell(y, uy, vy)});
    }
    return out;
}

// Sign changes of the implicit second-derivative numerator along the graph.
std::vector<double> sampled_inflections(double ux, double uy, double vx, double vy, int p) {
    auto m = [&](double t) { return (t < 0 ? -1 : 1) * std::pow(std::fabs(t), p - 1); };
    auto a = [&](double t) { return std::pow(std::fabs(t), p - 2); };
    std::vector<double> out;
    double d = std::max(std::fabs(ux - vx), std::fabs(uy - vy));
    int last = 0;
    double prev = 0;
    for (int i = -20000; i <= 20000; ++i) {
        double x = (ux + vx) / 2 + i * d / 2000;
        double y = graph_y(ux, uy, vx, vy, p, x);
        double d1x = p * (m(x - ux) - m(x - vx)), d2x = p * (p - 1) * (a(x - ux) - a(x - vx));
        double d1y = p * (m(y - uy) - m(y - vy)), d2y = p * (p - 1) * (a(y - uy) - a(y - vy));
        double h = d2x * d1y * d1y + d2y * d1x * d1x;
        int s = h > 0 ? 1 : (h < 0 ? -1 : 0);
        if (s == 0) {
            out.push_back(x);
            last = 0;
            continue;
        }
        if (last != 0 && s != last) out.push_back((x + prev) / 2);
        last = s;
        prev = x;
    }
    return out;
}

}  // namespace

TEST_CASE("line bisectors") {
    auto b = build_bisector({0, 0}, {0, 2}, 5);
    REQUIRE(b.is_line());
    CHECK(b.line() == Line::through(0, 1, -1));
    auto d = build_bisector({0, 0}, {2, 2}, 4);
    CHECK(d.line() == Line::through(1, 1, -2));
    auto e = build_bisector({0, 2}, {2, 0}, 3);
    CHECK(e.line() == Line::through(1, -1, 0));
    CHECK(build_bisector({1, 1}, {4, 3}, 2).is_line());
    CHECK_THROWS_AS(build_bisector({1, 1}, {1, 1}, 3), Error);
    CHECK_THROWS_AS(build_bisector({1, 1}, {2, 3}, 1), Error);
}

TEST_CASE("membership") {
    CHECK(point_on_bisector(build_bisector({0, 0}, {4, 2}, 3), {2, 1}));
    CHECK(point_on_bisector(build_bisector({0, 0}, {0, 2}, 5), {7, 1}));
    CHECK_FALSE(point_on_bisector(build_bisector({0, 0}, {3, 1}, 3), {0, 0}));
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-6, 6);
    for (int t = 0; t < 200; ++t) {
        Point u{c(rng), c(rng)}, v{c(rng), c(rng)}, w{Rational(c(rng), 2), Rational(c(rng), 3)};
        if (u == v) continue;
        w.y.canonicalize();
        w.x.canonicalize();
        int p = 2 + t % 4;
        auto b = build_bisector(u, v, p);
        bool oracle = lp_key_value(u, w, PNorm::finite(p)) == lp_key_value(v, w, PNorm::finite(p));
        CHECK(point_on_bisector(b, w) == oracle);
    }
}

TEST_CASE("five regions and two unbounded pieces") {
    struct C {
        int ux, uy, vx, vy, p;
    };
    for (auto c : {C{0, 0, 3, 1, 3}, C{0, 0, 5, 2, 4}, C{1, 5, -2, 1, 5}, C{0, 0, 1, 5, 4}, C{2, -1, -3, 4, 3}}) {
        if (std::abs(c.vx - c.ux) == std::abs(c.vy - c.uy)) continue;
        auto b = build_bisector({c.ux, c.uy}, {c.vx, c.vy}, c.p);
        REQUIRE_FALSE(b.is_line());
        CHECK(b.regions_intersected() == 5);
        CHECK(b.unbounded_pieces() == 2);
        std::set<std::pair<int, int>> got;
        for (auto& pc : b.pieces()) got.insert({pc.region.col, pc.region.row});
        CHECK(got == sampled_regions(c.ux, c.uy, c.vx, c.vy, c.p));
    }
}

TEST_CASE("evaluation and monotonicity") {
    auto b = build_bisector({0, 0}, {3, 1}, 3);
    auto mid = bisector_eval(b, Rational(3, 2), Rational(1, 1000));
    CHECK(mid.contains(Rational(1, 2)));
    auto far = bisector_eval(b, 10, Rational(1, 1 << 20));
    CHECK(far.width() <= Rational(1, 1 << 20));
    CHECK(sgn(b.eval({10, far.lo})) * sgn(b.eval({10, far.hi})) <= 0);
    CHECK(std::fabs(to_double(far.lo) - graph_y(0, 0, 3, 1, 3, 10)) < 1e-6);
    auto ln = build_bisector({0, 0}, {0, 2}, 3);
    CHECK(bisector_eval(ln, 5, Rational(1, 8)).lo == 1);
    auto m = monotonicity_probe(b, 50);
    CHECK(m.monotone);
    CHECK(m.orientation == Orientation::Decreasing);
    CHECK(monotonicity_probe(build_bisector({0, 0}, {1, 5}, 4), 50).monotone);
}

TEST_CASE("central symmetry") {
    auto b = build_bisector({0, 0}, {3, 1}, 3);
    for (auto& w : rational_witnesses(b)) CHECK(central_symmetry_check(b, w));
    CHECK(rational_witnesses(b).size() == 3);
    auto y = bisector_eval(b, 10, Rational(1, 1 << 30));
    CHECK(central_symmetry_check(b, 10, y));
    CHECK(central_symmetry_check(build_bisector({0, 0}, {0, 2}, 3), {7, 1}));
    CHECK_THROWS_AS(central_symmetry_check(b, {0, 0}), Error);
}

TEST_CASE("inflections match the sampled second difference") {
    struct C {
        int ux, uy, vx, vy, p;
    };
    for (auto c : {C{0, 0, 3, 1, 3}, C{0, 0, 5, 2, 4}, C{0, 0, 1, 5, 5}, C{2, 1, -1, 3, 3}}) {
        auto b = build_bisector({c.ux, c.uy}, {c.vx, c.vy}, c.p);
        auto rep = inflection_points(b, default_precision(b));
        CHECK(rep.count == 3);
        CHECK(rep.midpoint_included);
        auto oracle = sampled_inflections(c.ux, c.uy, c.vx, c.vy, c.p);
        REQUIRE(oracle.size() == 3);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(std::fabs(to_double(rep.points[i].x.lo) - oracle[i]) < 1e-3 * std::max(1, std::abs(c.vx - c.ux)));
            CHECK(rep.points[i].x.width() <= default_precision(b));
            CHECK(rep.points[i].y.width() <= default_precision(b));
        }
        std::set<std::pair<int, int>> regions;
        for (auto& r : rep.regions) {
            regions.insert({r.col, r.row});
        }
        CHECK(regions.size() == 3);
    }
    CHECK(inflection_points(build_bisector({0, 0}, {0, 2}, 3), Rational(1, 8)).count == 0);
}

TEST_CASE("bisector intersections") {
    auto a = build_bisector({0, 0}, {2, 0}, 3), b = build_bisector({0, 1}, {0, 3}, 3);
    auto pts = bisector_intersections(a, b, Rational(1, 1000));
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].contains({1, 2}));
    auto c = build_bisector({0, 0}, {3, 1}, 3);
    CHECK_THROWS_AS(bisector_intersections(c, build_bisector({3, 1}, {0, 0}, 3), Rational(1, 8)), Error);

    // Sampled crossings of two graphs y = f1(x), y = f2(x).
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> co(-5, 5);
    int checked = 0;
    while (checked < 25) {
        Point u1{co(rng), co(rng)}, v1{co(rng), co(rng)}, u2{co(rng), co(rng)}, v2{co(rng), co(rng)};
        auto dx1 = v1.x - u1.x, dy1 = v1.y - u1.y, dx2 = v2.x - u2.x, dy2 = v2.y - u2.y;
        if (dx1 == 0 || dy1 == 0 || abs(dx1) == abs(dy1) || dx2 == 0 || dy2 == 0 || abs(dx2) == abs(dy2)) continue;
        auto b1 = build_bisector(u1, v1, 3), b2 = build_bisector(u2, v2, 3);
        std::vector<Enclosure> got;
        try {
            got = bisector_intersections(b1, b2, Rational(1, 1 << 20));
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::DegeneratePosition);
            continue;
        }
        int sampled = 0, last = 0;
        for (int i = -10000; i <= 10000; ++i) {
            double x = i / 100.0;
            double g = graph_y(to_double(u1.x), to_double(u1.y), to_double(v1.x), to_double(v1.y), 3, x) -
                       graph_y(to_double(u2.x), to_double(u2.y), to_double(v2.x), to_double(v2.y), 3, x);
            int s = g > 1e-9 ? 1 : (g < -1e-9 ? -1 : 0);
            if (s == 0) continue;
            if (last != 0 && s != last) ++sampled;
            last = s;
        }
        CHECK(static_cast<int>(got.size()) >= sampled);
        CHECK(got.size() <= 18);
        for (auto& e : got) {
            Point c{(e.x.lo + e.x.hi) / 2, (e.y.lo + e.y.hi) / 2};
            CHECK(std::fabs(to_double(b1.eval(c))) < 1e-3);
            CHECK(std::fabs(to_double(b2.eval(c))) < 1e-3);
        }
        ++checked;
    }
}

TEST_CASE("containing curves") {
    auto polys = containing_curves_odd({0, 0}, {3, 1}, 3);
    CHECK(polys.size() == 5);
    for (auto& q : polys) CHECK(q.total_degree() <= 3);
    CHECK_THROWS_AS(containing_curves_odd({0, 0}, {3, 1}, 4), Error);
    auto b = build_bisector({0, 0}, {3, 1}, 3);
    for (auto& pc : b.pieces()) {
        // A rational point of the piece: pieces through witnesses vanish there.
        for (auto& w : rational_witnesses(b))
            if (b.region_of(w).col == pc.region.col && b.region_of(w).row == pc.region.row) CHECK(pc.poly(w.x, w.y) == 0);
    }
}
