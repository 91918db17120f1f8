#include <doctest.h>

#include <cmath>
#include <set>

#include "lplab/bisector.hpp"
#include "lplab/circle_graph.hpp"
#include "lplab/errors.hpp"
#include "lplab/generators.hpp"

using namespace lplab;

namespace {

using LD = long double;

LD ld(const Rational& q) { return static_cast<LD>(q.get_d()); }

LD angle_of(LD x, LD y) {
    LD a = std::atan2(y, x);
    return a < 0 ? a + 2 * M_PIl : a;
}

// Arc index on circle `c` for a point at angle t about its center, by plain angles.
std::size_t arc_by_angle(const CircleGraph& g, std::size_t c, LD t) {
    const Circle& circ = g.circles[c];
    const Point& o = g.vertices[circ.center];
    const std::size_t j = circ.incident.size();
    std::vector<LD> ang;
    for (auto q : circ.incident) ang.push_back(angle_of(ld(g.vertices[q].x - o.x), ld(g.vertices[q].y - o.y)));
    for (std::size_t k = 0; k < j; ++k) {
        LD a = ang[k], b = ang[(k + 1) % j];
        if (b <= a) b += 2 * M_PIl;
        LD tt = t < a ? t + 2 * M_PIl : t;
        if (tt > a && tt < b) return k;
    }
    return j;
}

// Sign changes of circle b's defining function along densely sampled circle a.
std::set<std::pair<std::size_t, std::size_t>> oracle_pairs(const CircleGraph& g) {
    std::set<std::pair<std::size_t, std::size_t>> out;
    std::vector<std::size_t> first(g.circles.size());
    std::size_t off = 0;
    for (std::size_t c = 0; c < g.circles.size(); ++c) {
        first[c] = off;
        off += g.circles[c].incident.size();
    }
    const int p = g.p;
    const int samples = 6000;
    for (std::size_t a = 0; a < g.circles.size(); ++a) {
        const Point& oa = g.vertices[g.circles[a].center];
        LD ax = ld(oa.x), ay = ld(oa.y), r = std::pow(ld(g.circles[a].radius_key), 1.0L / p);
        std::vector<LD> xs(samples + 1), ys(samples + 1), ts(samples + 1);
        for (int i = 0; i <= samples; ++i) {
            LD t = 2 * M_PIl * i / samples;
            LD cx = std::cos(t), cy = std::sin(t);
            LD nrm = std::pow(std::pow(std::fabs(cx), (LD)p) + std::pow(std::fabs(cy), (LD)p), 1.0L / p);
            xs[i] = ax + r * cx / nrm;
            ys[i] = ay + r * cy / nrm;
            ts[i] = t;
        }
        for (std::size_t b = a + 1; b < g.circles.size(); ++b) {
            const Point& ob = g.vertices[g.circles[b].center];
            LD bx = ld(ob.x), by = ld(ob.y), key = ld(g.circles[b].radius_key);
            auto F = [&](int i) {
                return std::pow(std::fabs(xs[i] - bx), (LD)p) + std::pow(std::fabs(ys[i] - by), (LD)p) - key;
            };
            LD prev = F(0);
            for (int i = 1; i <= samples; ++i) {
                LD cur = F(i);
                if ((prev < 0) != (cur < 0)) {
                    LD mx = (xs[i] + xs[i - 1]) / 2, my = (ys[i] + ys[i - 1]) / 2;
                    bool near_vertex = false;
                    for (auto q : g.circles[a].incident)
                        if (std::fabs(ld(g.vertices[q].x) - mx) + std::fabs(ld(g.vertices[q].y) - my) < 1e-2L)
                            near_vertex = true;
                    if (!near_vertex) {
                        std::size_t ea = arc_by_angle(g, a, (ts[i] + ts[i - 1]) / 2);
                        std::size_t eb = arc_by_angle(g, b, angle_of(mx - bx, my - by));
                        std::size_t e1 = first[a] + ea, e2 = first[b] + eb;
                        out.insert({std::min(e1, e2), std::max(e1, e2)});
                    }
                }
                prev = cur;
            }
        }
    }
    return out;
}

PointSet from_ints(std::vector<std::pair<int, int>> xy) {
    std::vector<Point> pts;
    for (auto [x, y] : xy) pts.push_back({Rational(x), Rational(y)});
    return PointSet(pts);
}

}  // namespace

TEST_CASE("circle pruning") {
    CHECK(build_circles(grid(2), 2).empty());
    auto cs = build_circles(grid(3), 2);
    bool found = false;
    for (const auto& c : cs) {
        CHECK(c.incident.size() >= 3);
        if (grid(3)[c.center] == Point{2, 2} && c.radius_key == 2) {
            found = true;
            CHECK(c.incident.size() == 4);
        }
    }
    CHECK(found);
    std::vector<Point> row;
    for (int i = 0; i < 8; ++i) row.push_back({Rational(i), Rational(0)});
    for (int p : {2, 3, 4}) CHECK(build_circles(PointSet(row), p).empty());
    CHECK_THROWS_AS(build_circles(grid(3), 1), Error);
}

TEST_CASE("cyclic order matches plain angles") {
    for (int p : {2, 3}) {
        auto g = build_multigraph(grid(5), p);
        std::size_t total = 0;
        for (const auto& c : g.circles) {
            total += c.incident.size();
            const Point& o = g.vertices[c.center];
            for (std::size_t k = 0; k + 1 < c.incident.size(); ++k) {
                const Point& a = g.vertices[c.incident[k]];
                const Point& b = g.vertices[c.incident[k + 1]];
                CHECK(angle_of(ld(a.x - o.x), ld(a.y - o.y)) < angle_of(ld(b.x - o.x), ld(b.y - o.y)));
            }
        }
        CHECK(g.edges.size() == total);
        std::size_t sum = 0;
        for (auto [m, c] : multiplicity_histogram(g)) sum += m * c;
        CHECK(sum == g.edges.size());
    }
}

TEST_CASE("grid(3) corner edge") {
    auto g = build_multigraph(grid(3), 2);
    std::size_t a = 0, b = 0;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (g.vertices[i] == Point{1, 1}) a = i;
        if (g.vertices[i] == Point{3, 1}) b = i;
    }
    bool on_center_circle = false;
    for (const auto& e : g.edges) {
        if (std::min(e.from, e.to) == std::min(a, b) && std::max(e.from, e.to) == std::max(a, b) &&
            g.vertices[g.circles[e.circle].center] == Point{2, 2})
            on_center_circle = true;
    }
    CHECK(on_center_circle);
    std::size_t m = g.multiplicity.at({std::min(a, b), std::max(a, b)});
    CHECK(m >= 1);
    Bisector bis = build_bisector(g.vertices[a], g.vertices[b], 2);
    std::size_t on = 0;
    for (const auto& w : g.vertices) on += point_on_bisector(bis, w);
    CHECK(m <= on);
}

TEST_CASE("triangle circle") {
    // Center (0,0) with exactly three points at l2 distance 5.
    auto g = build_multigraph(from_ints({{0, 0}, {5, 0}, {0, 5}, {-3, -4}}), 2);
    REQUIRE(g.circles.size() == 1);
    CHECK(g.edges.size() == 3);
    auto r = crossing_count(g);
    CHECK(r.cr == 0);
    CHECK(r.upper_bound == 0);
}

TEST_CASE("empty graph") {
    auto g = build_multigraph(grid(2), 2);
    auto r = crossing_count(g);
    CHECK(r.cr == 0);
    CHECK(r.upper_bound == 0);
    CHECK(multiplicity_histogram(g).empty());
}

TEST_CASE("crossings match the sampling oracle") {
    // Two l2 circles with three points each, crossing at two non-vertex points.
    {
        auto g = build_multigraph(from_ints({{0, 0}, {5, 0}, {0, 5}, {-3, -4}, {6, 1}, {6, 6}, {1, 1}, {11, 1}}), 2);
        auto r = crossing_count(g);
        auto oracle = oracle_pairs(g);
        CHECK(r.cr == oracle.size());
        CHECK(r.cr <= r.upper_bound);
    }
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 40 && checked < 6; ++seed) {
        PointSet pts = random_rational(12, seed, Box{0, 7, 0, 7}, 1);
        for (int p : {2, 3}) {
            auto g = build_multigraph(pts, p);
            if (g.circles.size() < 2) continue;
            CrossingReport r;
            try {
                r = crossing_count(g);
            } catch (const Error& e) {
                INFO(std::string(e.what()));
                CHECK(e.kind() == ErrorKind::DegeneratePosition);
                continue;
            }
            auto oracle = oracle_pairs(g);
            INFO("seed " << seed << " p " << p);
            CHECK(r.cr == oracle.size());
            CHECK(r.cr <= r.upper_bound);
            CHECK(r.e == g.edges.size());
            ++checked;
        }
    }
    CHECK(checked >= 3);
}

TEST_CASE("tangent circles are rejected") {
    // Circles about (0,0) and (10,0) with radius 5 touch at (5,0); each holds three points.
    auto g = build_multigraph(from_ints({{0, 0}, {0, 5}, {-5, 0}, {3, 4}, {10, 0}, {10, 5}, {15, 0}, {13, -4}}), 2);
    bool has_tangent = false;
    for (const auto& c : g.circles) has_tangent |= c.radius_key == 25;
    REQUIRE(has_tangent);
    CHECK_THROWS_AS(crossing_count(g), Error);
}

TEST_CASE("crossing count invariant under translation and relabeling") {
    PointSet pts = random_rational(12, 7, Box{0, 7, 0, 7}, 1);
    std::vector<Point> moved, reversed;
    for (const auto& q : pts) moved.push_back({q.x + Rational(1, 3), q.y - 2});
    for (auto it = pts.end(); it != pts.begin();) reversed.push_back(*--it);
    for (int p : {2, 3}) {
        try {
            auto r0 = crossing_count(build_multigraph(pts, p));
            CHECK(crossing_count(build_multigraph(PointSet(moved), p)).cr == r0.cr);
            CHECK(crossing_count(build_multigraph(PointSet(reversed), p)).cr == r0.cr);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::DegeneratePosition);
        }
    }
}
