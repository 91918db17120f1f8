#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "lplab/census.hpp"
#include "lplab/errors.hpp"
#include "lplab/generators.hpp"
#include "lplab/structure.hpp"

using namespace lplab;

namespace {

std::vector<Rational> ints(std::initializer_list<int> xs) {
    std::vector<Rational> out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

PointSet random_small(std::mt19937_64& rng, int n, int range) {
    std::uniform_int_distribution<int> d(-range, range);
    std::set<std::pair<int, int>> seen;
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < n) {
        int x = d(rng), y = d(rng);
        if (seen.insert({x, y}).second) pts.push_back({Rational(x), Rational(y)});
    }
    return PointSet(pts);
}

// Horizontal cover with one line per distinct y.
LineCover rows_cover(const PointSet& pts) {
    LineCover c;
    std::set<Rational> ys;
    for (const auto& w : pts) ys.insert(w.y);
    c.lines.assign(ys.begin(), ys.end());
    c.members.resize(c.lines.size());
    c.assignment.resize(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::size_t li = std::lower_bound(c.lines.begin(), c.lines.end(), pts[i].y) - c.lines.begin();
        c.assignment[i] = li;
        c.members[li].push_back(i);
    }
    for (auto& m : c.members)
        std::sort(m.begin(), m.end(), [&](auto a, auto b) { return pts[a].x < pts[b].x; });
    c.rich.assign(c.lines.size(), true);
    return c;
}

std::uint64_t brute_energy(const std::vector<Rational>& a) {
    std::uint64_t e = 0;
    for (const auto& a1 : a)
        for (const auto& a2 : a)
            for (const auto& a3 : a)
                for (const auto& a4 : a) e += (a1 - a2 == a3 - a4);
    return e;
}

}  // namespace

TEST_CASE("frame of grid(3)") {
    Frame f = extreme_frame(grid(3));
    CHECK(f.extreme[0] == Point{1, 1});
    CHECK(f.extreme[1] == Point{3, 3});
    CHECK(f.extreme[2] == Point{3, 1});
    CHECK(f.extreme[3] == Point{1, 3});
    CHECK(f.i_plus[0] == 2);
    CHECK(f.i_plus[3] == 6);
    CHECK(f.case_tag == FrameCase::Case1);
    CHECK_FALSE(f.symmetric);
    CHECK_THROWS_AS(extreme_frame(PointSet({{0, 0}})), Error);
}

TEST_CASE("frame of a diagonal") {
    std::vector<Point> d;
    for (int i = 1; i <= 5; ++i) d.push_back({i, i});
    Frame f = extreme_frame(PointSet(d));
    for (const auto& v : f.i_minus) CHECK(v == 0);
    for (const auto& w : d) CHECK(f.rectangle_of(w) >= 1);
}

TEST_CASE("frame orderings and quadruples agree with geometry") {
    std::mt19937_64 rng(11);
    int case2 = 0, symmetric = 0;
    for (int trial = 0; trial < 300; ++trial) {
        PointSet pts = random_small(rng, 3 + trial % 20, 6);
        Frame f = extreme_frame(pts);
        for (int k = 0; k < 3; ++k) {
            CHECK(f.i_plus[k] <= f.i_plus[k + 1]);
            CHECK(f.i_minus[k] <= f.i_minus[k + 1]);
        }
        case2 += f.case_tag == FrameCase::Case2;
        symmetric += f.symmetric;
        auto extremes = f.extreme_set();
        for (const auto& u : pts) {
            int r = f.rectangle_of(u);
            REQUIRE(r >= 1);
            REQUIRE(r <= 9);
            if (std::find(extremes.begin(), extremes.end(), u) != extremes.end()) continue;
            for (int j = 0; j < 4; ++j) {
                const Point& c = f.extreme[j];
                Rational dx = abs(u.x - c.x), dy = abs(u.y - c.y);
                INFO("rect " << r << " extreme " << j);
                if (f.quadruples[r - 1][j] == 'V') CHECK(dx >= dy);
                else CHECK(dy >= dx);
            }
        }
    }
    CHECK(case2 > 0);
    CHECK(symmetric > 0);
}

TEST_CASE("case 2 tables") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
        PointSet pts = random_small(rng, 8, 5);
        Frame f = extreme_frame(pts);
        if (f.case_tag != FrameCase::Case2 || f.symmetric) continue;
        CHECK(std::string(f.quadruples[4].begin(), f.quadruples[4].end()) == "VVVV");
        CHECK(std::string(f.quadruples[1].begin(), f.quadruples[1].end()) == "VHVV");
        CHECK(f.forced_orientation() == LineOrientation::Vertical);
        CHECK(line_cover(pts).orientation == LineOrientation::Vertical);
        return;
    }
    FAIL("no case 2 instance found");
}

TEST_CASE("line cover") {
    LineCover g = line_cover(grid(3));
    CHECK(g.orientation == LineOrientation::Horizontal);
    CHECK(g.lines == ints({1, 2, 3}));
    CHECK(g.covered() == 9);

    LineCover r = line_cover(row_construction(3));
    CHECK(r.orientation == LineOrientation::Horizontal);
    CHECK(r.lines == ints({1, 2, 3}));

    LineCover two = line_cover(PointSet({{0, 0}, {1, 0}}));
    CHECK(two.lines.size() == 1);
    CHECK(two.covered() == 2);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        PointSet pts = random_small(rng, 3 + trial % 25, 8);
        LineCover c = line_cover(pts);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            REQUIRE(c.assignment[i]);
            CHECK(c.across(pts[i]) == c.lines[*c.assignment[i]]);
        }
        std::set<Rational> dists;
        for (const auto& e : extreme_frame(pts).extreme_set())
            for (const auto& q : pts)
                if (!(q == e)) dists.insert(lp_key_value(e, q, PNorm::infinity()));
        CHECK(c.lines.size() - c.singleton_lines <= 4 * dists.size());
    }
}

TEST_CASE("rich lines") {
    LineCover c = rich_lines(line_cover(grid(9)), Rational(1));
    CHECK(std::count(c.rich.begin(), c.rich.end(), true) == 9);
    CHECK(c.discarded.empty());

    PointSet g9 = grid(9);
    std::vector<Point> pts(g9.begin(), g9.end());
    pts.push_back({Rational(5, 2), Rational(23, 2)});
    LineCover base = rows_cover(PointSet(pts));
    LineCover pruned = rich_lines(base, Rational(1, 2));
    CHECK(pruned.discarded.size() == 1);
    CHECK(pruned.covered() == 81);
}

TEST_CASE("rich lines threshold above occupancy") {
    // 82 points, at most 9 per line: 9 / sqrt(82) is just below 0.994.
    PointSet g9 = grid(9);
    std::vector<Point> pts(g9.begin(), g9.end());
    pts.push_back({Rational(5, 2), Rational(23, 2)});
    LineCover base = rows_cover(PointSet(pts));
    CHECK_NOTHROW(rich_lines(base, Rational(993, 1000)));
    try {
        rich_lines(base, Rational(994, 1000));
        FAIL("expected every line to be pruned");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyAfterPruning);
    }
}

TEST_CASE("difference sets and energy") {
    CHECK(difference_set(ints({1, 2, 3})) == ints({-2, -1, 0, 1, 2}));
    CHECK(difference_set(ints({0})) == ints({0}));
    CHECK(difference_set(ints({1, 2, 4})) == ints({-3, -2, -1, 0, 1, 2, 3}));
    CHECK(difference_energy(ints({1, 2, 3})).energy == 19);
    CHECK(difference_energy(ints({1, 2, 3})).r.at(Rational(0)) == 3);
    CHECK(difference_energy(ints({1, 2, 4})).energy == 15);
    CHECK(difference_energy(ints({7})).energy == 1);

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        int m = 1 + trial;
        std::set<Rational> s;
        std::uniform_int_distribution<int> num(-60, 60), den(1, 4);
        while (static_cast<int>(s.size()) < m) s.insert(make_rational(num(rng), den(rng)));
        std::vector<Rational> a(s.begin(), s.end());
        auto rep = difference_energy(a);
        if (m <= 25) CHECK(rep.energy == brute_energy(a));
        CHECK(rep.energy >= static_cast<std::uint64_t>(m) * m);
        auto ds = difference_set(a);
        CHECK(ds.size() >= 2 * a.size() - 1);
        CHECK(ds.size() <= a.size() * (a.size() - 1) + 1);
        // All nonzero differences distinct exactly when only the trivial quadruples remain.
        CHECK((rep.energy == 2 * static_cast<std::uint64_t>(m) * m - m) == (ds.size() == a.size() * (a.size() - 1) + 1));
    }
}

TEST_CASE("gap fitting") {
    auto g1 = gap_fit(ints({1, 3, 5, 7}), 3, 4);
    REQUIRE(g1);
    CHECK(g1->dimension() == 1);
    CHECK(g1->base == 1);
    CHECK(g1->generators[0] == 2);
    CHECK(g1->sizes[0] == 4);

    auto two = ints({0, 1, 10, 11, 20, 21});
    auto g2 = gap_fit(two, 3, 6);
    REQUIRE(g2);
    CHECK(g2->dimension() == 2);
    CHECK(g2->base == 0);
    CHECK(g2->generators == ints({1, 10}));
    CHECK(g2->sizes == std::vector<std::int64_t>{2, 3});
    // No progression of one generator with at most 6 terms holds the set.
    bool one_dim = false;
    for (int b = 1; b <= 21; ++b)
        for (int a = -21; a <= 0; ++a) {
            Gap g{Rational(a), {Rational(b)}, {6}};
            one_dim |= std::all_of(two.begin(), two.end(), [&](const Rational& t) { return g.contains(t); });
        }
    CHECK_FALSE(one_dim);

    std::mt19937_64 rng(21);
    std::vector<Rational> scattered;
    std::set<Rational> diffs;
    std::uniform_int_distribution<int> num(1, 1000000);
    while (scattered.size() < 30) {
        Rational v = make_rational(num(rng), 997);
        bool fresh = true;
        std::vector<Rational> nd;
        for (const auto& w : scattered) {
            nd.push_back(v - w);
            nd.push_back(w - v);
        }
        for (const auto& d : nd) fresh &= !diffs.count(d) && d != 0;
        if (!fresh) continue;
        diffs.insert(nd.begin(), nd.end());
        scattered.push_back(v);
    }
    CHECK(difference_set(scattered).size() == 30 * 29 + 1);
    CHECK_FALSE(gap_fit(scattered, 3, 60));

    // Dense subsets of a 5 x 5 box keep both generators among the differences.
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> a;
        std::bernoulli_distribution keep(0.8);
        for (int k1 = 0; k1 < 5; ++k1)
            for (int k2 = 0; k2 < 5; ++k2)
                if ((k1 == 0 && k2 == 0) || keep(rng))
                    a.push_back(Rational(k1) * Rational(3, 7) + Rational(k2) * Rational(5) + Rational(1, 2));
        for (int d = 1; d <= 3; ++d) {
            auto g = gap_fit(a, d, 25);
            if (!g) continue;
            CHECK(static_cast<int>(g->dimension()) <= d);
            CHECK(g->volume() <= 25);
            for (const auto& t : a) CHECK(g->contains(t));
        }
        CHECK(gap_fit(a, 2, 25));
    }
}

TEST_CASE("best translation") {
    Gap a{Rational(0), {Rational(1)}, {3}};
    Translation t = best_translation(a, ints({5, 6, 9}));
    CHECK(t.r == 4);
    CHECK(t.overlap == 2);

    Translation same = best_translation(a, ints({10, 11, 12}));
    CHECK(same.r == 10);
    CHECK(same.overlap == 3);

    Gap sparse{Rational(0), {Rational(1), Rational(100)}, {2, 2}};
    Translation one = best_translation(sparse, ints({0, 7, 1000}));
    CHECK(one.overlap == 1);

    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> d(-15, 15);
    for (int trial = 0; trial < 50; ++trial) {
        Gap g{Rational(d(rng)), {Rational(1 + trial % 3), Rational(7)}, {3, 2}};
        std::vector<Rational> c;
        for (int i = 0; i < 6; ++i) c.emplace_back(d(rng));
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        Translation got = best_translation(g, c);
        std::size_t best = 0;
        Rational best_r;
        for (int r = -60; r <= 60; ++r) {
            std::size_t k = 0;
            for (const auto& e : g.elements()) k += std::count(c.begin(), c.end(), e + r);
            if (k > best) {
                best = k;
                best_r = r;
            }
        }
        CHECK(got.overlap == best);
        CHECK(got.r == best_r);
    }
}

TEST_CASE("saved line progressions") {
    auto grid9 = rows_cover(grid(9));
    auto s = saved_line_progressions(grid9, grid(9), Rational(1, 4));
    CHECK(s.progressions.size() == 1);
    for (const auto& lp : s.per_line) {
        REQUIRE(lp);
        CHECK(lp->overlap == 9);
    }

    PointSet rows = row_construction(4);
    auto sr = saved_line_progressions(rows_cover(rows), rows, Rational(1, 4));
    CHECK(sr.progressions.size() == 1);
    for (const auto& lp : sr.per_line) {
        REQUIRE(lp);
        CHECK(lp->overlap == 4);
    }

    std::vector<Point> inter;
    for (int row = 1; row <= 8; ++row)
        for (int i = 1; i <= 8; ++i) inter.push_back({row % 2 ? Rational(i) : Rational(7 * i, 5), Rational(row)});
    PointSet ip(inter);
    auto si = saved_line_progressions(rows_cover(ip), ip, Rational(1, 4));
    CHECK(si.progressions.size() == 2);
}

TEST_CASE("intercept partition") {
    auto g9 = intercept_partition(grid(9), rows_cover(grid(9)), Rational(1, 4), Rational(1, 4), Rational(1, 4));
    REQUIRE(g9.parts.size() == 1);
    CHECK(g9.parts[0].gap.base == 1);
    CHECK(g9.parts[0].gap.generators == ints({1}));
    CHECK(g9.parts[0].gap.sizes == std::vector<std::int64_t>{9});

    PointSet rows = row_construction(5);
    auto r5 = intercept_partition(rows, rows_cover(rows), Rational(1, 4), Rational(1, 4), Rational(1, 4));
    REQUIRE(r5.parts.size() == 1);
    CHECK(r5.parts[0].gap.base == 1);
    CHECK(r5.parts[0].gap.sizes == std::vector<std::int64_t>{5});

    std::vector<Point> both;
    for (int i = 1; i <= 9; ++i)
        for (int j = 1; j <= 9; ++j) {
            both.push_back({i, j});
            both.push_back({1000 + 3 * i, 1000 + 3 * j});
        }
    PointSet bp(both);
    auto two = intercept_partition(bp, rows_cover(bp), Rational(1, 4), Rational(1, 4), Rational(1, 4));
    REQUIRE(two.parts.size() == 2);
    for (const auto& part : two.parts) {
        CHECK(part.gap.dimension() == 1);
        CHECK(part.intercepts.size() == 9);
    }
    CHECK(two.parts[1].gap.generators == ints({3}));

    try {
        intercept_partition(rows, rows_cover(rows), Rational(1, 4), Rational(99, 100), Rational(1, 100));
        FAIL("expected a stall");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::StallDetected);
    }
}

TEST_CASE("corollary pipeline") {
    for (int k : {3, 6, 9}) {
        auto rep = corollary_pipeline(grid(k));
        CHECK(rep.surviving_fraction == 1);
        CHECK(rep.partition.parts.size() == 1);
    }
    for (int k : {4, 8}) {
        auto rep = corollary_pipeline(row_construction(k));
        CHECK(rep.surviving_fraction == 1);
    }
    const int k = 9;
    PointSet gk = grid(k);
    std::vector<Point> pts(gk.begin(), gk.end());
    for (int i = 0; i < k; ++i) pts.push_back({Rational(20 + 13 * i, 7), Rational(30 + 5 * i * i, 3)});
    PointSet all(pts);
    auto rep = corollary_pipeline(all);
    CHECK(rep.survivors.size() >= static_cast<std::size_t>(k * k));
    CHECK(rep.survivors.size() + rep.ledger.size() == all.size());
    std::set<std::size_t> ledgered;
    for (const auto& e : rep.ledger) ledgered.insert(e.point);
    for (int i = 0; i < k; ++i) CHECK(ledgered.count(k * k + i));
}
