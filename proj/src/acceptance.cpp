#include "lplab/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "lplab/bisector.hpp"
#include "lplab/census.hpp"
#include "lplab/circle_graph.hpp"
#include "lplab/errors.hpp"
#include "lplab/generators.hpp"
#include "lplab/structure.hpp"

namespace lplab {

namespace {

struct Failure {
    std::string invariant, detail;
};

void require(bool ok, const std::string& invariant, const std::string& detail) {
    if (!ok) throw Failure{invariant, detail};
}

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::uint64_t choose2(std::uint64_t n) { return n * (n - 1) / 2; }

std::uint64_t histogram_total(const DistanceCensus& c) {
    std::uint64_t s = 0;
    for (const auto& [k, m] : c.histogram) s += m;
    return s;
}

void check_census_shape(const DistanceCensus& c, std::size_t n, const std::string& label) {
    require(histogram_total(c) == choose2(n), "multiset-sum",
            label + ": multiplicities sum to " + std::to_string(histogram_total(c)) + ", expected " +
                std::to_string(choose2(n)));
    require(c.distinct_count == c.histogram.size(), "distinct-count", label + ": distinct_count disagrees with histogram");
    for (const auto& [i, d] : c.per_point) require(d <= c.distinct_count, "per-point-bound", label);
}

Rational random_rational_value(std::mt19937_64& rng, int span, int max_den) {
    std::uniform_int_distribution<int> den(1, max_den);
    int d = den(rng);
    std::uniform_int_distribution<int> num(-span * d, span * d);
    return make_rational(num(rng), d);
}

std::string grid_law(const AcceptanceOptions& opt) {
    auto t0 = Clock::now();
    for (int k = 2; k <= 60; ++k) {
        auto pts = grid(k);
        auto c = distance_census(pts, PNorm::infinity(), {opt.threads, opt.census_drop_pairs});
        check_census_shape(c, pts.size(), "grid(" + std::to_string(k) + ")");
        require(c.distinct_count == static_cast<std::size_t>(k - 1), "grid-law",
                "grid(" + std::to_string(k) + ") has " + std::to_string(c.distinct_count) + " distances");
    }
    double s = since(t0);
    require(s < 60, "runtime", std::to_string(s) + " s");
    return "k = 2..60, D = k-1 every time";
}

std::string row_law(const AcceptanceOptions& opt) {
    double at_100 = 0;
    for (int k = 2; k <= 100; ++k) {
        auto pts = row_construction(k);
        std::set<Rational> xs;
        for (const auto& w : pts) xs.insert(w.x);
        require(xs.size() == pts.size(), "distinct-x", "row_construction(" + std::to_string(k) + ")");
        auto t0 = Clock::now();
        auto c = distance_census(pts, PNorm::infinity(), {opt.threads, opt.census_drop_pairs});
        if (k == 100) at_100 = since(t0);
        check_census_shape(c, pts.size(), "row_construction(" + std::to_string(k) + ")");
        require(c.distinct_count == static_cast<std::size_t>(2 * k - 2), "row-law",
                "row_construction(" + std::to_string(k) + ") has " + std::to_string(c.distinct_count) + " distances");
    }
    require(at_100 < 120, "runtime", std::to_string(at_100) + " s at k = 100");
    std::ostringstream os;
    os << "k = 2..100, D = 2k-2 every time; k = 100 census " << std::fixed << std::setprecision(2) << at_100 << " s";
    return os.str();
}

std::string rotation(const AcceptanceOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> size(2, 300), den(1, 12);
    std::size_t pairs = 0;
    for (int trial = 0; trial < 50; ++trial) {
        int n = size(rng);
        auto pts = random_rational(n, rng(), Box{-20, 20, -20, 20}, den(rng));
        auto l1 = distance_census(pts, PNorm::finite(1), {opt.threads, opt.census_drop_pairs});
        auto linf = distance_census(l1_to_linf_transform(pts), PNorm::infinity(), {opt.threads, opt.census_drop_pairs});
        check_census_shape(l1, pts.size(), "l1 set " + std::to_string(trial));
        check_census_shape(linf, pts.size(), "linf set " + std::to_string(trial));
        require(l1.histogram == linf.histogram, "rotation-multiset", "set " + std::to_string(trial));
        pairs += choose2(pts.size());
    }
    return "50 sets, " + std::to_string(pairs) + " pairs, multisets equal";
}

std::pair<Point, Point> random_pair(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 15);
    Point u{random_rational_value(rng, 10, 7), random_rational_value(rng, 10, 7)};
    for (;;) {
        Point v{random_rational_value(rng, 10, 7), random_rational_value(rng, 10, 7)};
        Rational t = v.x - u.x;
        switch (kind(rng)) {
            case 0: v.y = u.y; break;
            case 1: v.x = u.x; break;
            case 2: v.y = u.y + t; break;
            case 3: v.y = u.y - t; break;
            default: break;
        }
        if (!(u == v)) return {u, v};
    }
}

std::string bisector_battery(const AcceptanceOptions& opt) {
    std::mt19937_64 rng(opt.seed + 4);
    std::size_t lines = 0, curves = 0, witnesses = 0;
    for (int p : {3, 4, 5}) {
        for (int trial = 0; trial < 200; ++trial) {
            auto [u, v] = random_pair(rng);
            const std::string label = "p=" + std::to_string(p) + " u=" + to_string(u) + " v=" + to_string(v);
            auto check = [&] {
                Rational dx = v.x - u.x, dy = v.y - u.y;
                bool special = dx == 0 || dy == 0 || abs(dx) == abs(dy);
                Bisector b = build_bisector(u, v, p);
                require(b.is_line() == special, "line-kind", label);
                Point m{(u.x + v.x) / 2, (u.y + v.y) / 2};
                require(point_on_bisector(b, m), "midpoint-membership", label);
                if (b.is_line()) {
                    ++lines;
                    return;
                }
                ++curves;
                require(monotonicity_probe(b, 50).monotone, "monotonicity", label);
                auto rw = rational_witnesses(b);
                for (const auto& w : rw) require(central_symmetry_check(b, w), "central-symmetry", label + " at " + to_string(w));
                const Rational prec = default_precision(b), diam = b.diameter();
                for (int i = 0; static_cast<std::size_t>(i) + rw.size() < 20; ++i) {
                    Rational x = m.x + diam * make_rational(2 * i - 17, 5) + diam / 97;
                    Interval y = bisector_eval(b, x, prec);
                    require(central_symmetry_check(b, x, y), "central-symmetry", label);
                }
                witnesses += 20;
                require(b.regions_intersected() == 5, "five-regions", label);
                require(b.unbounded_pieces() == 2, "two-unbounded", label);
                auto infl = inflection_points(b, prec);
                require(infl.count == 3 && infl.points.size() == 3, "three-inflections",
                        label + ": " + std::to_string(infl.count));
                int with_mid = 0;
                for (const auto& e : infl.points) {
                    with_mid += e.contains(m);
                    require(e.x.width() <= prec && e.y.width() <= prec, "inflection-width", label);
                }
                require(with_mid == 1, "inflection-at-midpoint", label);
            };
            try {
                check();
            } catch (const Error& e) {
                throw Failure{std::string(to_string(e.kind())), label + ": " + e.what()};
            }
        }
    }
    return std::to_string(lines) + " line bisectors, " + std::to_string(curves) + " curves, " +
           std::to_string(witnesses) + " symmetry witnesses";
}

std::string intersections(const AcceptanceOptions& opt) {
    std::mt19937_64 rng(opt.seed + 5);
    std::size_t max_count = 0, done = 0, redrawn = 0;
    std::map<std::size_t, std::size_t> hist;
    while (done < 500) {
        auto [u, v] = random_pair(rng);
        auto [w, z] = random_pair(rng);
        Bisector b1 = build_bisector(u, v, 3), b2 = build_bisector(w, z, 3);
        std::vector<Enclosure> pts;
        try {
            pts = bisector_intersections(b1, b2, std::min(b1.diameter(), b2.diameter()) / (1 << 20));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::IdenticalCurves && e.kind() != ErrorKind::DegeneratePosition) throw;
            ++redrawn;
            continue;
        }
        ++done;
        ++hist[pts.size()];
        max_count = std::max(max_count, pts.size());
        require(pts.size() <= 18, "bezout-ceiling", "u=" + to_string(u) + " v=" + to_string(v) + " w=" + to_string(w) +
                                                           " z=" + to_string(z) + ": " + std::to_string(pts.size()));
    }
    std::string h;
    for (auto [c, m] : hist) h += " " + std::to_string(c) + ":" + std::to_string(m);
    return "500 pairs, max " + std::to_string(max_count) + " (ceiling 18), " + std::to_string(redrawn) +
           " redrawn; counts" + h;
}

using LD = long double;

LD ld(const Rational& q) { return static_cast<LD>(q.get_d()); }

LD angle_of(LD x, LD y) {
    LD a = std::atan2(y, x);
    return a < 0 ? a + 2 * M_PIl : a;
}

std::size_t arc_by_angle(const CircleGraph& g, std::size_t c, LD t) {
    const Circle& circ = g.circles[c];
    const Point& o = g.vertices[circ.center];
    const std::size_t j = circ.incident.size();
    std::vector<LD> ang;
    for (auto q : circ.incident) ang.push_back(angle_of(ld(g.vertices[q].x - o.x), ld(g.vertices[q].y - o.y)));
    std::sort(ang.begin(), ang.end());
    for (std::size_t k = 0; k < j; ++k) {
        LD a = ang[k], b = ang[(k + 1) % j];
        if (b <= a) b += 2 * M_PIl;
        LD tt = t < a ? t + 2 * M_PIl : t;
        if (tt > a && tt < b) return k;
    }
    return j;
}

// Sign changes of one circle's defining function sampled along another,
// mapped to arcs by plain angles.
std::set<std::pair<std::size_t, std::size_t>> oracle_crossing_pairs(const CircleGraph& g) {
    std::set<std::pair<std::size_t, std::size_t>> out;
    std::vector<std::size_t> first(g.circles.size());
    std::size_t off = 0;
    for (std::size_t c = 0; c < g.circles.size(); ++c) {
        first[c] = off;
        off += g.circles[c].incident.size();
    }
    const int p = g.p, samples = 20000;
    std::vector<LD> xs(samples + 1), ys(samples + 1), ts(samples + 1);
    for (std::size_t a = 0; a < g.circles.size(); ++a) {
        const Point& oa = g.vertices[g.circles[a].center];
        LD ax = ld(oa.x), ay = ld(oa.y), r = std::pow(ld(g.circles[a].radius_key), 1.0L / p);
        const LD tol = 8 * M_PIl * r / samples;
        for (int i = 0; i <= samples; ++i) {
            LD t = 2 * M_PIl * i / samples, cx = std::cos(t), cy = std::sin(t);
            LD nrm = std::pow(std::pow(std::fabs(cx), (LD)p) + std::pow(std::fabs(cy), (LD)p), 1.0L / p);
            xs[i] = ax + r * cx / nrm;
            ys[i] = ay + r * cy / nrm;
            ts[i] = t;
        }
        for (std::size_t b = a + 1; b < g.circles.size(); ++b) {
            const Point& ob = g.vertices[g.circles[b].center];
            LD bx = ld(ob.x), by = ld(ob.y), key = ld(g.circles[b].radius_key);
            LD rb = std::pow(key, 1.0L / p);
            if (std::max(std::fabs(ax - bx), std::fabs(ay - by)) > 2 * (r + rb)) continue;
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
                        if (std::fabs(ld(g.vertices[q].x) - mx) + std::fabs(ld(g.vertices[q].y) - my) < tol)
                            near_vertex = true;
                    if (!near_vertex) {
                        std::size_t e1 = first[a] + arc_by_angle(g, a, (ts[i] + ts[i - 1]) / 2);
                        std::size_t e2 = first[b] + arc_by_angle(g, b, angle_of(mx - bx, my - by));
                        out.insert({std::min(e1, e2), std::max(e1, e2)});
                    }
                }
                prev = cur;
            }
        }
    }
    return out;
}

Rational lp_key(const Point& a, const Point& b, int p) { return pow(abs(a.x - b.x), p) + pow(abs(a.y - b.y), p); }

// Point sets built from symmetric orbits about a few centres so that circles
// through three or more points actually occur, plus scattered noise.
PointSet orbit_set(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coord(0, 14), off(1, 4), count(2, 4), keep(0, 2), noise(0, 8);
    std::set<std::pair<int, int>> pts;
    int centres = count(rng);
    for (int c = 0; c < centres; ++c) {
        int cx = coord(rng), cy = coord(rng);
        pts.insert({cx, cy});
        int a = off(rng), b = off(rng);
        for (int sx : {-1, 1})
            for (int sy : {-1, 1})
                for (bool swap : {false, true}) {
                    if (keep(rng) == 0) continue;
                    int dx = swap ? b : a, dy = swap ? a : b;
                    pts.insert({cx + sx * dx, cy + sy * dy});
                }
    }
    int extra = noise(rng);
    for (int i = 0; i < extra; ++i) pts.insert({coord(rng), coord(rng)});
    std::vector<Point> out;
    for (auto [x, y] : pts) {
        if (out.size() == 50) break;
        out.push_back({Rational(x), Rational(y)});
    }
    return PointSet(out);
}

std::string circle_graph_checks(const AcceptanceOptions& opt) {
    std::mt19937_64 rng(opt.seed + 6);
    int done = 0, redrawn = 0;
    std::uint64_t total_cr = 0, sampled = 0, total_edges = 0;
    while (done < 30) {
        PointSet pts = orbit_set(rng);
        const int p = 2 + done % 2;
        auto g = build_multigraph(pts, p);
        CrossingReport r;
        try {
            r = crossing_count(g);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DegeneratePosition) throw;
            ++redrawn;
            continue;
        }
        const std::string label = "set " + std::to_string(done) + " p=" + std::to_string(p);

        std::uint64_t sum_j = 0, circles = 0;
        for (std::size_t c = 0; c < pts.size(); ++c) {
            std::map<Rational, std::uint64_t> shells;
            for (std::size_t q = 0; q < pts.size(); ++q)
                if (q != c) ++shells[lp_key(pts[c], pts[q], p)];
            for (auto [k, j] : shells)
                if (j >= 3) {
                    sum_j += j;
                    ++circles;
                }
        }
        require(circles == g.circles.size(), "circle-count", label);
        require(g.edges.size() == sum_j, "edge-sum", label + ": |E| = " + std::to_string(g.edges.size()) +
                                                         ", sum j = " + std::to_string(sum_j));
        require(r.cr <= 2 * choose2(circles), "crossing-bound", label);
        auto oracle = oracle_crossing_pairs(g);
        require(r.cr == oracle.size(), "crossing-oracle",
                label + ": cr = " + std::to_string(r.cr) + ", oracle " + std::to_string(oracle.size()));
        total_cr += r.cr;
        total_edges += g.edges.size();

        std::vector<std::pair<std::size_t, std::size_t>> keys;
        for (const auto& [k, m] : g.multiplicity) keys.push_back(k);
        std::shuffle(keys.begin(), keys.end(), rng);
        for (std::size_t i = 0; i < keys.size() && sampled < 100; ++i, ++sampled) {
            auto [a, b] = keys[i];
            std::size_t on = 0;
            for (const auto& w : pts) on += lp_key(w, pts[a], p) == lp_key(w, pts[b], p);
            require(g.multiplicity.at(keys[i]) <= on, "multiplicity-bound", label);
        }
        ++done;
    }
    require(sampled == 100, "multiplicity-sample", "only " + std::to_string(sampled) + " pairs available");
    return "30 sets, " + std::to_string(total_edges) + " edges, total cr " + std::to_string(total_cr) + ", " +
           std::to_string(redrawn) + " degenerate draws redrawn, 100 multiplicities checked";
}

std::string energy_oracle(const AcceptanceOptions& opt) {
    std::mt19937_64 rng(opt.seed + 7);
    std::uniform_int_distribution<int> size(1, 40), num(-40, 40), den(1, 6);
    std::uint64_t max_e = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::set<Rational> a;
        int target = size(rng);
        while (static_cast<int>(a.size()) < target) a.insert(make_rational(num(rng), den(rng)));
        std::vector<Rational> values(a.begin(), a.end());
        auto rep = difference_energy(values);
        // common denominator 60 turns the quadruple count into integer work
        std::vector<long long> s;
        for (const auto& q : values) s.push_back(Rational(q * 60).get_num().get_si());
        std::uint64_t brute = 0;
        for (auto x : s)
            for (auto y : s)
                for (auto z : s)
                    for (auto w : s) brute += x - y == z - w;
        const std::string label = "set " + std::to_string(trial) + " |A| = " + std::to_string(values.size());
        require(rep.energy == brute, "energy-oracle",
                label + ": " + std::to_string(rep.energy) + " vs " + std::to_string(brute));
        std::uint64_t n = values.size();
        require(rep.energy >= n * n, "energy-lower-bound", label);
        max_e = std::max(max_e, rep.energy);
    }
    return "100 sets, largest energy " + std::to_string(max_e);
}

bool gap_contains_all(const Gap& g, const std::vector<Rational>& values) {
    std::set<Rational> elems;
    std::vector<std::int64_t> k(g.sizes.size(), 0);
    for (;;) {
        Rational t = g.base;
        for (std::size_t j = 0; j < k.size(); ++j) t += g.generators[j] * k[j];
        elems.insert(t);
        std::size_t j = 0;
        while (j < k.size() && ++k[j] == g.sizes[j]) k[j++] = 0;
        if (j == k.size()) break;
    }
    return std::all_of(values.begin(), values.end(), [&](const Rational& v) { return elems.count(v) > 0; });
}

std::string gap_recovery(const AcceptanceOptions& opt) {
    std::mt19937_64 rng(opt.seed + 8);
    std::uniform_int_distribution<int> dim(1, 2), n1(2, 64), n2(2, 8);
    int planted = 0, d2 = 0;
    while (planted < 100) {
        int d = dim(rng);
        Gap g{random_rational_value(rng, 50, 9), {}, {}};
        if (d == 1) {
            g.generators = {random_rational_value(rng, 20, 11)};
            g.sizes = {n1(rng)};
        } else {
            std::int64_t a = n2(rng);
            std::uniform_int_distribution<int> bsz(2, static_cast<int>(64 / a));
            g.generators = {random_rational_value(rng, 20, 11), random_rational_value(rng, 200, 13)};
            g.sizes = {a, bsz(rng)};
        }
        std::set<Rational> elems;
        for (auto q : g.generators)
            if (q == 0) elems.insert(0);
        if (!elems.empty()) continue;
        auto listed = g.elements();
        elems.insert(listed.begin(), listed.end());
        if (Integer(static_cast<long>(elems.size())) != g.volume()) continue;
        std::vector<Rational> values(elems.begin(), elems.end());
        std::shuffle(values.begin(), values.end(), rng);
        const std::int64_t volume = g.volume().get_si();
        auto fit = gap_fit(values, d, 2 * volume);
        const std::string label = "planted d=" + std::to_string(d) + " volume " + std::to_string(volume);
        if (!fit) {
            std::string s;
            for (auto& q : g.generators) s += " " + q.get_str();
            require(false, "gap-recovery", label + ": no cover found; base " + g.base.get_str() + " gens" + s + " sizes " + std::to_string(g.sizes[0]) + "x" + std::to_string(g.sizes.back()));
        }
        require(static_cast<int>(fit->dimension()) <= d, "gap-dimension", label);
        require(fit->volume() <= 2 * volume, "gap-size", label + ": volume " + fit->volume().get_str());
        require(gap_contains_all(*fit, values), "gap-containment", label);
        ++planted;
        d2 += d == 2;
    }
    std::uniform_int_distribution<int> size(20, 40);
    int generic = 0;
    for (int trial = 0; trial < 50; ++trial) {
        std::set<Rational> a;
        int target = size(rng);
        while (static_cast<int>(a.size()) < target) a.insert(random_rational_value(rng, 1000, 997));
        std::vector<Rational> values(a.begin(), a.end());
        auto fit = gap_fit(values, 2, 2 * static_cast<std::int64_t>(values.size()));
        if (fit) require(gap_contains_all(*fit, values), "gap-containment", "generic set " + std::to_string(trial));
        require(!fit.has_value(), "generic-no-cover", "generic set " + std::to_string(trial) + " got a cover");
        ++generic;
    }
    return "100 planted (" + std::to_string(d2) + " with d=2) recovered, " + std::to_string(generic) +
           " generic sets gave NoCover";
}

void check_structured(const PointSet& pts, int k, const std::string& label) {
    auto rep = corollary_pipeline(pts);
    const auto ku = static_cast<std::size_t>(k);
    require(rep.cover.lines.size() == ku, "cover-lines", label + ": " + std::to_string(rep.cover.lines.size()) + " lines");
    require(rep.cover.covered() == pts.size(), "cover-complete", label);
    require(rep.surviving_fraction == 1, "survivor-fraction", label + ": " + to_string(rep.surviving_fraction));
    require(rep.saved.progressions.size() == 1, "one-progression",
            label + ": " + std::to_string(rep.saved.progressions.size()) + " saved progressions");
    require(rep.partition.parts.size() == 1, "one-part", label);
    const Gap& g = rep.partition.parts[0].gap;
    require(g.dimension() == 1 && g.sizes[0] == k, "intercept-gap", label);
}

std::string structure_pipeline(const AcceptanceOptions&) {
    for (int k = 4; k <= 30; ++k) {
        check_structured(grid(k), k, "grid(" + std::to_string(k) + ")");
        check_structured(row_construction(k), k, "row_construction(" + std::to_string(k) + ")");
        PointSet gk = grid(k);
        std::vector<Point> pts(gk.begin(), gk.end());
        for (int i = 0; i < k; ++i)
            pts.push_back({make_rational(20 + 13 * i, 7) + Rational(1, 11), make_rational(30 + 5 * i * i, 3) + Rational(1, 13)});
        PointSet all(pts);
        auto rep = corollary_pipeline(all);
        const std::string label = "grid(" + std::to_string(k) + ") with outliers";
        require(rep.survivors.size() >= gk.size(), "outlier-survivors", label);
        std::set<std::size_t> ledgered, outliers;
        for (const auto& e : rep.ledger) ledgered.insert(e.point);
        for (std::size_t i = gk.size(); i < all.size(); ++i) outliers.insert(i);
        require(ledgered == outliers, "outlier-ledger", label + ": " + std::to_string(ledgered.size()) + " ledgered");
    }
    return "k = 4..30 on grid, rows and grid plus k outliers";
}

std::string asymptotic_scope(const AcceptanceOptions& opt) {
    std::mt19937_64 rng(opt.seed + 10);
    Rational worst = 0;
    int sets = 0;
    while (sets < 5) {
        auto g = build_multigraph(orbit_set(rng), 2);
        CrossingReport r;
        try {
            r = crossing_count(g);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DegeneratePosition) throw;
            continue;
        }
        require(r.cr <= r.upper_bound, "crossing-bound", "sample " + std::to_string(sets));
        worst = std::max(worst, r.ratio);
        ++sets;
    }
    std::ostringstream os;
    os << "asymptotic constants not reproducible at desk scale; exact inequalities checked by criteria 1-9; "
       << "largest e^3/(m n^2 cr) over 5 samples " << std::setprecision(4) << to_double(worst);
    return os.str();
}

const char* kNames[kCriteria] = {
    "grid law",          "row construction",   "l1/linf rotation",  "bisector battery",    "bisector intersections",
    "circle graph",      "energy oracle",      "GAP recovery",      "structure pipeline",  "asymptotic scope",
};

}  // namespace

std::vector<int> suite_criteria(const std::string& suite) {
    if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    if (suite == "census") return {1, 2, 3};
    if (suite == "bisector") return {4, 5};
    if (suite == "circles") return {6};
    if (suite == "structure") return {7, 8, 9};
    fail(ErrorKind::InvalidParameter, "unknown suite " + suite);
}

CriterionResult run_criterion(int id, const AcceptanceOptions& opt) {
    if (id < 1 || id > kCriteria) fail(ErrorKind::InvalidParameter, "no criterion " + std::to_string(id));
    static std::string (*const runners[kCriteria])(const AcceptanceOptions&) = {
        grid_law,           row_law,          rotation,     bisector_battery,   intersections,
        circle_graph_checks, energy_oracle,   gap_recovery, structure_pipeline, asymptotic_scope,
    };
    CriterionResult r{id, kNames[id - 1], false, "", "", 0};
    auto t0 = Clock::now();
    try {
        r.detail = runners[id - 1](opt);
        r.pass = true;
    } catch (const Failure& f) {
        r.invariant = f.invariant;
        r.detail = f.detail;
    } catch (const Error& e) {
        r.invariant = std::string(to_string(e.kind()));
        r.detail = e.what();
    }
    r.seconds = since(t0);
    return r;
}

std::string format_result(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << std::left << std::setw(24) << r.name
       << std::right << std::fixed << std::setprecision(2) << std::setw(8) << r.seconds << " s  ";
    if (!r.pass) os << "[" << r.invariant << "] ";
    os << r.detail;
    return os.str();
}

}  // namespace lplab
