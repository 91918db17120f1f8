#include "lplab/circle_graph.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "lplab/bisector.hpp"
#include "lplab/errors.hpp"

namespace lplab {

namespace {

int quadrant(const Rational& x, const Rational& y) {
    if (x > 0 && y >= 0) return 0;
    if (x <= 0 && y > 0) return 1;
    if (x < 0 && y <= 0) return 2;
    return 3;
}

Rational cross(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
    return ax * by - ay * bx;
}

// Exact range of ax*Vy - ay*Vx over the box V in xs x ys.
Interval cross_range(const Rational& ax, const Rational& ay, const Interval& xs, const Interval& ys) {
    Rational c1 = ax * ys.lo, c2 = ax * ys.hi;
    Rational d1 = ay * xs.lo, d2 = ay * xs.hi;
    Rational lo = std::min(c1, c2) - std::max(d1, d2);
    Rational hi = std::max(c1, c2) - std::min(d1, d2);
    return {lo, hi};
}

int strict_sign(const Interval& r) {
    if (r.lo > 0) return 1;
    if (r.hi < 0) return -1;
    return 0;
}

struct Dir {
    Rational x, y;
};

Interval dot_range(const Rational& ax, const Rational& ay, const Interval& xs, const Interval& ys) {
    Rational c1 = ax * xs.lo, c2 = ax * xs.hi;
    Rational d1 = ay * ys.lo, d2 = ay * ys.hi;
    return {std::min(c1, c2) + std::min(d1, d2), std::max(c1, c2) + std::max(d1, d2)};
}

// 1: V strictly inside the ccw arc a -> b, -1: outside, 0: undecided on this box.
// Angles are measured ccw from a; half 0 is (0, pi), half 1 is [pi, 2 pi).
int arc_test(const Dir& a, const Dir& b, const Interval& vx, const Interval& vy) {
    int cb = sgn(cross(a.x, a.y, b.x, b.y));
    int half_b = cb > 0 ? 0 : 1;
    int cav = strict_sign(cross_range(a.x, a.y, vx, vy));
    int sbv = strict_sign(cross_range(b.x, b.y, vx, vy));
    if (cav == 0) {
        if (strict_sign(dot_range(a.x, a.y, vx, vy)) >= 0) return 0;
        // V is at or near the direction opposite a.
        if (cb == 0 || sbv == 0) return 0;
        return half_b == 1 ? 1 : -1;
    }
    int half_v = cav > 0 ? 0 : 1;
    if (half_v != half_b) return half_v < half_b ? 1 : -1;
    if (sbv == 0) return 0;
    return sbv < 0 ? 1 : -1;
}

}  // namespace

bool angle_less(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
    int qa = quadrant(ax, ay), qb = quadrant(bx, by);
    if (qa != qb) return qa < qb;
    return cross(ax, ay, bx, by) > 0;
}

std::size_t CircleGraph::max_multiplicity() const {
    std::size_t m = 0;
    for (const auto& [k, c] : multiplicity) m = std::max(m, c);
    return m;
}

AbsPowerCurve CircleGraph::curve(std::size_t circle) const {
    const Circle& c = circles.at(circle);
    const Point& o = vertices[c.center];
    return AbsPowerCurve(p, {{Rational(1), o.x}}, {{Rational(1), o.y}}, -c.radius_key);
}

std::vector<Circle> build_circles(const PointSet& points, int p) {
    if (p < 2) fail(ErrorKind::InvalidParameter, "circle graph needs finite p >= 2");
    const PNorm metric = PNorm::finite(p);
    std::vector<Circle> out;
    for (std::size_t c = 0; c < points.size(); ++c) {
        std::unordered_map<Rational, std::vector<std::size_t>, RationalHash> by_key;
        for (std::size_t q = 0; q < points.size(); ++q)
            if (q != c) by_key[lp_key_value(points[c], points[q], metric)].push_back(q);
        std::vector<Circle> here;
        for (auto& [key, members] : by_key)
            if (members.size() >= 3) here.push_back({c, key, std::move(members)});
        std::sort(here.begin(), here.end(), [](const Circle& a, const Circle& b) { return a.radius_key < b.radius_key; });
        for (auto& circle : here) out.push_back(std::move(circle));
    }
    return out;
}

CircleGraph build_multigraph(const PointSet& points, int p) {
    CircleGraph g{points, p, build_circles(points, p), {}, {}};
    for (std::size_t id = 0; id < g.circles.size(); ++id) {
        Circle& c = g.circles[id];
        const Point& o = points[c.center];
        std::sort(c.incident.begin(), c.incident.end(), [&](std::size_t a, std::size_t b) {
            return angle_less(points[a].x - o.x, points[a].y - o.y, points[b].x - o.x, points[b].y - o.y);
        });
        const std::size_t j = c.incident.size();
        for (std::size_t k = 0; k < j; ++k) {
            std::size_t a = c.incident[k], b = c.incident[(k + 1) % j];
            g.edges.push_back({a, b, id});
            ++g.multiplicity[{std::min(a, b), std::max(a, b)}];
        }
    }
    return g;
}

namespace {

struct CircleData {
    AbsPowerCurve curve;
    Point center;
    std::vector<Dir> dirs;
    std::size_t first_edge;
};

// Index within the circle's edge list of the arc holding the box point.
std::optional<std::size_t> locate_arc(const CircleData& c, const Interval& x, const Interval& y) {
    Interval vx{x.lo - c.center.x, x.hi - c.center.x}, vy{y.lo - c.center.y, y.hi - c.center.y};
    const std::size_t j = c.dirs.size();
    std::optional<std::size_t> hit;
    for (std::size_t k = 0; k < j; ++k) {
        int t = arc_test(c.dirs[k], c.dirs[(k + 1) % j], vx, vy);
        if (t == 0) return std::nullopt;
        if (t > 0) {
            if (hit) return std::nullopt;
            hit = k;
        }
    }
    return hit;
}

}  // namespace

CrossingReport crossing_count(const CircleGraph& g, const IntersectOptions& opt) {
    std::vector<CircleData> data;
    data.reserve(g.circles.size());
    std::size_t offset = 0;
    for (std::size_t id = 0; id < g.circles.size(); ++id) {
        const Circle& c = g.circles[id];
        const Point& o = g.vertices[c.center];
        CircleData d{g.curve(id), o, {}, offset};
        for (std::size_t q : c.incident) d.dirs.push_back({g.vertices[q].x - o.x, g.vertices[q].y - o.y});
        offset += c.incident.size();
        data.push_back(std::move(d));
    }

    std::set<std::pair<std::size_t, std::size_t>> crossing_pairs;
    std::uint64_t points_count = 0;
    const std::size_t nc = data.size();
    for (std::size_t a = 0; a < nc; ++a) {
        for (std::size_t b = a + 1; b < nc; ++b) {
            std::vector<CurvePoint> common;
            try {
                common = intersect(data[a].curve, data[b].curve, opt);
            } catch (const Error& err) {
                if (err.kind() == ErrorKind::DegeneratePosition)
                    fail(ErrorKind::DegeneratePosition, "circles " + std::to_string(a) + " and " + std::to_string(b) +
                                                            ": " + err.what());
                throw;
            }
            if (common.size() > 2)
                fail(ErrorKind::ContractViolation,
                     "circles " + std::to_string(a) + " and " + std::to_string(b) + " meet in more than two points");

            for (auto& pt : common) {
                // Shared vertices are endpoints on both circles.
                bool vertex = false;
                for (std::size_t q : g.circles[a].incident) {
                    const Point& w = g.vertices[q];
                    if (!pt.x().contains(w.x) || !pt.y().contains(w.y)) continue;
                    if (data[b].curve(w.x, w.y) == 0) vertex = true;
                }
                if (vertex) continue;

                std::optional<std::size_t> ea, eb;
                Rational width = std::max(pt.x().width(), pt.y().width());
                if (width == 0) width = 1;
                std::vector<std::size_t> others;
                for (std::size_t c = 0; c < nc; ++c)
                    if (c != a && c != b) others.push_back(c);
                for (int round = 0;; ++round) {
                    if (round > opt.budget)
                        fail(ErrorKind::NumericalBudgetExceeded,
                             "cannot locate crossing of circles " + std::to_string(a) + " and " + std::to_string(b));
                    Interval x = pt.x(), y = pt.y();
                    if (!ea) ea = locate_arc(data[a], x, y);
                    if (!eb) eb = locate_arc(data[b], x, y);
                    std::erase_if(others, [&](std::size_t c) {
                        Interval r = data[c].curve.range_over(x, y);
                        return !r.contains_zero();
                    });
                    if (!others.empty() && pt.exact_x() && pt.exact_y()) {
                        std::size_t c = others.front();
                        if (data[c].curve(*pt.exact_x(), *pt.exact_y()) == 0)
                            fail(ErrorKind::DegeneratePosition, "circles " + std::to_string(a) + ", " +
                                                                    std::to_string(b) + " and " + std::to_string(c) +
                                                                    " are concurrent");
                    }
                    if (ea && eb && others.empty()) break;
                    if (round > opt.budget / 2 && !others.empty())
                        fail(ErrorKind::DegeneratePosition, "circles " + std::to_string(a) + ", " +
                                                                std::to_string(b) + " and " +
                                                                std::to_string(others.front()) + " are concurrent");
                    width /= 4;
                    pt.refine(width);
                }
                ++points_count;
                std::size_t e1 = data[a].first_edge + *ea, e2 = data[b].first_edge + *eb;
                crossing_pairs.insert({std::min(e1, e2), std::max(e1, e2)});
            }
        }
    }

    CrossingReport r;
    r.cr = crossing_pairs.size();
    r.crossing_points = points_count;
    r.upper_bound = static_cast<std::uint64_t>(nc) * (nc == 0 ? 0 : nc - 1);
    r.e = g.edges.size();
    r.n = g.vertices.size();
    r.m = g.max_multiplicity();
    r.lemma_applicable = r.m > 0 && r.e > 5 * r.m * r.n;
    if (r.m > 0) {
        Integer num = Integer(static_cast<unsigned long>(r.e));
        num = num * num * num;
        Integer den = Integer(static_cast<unsigned long>(r.m)) * Integer(static_cast<unsigned long>(r.n)) *
                      Integer(static_cast<unsigned long>(r.n)) *
                      Integer(static_cast<unsigned long>(std::max<std::uint64_t>(r.cr, 1)));
        r.ratio = make_rational(num, den);
    }
    return r;
}

std::map<std::size_t, std::size_t> multiplicity_histogram(const CircleGraph& g) {
    std::map<std::size_t, std::size_t> hist;
    for (const auto& [uv, mult] : g.multiplicity) {
        ++hist[mult];
        Bisector b = build_bisector(g.vertices[uv.first], g.vertices[uv.second], g.p);
        std::size_t on = 0;
        for (const auto& w : g.vertices)
            if (point_on_bisector(b, w)) ++on;
        if (mult > on)
            fail(ErrorKind::ContractViolation, "edge multiplicity exceeds bisector incidences for pair " +
                                                   std::to_string(uv.first) + "," + std::to_string(uv.second));
    }
    return hist;
}

}  // namespace lplab
