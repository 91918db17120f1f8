#include "lplab/geometry.hpp"

#include <algorithm>
#include <unordered_set>

#include "lplab/errors.hpp"

namespace lplab {

bool lex_less(const Point& a, const Point& b) {
    int c = cmp(a.x, b.x);
    return c < 0 || (c == 0 && a.y < b.y);
}

std::size_t PointHash::operator()(const Point& p) const noexcept {
    RationalHash h;
    std::size_t a = h(p.x);
    return a ^ (h(p.y) + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

std::string to_string(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.empty()) fail(ErrorKind::InvalidInput, "point set must be nonempty");
    std::unordered_set<Point, PointHash> seen;
    seen.reserve(points_.size() * 2);
    for (const auto& p : points_) {
        if (!seen.insert(p).second) fail(ErrorKind::InvalidInput, "duplicate point " + to_string(p));
    }
}

PNorm PNorm::finite(int p) {
    if (p < 1) fail(ErrorKind::InvalidParameter, "p must be >= 1, got " + std::to_string(p));
    return PNorm(p);
}

PNorm PNorm::parse(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "p:inf") return infinity();
    std::string body = text.rfind("p:", 0) == 0 ? text.substr(2) : text;
    if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        body.size() > 6)
        fail(ErrorKind::InvalidParameter, "metric must be 'inf' or 'p:<int>', got '" + text + "'");
    return finite(std::stoi(body));
}

std::string PNorm::to_string() const { return is_infinity() ? "inf" : "p:" + std::to_string(p_); }

Rational lp_key_value(const Point& u, const Point& v, PNorm m) {
    Rational dx = abs(Rational(u.x - v.x));
    Rational dy = abs(Rational(u.y - v.y));
    if (m.is_infinity()) return dx >= dy ? dx : dy;
    if (m.p() == 1) return dx + dy;
    return pow(dx, m.p()) + pow(dy, m.p());
}

DistanceKey lp_distance_key(const Point& u, const Point& v, PNorm m) { return {m, lp_key_value(u, v, m)}; }

std::strong_ordering compare_distances(const Point& a0, const Point& a1, const Point& b0,
                                       const Point& b1, PNorm m) {
    int c = cmp(lp_key_value(a0, a1, m), lp_key_value(b0, b1, m));
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Point l1_to_linf(const Point& p) { return {p.x - p.y, p.x + p.y}; }

PointSet l1_to_linf_transform(const PointSet& points) {
    std::vector<Point> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(l1_to_linf(p));
    return PointSet(std::move(out));
}

PointSet swap_coordinates(const PointSet& points) {
    std::vector<Point> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back({p.y, p.x});
    return PointSet(std::move(out));
}

PointSet translate(const PointSet& points, const Point& offset) {
    std::vector<Point> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back({p.x + offset.x, p.y + offset.y});
    return PointSet(std::move(out));
}

RootBracket pth_root_bracket(const Rational& value, int p, const Rational& width) {
    if (value < 0) fail(ErrorKind::InvalidParameter, "root of a negative key");
    Rational lo = 0;
    Rational hi = value > 1 ? value : Rational(1);
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        int c = cmp(pow(mid, p), value);
        if (c == 0) return {mid, mid};
        if (c < 0) lo = mid;
        else hi = mid;
    }
    return {lo, hi};
}

namespace {

bool on_segment(const Point& u, const Point& v, const Point& w) {
    Rational cross = (v.x - u.x) * (w.y - u.y) - (v.y - u.y) * (w.x - u.x);
    if (cross != 0) return false;
    return std::min(u.x, w.x) <= v.x && v.x <= std::max(u.x, w.x) && std::min(u.y, w.y) <= v.y &&
           v.y <= std::max(u.y, w.y);
}

}  // namespace

TriangleVerdict triangle_inequality(const Point& u, const Point& v, const Point& w, PNorm m,
                                    int max_refinements) {
    Rational uw = lp_key_value(u, w, m);
    Rational uv = lp_key_value(u, v, m);
    Rational vw = lp_key_value(v, w, m);
    if (m.is_infinity() || m.p() == 1)
        return uw <= uv + vw ? TriangleVerdict::Holds : TriangleVerdict::Violated;
    // Homogeneity gives equality along the segment; elsewhere strict convexity
    // makes the inequality strict, so refinement terminates.
    if (on_segment(u, v, w)) return TriangleVerdict::Holds;
    Rational width = 1;
    for (int i = 0; i < max_refinements; ++i) {
        auto a = pth_root_bracket(uw, m.p(), width);
        auto b = pth_root_bracket(uv, m.p(), width);
        auto c = pth_root_bracket(vw, m.p(), width);
        if (a.hi <= b.lo + c.lo) return TriangleVerdict::Holds;
        if (a.lo > b.hi + c.hi) return TriangleVerdict::Violated;
        width /= 2;
    }
    fail(ErrorKind::NumericalBudgetExceeded, "triangle inequality undecided within refinement budget");
}

}  // namespace lplab
