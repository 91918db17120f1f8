#include "lplab/bisector.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "lplab/errors.hpp"

namespace lplab {

Line Line::through(const Rational& a, const Rational& b, const Rational& c) {
    if (a == 0 && b == 0) fail(ErrorKind::DegenerateInput, "line with zero normal");
    auto ints = Poly2::from_coefficients({{c, b}, {a}}).integer_coefficients();
    auto at = [&](std::size_t i, std::size_t j) -> Rational {
        return i < ints.size() && j < ints[i].size() ? Rational(ints[i][j]) : Rational(0);
    };
    Line l{at(1, 0), at(0, 1), at(0, 0)};
    if (l.a < 0 || (l.a == 0 && l.b < 0)) l = {-l.a, -l.b, -l.c};
    return l;
}

bool Region::contains(const Point& w) const {
    if (x_lo && w.x <= *x_lo) return false;
    if (x_hi && w.x > *x_hi) return false;
    if (y_lo && w.y <= *y_lo) return false;
    if (y_hi && w.y > *y_hi) return false;
    return true;
}

const Line& Bisector::line() const {
    if (!is_line()) fail(ErrorKind::PreconditionViolated, "bisector is not a line");
    return line_;
}

std::size_t Bisector::unbounded_pieces() const {
    return static_cast<std::size_t>(std::count_if(pieces_.begin(), pieces_.end(), [](const auto& p) { return !p.bounded; }));
}

Rational Bisector::eval(const Point& w) const {
    auto t = [&](const Rational& d) { return pow(Rational(abs(d)), p_); };
    return t(w.x - u_.x) + t(w.y - u_.y) - t(w.x - v_.x) - t(w.y - v_.y);
}

AbsPowerCurve Bisector::curve() const {
    return AbsPowerCurve(p_, {{1, u_.x}, {-1, v_.x}}, {{1, u_.y}, {-1, v_.y}}, 0);
}

Region Bisector::region_of(const Point& w) const {
    Region r;
    r.col = static_cast<int>(std::count_if(x_cuts_.begin(), x_cuts_.end(), [&](const Rational& c) { return c < w.x; }));
    r.row = static_cast<int>(std::count_if(y_cuts_.begin(), y_cuts_.end(), [&](const Rational& c) { return c < w.y; }));
    if (r.col > 0) r.x_lo = x_cuts_[r.col - 1];
    if (r.col < 2) r.x_hi = x_cuts_[r.col];
    if (r.row > 0) r.y_lo = y_cuts_[r.row - 1];
    if (r.row < 2) r.y_hi = y_cuts_[r.row];
    return r;
}

Rational Bisector::diameter() const {
    return std::max(Rational(abs(v_.x - u_.x)), Rational(abs(v_.y - u_.y)));
}

namespace {

Region make_region(const std::vector<Rational>& xc, const std::vector<Rational>& yc, int col, int row) {
    Region r;
    r.col = col;
    r.row = row;
    if (col > 0) r.x_lo = xc[col - 1];
    if (col < 2) r.x_hi = xc[col];
    if (row > 0) r.y_lo = yc[row - 1];
    if (row < 2) r.y_hi = yc[row];
    return r;
}

Rational probe(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
    if (lo && hi) return (*lo + *hi) / 2;
    if (lo) return *lo + 1;
    return *hi - 1;
}

/// Root of a strictly monotone function in double precision, used only to
/// seed exact brackets.
std::optional<double> double_root(const std::function<double(double)>& g, int dir, double center, double scale) {
    if (!std::isfinite(center) || !std::isfinite(scale) || scale <= 0) return std::nullopt;
    double lo = center - scale, hi = center + scale;
    for (int i = 0; i < 200 && dir * g(lo) > 0; ++i) lo = center - (center - lo) * 2;
    for (int i = 0; i < 200 && dir * g(hi) < 0; ++i) hi = center + (hi - center) * 2;
    double glo = dir * g(lo), ghi = dir * g(hi);
    if (!std::isfinite(glo) || !std::isfinite(ghi) || glo > 0 || ghi < 0) return std::nullopt;
    for (int i = 0; i < 200; ++i) {
        double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) break;
        if (dir * g(mid) < 0) lo = mid;
        else hi = mid;
    }
    return lo + (hi - lo) / 2;
}

/// Enclosure of the root of G, strictly monotone in direction dir, with
/// width <= precision. sign_at returns the sign of G.
Interval monotone_root(const std::function<int(const Rational&)>& sign_at, int dir, const Rational& center,
                       const Rational& scale, std::optional<double> guess, const Rational& precision) {
    auto s = [&](const Rational& t) { return dir * sign_at(t); };
    Rational lo, hi;
    bool bracketed = false;
    if (guess && std::isfinite(*guess)) {
        Rational g(*guess);
        Rational delta = std::max(precision, Rational(scale / (Integer(1) << 40)));
        for (int i = 0; i < 6 && !bracketed; ++i, delta *= 64) {
            lo = g - delta;
            hi = g + delta;
            int sl = s(lo), sh = s(hi);
            if (sl == 0) return {lo, lo};
            if (sh == 0) return {hi, hi};
            bracketed = sl < 0 && sh > 0;
        }
    }
    if (!bracketed) {
        Rational delta = scale > 0 ? scale : Rational(1);
        lo = center - delta;
        hi = center + delta;
        for (int i = 0; i < 4000 && s(lo) > 0; ++i) lo = center - (center - lo) * 2;
        for (int i = 0; i < 4000 && s(hi) < 0; ++i) hi = center + (hi - center) * 2;
        if (s(lo) > 0 || s(hi) < 0) fail(ErrorKind::NumericalBudgetExceeded, "could not bracket a root");
        if (s(lo) == 0) return {lo, lo};
        if (s(hi) == 0) return {hi, hi};
    }
    for (int i = 0; i < 100000 && hi - lo > precision; ++i) {
        Rational mid = (lo + hi) / 2;
        int sm = s(mid);
        if (sm == 0) return {mid, mid};
        if (sm < 0) lo = mid;
        else hi = mid;
    }
    if (hi - lo > precision) fail(ErrorKind::NumericalBudgetExceeded, "root refinement budget exhausted");
    return {lo, hi};
}

double pw(double t, int p) { return std::pow(std::fabs(t), p); }

}  // namespace

Bisector build_bisector(const Point& u, const Point& v, int p) {
    if (u == v) fail(ErrorKind::DegenerateInput, "bisector of a point with itself");
    if (p < 2) fail(ErrorKind::Unsupported, "bisectors need finite p >= 2");
    Bisector b;
    b.u_ = u;
    b.v_ = v;
    b.p_ = p;
    b.mid_ = {(u.x + v.x) / 2, (u.y + v.y) / 2};
    b.x_cuts_ = {std::min(u.x, v.x), std::max(u.x, v.x)};
    b.y_cuts_ = {std::min(u.y, v.y), std::max(u.y, v.y)};
    const Rational dx = v.x - u.x, dy = v.y - u.y;
    const Point& m = b.mid_;

    std::optional<Line> line;
    if (dy == 0) line = Line::through(1, 0, -m.x);
    else if (dx == 0) line = Line::through(0, 1, -m.y);
    else if (dx == dy) line = Line::through(1, 1, -(m.x + m.y));
    else if (dx == -dy) line = Line::through(1, -1, -(m.x - m.y));
    else if (p == 2) line = Line::through(2 * dx, 2 * dy, u.x * u.x + u.y * u.y - v.x * v.x - v.y * v.y);
    if (line) {
        b.kind_ = Bisector::Kind::Line;
        b.line_ = *line;
        b.orientation_ = (line->b != 0 && -line->a / line->b < 0) ? Orientation::Decreasing : Orientation::Increasing;
        return b;
    }

    b.kind_ = Bisector::Kind::Curve;
    b.orientation_ = dx * dy > 0 ? Orientation::Decreasing : Orientation::Increasing;
    const bool increasing = b.orientation_ == Orientation::Increasing;
    const int s_psi = dy > 0 ? 1 : -1;
    // Compares f(xc) with yc where y = f(x) is the bisector graph.
    auto f_cmp = [&](const Rational& xc, const Rational& yc) { return -s_psi * sgn(b.eval({xc, yc})); };

    const auto& xc = b.x_cuts_;
    const auto& yc = b.y_cuts_;
    for (int col = 0; col < 3; ++col) {
        std::optional<Rational> xlo, xhi;
        if (col > 0) xlo = xc[col - 1];
        if (col < 2) xhi = xc[col];
        // Image of the open column under f is the open interval (A, B).
        const std::optional<Rational>& xa = increasing ? xlo : xhi;
        const std::optional<Rational>& xb = increasing ? xhi : xlo;
        for (int row = 0; row < 3; ++row) {
            std::optional<Rational> ylo, yhi;
            if (row > 0) ylo = yc[row - 1];
            if (row < 2) yhi = yc[row];
            bool below_top = !xa || !yhi || f_cmp(*xa, *yhi) < 0;
            bool above_bottom = !xb || !ylo || f_cmp(*xb, *ylo) > 0;
            if (!below_top || !above_bottom) continue;
            BisectorPiece piece;
            piece.region = make_region(xc, yc, col, row);
            Rational px = probe(xlo, xhi), py = probe(ylo, yhi);
            piece.signs = {sgn(px - u.x), sgn(px - v.x), sgn(py - u.y), sgn(py - v.y)};
            UPoly a = UPoly::shifted_power(u.x, p, piece.signs[0]) - UPoly::shifted_power(v.x, p, piece.signs[1]);
            UPoly c = UPoly::shifted_power(u.y, p, piece.signs[2]) - UPoly::shifted_power(v.y, p, piece.signs[3]);
            piece.poly = Poly2::from_x(a) + Poly2::from_y(c);
            b.pieces_.push_back(std::move(piece));
        }
    }
    std::sort(b.pieces_.begin(), b.pieces_.end(), [&](const BisectorPiece& l, const BisectorPiece& r) {
        if (l.region.col != r.region.col) return l.region.col < r.region.col;
        return increasing ? l.region.row < r.region.row : l.region.row > r.region.row;
    });
    if (b.pieces_.size() != 5) fail(ErrorKind::ContractViolation, "non-line bisector must visit five regions");
    for (std::size_t i = 0; i < b.pieces_.size(); ++i) b.pieces_[i].bounded = i != 0 && i + 1 != b.pieces_.size();
    return b;
}

bool point_on_bisector(const Bisector& b, const Point& w) { return b.eval(w) == 0; }

Interval bisector_eval(const Bisector& b, const Rational& x, const Rational& precision) {
    if (precision <= 0) fail(ErrorKind::InvalidParameter, "precision must be positive");
    if (b.is_line()) {
        const Line& l = b.line();
        if (l.b == 0) fail(ErrorKind::PreconditionViolated, "vertical bisector is not a graph over x");
        Rational y = -(l.a * x + l.c) / l.b;
        return {y, y};
    }
    const Point &u = b.u(), &v = b.v();
    const int p = b.p();
    const int dir = v.y > u.y ? 1 : -1;
    double ux = to_double(u.x), vx = to_double(v.x), uy = to_double(u.y), vy = to_double(v.y), xd = to_double(x);
    double phi = pw(xd - ux, p) - pw(xd - vx, p);
    auto guess = double_root([&](double y) { return phi + pw(y - uy, p) - pw(y - vy, p); }, dir,
                             to_double(b.midpoint().y), to_double(b.diameter()));
    return monotone_root([&](const Rational& y) { return sgn(b.eval({x, y})); }, dir, b.midpoint().y, b.diameter(),
                         guess, precision);
}

Interval bisector_eval_x(const Bisector& b, const Rational& y, const Rational& precision) {
    if (precision <= 0) fail(ErrorKind::InvalidParameter, "precision must be positive");
    if (b.is_line()) {
        const Line& l = b.line();
        if (l.a == 0) fail(ErrorKind::PreconditionViolated, "horizontal bisector is not a graph over y");
        Rational x = -(l.b * y + l.c) / l.a;
        return {x, x};
    }
    const Point &u = b.u(), &v = b.v();
    const int p = b.p();
    const int dir = v.x > u.x ? 1 : -1;
    double ux = to_double(u.x), vx = to_double(v.x), uy = to_double(u.y), vy = to_double(v.y), yd = to_double(y);
    double psi = pw(yd - uy, p) - pw(yd - vy, p);
    auto guess = double_root([&](double x) { return psi + pw(x - ux, p) - pw(x - vx, p); }, dir,
                             to_double(b.midpoint().x), to_double(b.diameter()));
    return monotone_root([&](const Rational& x) { return sgn(b.eval({x, y})); }, dir, b.midpoint().x, b.diameter(),
                         guess, precision);
}

MonotonicityReport monotonicity_probe(const Bisector& b, int samples) {
    if (samples < 2) fail(ErrorKind::InvalidParameter, "monotonicity probe needs at least two samples");
    MonotonicityReport rep;
    const Rational d = b.diameter(), mx = b.midpoint().x;
    for (int i = 0; i < samples; ++i) rep.xs.push_back(mx + d * (make_rational(4 * i, samples - 1) - 2));
    if (b.is_line() && b.line().b == 0) {
        // Vertical line: monotone as x = g(y); there is no graph over x to sample.
        rep.monotone = true;
        rep.orientation = Orientation::Increasing;
        return rep;
    }
    Rational prec = d / 256;
    rep.ys.resize(samples);
    std::vector<bool> stale(samples, true);
    for (int round = 0; round < 64; ++round) {
        for (int i = 0; i < samples; ++i)
            if (stale[i]) rep.ys[i] = bisector_eval(b, rep.xs[i], prec);
        std::fill(stale.begin(), stale.end(), false);
        int up = 0, down = 0;
        bool pending = false;
        for (int i = 0; i + 1 < samples; ++i) {
            const Interval &a = rep.ys[i], &c = rep.ys[i + 1];
            if (a.hi < c.lo) ++up;
            else if (c.hi < a.lo) ++down;
            else if (a.lo == a.hi && c.lo == c.hi) {
                // Exactly equal values: not strictly monotone.
            } else {
                stale[i] = stale[i + 1] = true;
                pending = true;
            }
        }
        if (!pending) {
            rep.monotone = (up == samples - 1) || (down == samples - 1);
            rep.orientation = down > up ? Orientation::Decreasing : Orientation::Increasing;
            return rep;
        }
        prec /= 1024;
        ++rep.refinements;
    }
    fail(ErrorKind::NumericalBudgetExceeded, "monotonicity probe could not separate enclosures");
}

bool central_symmetry_check(const Bisector& b, const Point& w) {
    if (!point_on_bisector(b, w)) fail(ErrorKind::PreconditionViolated, "witness is not on the bisector");
    const Point& m = b.midpoint();
    return point_on_bisector(b, {2 * m.x - w.x, 2 * m.y - w.y});
}

bool central_symmetry_check(const Bisector& b, const Rational& x, const Interval& y) {
    if (sgn(b.eval({x, y.lo})) * sgn(b.eval({x, y.hi})) > 0)
        fail(ErrorKind::PreconditionViolated, "enclosure does not bracket a bisector point");
    const Point& m = b.midpoint();
    Rational rx = 2 * m.x - x;
    return sgn(b.eval({rx, 2 * m.y - y.hi})) * sgn(b.eval({rx, 2 * m.y - y.lo})) <= 0;
}

std::vector<Point> rational_witnesses(const Bisector& b) {
    const Point &u = b.u(), &v = b.v(), &m = b.midpoint();
    Point p1{(u.x - v.y + u.y + v.x) / 2, (u.y + v.x - u.x + v.y) / 2};
    Point p2{2 * m.x - p1.x, 2 * m.y - p1.y};
    std::vector<Point> out{m};
    for (const auto& p : {p1, p2})
        if (point_on_bisector(b, p) && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    return out;
}

Rational default_precision(const Bisector& b) { return b.diameter() / (Integer(1) << 40); }

namespace {

Interval add(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval sub(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval scale(const Rational& s, const Interval& a) {
    return s >= 0 ? Interval{s * a.lo, s * a.hi} : Interval{s * a.hi, s * a.lo};
}
Interval mul(const Interval& a, const Interval& b) {
    Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}
Interval square(const Interval& a) {
    Rational l = abs(a.lo), h = abs(a.hi);
    if (a.contains_zero()) return {0, std::max(l, h) * std::max(l, h)};
    Rational m = std::min(l, h), M = std::max(l, h);
    return {m * m, M * M};
}

// sign(t)|t|^(p-1) over t in T - c; increasing in t.
Interval odd_power_range(const Interval& t, const Rational& c, int p) {
    return {signed_pow(t.lo - c, p - 1), signed_pow(t.hi - c, p - 1)};
}

// |t|^(p-2) over t in T - c.
Interval even_power_range(const Interval& t, const Rational& c, int p) {
    Rational a = abs(t.lo - c), b = abs(t.hi - c);
    Rational lo = t.contains(c) ? Rational(0) : std::min(a, b);
    return {pow(lo, p - 2), pow(std::max(a, b), p - 2)};
}

/// Numerator of the second derivative of the bisector graph: with
/// F = phi(x) + psi(y), y'' vanishes exactly where phi'' psi'^2 + psi'' phi'^2 does.
Interval curvature_numerator(const Bisector& b, const Interval& X, const Interval& Y) {
    const int p = b.p();
    const Point &u = b.u(), &v = b.v();
    Interval d1x = scale(p, sub(odd_power_range(X, u.x, p), odd_power_range(X, v.x, p)));
    Interval d2x = scale(p * (p - 1), sub(even_power_range(X, u.x, p), even_power_range(X, v.x, p)));
    Interval d1y = scale(p, sub(odd_power_range(Y, u.y, p), odd_power_range(Y, v.y, p)));
    Interval d2y = scale(p * (p - 1), sub(even_power_range(Y, u.y, p), even_power_range(Y, v.y, p)));
    return add(mul(d2x, square(d1y)), mul(d2y, square(d1x)));
}

Interval cube(const Interval& a) { return {a.lo * a.lo * a.lo, a.hi * a.hi * a.hi}; }

/// Derivative of the curvature numerator along the graph, where y' = -phi'/psi'
/// collapses it to phi''' psi'^2 - psi''' phi'^3 / psi'. Nothing when psi' may vanish.
std::optional<Interval> curvature_slope(const Bisector& b, const Interval& X, const Interval& Y) {
    const int p = b.p();
    const Point &u = b.u(), &v = b.v();
    Interval d1x = scale(p, sub(odd_power_range(X, u.x, p), odd_power_range(X, v.x, p)));
    Interval d1y = scale(p, sub(odd_power_range(Y, u.y, p), odd_power_range(Y, v.y, p)));
    if (d1y.contains_zero()) return std::nullopt;
    const Rational c3 = p * (p - 1) * (p - 2);
    Interval d3x = scale(c3, sub(odd_power_range(X, u.x, p - 2), odd_power_range(X, v.x, p - 2)));
    Interval d3y = scale(c3, sub(odd_power_range(Y, u.y, p - 2), odd_power_range(Y, v.y, p - 2)));
    Interval inv{1 / d1y.hi, 1 / d1y.lo};
    return sub(mul(d3x, square(d1y)), mul(mul(d3y, cube(d1x)), inv));
}

Interval intersect(const Interval& a, const Interval& b) { return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)}; }

class InflectionSearch {
public:
    InflectionSearch(const Bisector& b, Rational precision) : b_(b), prec_(std::move(precision)) {}

    Interval y_at(const Rational& x, const Rational& width) {
        auto it = cache_.find(x);
        if (it != cache_.end() && it->second.width() <= width) return it->second;
        Interval y = bisector_eval(b_, x, width);
        cache_[x] = y;
        return y;
    }

    Interval range(const Interval& X) {
        Rational w = std::max(Rational(X.width() / 8), Rational(prec_ / 64));
        Interval Y = hull(y_at(X.lo, w), y_at(X.hi, w));
        Interval plain = curvature_numerator(b_, X, Y);
        if (!plain.contains_zero()) return plain;
        // centred form; the plain enclosure suffers from cancellation near flat inflections
        auto slope = curvature_slope(b_, X, Y);
        if (!slope) return plain;
        Rational c = (X.lo + X.hi) / 2;
        Interval hc = curvature_numerator(b_, {c, c}, y_at(c, w / 64));
        Interval centred = add(hc, mul(*slope, Interval{X.lo - c, X.hi - c}));
        return intersect(plain, centred);
    }

    int sign_at(const Rational& x) {
        Rational w = b_.diameter() / (Integer(1) << 20);
        for (int round = 0; round < 40; ++round, w /= 1024) {
            Interval Y = y_at(x, w);
            Interval h = curvature_numerator(b_, {x, x}, Y);
            if (!h.contains_zero()) return sgn(h.lo);
            if (Y.lo == Y.hi) return 0;
        }
        fail(ErrorKind::NumericalBudgetExceeded, "curvature sign undecidable at a sample point");
    }

    Enclosure box(const Rational& lo, const Rational& hi) {
        Interval Y = hull(y_at(lo, prec_ / 4), y_at(hi, prec_ / 4));
        return {{lo, hi}, Y};
    }

private:
    const Bisector& b_;
    Rational prec_;
    std::map<Rational, Interval> cache_;
};

}  // namespace

InflectionReport inflection_points(const Bisector& b, const Rational& precision) {
    InflectionReport rep;
    if (b.is_line()) return rep;
    if (b.p() < 3) fail(ErrorKind::Unsupported, "inflections need p >= 3");
    if (precision <= 0) fail(ErrorKind::InvalidParameter, "precision must be positive");

    const auto& pcs = b.pieces();
    const bool increasing = b.orientation() == Orientation::Increasing;
    auto transition = [&](std::size_t i) -> Interval {
        const Region &a = pcs[i].region, &c = pcs[i + 1].region;
        if (a.col != c.col) return {*a.x_hi, *a.x_hi};
        const Rational& y = increasing ? *a.y_hi : *a.y_lo;
        return bisector_eval_x(b, y, precision);
    };
    const Rational d = b.diameter();
    Rational lo = transition(0).lo - d / 64, hi = transition(pcs.size() - 2).hi + d / 64;

    InflectionSearch search(b, precision);
    std::vector<Interval> stack, candidates;
    const int initial = 64;
    for (int i = 0; i < initial; ++i)
        stack.push_back({lo + (hi - lo) * make_rational(i, initial), lo + (hi - lo) * make_rational(i + 1, initial)});
    std::size_t budget = 1000000;
    while (!stack.empty()) {
        if (budget-- == 0) fail(ErrorKind::NumericalBudgetExceeded, "inflection subdivision budget exhausted");
        Interval X = stack.back();
        stack.pop_back();
        if (!search.range(X).contains_zero()) continue;
        if (X.width() <= precision) {
            candidates.push_back(X);
            continue;
        }
        Rational mid = (X.lo + X.hi) / 2;
        stack.push_back({mid, X.hi});
        stack.push_back({X.lo, mid});
    }
    std::sort(candidates.begin(), candidates.end(), [](const Interval& a, const Interval& c) { return a.lo < c.lo; });
    std::vector<Interval> clusters;
    for (const auto& c : candidates) {
        if (!clusters.empty() && clusters.back().hi == c.lo) clusters.back().hi = c.hi;
        else clusters.push_back(c);
    }

    const Point& m = b.midpoint();
    for (const auto& cl : clusters) {
        if (cl.contains(m.x)) {
            rep.points.push_back({{m.x, m.x}, {m.y, m.y}});
            continue;
        }
        int sl = search.sign_at(cl.lo), sh = search.sign_at(cl.hi);
        if (sl == 0) {
            rep.points.push_back(search.box(cl.lo, cl.lo));
            continue;
        }
        if (sh == 0) {
            rep.points.push_back(search.box(cl.hi, cl.hi));
            continue;
        }
        if (sl == sh) continue;
        Rational a = cl.lo, c = cl.hi;
        Enclosure e = search.box(a, c);
        for (int it = 0; it < 400 && (e.x.width() > precision || e.y.width() > precision); ++it) {
            Rational mid = (a + c) / 2;
            int sm = search.sign_at(mid);
            if (sm == 0) {
                a = c = mid;
            } else if (sm == sl) {
                a = mid;
            } else {
                c = mid;
            }
            e = search.box(a, c);
        }
        if (e.x.width() > precision || e.y.width() > precision)
            fail(ErrorKind::NumericalBudgetExceeded, "inflection enclosure did not reach the requested width");
        rep.points.push_back(e);
    }
    rep.count = rep.points.size();
    for (const auto& e : rep.points) {
        rep.regions.push_back(b.region_of({(e.x.lo + e.x.hi) / 2, (e.y.lo + e.y.hi) / 2}));
        if (e.contains(m)) rep.midpoint_included = true;
    }
    return rep;
}

namespace {

bool same_bisector(const Bisector& a, const Bisector& b) {
    if (a.is_line() != b.is_line()) return false;
    if (a.is_line()) return a.line() == b.line();
    if (a.p() != b.p()) return false;
    return (a.u() == b.u() && a.v() == b.v()) || (a.u() == b.v() && a.v() == b.u());
}

Enclosure to_enclosure(CurvePoint& pt, const Rational& precision) {
    pt.refine(precision);
    return {pt.x(), pt.y()};
}

}  // namespace

std::vector<Enclosure> bisector_intersections(const Bisector& b1, const Bisector& b2, const Rational& precision) {
    if (precision <= 0) fail(ErrorKind::InvalidParameter, "precision must be positive");
    if (same_bisector(b1, b2)) fail(ErrorKind::IdenticalCurves, "the two bisectors coincide");
    std::vector<Enclosure> out;
    if (b1.is_line() && b2.is_line()) {
        const Line &l1 = b1.line(), &l2 = b2.line();
        Rational det = l1.a * l2.b - l2.a * l1.b;
        if (det == 0) return out;
        Rational x = (l1.b * l2.c - l2.b * l1.c) / det;
        Rational y = (l2.a * l1.c - l1.a * l2.c) / det;
        out.push_back({{x, x}, {y, y}});
        return out;
    }
    std::vector<CurvePoint> pts;
    if (b1.is_line() || b2.is_line()) {
        const Bisector& ln = b1.is_line() ? b1 : b2;
        const Bisector& cv = b1.is_line() ? b2 : b1;
        pts = intersect_line(cv.curve(), ln.line().a, ln.line().b, ln.line().c);
    } else {
        pts = intersect(b1.curve(), b2.curve());
    }
    for (auto& pt : pts) out.push_back(to_enclosure(pt, precision));
    return out;
}

std::vector<Poly2> containing_curves_odd(const Point& u, const Point& v, int p) {
    if (p % 2 == 0) fail(ErrorKind::Unsupported, "even p has a single global polynomial");
    if (p < 3) fail(ErrorKind::Unsupported, "containing curves need odd p >= 3");
    Bisector b = build_bisector(u, v, p);
    std::vector<Poly2> out;
    if (b.is_line()) {
        const Line& l = b.line();
        out.push_back(Poly2::from_coefficients({{l.c, l.b}, {l.a}}).normalized());
        return out;
    }
    for (const auto& piece : b.pieces()) {
        Poly2 q = Poly2::from_coefficients([&] {
            std::vector<std::vector<Rational>> rows;
            for (const auto& row : piece.poly.integer_coefficients()) rows.emplace_back(row.begin(), row.end());
            return rows;
        }());
        if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
    }
    return out;
}

}  // namespace lplab
