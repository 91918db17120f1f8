#include "lplab/curves.hpp"

#include <algorithm>
#include <functional>

#include "lplab/errors.hpp"

namespace lplab {

Interval hull(const Interval& a, const Interval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

bool disjoint(const Interval& a, const Interval& b) { return a.hi < b.lo || b.hi < a.lo; }

namespace {

Rational term_sum(const std::vector<AbsTerm>& terms, int p, const Rational& t) {
    Rational acc = 0;
    for (const auto& term : terms) acc += term.weight * pow(Rational(abs(t - term.center)), p);
    return acc;
}

UPoly term_poly(const std::vector<AbsTerm>& terms, int p, const Rational& probe) {
    UPoly acc;
    for (const auto& term : terms) {
        int s = probe < term.center ? -1 : 1;
        acc = acc + term.weight * UPoly::shifted_power(term.center, static_cast<unsigned>(p), s);
    }
    return acc;
}

Interval term_range(const std::vector<AbsTerm>& terms, int p, const Interval& t) {
    Interval acc{0, 0};
    for (const auto& term : terms) {
        Rational a = abs(t.lo - term.center), b = abs(t.hi - term.center);
        Rational lo = (t.lo <= term.center && term.center <= t.hi) ? Rational(0) : std::min(a, b);
        Rational hi = std::max(a, b);
        Rational plo = pow(lo, p), phi = pow(hi, p);
        if (term.weight >= 0) {
            acc.lo += term.weight * plo;
            acc.hi += term.weight * phi;
        } else {
            acc.lo += term.weight * phi;
            acc.hi += term.weight * plo;
        }
    }
    return acc;
}

Interval derivative_range(const std::vector<AbsTerm>& terms, int p, const Interval& t) {
    Interval acc{0, 0};
    for (const auto& term : terms) {
        Rational lo = term.weight * p * signed_pow(t.lo - term.center, p - 1);
        Rational hi = term.weight * p * signed_pow(t.hi - term.center, p - 1);
        if (lo > hi) std::swap(lo, hi);
        acc.lo += lo;
        acc.hi += hi;
    }
    return acc;
}

Interval product(const Interval& a, const Interval& b) {
    Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

std::vector<Rational> sorted_centers(const std::vector<AbsTerm>& terms) {
    std::vector<Rational> out;
    for (const auto& t : terms) out.push_back(t.center);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

AbsPowerCurve::AbsPowerCurve(int p, std::vector<AbsTerm> x_terms, std::vector<AbsTerm> y_terms, Rational constant)
    : p_(p), x_terms_(std::move(x_terms)), y_terms_(std::move(y_terms)), constant_(std::move(constant)) {
    if (p < 1) fail(ErrorKind::InvalidParameter, "curve exponent must be >= 1");
}

Rational AbsPowerCurve::x_part(const Rational& x) const { return term_sum(x_terms_, p_, x) + constant_; }
Rational AbsPowerCurve::y_part(const Rational& y) const { return term_sum(y_terms_, p_, y); }
Rational AbsPowerCurve::operator()(const Rational& x, const Rational& y) const { return x_part(x) + y_part(y); }

std::vector<Rational> AbsPowerCurve::x_breaks() const { return sorted_centers(x_terms_); }
std::vector<Rational> AbsPowerCurve::y_breaks() const { return sorted_centers(y_terms_); }

UPoly AbsPowerCurve::x_poly(const Rational& probe) const {
    return term_poly(x_terms_, p_, probe) + UPoly::constant(constant_);
}
UPoly AbsPowerCurve::y_poly(const Rational& probe) const { return term_poly(y_terms_, p_, probe); }

Interval AbsPowerCurve::range_over(const Interval& xs, const Interval& ys) const {
    Interval a = term_range(x_terms_, p_, xs), b = term_range(y_terms_, p_, ys);
    return {a.lo + b.lo + constant_, a.hi + b.hi + constant_};
}

Interval AbsPowerCurve::dx_range(const Interval& xs) const { return derivative_range(x_terms_, p_, xs); }
Interval AbsPowerCurve::dy_range(const Interval& ys) const { return derivative_range(y_terms_, p_, ys); }

Interval gradient_determinant(const AbsPowerCurve& f, const AbsPowerCurve& g, const Interval& xs,
                              const Interval& ys) {
    Interval a = product(f.dx_range(xs), g.dy_range(ys)), b = product(f.dy_range(ys), g.dx_range(xs));
    return {a.lo - b.hi, a.hi - b.lo};
}

std::optional<Interval> solve_monotone(const UPoly& b, const Rational& offset, const Rational& y_lo,
                                       const Rational& y_hi, const Rational& width) {
    int slo = sgn(b(y_lo) + offset);
    if (slo == 0) return Interval{y_lo, y_lo};
    int shi = sgn(b(y_hi) + offset);
    if (shi == 0) return Interval{y_hi, y_hi};
    if (slo == shi) return std::nullopt;
    Rational lo = y_lo, hi = y_hi;
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        int s = sgn(b(mid) + offset);
        if (s == 0) return Interval{mid, mid};
        if (s == slo) lo = mid;
        else hi = mid;
    }
    return Interval{lo, hi};
}

CurvePoint CurvePoint::interior(UPoly root_poly, RootInterval root, UPoly a, UPoly b, Rational y_lo,
                                Rational y_hi) {
    CurvePoint p;
    p.kind_ = Kind::Interior;
    p.root_poly_ = std::move(root_poly);
    p.root_ = std::move(root);
    p.a_ = std::move(a);
    p.b_ = std::move(b);
    p.y_lo_ = std::move(y_lo);
    p.y_hi_ = std::move(y_hi);
    p.update_interior_y(p.root_.hi - p.root_.lo);
    return p;
}

CurvePoint CurvePoint::edge(Kind kind, Rational fixed, UPoly root_poly, RootInterval root) {
    CurvePoint p;
    p.kind_ = kind;
    p.fixed_ = std::move(fixed);
    p.root_poly_ = std::move(root_poly);
    p.root_ = std::move(root);
    return p;
}

CurvePoint CurvePoint::on_line(UPoly root_poly, RootInterval root, Rational slope, Rational intercept) {
    CurvePoint p;
    p.kind_ = Kind::OnLine;
    p.root_poly_ = std::move(root_poly);
    p.root_ = std::move(root);
    p.slope_ = std::move(slope);
    p.intercept_ = std::move(intercept);
    return p;
}

Interval CurvePoint::x() const {
    if (kind_ == Kind::VerticalEdge) return {fixed_, fixed_};
    return {root_.lo, root_.hi};
}

Interval CurvePoint::y() const {
    switch (kind_) {
        case Kind::VerticalEdge: return {root_.lo, root_.hi};
        case Kind::HorizontalEdge: return {fixed_, fixed_};
        case Kind::OnLine: {
            Rational a = slope_ * root_.lo + intercept_, b = slope_ * root_.hi + intercept_;
            return {std::min(a, b), std::max(a, b)};
        }
        case Kind::Interior: break;
    }
    return y_cache_;
}

std::optional<Rational> CurvePoint::exact_x() const {
    Interval i = x();
    if (i.lo == i.hi) return i.lo;
    return std::nullopt;
}

std::optional<Rational> CurvePoint::exact_y() const {
    Interval i = y();
    if (i.lo == i.hi) return i.lo;
    return std::nullopt;
}

void CurvePoint::update_interior_y(const Rational& width) {
    Rational w = width > 0 ? width : Rational(1, 1 << 20);
    auto lo = solve_monotone(b_, a_(root_.lo), y_lo_, y_hi_, w);
    auto hi = root_.exact() ? lo : solve_monotone(b_, a_(root_.hi), y_lo_, y_hi_, w);
    if (lo && hi) y_cache_ = hull(*lo, *hi);
    else y_cache_ = {y_lo_, y_hi_};
}

void CurvePoint::refine(const Rational& width, int budget) {
    Rational target = width;
    for (int i = 0; i < budget; ++i) {
        if (x().width() <= width && y().width() <= width) return;
        switch (kind_) {
            case Kind::VerticalEdge:
            case Kind::HorizontalEdge: refine_root(root_poly_, root_, width); break;
            case Kind::OnLine: {
                Rational s = abs(slope_) > 1 ? Rational(abs(slope_)) : Rational(1);
                refine_root(root_poly_, root_, width / s);
                break;
            }
            case Kind::Interior:
                refine_root(root_poly_, root_, target);
                update_interior_y(width / 2);
                target /= 2;
                break;
        }
    }
    if (x().width() > width || y().width() > width)
        fail(ErrorKind::NumericalBudgetExceeded, "intersection point refinement did not converge");
}

namespace {

struct Band {
    std::optional<Rational> lo, hi;

    Rational probe() const {
        if (lo && hi) return (*lo + *hi) / 2;
        if (lo) return *lo + 1;
        if (hi) return *hi - 1;
        return 0;
    }
};

std::vector<Band> bands(const std::vector<Rational>& breaks) {
    std::vector<Band> out;
    std::optional<Rational> prev;
    for (const auto& b : breaks) {
        out.push_back({prev, b});
        prev = b;
    }
    out.push_back({prev, std::nullopt});
    return out;
}

std::vector<Rational> merged(std::vector<Rational> a, const std::vector<Rational>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

UPoly shift_const(const UPoly& p, const Rational& c) { return p + UPoly::constant(c); }

/// Res_y(a1(x) + b1(y), a2(x) + b2(y)) as a polynomial in x.
UPoly separable_resultant(const UPoly& a1, const UPoly& b1, const UPoly& a2, const UPoly& b2) {
    int bound = std::max(a1.degree(), 0) * std::max(b2.degree(), 0) +
                std::max(a2.degree(), 0) * std::max(b1.degree(), 0);
    std::vector<Rational> xs, ys;
    for (int i = 0; i <= bound; ++i) {
        Rational x(i);
        xs.push_back(x);
        ys.push_back(resultant(shift_const(b1, a1(x)), shift_const(b2, a2(x))));
    }
    return interpolate(xs, ys);
}

/// Exact range of a(x) + b(y) over a box on which a and b are monotone.
Interval cell_range(const UPoly& a, const UPoly& b, const Interval& X, const Interval& Y) {
    Rational a0 = a(X.lo), a1 = a(X.hi), b0 = b(Y.lo), b1 = b(Y.hi);
    return {std::min(a0, a1) + std::min(b0, b1), std::max(a0, a1) + std::max(b0, b1)};
}

/// +1 when a lies above b, -1 below, 0 when the enclosures overlap.
int compare(const Interval& a, const Interval& b) {
    if (a.lo > b.hi) return 1;
    if (a.hi < b.lo) return -1;
    return 0;
}

std::vector<RootInterval> roots_in(const UPoly& f, const Rational& lo, const Rational& hi) {
    if (f.degree() < 1 || lo > hi) return {};
    return isolate_roots(f, lo, hi);
}

bool has_root_at(const UPoly& g, const RootInterval& r) {
    if (g.degree() < 1) return false;
    if (r.exact()) return g.sign_at(r.lo) == 0;
    UPoly sf = squarefree_part(g);
    return SturmSequence(sf).count(r.lo, r.hi) > 0;
}

}  // namespace

std::vector<CurvePoint> intersect(const AbsPowerCurve& c1, const AbsPowerCurve& c2, const IntersectOptions& opt) {
    std::vector<CurvePoint> out;
    auto xb = bands(merged(c1.x_breaks(), c2.x_breaks()));
    auto yb = bands(merged(c1.y_breaks(), c2.y_breaks()));

    for (const auto& bx : xb) {
        for (const auto& by : yb) {
            Rational px = bx.probe(), py = by.probe();
            UPoly a1 = c1.x_poly(px), b1 = c1.y_poly(py), a2 = c2.x_poly(px), b2 = c2.y_poly(py);
            if (bx.lo && bx.hi && by.lo && by.hi) {
                Interval X{*bx.lo, *bx.hi}, Y{*by.lo, *by.hi};
                if (!cell_range(a1, b1, X, Y).contains_zero() || !cell_range(a2, b2, X, Y).contains_zero()) continue;
            }
            if (a1.degree() < 1 || b1.degree() < 1 || a2.degree() < 1 || b2.degree() < 1)
                fail(ErrorKind::Unsupported, "curve is axis-parallel inside a cell");

            UPoly R = separable_resultant(a1, b1, a2, b2);
            if (R.is_zero()) fail(ErrorKind::DegeneratePosition, "curves share a component");
            Rational XL, XH, YL, YH;
            if (!bx.lo || !bx.hi) {
                Rational B = cauchy_root_bound(R);
                XL = bx.lo ? *bx.lo : Rational(-B);
                XH = bx.hi ? *bx.hi : B;
            } else {
                XL = *bx.lo;
                XH = *bx.hi;
            }
            if (!by.lo || !by.hi) {
                UPoly S = separable_resultant(b1, a1, b2, a2);
                if (S.is_zero()) fail(ErrorKind::DegeneratePosition, "curves share a component");
                Rational B = cauchy_root_bound(S);
                YL = by.lo ? *by.lo : Rational(-B);
                YH = by.hi ? *by.hi : B;
            } else {
                YL = *by.lo;
                YH = *by.hi;
            }
            if (XL > XH || YL > YH) continue;
            {
                Interval X{XL, XH}, Y{YL, YH};
                if (!cell_range(a1, b1, X, Y).contains_zero() || !cell_range(a2, b2, X, Y).contains_zero()) continue;
            }

            // Points on the right edge x = xhi with y in (ylo, yhi].
            if (bx.hi) {
                UPoly g = gcd(shift_const(b1, a1(*bx.hi)), shift_const(b2, a2(*bx.hi)));
                for (auto& r : roots_in(g, YL, YH)) {
                    if (by.lo && r.exact() && r.lo == *by.lo) continue;
                    out.push_back(CurvePoint::edge(CurvePoint::Kind::VerticalEdge, *bx.hi, squarefree_part(g), r));
                }
            }
            // Points on the top edge y = yhi with x in (xlo, xhi).
            UPoly g_hi, g_lo;
            if (by.hi) {
                g_hi = gcd(shift_const(a1, b1(*by.hi)), shift_const(a2, b2(*by.hi)));
                for (auto& r : roots_in(g_hi, XL, XH)) {
                    if (r.exact() && ((bx.lo && r.lo == *bx.lo) || (bx.hi && r.lo == *bx.hi))) continue;
                    out.push_back(
                        CurvePoint::edge(CurvePoint::Kind::HorizontalEdge, *by.hi, squarefree_part(g_hi), r));
                }
            }
            if (by.lo) g_lo = gcd(shift_const(a1, b1(*by.lo)), shift_const(a2, b2(*by.lo)));

            UPoly R_sf = squarefree_part(R);
            for (auto r : roots_in(R_sf, XL, XH)) {
                if (r.exact() && ((bx.lo && r.lo == *bx.lo) || (bx.hi && r.lo == *bx.hi))) continue;
                if (has_root_at(g_hi, r) || has_root_at(g_lo, r)) continue;
                if (r.exact()) {
                    UPoly g = gcd(shift_const(b1, a1(r.lo)), shift_const(b2, a2(r.lo)));
                    for (auto& yr : roots_in(g, YL, YH)) {
                        if (yr.exact() && ((by.lo && yr.lo == *by.lo) || (by.hi && yr.lo == *by.hi))) continue;
                        out.push_back(
                            CurvePoint::edge(CurvePoint::Kind::VerticalEdge, r.lo, squarefree_part(g), yr));
                    }
                    continue;
                }
                Rational wy = (r.hi - r.lo) / 4;
                bool settled = false;
                for (int it = 0; it < opt.budget && !settled; ++it) {
                    auto e1lo = solve_monotone(b1, a1(r.lo), YL, YH, wy);
                    auto e1hi = solve_monotone(b1, a1(r.hi), YL, YH, wy);
                    auto e2lo = solve_monotone(b2, a2(r.lo), YL, YH, wy);
                    auto e2hi = solve_monotone(b2, a2(r.hi), YL, YH, wy);
                    Interval X{r.lo, r.hi};
                    if (e1lo && e1hi && e2lo && e2hi) {
                        int slo = compare(*e1lo, *e2lo), shi = compare(*e1hi, *e2hi);
                        if (slo != 0 && shi != 0 && slo != shi) {
                            out.push_back(CurvePoint::interior(R_sf, r, a1, b1, YL, YH));
                            settled = true;
                            break;
                        }
                        if (disjoint(hull(*e1lo, *e1hi), hull(*e2lo, *e2hi))) {
                            settled = true;
                            break;
                        }
                    }
                    Interval Y1 = (e1lo && e1hi) ? hull(*e1lo, *e1hi) : Interval{YL, YH};
                    Interval Y2 = (e2lo && e2hi) ? hull(*e2lo, *e2hi) : Interval{YL, YH};
                    if (!cell_range(a1, b1, X, Y2).contains_zero() || !cell_range(a2, b2, X, Y1).contains_zero()) {
                        settled = true;
                        break;
                    }
                    refine_root(R_sf, r, (r.hi - r.lo) / 2);
                    if (r.exact()) {
                        // The bisection landed on the root itself; restart through the exact path.
                        UPoly g = gcd(shift_const(b1, a1(r.lo)), shift_const(b2, a2(r.lo)));
                        for (auto& yr : roots_in(g, YL, YH)) {
                            if (yr.exact() && ((by.lo && yr.lo == *by.lo) || (by.hi && yr.lo == *by.hi))) continue;
                            out.push_back(
                                CurvePoint::edge(CurvePoint::Kind::VerticalEdge, r.lo, squarefree_part(g), yr));
                        }
                        settled = true;
                        break;
                    }
                    wy /= 4;
                }
                if (!settled) fail(ErrorKind::DegeneratePosition, "tangential or near-tangential intersection");
            }
        }
    }
    if (opt.require_transversal && c1.p() >= 2 && c2.p() >= 2) {
        for (auto& pt : out) {
            bool ok = false;
            for (int it = 0; it < opt.budget && !ok; ++it) {
                Interval d = gradient_determinant(c1, c2, pt.x(), pt.y());
                if (!d.contains_zero()) {
                    ok = true;
                    break;
                }
                if (pt.exact_x() && pt.exact_y()) break;
                Rational w = std::max(pt.x().width(), pt.y().width()) / 2;
                pt.refine(w);
            }
            if (!ok) fail(ErrorKind::DegeneratePosition, "curves are tangent at a common point");
        }
    }
    return out;
}

namespace {

/// p(s * x + q) as a polynomial in x.
UPoly compose_affine(const UPoly& p, const Rational& s, const Rational& q) {
    UPoly acc;
    UPoly lin({q, s});
    for (int i = p.degree(); i >= 0; --i) acc = acc * lin + UPoly::constant(p.coeff(i));
    return acc;
}

template <class Emit>
void piecewise_roots(const std::vector<Rational>& breaks, const std::function<UPoly(const Rational&)>& piece,
                     Emit&& emit) {
    for (const auto& band : bands(breaks)) {
        UPoly h = piece(band.probe());
        if (h.is_zero()) fail(ErrorKind::DegeneratePosition, "line contained in curve");
        if (h.degree() < 1) continue;
        Rational B = cauchy_root_bound(h);
        Rational lo = band.lo ? *band.lo : Rational(-B);
        Rational hi = band.hi ? *band.hi : B;
        UPoly sf = squarefree_part(h);
        for (auto& r : roots_in(sf, lo, hi)) {
            if (band.lo && r.exact() && r.lo == *band.lo) continue;
            emit(sf, r);
        }
    }
}

}  // namespace

std::vector<CurvePoint> intersect_line(const AbsPowerCurve& curve, const Rational& a, const Rational& b,
                                       const Rational& c) {
    std::vector<CurvePoint> out;
    if (a == 0 && b == 0) fail(ErrorKind::InvalidParameter, "degenerate line");
    if (b == 0) {
        Rational x0 = -c / a;
        Rational ax = curve.x_part(x0);
        piecewise_roots(
            curve.y_breaks(), [&](const Rational& probe) { return shift_const(curve.y_poly(probe), ax); },
            [&](const UPoly& sf, const RootInterval& r) {
                out.push_back(CurvePoint::edge(CurvePoint::Kind::VerticalEdge, x0, sf, r));
            });
        return out;
    }
    Rational m = -a / b, q = -c / b;
    std::vector<Rational> breaks = curve.x_breaks();
    if (m != 0)
        for (const auto& yc : curve.y_breaks()) breaks.push_back((yc - q) / m);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    piecewise_roots(
        breaks,
        [&](const Rational& probe) {
            return curve.x_poly(probe) + compose_affine(curve.y_poly(m * probe + q), m, q);
        },
        [&](const UPoly& sf, const RootInterval& r) { out.push_back(CurvePoint::on_line(sf, r, m, q)); });
    return out;
}

}  // namespace lplab
