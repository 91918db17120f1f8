#pragma once

#include <optional>
#include <vector>

#include "lplab/poly.hpp"
#include "lplab/rational.hpp"

namespace lplab {

struct Interval {
    Rational lo;
    Rational hi;

    bool contains(const Rational& t) const { return lo <= t && t <= hi; }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    Rational width() const { return hi - lo; }
};

Interval hull(const Interval& a, const Interval& b);
bool disjoint(const Interval& a, const Interval& b);

/// weight * |t - center|^p
struct AbsTerm {
    Rational weight;
    Rational center;
};

/// Plane curve F(x, y) = sum_i w_i |x - a_i|^p + sum_j w'_j |y - b_j|^p + c = 0.
/// Both l_p circles and l_p bisectors have this separable form. Inside any
/// cell of the grid cut by the lines x = a_i and y = b_j the absolute values
/// resolve to fixed signs and F becomes a(x) + b(y) with polynomial a, b.
/// Callers guarantee a and b are strictly monotone on every cell.
class AbsPowerCurve {
public:
    AbsPowerCurve(int p, std::vector<AbsTerm> x_terms, std::vector<AbsTerm> y_terms, Rational constant);

    int p() const noexcept { return p_; }
    Rational operator()(const Rational& x, const Rational& y) const;
    Rational x_part(const Rational& x) const;
    Rational y_part(const Rational& y) const;

    std::vector<Rational> x_breaks() const;
    std::vector<Rational> y_breaks() const;

    /// Cell polynomials. `probe` is any point strictly inside the cell's x (or
    /// y) range; it fixes the signs of the absolute values. The constant is
    /// folded into the x polynomial.
    UPoly x_poly(const Rational& probe) const;
    UPoly y_poly(const Rational& probe) const;

    /// Exact enclosure of F over a closed box (sum of per-term exact ranges).
    Interval range_over(const Interval& xs, const Interval& ys) const;
    /// Enclosures of dF/dx over xs and dF/dy over ys.
    Interval dx_range(const Interval& xs) const;
    Interval dy_range(const Interval& ys) const;

    const std::vector<AbsTerm>& x_terms() const { return x_terms_; }
    const std::vector<AbsTerm>& y_terms() const { return y_terms_; }
    const Rational& constant() const { return constant_; }

private:
    int p_;
    std::vector<AbsTerm> x_terms_;
    std::vector<AbsTerm> y_terms_;
    Rational constant_;
};

/// Solves a(x) + b(y) = 0 for y in [y_lo, y_hi] with b monotone there.
/// Returns nullopt when no solution lies in the range; otherwise an
/// enclosure of width <= width (degenerate when hit exactly).
std::optional<Interval> solve_monotone(const UPoly& b, const Rational& offset, const Rational& y_lo,
                                       const Rational& y_hi, const Rational& width);

/// An intersection point of two curves, isolated exactly and refinable on demand.
class CurvePoint {
public:
    enum class Kind { Interior, VerticalEdge, HorizontalEdge, OnLine };

    /// Interior: x is the root of `root_poly` in `root`; y solves a(x) + b(y) = 0
    /// in [y_lo, y_hi].
    static CurvePoint interior(UPoly root_poly, RootInterval root, UPoly a, UPoly b, Rational y_lo,
                               Rational y_hi);
    /// VerticalEdge: x == fixed, y is the root. HorizontalEdge: y == fixed, x is the root.
    static CurvePoint edge(Kind kind, Rational fixed, UPoly root_poly, RootInterval root);
    /// OnLine: x is the root, y = slope * x + intercept.
    static CurvePoint on_line(UPoly root_poly, RootInterval root, Rational slope, Rational intercept);

    Kind kind() const noexcept { return kind_; }
    Interval x() const;
    Interval y() const;
    /// Halves enclosures until both widths are <= width.
    void refine(const Rational& width, int budget = 4000);
    std::optional<Rational> exact_x() const;
    std::optional<Rational> exact_y() const;

private:
    void update_interior_y(const Rational& width);

    Kind kind_{Kind::Interior};
    UPoly root_poly_;
    RootInterval root_;
    Rational fixed_;
    UPoly a_, b_;
    Rational y_lo_, y_hi_;
    Rational slope_, intercept_;
    Interval y_cache_;
};

struct IntersectOptions {
    int budget = 400;  ///< certification rounds per candidate root
    /// Certify that the curves cross transversally at every common point.
    bool require_transversal = true;
};

/// All common points of two curves, each reported exactly once. Throws
/// DegeneratePosition when a candidate can be neither certified nor excluded
/// (tangency) or when the curves share a component inside a cell.
std::vector<CurvePoint> intersect(const AbsPowerCurve& c1, const AbsPowerCurve& c2,
                                  const IntersectOptions& opt = {});

/// Enclosure of Fx*Gy - Fy*Gx over the box of an intersection point.
Interval gradient_determinant(const AbsPowerCurve& f, const AbsPowerCurve& g, const Interval& xs,
                              const Interval& ys);

/// Common points of a curve with the line a x + b y + c = 0.
std::vector<CurvePoint> intersect_line(const AbsPowerCurve& curve, const Rational& a, const Rational& b,
                                       const Rational& c);

}  // namespace lplab
