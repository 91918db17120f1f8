#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lplab/curves.hpp"
#include "lplab/geometry.hpp"
#include "lplab/poly.hpp"

namespace lplab {

/// a x + b y + c = 0 with primitive integer coefficients, first nonzero of (a, b) positive.
struct Line {
    Rational a, b, c;

    static Line through(const Rational& a, const Rational& b, const Rational& c);
    bool contains(const Point& w) const { return a * w.x + b * w.y + c == 0; }
    friend bool operator==(const Line&, const Line&) = default;
};

/// One cell of the 3x3 partition by x = u_x, x = v_x, y = u_y, y = v_y.
/// Columns and rows own their upper boundary, so boundary points belong to
/// the lexicographically smallest adjacent cell.
struct Region {
    int col = 0, row = 0;
    std::optional<Rational> x_lo, x_hi, y_lo, y_hi;

    bool bounded() const { return x_lo && x_hi && y_lo && y_hi; }
    bool contains(const Point& w) const;
};

struct BisectorPiece {
    Region region;
    /// Signs resolving |x-u_x|, |x-v_x|, |y-u_y|, |y-v_y| on the region.
    std::array<int, 4> signs{};
    Poly2 poly;
    /// Whether the part of the curve inside this region is bounded.
    bool bounded = false;
};

enum class Orientation { Increasing, Decreasing };

class Bisector {
public:
    enum class Kind { Line, Curve };

    Kind kind() const noexcept { return kind_; }
    bool is_line() const noexcept { return kind_ == Kind::Line; }
    const Point& u() const noexcept { return u_; }
    const Point& v() const noexcept { return v_; }
    int p() const noexcept { return p_; }
    const Point& midpoint() const noexcept { return mid_; }
    const Line& line() const;
    /// Pieces of the curve in the regions it visits, ordered by increasing x.
    const std::vector<BisectorPiece>& pieces() const noexcept { return pieces_; }
    std::size_t regions_intersected() const noexcept { return pieces_.size(); }
    std::size_t unbounded_pieces() const;
    Orientation orientation() const noexcept { return orientation_; }

    /// |x-u_x|^p + |y-u_y|^p - |x-v_x|^p - |y-v_y|^p
    Rational eval(const Point& w) const;
    AbsPowerCurve curve() const;
    /// Region of the 3x3 partition holding w.
    Region region_of(const Point& w) const;
    /// l_inf length of uv; scale for default precisions.
    Rational diameter() const;

private:
    friend Bisector build_bisector(const Point&, const Point&, int);
    Kind kind_{Kind::Line};
    Point u_, v_, mid_;
    int p_{2};
    Line line_;
    std::vector<BisectorPiece> pieces_;
    std::vector<Rational> x_cuts_, y_cuts_;
    Orientation orientation_{Orientation::Increasing};
};

Bisector build_bisector(const Point& u, const Point& v, int p);

bool point_on_bisector(const Bisector& b, const Point& w);

/// Enclosure of the unique y with (x, y) on the bisector, width <= precision.
Interval bisector_eval(const Bisector& b, const Rational& x, const Rational& precision);
/// Enclosure of the unique x with (x, y) on the bisector, width <= precision.
Interval bisector_eval_x(const Bisector& b, const Rational& y, const Rational& precision);

struct MonotonicityReport {
    bool monotone = false;
    Orientation orientation = Orientation::Increasing;
    std::vector<Rational> xs;
    std::vector<Interval> ys;
    int refinements = 0;
};

MonotonicityReport monotonicity_probe(const Bisector& b, int samples);

/// Whether 2m - w lies on the bisector. Requires w on the bisector.
bool central_symmetry_check(const Bisector& b, const Point& w);
/// Enclosure form: {x} x y_enclosure brackets a bisector point by a sign
/// change of the defining function; the reflected segment must bracket one too.
bool central_symmetry_check(const Bisector& b, const Rational& x, const Interval& y_enclosure);

/// Rational points of the bisector that exist for every pair: the midpoint
/// and the two points where the coordinate differences to u and v swap.
std::vector<Point> rational_witnesses(const Bisector& b);

struct Enclosure {
    Interval x, y;
    bool contains(const Point& w) const { return x.contains(w.x) && y.contains(w.y); }
};

struct InflectionReport {
    std::vector<Enclosure> points;
    std::vector<Region> regions;
    std::size_t count = 0;
    bool midpoint_included = false;
};

/// Default precision: 2^-40 times the diameter of uv.
Rational default_precision(const Bisector& b);

InflectionReport inflection_points(const Bisector& b, const Rational& precision);

/// Enclosures of all common points, each box of width <= precision.
std::vector<Enclosure> bisector_intersections(const Bisector& b1, const Bisector& b2, const Rational& precision);

/// Zariski closures of the pieces for odd p, deduplicated.
std::vector<Poly2> containing_curves_odd(const Point& u, const Point& v, int p);

}  // namespace lplab
