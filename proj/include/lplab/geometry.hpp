#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lplab/rational.hpp"

namespace lplab {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Lexicographic (x, then y).
bool lex_less(const Point& a, const Point& b);

struct PointHash {
    std::size_t operator()(const Point& p) const noexcept;
};

std::string to_string(const Point& p);

/// Ordered, duplicate-free, nonempty list of points.
class PointSet {
public:
    explicit PointSet(std::vector<Point> points);

    std::size_t size() const noexcept { return points_.size(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    std::span<const Point> points() const noexcept { return points_; }
    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::vector<Point> points_;
};

/// Metric selector: finite integer p >= 1 or the max norm.
class PNorm {
public:
    static PNorm finite(int p);
    static PNorm infinity() { return PNorm(0); }

    bool is_infinity() const noexcept { return p_ == 0; }
    /// Only meaningful when !is_infinity().
    int p() const noexcept { return p_; }

    /// "inf" or "p:3" (also accepts a bare integer).
    static PNorm parse(const std::string& text);
    std::string to_string() const;

    friend bool operator==(const PNorm&, const PNorm&) = default;

private:
    explicit PNorm(int p) : p_(p) {}
    int p_;
};

/// Exact surrogate for a distance: the p-th power for finite p, the distance
/// itself for the max norm. Equal keys <=> equal distances for a fixed metric.
struct DistanceKey {
    PNorm metric;
    Rational key;

    friend bool operator==(const DistanceKey&, const DistanceKey&) = default;
};

DistanceKey lp_distance_key(const Point& u, const Point& v, PNorm m);

/// Raw key value; avoids building the DistanceKey wrapper in hot loops.
Rational lp_key_value(const Point& u, const Point& v, PNorm m);

std::strong_ordering compare_distances(const Point& a0, const Point& a1, const Point& b0,
                                       const Point& b1, PNorm m);

/// (x, y) -> (x - y, x + y): rotation by pi/4 composed with scaling by sqrt 2.
/// Maps l1 distances onto identical l_inf distances.
Point l1_to_linf(const Point& p);
PointSet l1_to_linf_transform(const PointSet& points);

PointSet swap_coordinates(const PointSet& points);
PointSet translate(const PointSet& points, const Point& offset);

/// Rational bracket [lo, hi] with lo^p <= value <= hi^p and hi - lo <= width.
struct RootBracket {
    Rational lo;
    Rational hi;
};
RootBracket pth_root_bracket(const Rational& value, int p, const Rational& width);

enum class TriangleVerdict { Holds, Violated };

/// Self-test of d(u,w) <= d(u,v) + d(v,w). Exact for l1/l_inf and whenever v
/// lies on segment uw; otherwise refines root brackets until the sides separate.
TriangleVerdict triangle_inequality(const Point& u, const Point& v, const Point& w, PNorm m,
                                    int max_refinements = 200);

}  // namespace lplab
