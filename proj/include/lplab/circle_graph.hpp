#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lplab/curves.hpp"
#include "lplab/geometry.hpp"

namespace lplab {

struct Circle {
    std::size_t center = 0;  ///< index of the center in the point set
    Rational radius_key;     ///< p-th power of the radius
    /// Incident point indices; counterclockwise from the positive x direction
    /// once the multigraph is built.
    std::vector<std::size_t> incident;
};

/// Edge between cyclically consecutive points of one circle. The arc runs
/// counterclockwise from `from` to `to`.
struct CircleEdge {
    std::size_t from = 0, to = 0;
    std::size_t circle = 0;
};

struct CircleGraph {
    PointSet vertices;
    int p = 2;
    std::vector<Circle> circles;
    std::vector<CircleEdge> edges;
    /// Keyed by (min index, max index).
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> multiplicity;

    std::size_t max_multiplicity() const;
    AbsPowerCurve curve(std::size_t circle) const;
};

struct CrossingReport {
    std::uint64_t cr = 0;               ///< unordered edge pairs whose arc interiors cross
    std::uint64_t crossing_points = 0;  ///< non-vertex intersection points of retained circles
    std::uint64_t upper_bound = 0;      ///< 2 * C(|circles|, 2)
    std::uint64_t e = 0, n = 0, m = 0;
    bool lemma_applicable = false;  ///< e > 5 m n
    Rational ratio;                 ///< e^3 / (m n^2 max(cr, 1))
};

/// Circles centred at points of P through at least three points of P.
std::vector<Circle> build_circles(const PointSet& points, int p);

CircleGraph build_multigraph(const PointSet& points, int p);

/// Counterclockwise order of directions about the origin, starting at the
/// positive x axis; exact.
bool angle_less(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by);

CrossingReport crossing_count(const CircleGraph& g, const IntersectOptions& opt = {});

/// multiplicity -> number of vertex pairs. Verifies each multiplicity is at
/// most the number of points on the bisector of the pair.
std::map<std::size_t, std::size_t> multiplicity_histogram(const CircleGraph& g);

}  // namespace lplab
