#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lplab/bisector.hpp"
#include "lplab/geometry.hpp"

namespace lplab {

struct DistanceCensus {
    PNorm metric = PNorm::infinity();
    std::size_t distinct_count = 0;
    /// (key, multiplicity), sorted by key.
    std::vector<std::pair<Rational, std::uint64_t>> histogram;
    /// (point index, D(u, P)) for every point, in input order.
    std::vector<std::pair<std::size_t, std::size_t>> per_point;
    std::size_t t_max = 0;
};

struct CensusOptions {
    int threads = 1;
    /// Test hook: silently skip this many pairs so invariant checks can be exercised.
    std::size_t drop_pairs = 0;
};

DistanceCensus distance_census(const PointSet& points, PNorm metric, const CensusOptions& opt = {});

/// Brute-force census over Rational keys without the integer fast path.
DistanceCensus distance_census_exact(const PointSet& points, PNorm metric);

struct PairClassification {
    std::uint64_t horizontal = 0;
    std::uint64_t vertical = 0;
    std::uint64_t both = 0;
    std::vector<std::uint64_t> horizontal_degree;
    std::vector<std::uint64_t> vertical_degree;
};

/// Under l_inf a pair is horizontal when |dx| >= |dy| and vertical when
/// |dy| >= |dx|; ties count as both.
PairClassification classify_pairs_linf(const PointSet& points);

/// Curve given by something other than an exact polynomial, e.g. parsed from a
/// file; membership cannot be decided.
struct OpaqueCurve {
    std::string description;
};

using ImplicitCurve = std::variant<Poly2, Bisector, OpaqueCurve>;

/// Number of pairs (p, curve) with p on the curve.
std::uint64_t incidences(const PointSet& points, const std::vector<ImplicitCurve>& curves);

}  // namespace lplab
