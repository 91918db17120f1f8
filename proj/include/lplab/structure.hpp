#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lplab/geometry.hpp"

namespace lplab {

enum class LineOrientation { Horizontal, Vertical };
enum class FrameCase { Case1, Case2 };

/// Extreme-point frame of a point set under the max norm. When the symmetric
/// variant applies the frame is built on the swapped set (x, y) -> (y, x);
/// the I-values and rectangles then refer to swapped coordinates while the
/// extreme points and quadruples are reported in the original ones.
struct Frame {
    std::array<Point, 4> extreme;
    std::array<Rational, 4> i_plus, i_minus;
    FrameCase case_tag = FrameCase::Case1;
    bool symmetric = false;
    /// Per rectangle R1..R9, 'V' or 'H' for each extreme point.
    std::array<std::array<char, 4>, 9> quadruples{};

    /// 1..9. Points on shared boundaries go to the first rectangle listed.
    int rectangle_of(const Point& w) const;
    /// Orientation all lines through R5 share, when there is only one.
    std::optional<LineOrientation> forced_orientation() const;
    /// Distinct extreme points.
    std::vector<Point> extreme_set() const;
};

Frame extreme_frame(const PointSet& points);

struct LineCover {
    LineOrientation orientation = LineOrientation::Horizontal;
    /// Intercepts in increasing order: y for horizontal lines, x for vertical ones.
    std::vector<Rational> lines;
    /// Point indices per line, sorted by the coordinate along the line.
    std::vector<std::vector<std::size_t>> members;
    /// Line index per point, or nothing once the point is discarded.
    std::vector<std::optional<std::size_t>> assignment;
    std::vector<bool> rich;
    std::vector<std::size_t> discarded;
    /// Extreme points that were not on any square side and got their own line.
    std::size_t singleton_lines = 0;
    std::size_t family_horizontal = 0, family_vertical = 0;
    bool forced = false;

    std::size_t covered() const;
    const Rational& along(const Point& w) const {
        return orientation == LineOrientation::Horizontal ? w.x : w.y;
    }
    const Rational& across(const Point& w) const {
        return orientation == LineOrientation::Horizontal ? w.y : w.x;
    }
};

LineCover line_cover(const PointSet& points);

/// Keeps lines holding at least rho * sqrt(n) points, n the covered count.
LineCover rich_lines(const LineCover& cover, const Rational& rho);

std::vector<Rational> difference_set(const std::vector<Rational>& values);

struct EnergyReport {
    std::size_t size = 0;
    std::map<Rational, std::uint64_t> r;
    std::uint64_t energy = 0;
    Rational delta;
};

EnergyReport difference_energy(const std::vector<Rational>& values);

/// {base + sum k_j generators[j] : 0 <= k_j < sizes[j]}
struct Gap {
    Rational base;
    std::vector<Rational> generators;
    std::vector<std::int64_t> sizes;

    std::size_t dimension() const { return generators.size(); }
    /// Product of the sizes; an upper bound on the element count.
    Integer volume() const;
    bool contains(const Rational& t) const;
    std::vector<Rational> elements() const;
};

/// A progression of dimension <= d_max and volume <= size_budget holding every
/// value, or nothing when the search finds none.
std::optional<Gap> gap_fit(const std::vector<Rational>& values, int d_max, std::int64_t size_budget);

struct Translation {
    Rational r;
    std::size_t overlap = 0;
};

/// Maximizes |(r + elements(A)) ∩ C|, smallest r on ties.
Translation best_translation(const Gap& a, const std::vector<Rational>& c);

struct LineProgression {
    std::size_t progression = 0;
    Rational r;
    std::size_t overlap = 0;
    bool saved = false;
};

struct SavedProgressions {
    std::vector<Gap> progressions;
    /// Line index of each saved progression.
    std::vector<std::size_t> saved_lines;
    /// One entry per line of the cover; nothing for lines without points.
    std::vector<std::optional<LineProgression>> per_line;
};

/// Volume allowed for a line's progression, as a multiple of its point count.
inline constexpr std::int64_t kGapSizeFactor = 4;

SavedProgressions saved_line_progressions(const LineCover& cover, const PointSet& points, const Rational& theta);

struct PartitionPart {
    std::vector<Rational> intercepts;
    std::vector<std::size_t> points;
    Gap gap;
    /// "popular-point" or "popularity-component"
    std::string rule;
};

struct InterceptPartition {
    std::vector<PartitionPart> parts;
    std::vector<Rational> residual_lines;
    std::vector<std::size_t> residual_points;
};

InterceptPartition intercept_partition(const PointSet& points, const LineCover& cover, const Rational& gamma,
                                       const Rational& beta, const Rational& theta);

struct StructureParams {
    Rational rho{1, 4}, theta{1, 4}, gamma{1, 4}, beta{1, 4};
};

struct LedgerEntry {
    std::size_t point = 0;
    std::string stage;
};

struct StructureReport {
    StructureParams params;
    Frame frame;
    LineCover cover;
    LineCover rich;
    SavedProgressions saved;
    std::size_t chosen_progression = 0;
    InterceptPartition partition;
    std::vector<LedgerEntry> ledger;
    std::vector<std::size_t> survivors;
    Rational surviving_fraction;
};

StructureReport corollary_pipeline(const PointSet& points, const StructureParams& params = {});

}  // namespace lplab
