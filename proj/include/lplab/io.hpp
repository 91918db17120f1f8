#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lplab/bisector.hpp"
#include "lplab/census.hpp"
#include "lplab/circle_graph.hpp"
#include "lplab/geometry.hpp"
#include "lplab/structure.hpp"

namespace lplab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

/// Exact rationals are written as "num/den" (or "num" for integers).
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// Array of [num_x, den_x, num_y, den_y] quadruples of base-10 strings.
Json points_to_json(const PointSet& points);
PointSet points_from_json(const Json& j);

PointSet read_points(const std::string& path);
void write_points(const std::string& path, const PointSet& points);
/// "x,y" decimal lines; each value snapped to the closest fraction with
/// denominator <= denom_bound. Lines starting with '#' and a non-numeric
/// header line are skipped.
PointSet read_points_csv(const std::string& path, const Integer& denom_bound);

std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

Json gap_to_json(const Gap& g);
Gap gap_from_json(const Json& j);

Json census_to_json(const DistanceCensus& c);
DistanceCensus census_from_json(const Json& j);

Json enclosure_to_json(const Enclosure& e);
Json bisector_to_json(const Bisector& b);
Json crossing_to_json(const CircleGraph& g, const CrossingReport& r, const std::map<std::size_t, std::size_t>& hist);
Json energy_to_json(const EnergyReport& e);
Json frame_to_json(const Frame& f);
Json cover_to_json(const LineCover& c);
Json structure_to_json(const StructureReport& r);

struct ExperimentConfig {
    std::string command;
    std::map<std::string, std::string> parameters;
    std::string input, output;
    std::uint64_t seed = 0;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

Json config_to_json(const ExperimentConfig& c);
ExperimentConfig config_from_json(const Json& j);

struct SvgLine {
    LineOrientation orientation;
    Rational intercept;
};

/// Display-only scene; coordinates become doubles only here.
struct Scene {
    std::vector<Point> points;
    std::vector<SvgLine> lines;
    std::vector<std::vector<std::pair<double, double>>> polylines;
};

std::string render_svg(const Scene& scene);

/// Samples a bisector on [x_lo, x_hi] for plotting.
std::vector<std::pair<double, double>> sample_bisector(const Bisector& b, const Rational& x_lo, const Rational& x_hi,
                                                       int samples);
/// Samples the ccw arc of an l_p circle between two of its points.
std::vector<std::pair<double, double>> sample_arc(const Point& center, const Point& from, const Point& to, int p,
                                                  int samples);

}  // namespace lplab
