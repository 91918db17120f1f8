#include "lplab/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "lplab/errors.hpp"

namespace lplab {

namespace {

Json point_json(const Point& w) { return Json::array({rational_to_json(w.x), rational_to_json(w.y)}); }

Integer integer_from_json(const Json& j) {
    if (j.is_string()) {
        Rational q = parse_rational(j.get<std::string>());
        if (q.get_den() != 1) fail(ErrorKind::InvalidInput, "expected an integer, got " + j.get<std::string>());
        return q.get_num();
    }
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    fail(ErrorKind::InvalidInput, "expected an integer string, got " + j.dump());
}

Json optional_rational(const std::optional<Rational>& q) { return q ? rational_to_json(*q) : Json(nullptr); }

const char* orientation_name(LineOrientation o) { return o == LineOrientation::Horizontal ? "horizontal" : "vertical"; }

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << (v == 0 ? 0.0 : v);
    return os.str();
}

}  // namespace

Json rational_to_json(const Rational& q) { return q.get_str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    fail(ErrorKind::InvalidInput, "expected an exact rational string, got " + j.dump());
}

Json points_to_json(const PointSet& points) {
    Json out = Json::array();
    for (const auto& w : points)
        out.push_back(Json::array({w.x.get_num().get_str(), w.x.get_den().get_str(), w.y.get_num().get_str(),
                                   w.y.get_den().get_str()}));
    return out;
}

PointSet points_from_json(const Json& j) {
    if (!j.is_array()) fail(ErrorKind::InvalidInput, "point file must hold a JSON array");
    std::vector<Point> pts;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 4)
            fail(ErrorKind::InvalidInput, "each point must be [num_x, den_x, num_y, den_y], got " + e.dump());
        Integer dx = integer_from_json(e[1]), dy = integer_from_json(e[3]);
        if (dx == 0 || dy == 0) fail(ErrorKind::InvalidInput, "zero denominator in " + e.dump());
        pts.push_back({make_rational(integer_from_json(e[0]), dx), make_rational(integer_from_json(e[2]), dy)});
    }
    return PointSet(std::move(pts));
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Io, "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::Io, "cannot write " + path);
    out << text;
    if (!out) fail(ErrorKind::Io, "write failed for " + path);
}

PointSet read_points(const std::string& path) {
    std::string text = read_text(path);
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorKind::InvalidInput, path + " is not valid JSON");
    return points_from_json(j);
}

void write_points(const std::string& path, const PointSet& points) { write_text(path, points_to_json(points).dump() + "\n"); }

PointSet read_points_csv(const std::string& path, const Integer& denom_bound) {
    if (denom_bound < 1) fail(ErrorKind::InvalidParameter, "denominator bound must be >= 1");
    std::istringstream in(read_text(path));
    std::string line;
    std::vector<Point> pts;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) fail(ErrorKind::InvalidInput, "CSV line without a comma: " + line);
        try {
            Rational x = limit_denominator(parse_rational(line.substr(0, comma)), denom_bound);
            Rational y = limit_denominator(parse_rational(line.substr(comma + 1)), denom_bound);
            pts.push_back({x, y});
        } catch (const Error&) {
            if (!first) throw;
        }
        first = false;
    }
    return PointSet(std::move(pts));
}

Json gap_to_json(const Gap& g) {
    Json gens = Json::array(), sizes = Json::array();
    for (const auto& b : g.generators) gens.push_back(rational_to_json(b));
    for (auto s : g.sizes) sizes.push_back(s);
    return Json{{"dimension", g.dimension()}, {"base", rational_to_json(g.base)}, {"generators", gens},
                {"sizes", sizes}, {"volume", g.volume().get_str()}};
}

Gap gap_from_json(const Json& j) {
    Gap g;
    g.base = rational_from_json(j.at("base"));
    for (const auto& b : j.at("generators")) g.generators.push_back(rational_from_json(b));
    for (const auto& s : j.at("sizes")) g.sizes.push_back(s.get<std::int64_t>());
    if (g.generators.size() != g.sizes.size()) fail(ErrorKind::InvalidInput, "generators and sizes differ in length");
    return g;
}

Json census_to_json(const DistanceCensus& c) {
    Json hist = Json::array(), per = Json::array();
    for (const auto& [k, m] : c.histogram) hist.push_back(Json::array({rational_to_json(k), m}));
    for (const auto& [i, d] : c.per_point) per.push_back(Json::array({i, d}));
    return Json{{"metric", c.metric.to_string()}, {"distinct_count", c.distinct_count}, {"t_max", c.t_max},
                {"histogram", hist}, {"per_point", per}};
}

DistanceCensus census_from_json(const Json& j) {
    DistanceCensus c;
    c.metric = PNorm::parse(j.at("metric").get<std::string>());
    c.distinct_count = j.at("distinct_count").get<std::size_t>();
    c.t_max = j.at("t_max").get<std::size_t>();
    for (const auto& e : j.at("histogram"))
        c.histogram.emplace_back(rational_from_json(e.at(0)), e.at(1).get<std::uint64_t>());
    for (const auto& e : j.at("per_point")) c.per_point.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    return c;
}

Json enclosure_to_json(const Enclosure& e) {
    return Json{{"x", Json::array({rational_to_json(e.x.lo), rational_to_json(e.x.hi)})},
                {"y", Json::array({rational_to_json(e.y.lo), rational_to_json(e.y.hi)})}};
}

Json bisector_to_json(const Bisector& b) {
    Json j{{"u", point_json(b.u())},
           {"v", point_json(b.v())},
           {"p", b.p()},
           {"kind", b.is_line() ? "line" : "curve"},
           {"midpoint", point_json(b.midpoint())}};
    if (b.is_line()) {
        const Line& l = b.line();
        j["line"] = Json{{"a", rational_to_json(l.a)}, {"b", rational_to_json(l.b)}, {"c", rational_to_json(l.c)}};
        return j;
    }
    j["orientation"] = b.orientation() == Orientation::Increasing ? "increasing" : "decreasing";
    j["regions_intersected"] = b.regions_intersected();
    j["unbounded_pieces"] = b.unbounded_pieces();
    Json pieces = Json::array();
    for (const auto& piece : b.pieces()) {
        const Region& r = piece.region;
        Json coeffs = Json::array();
        for (const auto& row : piece.poly.integer_coefficients()) {
            Json jr = Json::array();
            for (const auto& c : row) jr.push_back(c.get_str());
            coeffs.push_back(jr);
        }
        pieces.push_back(Json{{"region",
                               {{"col", r.col},
                                {"row", r.row},
                                {"x_lo", optional_rational(r.x_lo)},
                                {"x_hi", optional_rational(r.x_hi)},
                                {"y_lo", optional_rational(r.y_lo)},
                                {"y_hi", optional_rational(r.y_hi)}}},
                              {"signs", piece.signs},
                              {"bounded", piece.bounded},
                              {"coefficients", coeffs}});
    }
    j["pieces"] = pieces;
    return j;
}

Json crossing_to_json(const CircleGraph& g, const CrossingReport& r, const std::map<std::size_t, std::size_t>& hist) {
    Json h = Json::array();
    for (const auto& [m, c] : hist) h.push_back(Json::array({m, c}));
    return Json{{"p", g.p},
                {"n", r.n},
                {"circles", g.circles.size()},
                {"e", r.e},
                {"m", r.m},
                {"cr", r.cr},
                {"crossing_points", r.crossing_points},
                {"upper_bound", r.upper_bound},
                {"lemma_applicable", r.lemma_applicable},
                {"ratio", rational_to_json(r.ratio)},
                {"histogram", h}};
}

Json energy_to_json(const EnergyReport& e) {
    Json r = Json::array();
    for (const auto& [d, c] : e.r) r.push_back(Json::array({rational_to_json(d), c}));
    return Json{{"size", e.size}, {"energy", e.energy}, {"delta", rational_to_json(e.delta)}, {"r", r}};
}

Json frame_to_json(const Frame& f) {
    Json ext = Json::array(), ip = Json::array(), im = Json::array(), quads = Json::object();
    for (const auto& e : f.extreme) ext.push_back(point_json(e));
    for (const auto& v : f.i_plus) ip.push_back(rational_to_json(v));
    for (const auto& v : f.i_minus) im.push_back(rational_to_json(v));
    for (int r = 0; r < 9; ++r) quads["R" + std::to_string(r + 1)] = std::string(f.quadruples[r].begin(), f.quadruples[r].end());
    return Json{{"extreme", ext},
                {"i_plus", ip},
                {"i_minus", im},
                {"case", f.case_tag == FrameCase::Case1 ? "case1" : "case2"},
                {"symmetric", f.symmetric},
                {"quadruples", quads}};
}

Json cover_to_json(const LineCover& c) {
    Json lines = Json::array();
    for (std::size_t li = 0; li < c.lines.size(); ++li) {
        std::size_t count = 0;
        for (auto i : c.members[li]) count += c.assignment[i] == li;
        lines.push_back(Json{{"intercept", rational_to_json(c.lines[li])}, {"points", count}, {"rich", bool(c.rich[li])}});
    }
    return Json{{"orientation", orientation_name(c.orientation)},
                {"forced", c.forced},
                {"family_horizontal", c.family_horizontal},
                {"family_vertical", c.family_vertical},
                {"singleton_lines", c.singleton_lines},
                {"covered", c.covered()},
                {"discarded", c.discarded},
                {"lines", lines}};
}

Json structure_to_json(const StructureReport& r) {
    Json saved = Json::array(), per_line = Json::array(), parts = Json::array(), ledger = Json::array();
    for (const auto& g : r.saved.progressions) saved.push_back(gap_to_json(g));
    for (std::size_t li = 0; li < r.saved.per_line.size(); ++li) {
        const auto& lp = r.saved.per_line[li];
        if (!lp) continue;
        per_line.push_back(Json{{"line", rational_to_json(r.rich.lines[li])},
                                {"progression", lp->progression},
                                {"r", rational_to_json(lp->r)},
                                {"overlap", lp->overlap},
                                {"saved", lp->saved}});
    }
    for (const auto& part : r.partition.parts) {
        Json ints = Json::array();
        for (const auto& t : part.intercepts) ints.push_back(rational_to_json(t));
        parts.push_back(Json{{"rule", part.rule}, {"intercepts", ints}, {"points", part.points.size()}, {"gap", gap_to_json(part.gap)}});
    }
    for (const auto& e : r.ledger) ledger.push_back(Json{{"point", e.point}, {"stage", e.stage}});
    Json residual = Json::array();
    for (const auto& t : r.partition.residual_lines) residual.push_back(rational_to_json(t));
    return Json{{"thresholds",
                 {{"rho", rational_to_json(r.params.rho)},
                  {"theta", rational_to_json(r.params.theta)},
                  {"gamma", rational_to_json(r.params.gamma)},
                  {"beta", rational_to_json(r.params.beta)}}},
                {"frame", frame_to_json(r.frame)},
                {"cover", cover_to_json(r.cover)},
                {"rich", cover_to_json(r.rich)},
                {"progressions", saved},
                {"line_progressions", per_line},
                {"chosen_progression", r.chosen_progression},
                {"parts", parts},
                {"residual_lines", residual},
                {"ledger", ledger},
                {"survivors", r.survivors.size()},
                {"surviving_fraction", rational_to_json(r.surviving_fraction)}};
}

Json config_to_json(const ExperimentConfig& c) {
    Json params = Json::object();
    for (const auto& [k, v] : c.parameters) params[k] = v;
    return Json{{"command", c.command}, {"parameters", params}, {"input", c.input}, {"output", c.output}, {"seed", c.seed}};
}

ExperimentConfig config_from_json(const Json& j) {
    ExperimentConfig c;
    c.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.at("parameters").items()) c.parameters[k] = v.get<std::string>();
    c.input = j.value("input", "");
    c.output = j.value("output", "");
    c.seed = j.value("seed", std::uint64_t{0});
    return c;
}

std::string render_svg(const Scene& scene) {
    if (scene.points.empty() && scene.polylines.empty())
        fail(ErrorKind::InvalidInput, "nothing to draw");
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    auto grow = [&](double x, double y) {
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    };
    for (const auto& w : scene.points) grow(to_double(w.x), to_double(w.y));
    for (const auto& pl : scene.polylines)
        for (const auto& [x, y] : pl) grow(x, y);
    if (x1 - x0 <= 0) {
        x0 -= 0.5;
        x1 += 0.5;
    }
    if (y1 - y0 <= 0) {
        y0 -= 0.5;
        y1 += 0.5;
    }
    const double mx = 0.05 * (x1 - x0), my = 0.05 * (y1 - y0);
    x0 -= mx;
    x1 += mx;
    y0 -= my;
    y1 += my;
    const double w = x1 - x0, h = y1 - y0;
    const double dot = 0.006 * std::max(w, h), stroke = 0.002 * std::max(w, h);

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(x0) << ' ' << fmt(-y1) << ' ' << fmt(w) << ' '
       << fmt(h) << "\" width=\"800\" height=\"" << fmt(800 * h / w) << "\">\n";
    os << "<rect x=\"" << fmt(x0) << "\" y=\"" << fmt(-y1) << "\" width=\"" << fmt(w) << "\" height=\"" << fmt(h)
       << "\" fill=\"white\"/>\n";
    for (const auto& l : scene.lines) {
        double c = to_double(l.intercept);
        if (l.orientation == LineOrientation::Horizontal)
            os << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(-c) << "\" x2=\"" << fmt(x1) << "\" y2=\"" << fmt(-c);
        else
            os << "<line x1=\"" << fmt(c) << "\" y1=\"" << fmt(-y1) << "\" x2=\"" << fmt(c) << "\" y2=\"" << fmt(-y0);
        os << "\" stroke=\"#3366cc\" stroke-width=\"" << fmt(stroke) << "\"/>\n";
    }
    for (const auto& pl : scene.polylines) {
        os << "<polyline fill=\"none\" stroke=\"#cc3333\" stroke-width=\"" << fmt(stroke) << "\" points=\"";
        for (std::size_t i = 0; i < pl.size(); ++i) os << (i ? " " : "") << fmt(pl[i].first) << ',' << fmt(-pl[i].second);
        os << "\"/>\n";
    }
    for (const auto& p : scene.points)
        os << "<circle cx=\"" << fmt(to_double(p.x)) << "\" cy=\"" << fmt(-to_double(p.y)) << "\" r=\"" << fmt(dot)
           << "\" fill=\"black\"/>\n";
    os << "</svg>\n";
    return os.str();
}

std::vector<std::pair<double, double>> sample_bisector(const Bisector& b, const Rational& x_lo, const Rational& x_hi,
                                                       int samples) {
    std::vector<std::pair<double, double>> out;
    const Rational span = x_hi - x_lo;
    for (int i = 0; i <= samples; ++i) {
        Rational t = x_lo + span * Rational(i, samples);
        if (b.is_line()) {
            const Line& l = b.line();
            if (l.b == 0) {
                Rational y = b.midpoint().y - span / 2 + span * Rational(i, samples);
                out.emplace_back(to_double(-l.c / l.a), to_double(y));
            } else {
                out.emplace_back(to_double(t), to_double(Rational(-(l.a * t + l.c) / l.b)));
            }
            continue;
        }
        Interval y = bisector_eval(b, t, span / 1000000);
        out.emplace_back(to_double(t), to_double(Rational((y.lo + y.hi) / 2)));
    }
    return out;
}

std::vector<std::pair<double, double>> sample_arc(const Point& center, const Point& from, const Point& to, int p,
                                                  int samples) {
    const double cx = to_double(center.x), cy = to_double(center.y);
    const double fx = to_double(from.x) - cx, fy = to_double(from.y) - cy;
    const double tx = to_double(to.x) - cx, ty = to_double(to.y) - cy;
    const double r = std::pow(std::pow(std::fabs(fx), p) + std::pow(std::fabs(fy), p), 1.0 / p);
    double a = std::atan2(fy, fx), b = std::atan2(ty, tx);
    if (b <= a) b += 2 * M_PI;
    std::vector<std::pair<double, double>> out;
    for (int i = 0; i <= samples; ++i) {
        double t = a + (b - a) * i / samples;
        double c = std::cos(t), s = std::sin(t);
        double nrm = std::pow(std::pow(std::fabs(c), p) + std::pow(std::fabs(s), p), 1.0 / p);
        out.emplace_back(cx + r * c / nrm, cy + r * s / nrm);
    }
    return out;
}

}  // namespace lplab
