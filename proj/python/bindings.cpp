#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lplab/cli.hpp"
#include "lplab/errors.hpp"
#include "lplab/generators.hpp"
#include "lplab/io.hpp"

namespace py = pybind11;
using namespace lplab;

namespace {

using RawPoint = std::pair<std::string, std::string>;

PointSet to_points(const std::vector<RawPoint>& raw) {
    std::vector<Point> pts;
    pts.reserve(raw.size());
    for (const auto& [x, y] : raw) pts.push_back({parse_rational(x), parse_rational(y)});
    return PointSet(std::move(pts));
}

std::vector<RawPoint> from_points(const PointSet& pts) {
    std::vector<RawPoint> out;
    for (const auto& w : pts) out.emplace_back(w.x.get_str(), w.y.get_str());
    return out;
}

std::vector<Rational> to_values(const std::vector<std::string>& raw) {
    std::vector<Rational> out;
    for (const auto& s : raw) out.push_back(parse_rational(s));
    return out;
}

}  // namespace

PYBIND11_MODULE(_lplab, m) {
    m.attr("__version__") = kVersion;

    static PyObject* error_type = py::exception<Error>(m, "LplabError").release().ptr();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object type = py::reinterpret_borrow<py::object>(error_type);
            py::object exc = type(std::string(to_string(e.kind())) + ": " + e.what());
            exc.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(error_type, exc.ptr());
        }
    });

    m.def("grid", [](int k) { return from_points(grid(k)); });
    m.def("row_construction", [](int k) { return from_points(row_construction(k)); });
    m.def("random_points", [](int n, std::uint64_t seed, const std::vector<std::string>& box, int denom) {
        if (box.size() != 4) fail(ErrorKind::InvalidParameter, "box needs four bounds");
        Box b{parse_rational(box[0]), parse_rational(box[1]), parse_rational(box[2]), parse_rational(box[3])};
        return from_points(random_rational(n, seed, b, denom));
    });
    m.def("l1_to_linf", [](const std::vector<RawPoint>& pts) { return from_points(l1_to_linf_transform(to_points(pts))); });

    m.def(
        "census",
        [](const std::vector<RawPoint>& pts, const std::string& metric, int threads) {
            auto set = to_points(pts);
            auto m = PNorm::parse(metric);
            py::gil_scoped_release release;
            return census_to_json(distance_census(set, m, {threads, 0})).dump();
        },
        py::arg("points"), py::arg("metric"), py::arg("threads") = 1);

    m.def("bisector", [](const RawPoint& u, const RawPoint& v, int p, bool inflections) {
        Point a{parse_rational(u.first), parse_rational(u.second)}, b{parse_rational(v.first), parse_rational(v.second)};
        Bisector bis = build_bisector(a, b, p);
        Json j = bisector_to_json(bis);
        if (!bis.is_line()) {
            j["monotone"] = monotonicity_probe(bis, 50).monotone;
            if (inflections) {
                Json e = Json::array();
                for (const auto& box : inflection_points(bis, default_precision(bis)).points) e.push_back(enclosure_to_json(box));
                j["inflections"] = e;
            }
        }
        return j.dump();
    });

    m.def("circle_graph", [](const std::vector<RawPoint>& pts, int p) {
        auto g = build_multigraph(to_points(pts), p);
        auto r = crossing_count(g);
        return crossing_to_json(g, r, multiplicity_histogram(g)).dump();
    });

    m.def("structure", [](const std::vector<RawPoint>& pts, const std::string& rho, const std::string& theta,
                          const std::string& gamma, const std::string& beta) {
        StructureParams params{parse_rational(rho), parse_rational(theta), parse_rational(gamma), parse_rational(beta)};
        return structure_to_json(corollary_pipeline(to_points(pts), params)).dump();
    });

    m.def("gap_fit", [](const std::vector<std::string>& values, int d, std::int64_t budget) -> std::string {
        auto g = gap_fit(to_values(values), d, budget);
        return g ? gap_to_json(*g).dump() : "null";
    });

    m.def("energy", [](const std::vector<std::string>& values) { return energy_to_json(difference_energy(to_values(values))).dump(); });

    m.def("render_svg", [](const std::vector<RawPoint>& pts, bool cover) {
        auto set = to_points(pts);
        Scene s;
        s.points.assign(set.begin(), set.end());
        if (cover) {
            auto c = line_cover(set);
            for (const auto& t : c.lines) s.lines.push_back({c.orientation, t});
        }
        return render_svg(s);
    });

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::vector<std::string> full{"lplab"};
        full.insert(full.end(), args.begin(), args.end());
        std::ostringstream out, err;
        int code;
        {
            py::gil_scoped_release release;
            code = run_cli(full, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
    });
}
