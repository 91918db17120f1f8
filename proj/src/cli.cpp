#include "lplab/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "lplab/acceptance.hpp"
#include "lplab/errors.hpp"
#include "lplab/generators.hpp"
#include "lplab/io.hpp"

namespace lplab {

namespace {

struct UsageError {
    std::string message;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

Rational rational_arg(const std::string& text, const std::string& flag) {
    try {
        return parse_rational(text);
    } catch (const Error&) {
        throw UsageError{flag + ": not a rational number: " + text};
    }
}

Point point_arg(const std::string& text, const std::string& flag) {
    auto parts = split(text, ',');
    if (parts.size() != 2) throw UsageError{flag + ": expected x,y but got " + text};
    return {rational_arg(parts[0], flag), rational_arg(parts[1], flag)};
}

std::pair<Point, Point> pair_arg(const std::string& text, const std::string& flag) {
    auto parts = split(text, ';');
    if (parts.size() != 2) throw UsageError{flag + ": expected x1,y1;x2,y2 but got " + text};
    return {point_arg(parts[0], flag), point_arg(parts[1], flag)};
}

PNorm metric_arg(const std::string& text) {
    try {
        return PNorm::parse(text);
    } catch (const Error& e) {
        throw UsageError{"--metric: " + std::string(e.what())};
    }
}

std::vector<Rational> values_arg(const std::string& values, const std::string& in) {
    std::vector<Rational> out;
    if (!values.empty()) {
        for (const auto& s : split(values, ',')) out.push_back(rational_arg(s, "--values"));
        return out;
    }
    if (in.empty()) throw UsageError{"give --values or --in"};
    Json j = Json::parse(read_text(in), nullptr, false);
    if (j.is_discarded() || !j.is_array()) fail(ErrorKind::InvalidInput, in + " must hold a JSON array of rationals");
    for (const auto& e : j) out.push_back(rational_from_json(e));
    return out;
}

int default_threads() {
    if (const char* t = std::getenv("LPLAB_THREADS")) {
        int v = std::atoi(t);
        if (v >= 1) return v;
    }
    return 1;
}

struct Options {
    std::string in, out, svg, config;
    int threads = default_threads();
    // generate
    std::string kind, box = "-100,100,-100,100", translate;
    int k = 0, n = 0, denom = 1;
    std::uint64_t seed = 0;
    // census
    std::string metric;
    bool exact = false;
    // bisector
    std::string u, v, eval_x, intersect_with, precision;
    int p = 0, samples = 50;
    bool inflections = false;
    // structure
    std::string rho = "1/4", theta = "1/4", gamma = "1/4", beta = "1/4";
    // gap-fit, energy
    std::string values;
    int d = 2;
    std::int64_t budget = 0;
    // plot
    bool cover = false;
    int circles = 0;
    std::string bisector;
    // verify
    std::string suite = "all";
    std::size_t fault_drop = 0;
};

ExperimentConfig echo(const CLI::App* sub, const Options& o) {
    ExperimentConfig c;
    c.command = sub->get_name();
    c.input = o.in;
    c.output = o.out;
    c.seed = o.seed;
    for (const auto* opt : sub->get_options()) {
        if (opt->count() == 0 || opt->get_lnames().empty()) continue;
        const std::string& name = opt->get_lnames().front();
        if (name == "in" || name == "out" || name == "seed" || name == "help") continue;
        auto res = opt->results();
        std::string value;
        for (std::size_t i = 0; i < res.size(); ++i) value += (i ? "," : "") + res[i];
        c.parameters[name] = value.empty() ? "true" : value;
    }
    return c;
}

void emit(const Json& doc, const std::string& path, std::ostream& out) {
    std::string text = doc.dump(2) + "\n";
    if (path.empty()) out << text;
    else write_text(path, text);
}

Json report(const ExperimentConfig& c, Json payload, double seconds) {
    return Json{{"version", kVersion}, {"config", config_to_json(c)}, {"report", std::move(payload)}, {"timing_seconds", seconds}};
}

Scene point_scene(const PointSet& pts) {
    Scene s;
    s.points.assign(pts.begin(), pts.end());
    return s;
}

void add_arcs(Scene& s, const CircleGraph& g) {
    for (const auto& e : g.edges)
        s.polylines.push_back(
            sample_arc(g.vertices[g.circles[e.circle].center], g.vertices[e.from], g.vertices[e.to], g.p, 48));
}

void add_cover(Scene& s, const LineCover& c) {
    for (const auto& t : c.lines) s.lines.push_back({c.orientation, t});
}

std::pair<Rational, Rational> x_range(const std::vector<Point>& pts) {
    Rational lo = pts.front().x, hi = lo;
    for (const auto& w : pts) {
        lo = std::min(lo, w.x);
        hi = std::max(hi, w.x);
    }
    Rational pad = std::max(Rational(1), Rational((hi - lo) / 4));
    return {lo - pad, hi + pad};
}

Json cmd_bisector(const Options& o) {
    const Point u = point_arg(o.u, "--u"), v = point_arg(o.v, "--v");
    Bisector b = build_bisector(u, v, o.p);
    Json j = bisector_to_json(b);
    const Rational prec = o.precision.empty() ? default_precision(b) : rational_arg(o.precision, "--precision");
    if (prec <= 0) throw UsageError{"--precision must be positive"};
    if (!b.is_line()) {
        auto mono = monotonicity_probe(b, o.samples);
        j["monotonicity"] = Json{{"samples", o.samples},
                                 {"monotone", mono.monotone},
                                 {"orientation", mono.orientation == Orientation::Increasing ? "increasing" : "decreasing"}};
        Json w = Json::array();
        for (const auto& pt : rational_witnesses(b)) w.push_back(Json::array({rational_to_json(pt.x), rational_to_json(pt.y)}));
        j["witnesses"] = w;
    }
    if (!o.eval_x.empty()) {
        std::string x = o.eval_x.rfind("x=", 0) == 0 ? o.eval_x.substr(2) : o.eval_x;
        Rational xv = rational_arg(x, "--eval");
        Interval y = bisector_eval(b, xv, prec);
        j["eval"] = enclosure_to_json({{xv, xv}, y});
    }
    if (o.inflections) {
        auto r = inflection_points(b, prec);
        Json pts = Json::array();
        for (const auto& e : r.points) pts.push_back(enclosure_to_json(e));
        j["inflections"] = Json{{"count", r.count}, {"midpoint_included", r.midpoint_included}, {"enclosures", pts}};
    }
    if (!o.intersect_with.empty()) {
        auto [a, c] = pair_arg(o.intersect_with, "--intersect-with");
        Bisector other = build_bisector(a, c, o.p);
        Json pts = Json::array();
        for (const auto& e : bisector_intersections(b, other, prec)) pts.push_back(enclosure_to_json(e));
        j["intersections"] = Json{{"with", bisector_to_json(other)}, {"count", pts.size()}, {"enclosures", pts}};
    }
    if (!o.svg.empty()) {
        Scene s;
        s.points = {u, v};
        auto [lo, hi] = x_range(s.points);
        s.polylines.push_back(sample_bisector(b, lo, hi, 200));
        write_text(o.svg, render_svg(s));
    }
    return j;
}

Json cmd_plot(const Options& o) {
    if (o.out.empty()) throw UsageError{"plot needs --out"};
    PointSet pts = read_points(o.in);
    Scene s = point_scene(pts);
    if (o.cover) add_cover(s, line_cover(pts));
    if (o.circles) add_arcs(s, build_multigraph(pts, o.circles));
    if (!o.bisector.empty()) {
        auto [a, c] = pair_arg(o.bisector, "--bisector");
        auto [lo, hi] = x_range(s.points);
        s.polylines.push_back(sample_bisector(build_bisector(a, c, o.p ? o.p : 3), lo, hi, 200));
    }
    write_text(o.out, render_svg(s));
    return Json{{"points", s.points.size()}, {"lines", s.lines.size()}, {"polylines", s.polylines.size()}};
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    std::vector<int> ids;
    try {
        ids = suite_criteria(o.suite);
    } catch (const Error& e) {
        throw UsageError{std::string("--suite: ") + e.what()};
    }
    AcceptanceOptions opt;
    opt.threads = o.threads;
    opt.census_drop_pairs = o.fault_drop;
    const CriterionResult* failed = nullptr;
    std::vector<CriterionResult> results;
    results.reserve(ids.size());
    for (int id : ids) {
        results.push_back(run_criterion(id, opt));
        out << format_result(results.back()) << std::endl;
        if (!results.back().pass && !failed) failed = &results.back();
    }
    if (!failed) return 0;
    err << Json{{"error", "VerificationFailed"},
                {"criterion", failed->id},
                {"invariant", failed->invariant},
                {"message", failed->detail}}
               .dump()
        << "\n";
    return 1;
}

int dispatch(CLI::App& app, Options& o, std::ostream& out, std::ostream& err);

int run_parsed(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_config(const Options& o, std::ostream& out, std::ostream& err) {
    Json j = Json::parse(read_text(o.config), nullptr, false);
    if (j.is_discarded()) fail(ErrorKind::InvalidInput, o.config + " is not valid JSON");
    ExperimentConfig c;
    try {
        c = config_from_json(j);
    } catch (const Json::exception& e) {
        fail(ErrorKind::InvalidInput, "malformed config: " + std::string(e.what()));
    }
    std::vector<std::string> args{"lplab", c.command};
    for (const auto& [k, v] : c.parameters) {
        args.push_back("--" + k);
        if (v != "true") args.push_back(v);
    }
    if (!c.input.empty()) args.insert(args.end(), {"--in", c.input});
    if (!c.output.empty()) args.insert(args.end(), {"--out", c.output});
    if (c.command == "generate") args.insert(args.end(), {"--seed", std::to_string(c.seed)});
    return run_parsed(args, out, err);
}

int dispatch(CLI::App& app, Options& o, std::ostream& out, std::ostream& err) {
    auto subs = app.get_subcommands();
    CLI::App* sub = subs.front();
    const std::string cmd = sub->get_name();
    if (cmd == "run") return run_config(o, out, err);
    if (cmd == "verify") return cmd_verify(o, out, err);
    if (o.threads < 1) throw UsageError{"--threads must be at least 1"};
    const ExperimentConfig cfg = echo(sub, o);
    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };

    if (cmd == "generate") {
        PointSet pts = [&] {
            if (o.kind == "grid") {
                if (o.k < 1) throw UsageError{"grid needs --k >= 1"};
                return grid(o.k);
            }
            if (o.kind == "rows") {
                if (o.k < 1) throw UsageError{"rows needs --k >= 1"};
                return row_construction(o.k);
            }
            if (o.n < 1) throw UsageError{"random needs --n >= 1"};
            auto b = split(o.box, ',');
            if (b.size() != 4) throw UsageError{"--box: expected x_min,x_max,y_min,y_max"};
            Box box{rational_arg(b[0], "--box"), rational_arg(b[1], "--box"), rational_arg(b[2], "--box"),
                    rational_arg(b[3], "--box")};
            return random_rational(o.n, o.seed, box, o.denom);
        }();
        if (!o.translate.empty()) pts = translate(pts, point_arg(o.translate, "--translate"));
        if (o.out.empty()) out << points_to_json(pts).dump() << "\n";
        else write_points(o.out, pts);
        return 0;
    }

    Json payload;
    if (cmd == "census") {
        PNorm m = metric_arg(o.metric);
        PointSet pts = read_points(o.in);
        payload = census_to_json(o.exact ? distance_census_exact(pts, m) : distance_census(pts, m, {o.threads, 0}));
    } else if (cmd == "bisector") {
        payload = cmd_bisector(o);
    } else if (cmd == "circle-graph") {
        PointSet pts = read_points(o.in);
        auto g = build_multigraph(pts, o.p);
        auto r = crossing_count(g);
        payload = crossing_to_json(g, r, multiplicity_histogram(g));
        if (!o.svg.empty()) {
            Scene s = point_scene(pts);
            add_arcs(s, g);
            write_text(o.svg, render_svg(s));
        }
    } else if (cmd == "structure") {
        PointSet pts = read_points(o.in);
        StructureParams params{rational_arg(o.rho, "--rho"), rational_arg(o.theta, "--theta"),
                               rational_arg(o.gamma, "--gamma"), rational_arg(o.beta, "--beta")};
        auto rep = corollary_pipeline(pts, params);
        payload = structure_to_json(rep);
        if (!o.svg.empty()) {
            Scene s = point_scene(pts);
            add_cover(s, rep.cover);
            write_text(o.svg, render_svg(s));
        }
    } else if (cmd == "gap-fit") {
        auto vals = values_arg(o.values, o.in);
        std::int64_t budget = o.budget ? o.budget : 2 * static_cast<std::int64_t>(vals.size());
        auto g = gap_fit(vals, o.d, budget);
        payload = Json{{"d_max", o.d}, {"size_budget", budget}, {"found", g.has_value()}};
        payload["gap"] = g ? gap_to_json(*g) : Json(nullptr);
    } else if (cmd == "energy") {
        payload = energy_to_json(difference_energy(values_arg(o.values, o.in)));
    } else if (cmd == "plot") {
        payload = cmd_plot(o);
        emit(report(cfg, payload, elapsed()), "", out);
        return 0;
    }
    emit(report(cfg, std::move(payload), elapsed()), o.out, out);
    return 0;
}

void build(CLI::App& app, Options& o) {
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    auto threads = [&](CLI::App* s) {
        s->add_option("--threads", o.threads, "worker threads (default LPLAB_THREADS or 1)");
    };

    auto* gen = app.add_subcommand("generate", "write a point set");
    gen->add_option("--kind", o.kind, "grid, rows or random")->required()->check(CLI::IsMember({"grid", "rows", "random"}));
    gen->add_option("--k", o.k, "side of the grid or row count");
    gen->add_option("--n", o.n, "number of random points");
    gen->add_option("--seed", o.seed);
    gen->add_option("--denom", o.denom, "denominator bound for random points")->check(CLI::PositiveNumber);
    gen->add_option("--box", o.box, "x_min,x_max,y_min,y_max for random points");
    gen->add_option("--translate", o.translate, "dx,dy added to every point");
    gen->add_option("--out", o.out);

    auto* census = app.add_subcommand("census", "distance census");
    census->add_option("--metric", o.metric, "inf or p:N")->required();
    census->add_option("--in", o.in)->required();
    census->add_option("--out", o.out);
    census->add_flag("--exact", o.exact, "skip the integer fast path");
    threads(census);

    auto* bis = app.add_subcommand("bisector", "l_p bisector of two points");
    bis->add_option("--u", o.u)->required();
    bis->add_option("--v", o.v)->required();
    bis->add_option("--p", o.p)->required()->check(CLI::PositiveNumber);
    bis->add_option("--eval", o.eval_x, "x=VALUE");
    bis->add_flag("--inflections", o.inflections);
    bis->add_option("--intersect-with", o.intersect_with, "x1,y1;x2,y2");
    bis->add_option("--precision", o.precision);
    bis->add_option("--samples", o.samples, "monotonicity probe samples")->check(CLI::Range(2, 100000));
    bis->add_option("--svg", o.svg);
    bis->add_option("--out", o.out);

    auto* cg = app.add_subcommand("circle-graph", "circle multigraph and crossings");
    cg->add_option("--p", o.p)->required()->check(CLI::PositiveNumber);
    cg->add_option("--in", o.in)->required();
    cg->add_option("--out", o.out);
    cg->add_option("--svg", o.svg);

    auto* st = app.add_subcommand("structure", "l_inf structure pipeline");
    st->add_option("--in", o.in)->required();
    st->add_option("--rho", o.rho);
    st->add_option("--theta", o.theta);
    st->add_option("--gamma", o.gamma);
    st->add_option("--beta", o.beta);
    st->add_option("--out", o.out);
    st->add_option("--svg", o.svg);

    auto* gf = app.add_subcommand("gap-fit", "fit a generalized arithmetic progression");
    gf->add_option("--values", o.values, "comma separated rationals");
    gf->add_option("--in", o.in, "JSON array of rationals");
    gf->add_option("--d", o.d, "largest dimension")->check(CLI::Range(1, 3));
    gf->add_option("--budget", o.budget, "largest volume (default 2|A|)")->check(CLI::PositiveNumber);
    gf->add_option("--out", o.out);

    auto* en = app.add_subcommand("energy", "difference set energy");
    en->add_option("--values", o.values, "comma separated rationals");
    en->add_option("--in", o.in, "JSON array of rationals");
    en->add_option("--out", o.out);

    auto* plot = app.add_subcommand("plot", "SVG drawing of a point set");
    plot->add_option("--in", o.in)->required();
    plot->add_option("--out", o.out)->required();
    plot->add_flag("--cover", o.cover, "draw the line cover");
    plot->add_option("--circles", o.circles, "draw circle graph arcs for this p")->check(CLI::PositiveNumber);
    plot->add_option("--bisector", o.bisector, "x1,y1;x2,y2");
    plot->add_option("--p", o.p, "p for --bisector (default 3)")->check(CLI::PositiveNumber);

    auto* ver = app.add_subcommand("verify", "run the acceptance checks");
    ver->add_option("--suite", o.suite, "all, census, bisector, circles or structure");
    ver->add_option("--fault-census-drop", o.fault_drop)->group("");
    threads(ver);

    auto* run = app.add_subcommand("run", "run an experiment config file");
    run->add_option("--config", o.config)->required();
}

int run_parsed(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact distinct-distance experiments under l_p metrics", "lplab"};
    Options o;
    build(app, o);
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }
    try {
        return dispatch(app, o, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.message << "\n";
        return 2;
    } catch (const Error& e) {
        err << Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_parsed(args, out, err);
    } catch (const std::exception& e) {
        err << Json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
}

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args(argv, argv + argc);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace lplab
