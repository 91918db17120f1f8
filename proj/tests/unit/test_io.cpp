#include <doctest.h>

#include <filesystem>
#include <functional>
#include <regex>

#include "lplab/errors.hpp"
#include "lplab/generators.hpp"
#include "lplab/io.hpp"

using namespace lplab;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("lplab_io_" + name)).string();
}

}  // namespace

TEST_CASE("rationals and point sets survive a JSON round trip") {
    for (const char* s : {"0", "-7", "3/4", "-123456789012345678901234567890/7"}) {
        Rational q = parse_rational(s);
        CHECK(rational_from_json(rational_to_json(q)) == q);
    }
    auto pts = random_rational(40, 11, Box{-5, 5, -5, 5}, 97);
    CHECK(points_from_json(Json::parse(points_to_json(pts).dump())) == pts);
    auto path = temp_path("points.json");
    write_points(path, row_construction(4));
    CHECK(read_points(path) == row_construction(4));
    std::filesystem::remove(path);
}

TEST_CASE("malformed point files are rejected") {
    auto bad = [](const char* text) {
        try {
            points_from_json(Json::parse(text));
        } catch (const Error& e) {
            return e.kind() == ErrorKind::InvalidInput;
        }
        return false;
    };
    CHECK(bad("{}"));
    CHECK(bad("[[\"1\",\"2\",\"3\"]]"));
    CHECK(bad("[[\"1\",\"0\",\"3\",\"1\"]]"));
    CHECK(bad("[[\"1/2\",\"1\",\"3\",\"1\"]]"));
    CHECK_THROWS_AS(read_points(temp_path("does_not_exist.json")), Error);
}

TEST_CASE("CSV import snaps decimals") {
    auto path = temp_path("points.csv");
    write_text(path, "x,y\n0.5,0.3333333\n# comment\n1,2.25\n");
    auto pts = read_points_csv(path, Integer(10));
    REQUIRE(pts.size() == 2);
    CHECK(pts[0] == Point{Rational(1, 2), Rational(1, 3)});
    CHECK(pts[1] == Point{Rational(1), Rational(9, 4)});
    std::filesystem::remove(path);
}

TEST_CASE("gap, census and config round trips") {
    Gap g{Rational(-1, 3), {Rational(1, 2), Rational(5)}, {4, 3}};
    Gap back = gap_from_json(Json::parse(gap_to_json(g).dump()));
    CHECK(back.base == g.base);
    CHECK(back.generators == g.generators);
    CHECK(back.sizes == g.sizes);

    auto c = distance_census(grid(4), PNorm::finite(3));
    auto cj = census_to_json(c);
    auto c2 = census_from_json(Json::parse(cj.dump()));
    CHECK(census_to_json(c2) == cj);
    CHECK(c2.histogram == c.histogram);

    ExperimentConfig cfg{"census", {{"metric", "p:3"}, {"threads", "2"}}, "in.json", "out.json", 42};
    CHECK(config_from_json(Json::parse(config_to_json(cfg).dump())) == cfg);
}

TEST_CASE("reports never carry binary floats") {
    std::function<void(const Json&)> no_floats = [&](const Json& j) {
        CHECK_FALSE(j.is_number_float());
        if (j.is_structured())
            for (const auto& e : j) no_floats(e);
    };
    no_floats(census_to_json(distance_census(grid(3), PNorm::infinity())));
    no_floats(bisector_to_json(build_bisector({0, 0}, {Rational(3), Rational(1)}, 3)));
    no_floats(structure_to_json(corollary_pipeline(grid(5))));
    for (std::uint64_t seed = 1;; ++seed) {
        auto g = build_multigraph(random_rational(10, seed, Box{0, 7, 0, 7}, 1), 3);
        try {
            no_floats(crossing_to_json(g, crossing_count(g), multiplicity_histogram(g)));
            break;
        } catch (const Error& e) {
            REQUIRE(e.kind() == ErrorKind::DegeneratePosition);
        }
    }
}

TEST_CASE("SVG output") {
    Scene s;
    auto pts = grid(3);
    s.points.assign(pts.begin(), pts.end());
    auto a = render_svg(s);
    CHECK(count_of(a, "<circle") == 9);
    CHECK(a == render_svg(s));

    auto cover = line_cover(pts);
    for (const auto& c : cover.lines) s.lines.push_back({cover.orientation, c});
    auto b = render_svg(s);
    CHECK(count_of(b, "<circle") == 9);
    CHECK(count_of(b, "<line") == 3);

    auto bis = build_bisector({0, 0}, {Rational(3), Rational(1)}, 3);
    s.polylines.push_back(sample_bisector(bis, -2, 5, 50));
    s.polylines.push_back(sample_arc(pts[4], pts[1], pts[3], 3, 20));
    auto c = render_svg(s);
    CHECK(count_of(c, "<polyline") == 2);
    CHECK(c == render_svg(s));
    // 12 significant digits at most
    std::regex long_number("[1-9][0-9]{12,}");
    CHECK_FALSE(std::regex_search(c, long_number));

    CHECK_THROWS_AS(render_svg(Scene{}), Error);
    CHECK_THROWS_AS(write_text("/nonexistent_dir/x.svg", a), Error);
}
