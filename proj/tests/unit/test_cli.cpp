#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "lplab/cli.hpp"
#include "lplab/io.hpp"

using namespace lplab;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "lplab");
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("lplab_cli_" + name)).string();
}

Json strip_timing(Json j) {
    j.erase("timing_seconds");
    return j;
}

}  // namespace

TEST_CASE("generate then census") {
    auto g = tmp("grid3.json");
    REQUIRE(cli({"generate", "--kind", "grid", "--k", "3", "--out", g}).code == 0);
    auto r = cli({"census", "--metric", "inf", "--in", g});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["report"]["distinct_count"] == 2);
    CHECK(j["version"] == kVersion);
    CHECK(j["config"]["command"] == "census");

    auto rows = tmp("rows.json");
    REQUIRE(cli({"generate", "--kind", "rows", "--k", "4", "--out", rows}).code == 0);
    CHECK(Json::parse(cli({"census", "--metric", "inf", "--in", rows, "--threads", "2"}).out)["report"]["distinct_count"] == 6);
}

TEST_CASE("exit codes") {
    auto g = tmp("grid3.json");
    REQUIRE(cli({"generate", "--kind", "grid", "--k", "3", "--out", g}).code == 0);
    CHECK(cli({"census", "--metric", "p:0", "--in", g}).code == 2);
    CHECK(cli({"nonsense"}).code == 2);
    CHECK(cli({"census", "--in", g}).code == 2);

    auto r = cli({"bisector", "--u", "0,0", "--v", "0,0", "--p", "3"});
    CHECK(r.code == 1);
    CHECK(Json::parse(r.err)["error"] == "DegenerateInput");

    auto missing = cli({"census", "--metric", "inf", "--in", tmp("missing.json")});
    CHECK(missing.code == 1);
    CHECK(Json::parse(missing.err)["error"] == "Io");

    auto bad = tmp("bad.json");
    write_text(bad, "{\"command\": \"census\"}");
    CHECK(cli({"run", "--config", bad}).code == 1);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("config replays the same report") {
    auto g = tmp("grid4.json");
    REQUIRE(cli({"generate", "--kind", "grid", "--k", "4", "--out", g}).code == 0);
    auto direct = cli({"census", "--metric", "p:3", "--in", g});
    REQUIRE(direct.code == 0);
    auto j = Json::parse(direct.out);
    auto cfg = tmp("cfg.json");
    write_text(cfg, j["config"].dump());
    auto replay = cli({"run", "--config", cfg});
    REQUIRE(replay.code == 0);
    CHECK(strip_timing(Json::parse(replay.out)) == strip_timing(j));
}

TEST_CASE("reports are deterministic") {
    auto pts = tmp("rand.json");
    REQUIRE(cli({"generate", "--kind", "random", "--n", "30", "--seed", "7", "--box", "0,10,0,10", "--denom", "3",
                 "--out", pts})
                .code == 0);
    for (std::vector<std::string> cmd : {std::vector<std::string>{"census", "--metric", "p:2", "--in", pts},
                                         {"structure", "--in", pts},
                                         {"bisector", "--u", "0,0", "--v", "3,1", "--p", "3", "--inflections"}}) {
        auto a = cli(cmd), b = cli(cmd);
        REQUIRE(a.code == 0);
        CHECK(strip_timing(Json::parse(a.out)) == strip_timing(Json::parse(b.out)));
    }
}

TEST_CASE("plot") {
    auto g = tmp("grid3.json");
    REQUIRE(cli({"generate", "--kind", "grid", "--k", "3", "--out", g}).code == 0);
    auto a = tmp("a.svg"), b = tmp("b.svg");
    REQUIRE(cli({"plot", "--in", g, "--out", a}).code == 0);
    REQUIRE(cli({"plot", "--in", g, "--out", b}).code == 0);
    auto sa = read_text(a);
    CHECK(sa == read_text(b));
    auto count = [](const std::string& s, const std::string& tag) {
        std::size_t n = 0;
        for (auto pos = s.find(tag); pos != std::string::npos; pos = s.find(tag, pos + 1)) ++n;
        return n;
    };
    CHECK(count(sa, "<circle") == 9);
    REQUIRE(cli({"plot", "--in", g, "--cover", "--out", a}).code == 0);
    CHECK(count(read_text(a), "<line") == 3);
    REQUIRE(cli({"plot", "--in", g, "--bisector", "0,0;3,1", "--p", "3", "--out", a}).code == 0);
    CHECK(count(read_text(a), "<polyline") == 1);
    CHECK(cli({"plot", "--in", g, "--out", "/nonexistent_dir/x.svg"}).code == 1);
}

TEST_CASE("verify names the broken invariant") {
    auto r = cli({"verify", "--suite", "census", "--fault-census-drop", "1"});
    CHECK(r.code == 1);
    CHECK(r.out.find("multiset-sum") != std::string::npos);
    CHECK(Json::parse(r.err)["invariant"] == "multiset-sum");
    CHECK(cli({"verify", "--suite", "nope"}).code == 2);
}
