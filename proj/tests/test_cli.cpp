#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "run_cli.hpp"
#include "xml_check.hpp"

using gtz::testing::run_cli;

namespace {

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

} // namespace

TEST_CASE("verify reproduces the enumeration counts") {
    auto r = run_cli("verify");
    CHECK(r.status == 0);
    CHECK(r.out.find("counts: 7, 1, 7, 1, 2, 6\n") != std::string::npos);
    CHECK(r.out.find("result: PASS") != std::string::npos);
    CHECK(first_line(r.out).starts_with("atlas_hash: sha256:"));
}

TEST_CASE("enumerate") {
    auto r = run_cli("enumerate --shape triangle --scale C-maj");
    CHECK(r.status == 0);
    CHECK(r.out.find("adjacency: 7  golden: 1") != std::string::npos);
    CHECK(r.out.find("labeling 7:") != std::string::npos);
    auto g = run_cli("enumerate --shape gnomon");
    CHECK(g.out.find("horizontal-ext no, vertical-ext no") != std::string::npos);
    auto none = run_cli("enumerate --quotient none");
    CHECK(none.out.find("adjacency: 14  golden: 2") != std::string::npos);
}

TEST_CASE("extensions") {
    auto r = run_cli("extensions");
    CHECK(r.status == 0);
    CHECK(r.out.find("horizontal (shared B,C,D,E): 2") != std::string::npos);
    CHECK(r.out.find("vertical (shared C,G): 6") != std::string::npos);
    CHECK(r.out.find("Eb Major / C Minor") != std::string::npos);
}

TEST_CASE("transform folds the word over the window") {
    auto r = run_cli("transform --start Cmaj --word RPL --window 10x6");
    CHECK(r.status == 0);
    CHECK(r.out.find("trajectory: C Major -> A Minor -> A Major -> C# Minor") != std::string::npos);
    CHECK(r.out.find("1 R A Minor vertices") != std::string::npos);
}

TEST_CASE("lattice export") {
    auto r = run_cli("lattice --window 2x1");
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["vertices"].size() == 10);
    CHECK(j["variant"]["horizontal"] == "fifth");
}

TEST_CASE("find") {
    CHECK(run_cli("find scale G-maj --window 10x6").status == 0);
    auto mode = run_cli("find mode C-lydian --window 10x6");
    CHECK(mode.status == 0);
    CHECK(mode.out.find("C Lydian path: C@") != std::string::npos);
    CHECK(run_cli("find toneset C-acoustic").out.find(": connected") != std::string::npos);
    auto missing = run_cli("find toneset C,F### --window 10x6");
    CHECK(missing.status == 1);
    CHECK(missing.out.find("error: NOT_FOUND\n") != std::string::npos);
}

TEST_CASE("render writes well-formed SVG") {
    auto r = run_cli("render --window 6x4 --highlight-scale G-maj --highlight-plr Cmaj:R");
    CHECK(r.status == 0);
    CHECK(gtz::testing::well_formed_xml(r.out));
    auto t = run_cli("render --template gnomon");
    CHECK(t.status == 0);
    CHECK(gtz::testing::well_formed_xml(t.out));
}

TEST_CASE("exit codes and error lines") {
    auto parse = run_cli("find triad Hmaj");
    CHECK(parse.status == 2);
    CHECK(parse.out.find("error: PARSE_ERROR\n") != std::string::npos);
    CHECK(parse.out.find("position 0") != std::string::npos);

    auto list = run_cli("find toneset C,E,Gx --window 3x3");
    CHECK(list.status == 2);
    CHECK(list.out.find("position 5") != std::string::npos);

    auto extent = run_cli("lattice --window 3y2");
    CHECK(extent.status == 2);
    CHECK(first_line(extent.out) == "error: PARSE_ERROR");

    auto usage = run_cli("");
    CHECK(usage.status == 2);
    CHECK(first_line(usage.out) == "error: USAGE");
    CHECK(run_cli("lattice --horizontal sideways").status == 2);

    auto notfound = run_cli("find mode C-lydian --window 1x1");
    CHECK(notfound.status == 1);
    CHECK(first_line(notfound.out.substr(notfound.out.find("error:"))) == "error: NOT_FOUND");

    auto conflict = run_cli("lattice --horizontal self --vertical relative --window 6x4");
    CHECK(conflict.status == 1);
    CHECK(first_line(conflict.out) == "error: LABEL_CONFLICT");

    auto atlas = run_cli("verify", "GOLDEN_TONNETZ_ATLAS=/nonexistent.json");
    CHECK(atlas.status == 1);
    CHECK(first_line(atlas.out) == "error: ATLAS_ERROR");
    CHECK(run_cli("verify --atlas " GTZ_TEST_ATLAS).status == 0);
}
