#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "gtz/atlas_io.hpp"
#include "oracles.hpp"

using namespace gtz;

namespace {

std::string atlas_text() {
    std::ifstream in(GTZ_TEST_ATLAS, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const FigureAtlas& atlas() {
    static const FigureAtlas a = load_atlas(GTZ_TEST_ATLAS);
    return a;
}

const Scale kCMajor{Tone{0}, ScaleKind::Major};

bool check_passes(const FigureAtlas& a, const std::string& name) {
    for (const auto& c : validate_atlas(a).checks)
        if (c.name == name) return c.pass;
    FAIL("no check named " << name);
    return false;
}

} // namespace

TEST_CASE("the bundled atlas validates") {
    auto rep = validate_atlas(atlas());
    for (const auto& c : rep.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.pass);
    }
    CHECK(rep.ok());
    CHECK(atlas().content_hash == "sha256:" + sha256_hex(atlas_text()));
}

TEST_CASE("a perturbed coordinate breaks the golden-shape condition") {
    auto j = nlohmann::json::parse(atlas_text());
    j["points"]["3"][0] = "1001/1000";
    auto bad = parse_atlas(j.dump());
    CHECK_FALSE(check_passes(bad, "condition2_canonical"));
    auto rep = check_condition2(bad.figure, bad.canonical_labeling, kCMajor);
    CHECK_FALSE(rep.condition2_pass);
    CHECK(std::any_of(rep.condition2.begin(), rep.condition2.end(),
                      [](const auto& kv) { return kv.second == ShapeClass::Other; }));
}

TEST_CASE("swapping D and A breaks the adjacency condition") {
    Labeling lab = atlas().canonical_labeling;
    std::swap(lab.degree_of[1], lab.degree_of[5]);
    auto r = check_condition1(atlas().figure, lab, kCMajor);
    CHECK_FALSE(r.pass);
    CHECK(r.witness.has_value());

    auto j = nlohmann::json::parse(atlas_text());
    j["canonical_labeling"]["D"] = 6;
    j["canonical_labeling"]["A"] = 2;
    CHECK_FALSE(check_passes(parse_atlas(j.dump()), "condition1_canonical"));
}

TEST_CASE("non-bijective labelings are rejected") {
    Labeling lab;
    lab.degree_of = {1, 1, 3, 4, 5, 6, 7};
    CHECK_FALSE(lab.is_bijective());
    CHECK_THROWS_AS(check_condition1(atlas().figure, lab, kCMajor), DomainError);
}

TEST_CASE("triangle arrangements: 7 adjacency labelings, 1 golden") {
    const auto& t = atlas().figure;
    auto labs = enumerate_labelings(t, kCMajor, SymmetryQuotient::Isometry);
    CHECK(labs.size() == 7);
    auto golden = filter_golden(t, kCMajor, labs);
    REQUIRE(golden.size() == 1);
    CHECK(golden[0] == atlas().canonical_labeling);
    CHECK(std::is_sorted(labs.begin(), labs.end()));

    auto raw = enumerate_labelings(t, kCMajor, SymmetryQuotient::None);
    CHECK(raw.size() == 14);
    CHECK(filter_golden(t, kCMajor, raw).size() == 2);
    CHECK(self_isometries(t).size() == 2);
}

TEST_CASE("enumeration ignores the order of the edge list") {
    std::mt19937 rng(5);
    auto base = enumerate_labelings(atlas().figure, kCMajor, SymmetryQuotient::Isometry);
    for (int i = 0; i < 10; ++i) {
        FigureTemplate t = atlas().figure;
        std::shuffle(t.edges.begin(), t.edges.end(), rng);
        for (auto& e : t.edges)
            if (rng() % 2) std::swap(e.first, e.second);
        CHECK(enumerate_labelings(t, kCMajor, SymmetryQuotient::Isometry) == base);
    }
}

TEST_CASE("mirror images of passing labelings also pass") {
    const auto& t = atlas().figure;
    auto syms = self_isometries(t);
    for (const auto& lab : enumerate_labelings(t, kCMajor, SymmetryQuotient::None)) {
        bool golden = check_condition2(t, lab, kCMajor).pass();
        for (const auto& perm : syms) {
            Labeling img;
            for (std::size_t k = 0; k < 7; ++k)
                img.degree_of[k] = perm[static_cast<std::size_t>(lab.degree_of[k] - 1)];
            CHECK(check_condition1(t, img, kCMajor).pass);
            CHECK(check_condition2(t, img, kCMajor).pass() == golden);
        }
    }
}

TEST_CASE("chord shapes of the canonical figure") {
    const auto& t = atlas().figure;
    const auto& lab = atlas().canonical_labeling;
    CHECK(chord_shape(t, lab, 1) == ShapeClass::GoldenTriangle);
    for (int d : {3, 4, 5, 6}) CHECK(chord_shape(t, lab, d) == ShapeClass::GoldenGnomon);
    // II and VII: the exact classifier and the float oracle agree on Other.
    for (int d : {2, 7}) {
        CHECK(chord_shape(t, lab, d) == ShapeClass::Other);
        auto p = [&](int k) { return t.point(lab.degree_of[static_cast<std::size_t>((d - 1 + k) % 7)]); };
        CHECK(gtz::testing::float_classify(p(0), p(2), p(4)) == ShapeClass::Other);
    }
    for (int d : kGoldenChordDegrees) CHECK(chord_shape(t, lab, d) != ShapeClass::Degenerate);
}

TEST_CASE("gnomon arrangements: 7 adjacency labelings, 1 golden, no extensions") {
    REQUIRE(atlas().gnomon.has_value());
    const auto& g = *atlas().gnomon;
    auto labs = enumerate_labelings(g, kCMajor, SymmetryQuotient::Isometry);
    CHECK(labs.size() == 7);
    auto golden = filter_golden(g, kCMajor, labs);
    REQUIRE(golden.size() == 1);
    auto ec = extension_compatibility(g, golden[0]);
    CHECK_FALSE(ec.horizontal);
    CHECK_FALSE(ec.vertical);
    auto canonical = extension_compatibility(atlas().figure, atlas().canonical_labeling);
    CHECK(canonical.horizontal);
    CHECK(canonical.vertical);
}

TEST_CASE("gluing candidates") {
    auto h = gluing_candidates(GlueDirection::Horizontal, atlas());
    REQUIRE(h.size() == 2);
    CHECK(render_scale(h[0].major) == "C-maj");
    CHECK(render_scale(h[1].major) == "G-maj");

    auto v = gluing_candidates(GlueDirection::Vertical, atlas());
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& c : v) got.insert({render_scale(c.major), render_scale(*c.relative_minor)});
    std::set<std::pair<std::string, std::string>> want = {
        {"C-maj", "A-min"}, {"G-maj", "E-min"}, {"F-maj", "D-min"},
        {"Bb-maj", "G-min"}, {"Eb-maj", "C-min"}, {"Ab-maj", "F-min"}};
    CHECK(got == want);

    // Stable when the root domain is widened.
    CHECK(scales_containing(atlas().v_glue.shared, ScaleKind::Major, -10, 10).size() == 6);
    CHECK(scales_containing(atlas().h_glue.shared, ScaleKind::Major, -10, 10).size() == 2);
}

TEST_CASE("atlas parsing errors") {
    CHECK_THROWS_AS(parse_atlas("{not json"), ParseError);
    auto j = nlohmann::json::parse(atlas_text());
    j.erase("h_glue");
    CHECK_THROWS_AS(parse_atlas(j.dump()), AtlasError);
    auto k = nlohmann::json::parse(atlas_text());
    k["points"]["1"] = {"1/0", "0/1", "0/1", "0/1"};
    CHECK_THROWS(parse_atlas(k.dump()));
    CHECK_THROWS_AS(load_atlas("/nonexistent/atlas.json"), AtlasError);
    CHECK(parse_atlas(atlas_text() + " ").content_hash != atlas().content_hash);
}

TEST_CASE("the atlas path can be overridden from the environment") {
    ::setenv(kAtlasEnvVar, "/tmp/somewhere.json", 1);
    CHECK(default_atlas_path() == std::filesystem::path("/tmp/somewhere.json"));
    ::unsetenv(kAtlasEnvVar);
    CHECK(std::filesystem::exists(default_atlas_path()));
}

TEST_CASE("point serialization round-trips") {
    std::mt19937 rng(9);
    for (int i = 0; i < 50; ++i) {
        auto p = gtz::testing::random_point(rng);
        CHECK(point_from_json(point_to_json(p)) == p);
    }
}
