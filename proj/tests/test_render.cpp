#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <regex>

#include "gtz/atlas_io.hpp"
#include "gtz/render.hpp"
#include "xml_check.hpp"

using namespace gtz;

namespace {

const FigureAtlas& atlas() {
    static const FigureAtlas a = load_atlas(GTZ_TEST_ATLAS);
    return a;
}

const TonnetzWindow& window() {
    static const TonnetzWindow w = build_window(atlas(), LatticeVariant::golden(), 10, 6);
    return w;
}

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
    return n;
}

std::vector<std::string> labels(const std::string& svg) {
    std::vector<std::string> out;
    std::regex text_re("<text[^>]*>([^<]*)</text>");
    for (std::sregex_iterator it(svg.begin(), svg.end(), text_re), end; it != end; ++it)
        out.push_back((*it)[1]);
    return out;
}

} // namespace

TEST_CASE("template drawing") {
    auto svg = render_svg(atlas().figure, atlas().canonical_labeling, parse_scale("C-maj"));
    std::string why;
    CHECK_MESSAGE(gtz::testing::well_formed_xml(svg, &why), why);
    CHECK(count(svg, "<circle") == 7);
    CHECK(count(svg, "<line") == atlas().figure.edges.size());
    CHECK(labels(svg) == std::vector<std::string>{"C", "D", "E", "F", "G", "A", "B"});
    auto numbered = render_svg(atlas().figure, atlas().canonical_labeling, std::nullopt);
    CHECK(labels(numbered) == std::vector<std::string>{"1", "2", "3", "4", "5", "6", "7"});
    CHECK(svg.find("viewBox=") != std::string::npos);
}

TEST_CASE("window drawing labels every vertex with its spelled tone") {
    auto svg = render_svg(window(), {});
    std::string why;
    CHECK_MESSAGE(gtz::testing::well_formed_xml(svg, &why), why);
    auto got = labels(svg);
    REQUIRE(got.size() == window().vertices.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == render_tone(window().vertices[i].tone));
    CHECK(count(svg, "<line") == window().edges.size());
}

TEST_CASE("highlights are drawn in input order") {
    const auto& w = window();
    auto g = find_scale_figures(w, parse_scale("G-maj"));
    REQUIRE_FALSE(g.empty());
    auto occ = find_triad_occurrences(w, parse_triad("Cmaj"));
    auto path = mode_path(w, ScaleKind::Lydian, parse_tone("C"));
    REQUIRE(path.has_value());
    auto next = plr_realize(w, occ[0], PlrOp::R);
    auto st = scale_tones(parse_scale("C-ionian"));
    auto conn = tones_connected(w, {st.begin(), st.end()});
    std::vector<Highlight> hs = {Highlight::scale_figure(g[0]), Highlight::triad(occ[0]), Highlight::mode(*path),
                                 Highlight::tone_subgraph(conn), Highlight::plr_move(occ[0], next)};
    auto svg = render_svg(w, hs);
    std::string why;
    CHECK_MESSAGE(gtz::testing::well_formed_xml(svg, &why), why);
    std::size_t last = 0;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        auto at = svg.find("id=\"highlight-" + std::to_string(i) + "\"");
        REQUIRE(at != std::string::npos);
        CHECK(at > last);
        last = at;
    }
    CHECK(svg.find("class=\"scale-figure\"") != std::string::npos);
    CHECK(count(svg, "<polygon") == 4);  // outline, triad, two PLR triangles
    CHECK(svg.find("id=\"edges\"") < svg.find("id=\"highlight-0\""));
}

TEST_CASE("dangling highlight references fail before output") {
    Highlight bad = Highlight::scale_figure(window().figures.size());
    CHECK_THROWS_AS(render_svg(window(), {bad}), DomainError);
    Occurrence o;
    o.vertices = {0, 1, 99999};
    CHECK_THROWS_AS(render_svg(window(), {Highlight::triad(o)}), DomainError);
    CHECK_THROWS_AS(render_svg(window(), {Highlight::mode({0, window().vertices.size() - 1})}), DomainError);
}

TEST_CASE("output is deterministic and honours precision") {
    auto a = render_svg(window(), {Highlight::scale_figure(3)});
    auto b = render_svg(window(), {Highlight::scale_figure(3)});
    CHECK(a == b);
    RenderOptions opts;
    opts.precision = 2;
    auto c = render_svg(window(), {}, opts);
    CHECK(std::regex_search(c, std::regex("x1=\"-?[0-9]+\\.[0-9]{2}\"")));
    CHECK_FALSE(std::regex_search(c, std::regex("x1=\"-?[0-9]+\\.[0-9]{3}")));
    CHECK(c.find("\"-0.00\"") == std::string::npos);
    CHECK(a.find("\"-0.000000\"") == std::string::npos);
}

TEST_CASE("unicode labels on request") {
    RenderOptions opts;
    opts.unicode = true;
    auto svg = render_svg(window(), {}, opts);
    CHECK(svg.find("E\xE2\x99\xAD") != std::string::npos);
    CHECK(render_svg(window(), {}).find("\xE2\x99\xAD") == std::string::npos);
}
