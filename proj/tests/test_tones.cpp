#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gtz/tones.hpp"

using namespace gtz;

namespace {

std::vector<std::string> names(const std::array<Tone, 7>& ts) {
    std::vector<std::string> out;
    for (const auto& t : ts) out.push_back(render_tone(t));
    return out;
}

std::set<Tone> as_set(const std::array<Tone, 3>& ts) { return {ts.begin(), ts.end()}; }

int parse_error_position(const std::string& text) {
    try {
        parse_tone(text);
    } catch (const ParseError& e) {
        return static_cast<int>(e.position());
    }
    return -1;
}

} // namespace

TEST_CASE("note names map onto the line of fifths") {
    CHECK(parse_tone("C").fifth_index == 0);
    CHECK(parse_tone("Eb").fifth_index == -3);
    CHECK(parse_tone("F#").fifth_index == 6);
    CHECK(parse_tone("Bbb").fifth_index == -9);
    CHECK(parse_tone("E\xE2\x99\xAD").fifth_index == -3);
    CHECK(parse_tone("F\xE2\x99\xAF\xE2\x99\xAF").fifth_index == 13);
    CHECK(render_tone(Tone{-3}) == "Eb");
    CHECK(render_tone(Tone{-3}, true) == "E\xE2\x99\xAD");
    CHECK(parse_tone("Eb") != parse_tone("D#"));
}

TEST_CASE("render then parse is the identity") {
    for (int k = -20; k <= 20; ++k) {
        CHECK(parse_tone(render_tone(Tone{k})).fifth_index == k);
        CHECK(parse_tone(render_tone(Tone{k}, true)).fifth_index == k);
        CHECK(Tone{k}.semitone_class() == ((7 * k) % 12 + 12) % 12);
    }
}

TEST_CASE("malformed note names report the offending position") {
    CHECK(parse_error_position("H") == 0);
    CHECK(parse_error_position("") == 0);
    CHECK(parse_error_position("C#b") == 2);
    CHECK(parse_error_position("Cx") == 1);
    CHECK(parse_error_position("c") == 0);
}

TEST_CASE("scale degree lists") {
    CHECK(names(scale_tones({Tone{0}, ScaleKind::Major})) ==
          std::vector<std::string>{"C", "D", "E", "F", "G", "A", "B"});
    CHECK(names(scale_tones(parse_scale("Eb-min"))) ==
          std::vector<std::string>{"Eb", "F", "Gb", "Ab", "Bb", "Cb", "Db"});
    CHECK(names(scale_tones(parse_scale("C-lydian"))) ==
          std::vector<std::string>{"C", "D", "E", "F#", "G", "A", "B"});
    CHECK(names(scale_tones(parse_scale("C-acoustic"))) ==
          std::vector<std::string>{"C", "D", "E", "F#", "G", "A", "Bb"});
    CHECK(names(scale_tones(parse_scale("C-altered"))) ==
          std::vector<std::string>{"C", "Db", "Eb", "Fb", "Gb", "Ab", "Bb"});
}

TEST_CASE("every scale has seven distinct tones and pitch classes") {
    const ScaleKind kinds[] = {ScaleKind::Major,   ScaleKind::NaturalMinor, ScaleKind::Lydian,
                               ScaleKind::Ionian,  ScaleKind::Mixolydian,   ScaleKind::Dorian,
                               ScaleKind::Aeolian, ScaleKind::Phrygian,     ScaleKind::Locrian,
                               ScaleKind::Acoustic, ScaleKind::Altered};
    for (auto k : kinds)
        for (int r = -10; r <= 10; ++r) {
            Scale s{Tone{r}, k};
            auto ts = scale_tones(s);
            std::set<Tone> tones(ts.begin(), ts.end());
            std::set<int> pcs;
            for (const auto& t : ts) pcs.insert(t.semitone_class());
            CHECK(tones.size() == 7);
            CHECK(pcs.size() == 7);
            CHECK(ts[0] == s.root);
            CHECK(parse_scale(render_scale(s)) == s);
        }
}

TEST_CASE("Ionian and Aeolian coincide with major and natural minor") {
    for (int r = -7; r <= 7; ++r) {
        CHECK(scale_tones({Tone{r}, ScaleKind::Ionian}) == scale_tones({Tone{r}, ScaleKind::Major}));
        CHECK(scale_tones({Tone{r}, ScaleKind::Aeolian}) == scale_tones({Tone{r}, ScaleKind::NaturalMinor}));
    }
}

TEST_CASE("triads") {
    CHECK(triad_tones(parse_triad("Cmaj")) == std::array<Tone, 3>{Tone{0}, Tone{4}, Tone{1}});
    CHECK(triad_tones(parse_triad("Amin")) == std::array<Tone, 3>{Tone{3}, Tone{0}, Tone{4}});
    CHECK(render_triad(parse_triad("Ebmin")) == "Ebmin");
    CHECK(describe_triad(parse_triad("F#maj")) == "F# Major");
    CHECK_THROWS_AS(parse_triad("Cdim"), ParseError);
}

TEST_CASE("diatonic chord qualities") {
    auto major = diatonic_triads({Tone{0}, ScaleKind::Major});
    const ChordQuality expect_major[] = {ChordQuality::Major, ChordQuality::Minor, ChordQuality::Minor,
                                         ChordQuality::Major, ChordQuality::Major, ChordQuality::Minor,
                                         ChordQuality::Diminished};
    for (int i = 0; i < 7; ++i) CHECK(major[static_cast<std::size_t>(i)].quality == expect_major[i]);
    CHECK(as_set(major[6].tones) == std::set<Tone>{parse_tone("B"), parse_tone("D"), parse_tone("F")});

    auto minor = diatonic_triads({Tone{0}, ScaleKind::NaturalMinor});
    CHECK(minor[0].quality == ChordQuality::Minor);
    CHECK(minor[1].quality == ChordQuality::Diminished);
    CHECK(minor[2].quality == ChordQuality::Major);
    CHECK_THROWS_AS(diatonic_triads({Tone{0}, ScaleKind::Lydian}), DomainError);
    CHECK(roman_numeral(6) == "VI");
}

TEST_CASE("P, L and R on the textbook examples") {
    Triad c = parse_triad("Cmaj");
    auto tones = [](const Triad& t) { return as_set(triad_tones(t)); };
    CHECK(tones(plr_apply(c, PlrOp::R)) == as_set({parse_tone("C"), parse_tone("E"), parse_tone("A")}));
    CHECK(tones(plr_apply(c, PlrOp::P)) == as_set({parse_tone("C"), parse_tone("Eb"), parse_tone("G")}));
    CHECK(tones(plr_apply(c, PlrOp::L)) == as_set({parse_tone("B"), parse_tone("E"), parse_tone("G")}));
    CHECK(tones(plr_apply(parse_triad("Emin"), PlrOp::L)) ==
          as_set({parse_tone("E"), parse_tone("G"), parse_tone("C")}));
}

TEST_CASE("P, L and R are involutions keeping two common tones") {
    for (int r = -5; r <= 6; ++r)
        for (auto q : {TriadQuality::Major, TriadQuality::Minor})
            for (auto op : {PlrOp::P, PlrOp::L, PlrOp::R}) {
                Triad t{Tone{r}, q};
                Triad u = plr_apply(t, op);
                CHECK(plr_apply(u, op) == t);
                CHECK(u.quality != t.quality);
                auto a = as_set(triad_tones(t));
                auto b = as_set(triad_tones(u));
                int common = 0;
                for (const auto& x : a) common += static_cast<int>(b.count(x));
                CHECK(common == 2);
            }
}

TEST_CASE("PLR words fold left to right") {
    auto word = parse_plr_word("RPL");
    auto traj = plr_word(parse_triad("Cmaj"), word);
    REQUIRE(traj.size() == 4);
    CHECK(traj[1] == parse_triad("Amin"));
    CHECK(traj[2] == parse_triad("Amaj"));
    CHECK(traj[3] == parse_triad("C#min"));
    try {
        parse_plr_word("RPX");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("scales containing a tone set") {
    std::vector<Tone> shared = {parse_tone("B"), parse_tone("C"), parse_tone("D"), parse_tone("E")};
    auto found = scales_containing(shared, ScaleKind::Major);
    REQUIRE(found.size() == 2);
    CHECK(found[0].root == parse_tone("C"));
    CHECK(found[1].root == parse_tone("G"));
    CHECK(scales_containing(shared, ScaleKind::Major, -10, 10).size() == 2);
    CHECK(relative_minor_root(Tone{0}) == parse_tone("A"));
    CHECK(relative_minor_root(parse_tone("Eb")) == parse_tone("C"));
}
