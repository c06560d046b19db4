#include "gtz/figure.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gtz {
namespace {

std::string point_text(const CycPoint& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < 4; ++i) {
        if (i) out += ", ";
        out += format_rational(p[i]);
    }
    return out + "]";
}

std::string tone_list(const std::vector<Tone>& ts) {
    std::string out;
    for (const auto& t : ts) {
        if (!out.empty()) out += ",";
        out += render_tone(t);
    }
    return out;
}

// Position of every tone of `s` when the template is placed by `map`.
std::map<Tone, CycPoint> placed(const FigureTemplate& t, const Labeling& lab, const Scale& s,
                                const Isometry& map) {
    auto tones = scale_tones(s);
    std::map<Tone, CycPoint> out;
    for (std::size_t k = 0; k < 7; ++k)
        out.emplace(tones[k], map(t.point(lab.degree_of[k])));
    return out;
}

// Every coincident point pair of two placed figures must carry equal tones.
std::string coincidence_conflicts(const std::map<Tone, CycPoint>& a,
                                  const std::map<Tone, CycPoint>& b,
                                  std::vector<Tone>* coincident) {
    std::string problems;
    for (const auto& [ta, pa] : a)
        for (const auto& [tb, pb] : b)
            if (pa == pb) {
                if (ta != tb)
                    problems += render_tone(ta) + "/" + render_tone(tb) + " at " + point_text(pa) + "; ";
                else if (coincident)
                    coincident->push_back(ta);
            }
    return problems;
}

bool preserves_distances(const FigureTemplate& t, const Isometry& m, std::string& detail) {
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j) {
            auto before = sq_distance(t.point(i), t.point(j));
            auto after = sq_distance(m(t.point(i)), m(t.point(j)));
            if (before != after) {
                detail = "degrees " + std::to_string(i) + "," + std::to_string(j) + ": " +
                         before.to_string() + " -> " + after.to_string();
                return false;
            }
        }
    return true;
}

} // namespace

std::string_view shape_kind_name(ShapeKind k) noexcept {
    return k == ShapeKind::Triangle ? "triangle" : "gnomon";
}

bool FigureTemplate::has_edge(int a, int b) const {
    return std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
        return (e.first == a && e.second == b) || (e.first == b && e.second == a);
    });
}

bool Labeling::is_bijective() const {
    std::array<bool, 7> seen{};
    for (int d : degree_of) {
        if (d < 1 || d > 7 || seen[static_cast<std::size_t>(d - 1)]) return false;
        seen[static_cast<std::size_t>(d - 1)] = true;
    }
    return true;
}

std::array<int, 7> Labeling::inverse() const {
    std::array<int, 7> inv{};
    for (int k = 0; k < 7; ++k) inv[static_cast<std::size_t>(degree_of[static_cast<std::size_t>(k)] - 1)] = k;
    return inv;
}

std::array<Tone, 7> tones_by_degree(const Labeling& lab, const Scale& s) {
    auto tones = scale_tones(s);
    std::array<Tone, 7> out;
    for (std::size_t k = 0; k < 7; ++k) out[static_cast<std::size_t>(lab.degree_of[k] - 1)] = tones[k];
    return out;
}

Condition1Result check_condition1(const FigureTemplate& t, const Labeling& lab, const Scale& s) {
    if (!lab.is_bijective()) throw DomainError("labeling is not a bijection onto degrees 1..7");
    auto tones = scale_tones(s);
    for (std::size_t k = 0; k + 1 < 7; ++k)
        if (!t.has_edge(lab.degree_of[k], lab.degree_of[k + 1]))
            return {false, std::make_pair(tones[k], tones[k + 1])};
    return {true, std::nullopt};
}

ShapeClass chord_shape(const FigureTemplate& t, const Labeling& lab, int degree) {
    auto at = [&](int idx) { return t.point(lab.degree_of[static_cast<std::size_t>(idx % 7)]); };
    int k = degree - 1;
    return classify_triangle(at(k), at(k + 2), at(k + 4));
}

ConditionReport check_condition2(const FigureTemplate& t, const Labeling& lab, const Scale& s) {
    if (s.kind != ScaleKind::Major && s.kind != ScaleKind::NaturalMinor)
        throw DomainError("condition (2) is defined for major and natural-minor scales");
    ConditionReport rep;
    rep.condition1 = check_condition1(t, lab, s);
    rep.condition2_pass = true;
    for (int deg : kGoldenChordDegrees) {
        ShapeClass c = chord_shape(t, lab, deg);
        rep.condition2[deg] = c;
        if (!is_golden_shape(c)) rep.condition2_pass = false;
    }
    return rep;
}

std::vector<std::array<int, 7>> self_isometries(const FigureTemplate& t) {
    std::array<std::array<GoldenScalar, 7>, 7> d;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = sq_distance(t.point(i + 1), t.point(j + 1));
    std::vector<std::array<int, 7>> out;
    std::array<int, 7> perm{1, 2, 3, 4, 5, 6, 7};
    do {
        bool ok = true;
        for (int i = 0; i < 7 && ok; ++i)
            for (int j = i + 1; j < 7 && ok; ++j)
                ok = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                     d[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] - 1)]
                      [static_cast<std::size_t>(perm[static_cast<std::size_t>(j)] - 1)];
        for (std::size_t e = 0; e < t.edges.size() && ok; ++e) {
            auto [a, b] = t.edges[e];
            ok = t.has_edge(perm[static_cast<std::size_t>(a - 1)], perm[static_cast<std::size_t>(b - 1)]);
        }
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::string_view quotient_name(SymmetryQuotient q) noexcept {
    return q == SymmetryQuotient::None ? "none" : "isometry";
}

SymmetryQuotient parse_quotient(std::string_view text) {
    if (text == "none") return SymmetryQuotient::None;
    if (text == "isometry") return SymmetryQuotient::Isometry;
    throw ParseError("unknown symmetry quotient '" + std::string(text) + "'", std::string(text), 0);
}

std::vector<Labeling> enumerate_labelings(const FigureTemplate& t, const Scale& s,
                                          SymmetryQuotient q) {
    std::vector<std::array<int, 7>> syms;
    if (q == SymmetryQuotient::Isometry)
        syms = self_isometries(t);
    else
        syms.push_back({1, 2, 3, 4, 5, 6, 7});

    std::set<Labeling> reps;
    Labeling lab;
    do {
        if (!check_condition1(t, lab, s).pass) continue;
        Labeling best = lab;
        for (const auto& sigma : syms) {
            Labeling img;
            for (std::size_t k = 0; k < 7; ++k)
                img.degree_of[k] = sigma[static_cast<std::size_t>(lab.degree_of[k] - 1)];
            best = std::min(best, img);
        }
        reps.insert(best);
    } while (std::next_permutation(lab.degree_of.begin(), lab.degree_of.end()));
    return {reps.begin(), reps.end()};
}

std::vector<Labeling> filter_golden(const FigureTemplate& t, const Scale& s,
                                    const std::vector<Labeling>& labs) {
    std::vector<Labeling> out;
    for (const auto& lab : labs)
        if (check_condition2(t, lab, s).condition2_pass) out.push_back(lab);
    return out;
}

std::vector<GluingCandidate> gluing_candidates(GlueDirection d, const FigureAtlas& atlas) {
    const auto& glue = d == GlueDirection::Horizontal ? atlas.h_glue : atlas.v_glue;
    std::vector<GluingCandidate> out;
    for (const auto& s : scales_containing(glue.shared, ScaleKind::Major)) {
        GluingCandidate c{s, std::nullopt};
        if (d == GlueDirection::Vertical)
            c.relative_minor = Scale{relative_minor_root(s.root), ScaleKind::NaturalMinor};
        out.push_back(c);
    }
    return out;
}

ExtensionCompatibility extension_compatibility(const FigureTemplate& t, const Labeling& lab) {
    auto P = [&](int k) { return t.point(lab.degree_of[static_cast<std::size_t>(k)]); };
    ExtensionCompatibility out;
    CycPoint shift = P(6) - P(2);
    out.horizontal = shift != CycPoint{} && P(0) - P(3) == shift && P(1) - P(4) == shift &&
                     P(2) - P(5) == shift;
    if (out.horizontal) out.translation = shift;

    bool cg_level = compare_imag(P(0), P(4)) == 0;
    bool upper_level = compare_imag(P(5), P(2)) == 0 && compare_imag(P(2), P(6)) == 0;
    bool distinct = compare_imag(P(2), P(0)) != 0;
    out.vertical = cg_level && upper_level && distinct;
    return out;
}

bool AtlasReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

AtlasReport validate_atlas(const FigureAtlas& atlas) {
    AtlasReport rep;
    auto add = [&](std::string name, bool pass, std::string detail = {}) {
        rep.checks.push_back({std::move(name), pass, std::move(detail)});
    };
    const FigureTemplate& t = atlas.figure;
    const Labeling& lab = atlas.canonical_labeling;
    const Scale c_major{Tone{0}, ScaleKind::Major};
    const Scale g_major{Tone{1}, ScaleKind::Major};
    const Scale c_minor{Tone{0}, ScaleKind::NaturalMinor};

    {
        std::string detail;
        for (int i = 1; i <= 7; ++i)
            for (int j = i + 1; j <= 7; ++j)
                if (t.point(i) == t.point(j))
                    detail += "degrees " + std::to_string(i) + "," + std::to_string(j) + " coincide; ";
        add("points_distinct", detail.empty(), detail);
    }
    {
        std::string detail;
        std::set<std::pair<int, int>> seen;
        for (auto [a, b] : t.edges) {
            if (a < 1 || a > 7 || b < 1 || b > 7 || a == b)
                detail += "bad edge (" + std::to_string(a) + "," + std::to_string(b) + "); ";
            else if (!seen.insert(std::minmax(a, b)).second)
                detail += "duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + "); ";
        }
        // Connectivity by union-find.
        std::array<int, 8> parent{};
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
            return x;
        };
        for (auto [a, b] : t.edges)
            if (a >= 1 && a <= 7 && b >= 1 && b <= 7) parent[static_cast<std::size_t>(find(a))] = find(b);
        for (int i = 2; i <= 7; ++i)
            if (find(i) != find(1)) detail += "degree " + std::to_string(i) + " disconnected; ";
        add("edges_valid_connected", detail.empty(), detail);
    }
    add("canonical_labeling_bijective", lab.is_bijective());
    if (!lab.is_bijective()) return rep;
    {
        auto c1 = check_condition1(t, lab, c_major);
        std::string detail;
        if (c1.witness)
            detail = "not adjacent: " + render_tone(c1.witness->first) + "-" + render_tone(c1.witness->second);
        add("condition1_canonical", c1.pass, detail);
    }
    {
        auto c2 = check_condition2(t, lab, c_major);
        std::string detail;
        for (const auto& [deg, shape] : c2.condition2)
            detail += std::string(roman_numeral(deg)) + "=" + std::string(shape_name(shape)) + " ";
        add("condition2_canonical", c2.condition2_pass, detail);
    }

    // Horizontal gluing: G-major copy placed by h_glue.
    {
        std::string detail;
        bool iso = preserves_distances(t, atlas.h_glue.map, detail);
        add("h_glue_isometry", iso, detail);
        auto base = placed(t, lab, c_major, Isometry{});
        auto right = placed(t, lab, g_major, atlas.h_glue.map);
        std::string miss;
        for (const auto& tone : atlas.h_glue.shared)
            if (!base.contains(tone) || !right.contains(tone) || base.at(tone) != right.at(tone))
                miss += render_tone(tone) + " ";
        add("h_glue_shared_tones", miss.empty() && !atlas.h_glue.shared.empty(),
            miss.empty() ? "shared " + tone_list(atlas.h_glue.shared) : "not identified: " + miss);
        std::vector<Tone> coincident;
        auto conflicts = coincidence_conflicts(base, right, &coincident);
        add("h_glue_label_consistent", conflicts.empty(),
            conflicts.empty() ? "coincident " + tone_list(coincident) : conflicts);
    }

    // Vertical gluing: C-minor copy placed by v_glue.
    {
        std::string detail;
        bool iso = preserves_distances(t, atlas.v_glue.map, detail);
        add("v_glue_isometry", iso, detail);
        add("v_glue_reflects", atlas.v_glue.map.reflects());

        std::string relabel;
        auto maj = scale_tones(c_major);
        auto min = scale_tones(c_minor);
        for (std::size_t k = 0; k < 7; ++k) {
            auto it = atlas.minor_relabel.find(maj[k]);
            Tone mapped = it == atlas.minor_relabel.end() ? maj[k] : it->second;
            if (mapped != min[k]) relabel += render_tone(maj[k]) + "->" + render_tone(mapped) + " ";
        }
        add("minor_relabel_matches_natural_minor", relabel.empty(), relabel);

        auto base = placed(t, lab, c_major, Isometry{});
        auto lower = placed(t, lab, c_minor, atlas.v_glue.map);
        std::string miss;
        for (const auto& tone : atlas.v_glue.shared)
            if (!base.contains(tone) || !lower.contains(tone) || base.at(tone) != lower.at(tone))
                miss += render_tone(tone) + " ";
        add("v_glue_fixes_shared_tones", miss.empty() && !atlas.v_glue.shared.empty(),
            miss.empty() ? "mirror through " + tone_list(atlas.v_glue.shared) : "moved: " + miss);
        std::vector<Tone> coincident;
        auto conflicts = coincidence_conflicts(base, lower, &coincident);
        add("v_glue_label_consistent", conflicts.empty(),
            conflicts.empty() ? "coincident " + tone_list(coincident) : conflicts);

        const Tone e{4}, eb{-3};
        const CycPoint& pe = base.at(e);
        const CycPoint& peb = lower.at(eb);
        const CycPoint& pc = base.at(Tone{0});
        add("E_above_mirror", compare_imag(pe, pc) > 0);
        add("Eb_below_mirror", compare_imag(peb, pc) < 0);
        std::string higher;
        for (const auto& [tone, p] : base)
            if (compare_imag(p, pe) > 0) higher += render_tone(tone) + " ";
        for (const auto& [tone, p] : lower)
            if (compare_imag(p, pe) > 0) higher += render_tone(tone) + "(minor) ";
        add("E_topmost", higher.empty(), higher.empty() ? "" : "above E: " + higher);
        std::string lower_than;
        for (const auto& [tone, p] : lower)
            if (compare_imag(p, peb) < 0) lower_than += render_tone(tone) + " ";
        add("Eb_bottommost", lower_than.empty(), lower_than.empty() ? "" : "below Eb: " + lower_than);
    }

    {
        auto ext = extension_compatibility(t, lab);
        add("canonical_extension_compatible", ext.horizontal && ext.vertical,
            std::string("horizontal=") + (ext.horizontal ? "yes" : "no") +
                " vertical=" + (ext.vertical ? "yes" : "no"));
        if (ext.translation)
            add("h_glue_matches_translation",
                !atlas.h_glue.map.reflects() && atlas.h_glue.map.offset == *ext.translation);
    }

    if (atlas.gnomon) {
        std::string detail;
        for (int i = 1; i <= 7; ++i)
            for (int j = i + 1; j <= 7; ++j)
                if (atlas.gnomon->point(i) == atlas.gnomon->point(j))
                    detail += "degrees " + std::to_string(i) + "," + std::to_string(j) + " coincide; ";
        add("gnomon_points_distinct", detail.empty() && atlas.gnomon_labeling.is_bijective(), detail);
    }
    return rep;
}

} // namespace gtz
