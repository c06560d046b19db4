#include "gtz/tonnetz.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <tuple>

#include "gtz/atlas_io.hpp"

namespace gtz {
namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

int floor_mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

std::string point_text(const CycPoint& p) { return point_to_json(p).dump(); }

// Labeling with every scale index moved `shift` places along the canonical order.
Labeling rotated(const Labeling& canonical, int shift) {
    Labeling lab;
    for (int i = 0; i < 7; ++i)
        lab.degree_of[static_cast<std::size_t>(i)] =
            canonical.degree_of[static_cast<std::size_t>(floor_mod(i - shift, 7))];
    return lab;
}

// Rotation per column that keeps translated C-major copies label-consistent
// on every point they share.
int self_repeat_shift(const FigureAtlas& atlas) {
    const Scale c_major{Tone{0}, ScaleKind::Major};
    const auto& t = atlas.figure;
    auto base = tones_by_degree(atlas.canonical_labeling, c_major);
    for (int shift = 1; shift < 7; ++shift) {
        auto next = tones_by_degree(rotated(atlas.canonical_labeling, shift), c_major);
        bool shares = false;
        bool consistent = true;
        for (int i = 1; i <= 7 && consistent; ++i)
            for (int j = 1; j <= 7; ++j)
                if (atlas.h_glue.map(t.point(j)) == t.point(i)) {
                    shares = true;
                    if (base[static_cast<std::size_t>(i - 1)] != next[static_cast<std::size_t>(j - 1)]) {
                        consistent = false;
                        break;
                    }
                }
        if (shares && consistent) return shift;
    }
    throw LabelConflict("self-repeat: no relabeling of the C-major figure agrees on the glued points");
}

} // namespace

std::string LatticeVariant::name() const {
    std::string out = horizontal == Horizontal::FifthShift ? "fifth" : "self";
    out += "/";
    out += vertical == Vertical::RelativeMinorReflect ? "relative" : "major";
    return out;
}

bool TonnetzWindow::adjacent(std::size_t a, std::size_t b) const {
    const auto& n = adjacency.at(a);
    return std::binary_search(n.begin(), n.end(), b);
}

std::vector<std::size_t> TonnetzWindow::vertices_with_tone(Tone t) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].tone == t) out.push_back(i);
    return out;
}

std::optional<std::size_t> TonnetzWindow::figure_at(int column, int row) const {
    for (std::size_t i = 0; i < figures.size(); ++i)
        if (figures[i].column == column && figures[i].row == row) return i;
    return std::nullopt;
}

std::pair<int, int> column_range(int columns) {
    int lo = -((columns - 1) / 2);
    return {lo, lo + columns - 1};
}

std::pair<int, int> row_range(int rows) {
    int lo = -(rows / 2);
    return {lo, lo + rows - 1};
}

TonnetzWindow build_window(const FigureAtlas& atlas, LatticeVariant variant, int columns, int rows) {
    if (columns < 1 || rows < 1) throw DomainError("window extent must be at least 1x1");
    if (atlas.h_glue.map.reflects())
        throw AtlasError("horizontal glue must be a translation");
    if (!atlas.v_glue.map.reflects())
        throw AtlasError("vertical glue must be a reflection");
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j) {
            const auto& t = atlas.figure;
            auto d = sq_distance(t.point(i), t.point(j));
            if (sq_distance(atlas.v_glue.map(t.point(i)), atlas.v_glue.map(t.point(j))) != d ||
                sq_distance(atlas.h_glue.map(t.point(i)), atlas.h_glue.map(t.point(j))) != d)
                throw AtlasError("glue map is not an isometry of the template");
        }

    const FigureTemplate& tmpl = atlas.figure;
    const CycPoint step_h = atlas.h_glue.map.offset;
    const CycPoint apex = tmpl.point(tmpl.apex_degree);
    // Mirror through the apex line, composed with the inverse lower mirror.
    const CycPoint step_v = Isometry::mirror_through(apex).offset - atlas.v_glue.map.offset;
    const bool relative = variant.vertical == LatticeVariant::Vertical::RelativeMinorReflect;
    const bool fifth = variant.horizontal == LatticeVariant::Horizontal::FifthShift;
    const int repeat_shift = fifth ? 0 : self_repeat_shift(atlas);

    TonnetzWindow w;
    w.variant = variant;
    w.columns = columns;
    w.rows = rows;
    w.atlas_hash = atlas.content_hash;
    auto [c_lo, c_hi] = column_range(columns);
    auto [r_lo, r_hi] = row_range(rows);
    w.first_column = c_lo;
    w.first_row = r_lo;

    std::map<CycPoint, std::size_t> index;
    std::set<std::pair<std::size_t, std::size_t>> edges;

    for (int r = r_lo; r <= r_hi; ++r) {
        const int pair = floor_div(r + 1, 2);
        const bool mirrored = floor_mod(r, 2) == 1;
        for (int c = c_lo; c <= c_hi; ++c) {
            PlacedFigure f;
            f.column = c;
            f.row = r;
            CycPoint offset = step_h * Rational(c) + step_v * Rational(pair);
            f.transform = mirrored ? compose(Isometry::translation(offset), atlas.v_glue.map)
                                   : Isometry::translation(offset);
            int root = (fifth ? c : 0) + (relative ? 7 * pair : 0);
            ScaleKind kind = mirrored && relative ? ScaleKind::NaturalMinor : ScaleKind::Major;
            f.scale = Scale{Tone{root}, kind};
            f.labeling = fifth ? atlas.canonical_labeling
                               : rotated(atlas.canonical_labeling, repeat_shift * c);
            f.tones = tones_by_degree(f.labeling, f.scale);

            for (int d = 1; d <= 7; ++d) {
                CycPoint p = f.transform(tmpl.point(d));
                Tone tone = f.tones[static_cast<std::size_t>(d - 1)];
                auto [it, inserted] = index.try_emplace(p, w.vertices.size());
                if (inserted) {
                    w.vertices.push_back({p, tone});
                } else if (w.vertices[it->second].tone != tone) {
                    throw LabelConflict("label conflict at " + point_text(p) + ": " +
                                        render_tone(w.vertices[it->second].tone) + " vs " +
                                        render_tone(tone) + " (cell " + std::to_string(c) + "," +
                                        std::to_string(r) + ")");
                }
                f.vertex[static_cast<std::size_t>(d - 1)] = it->second;
            }
            for (auto [a, b] : tmpl.edges)
                edges.insert(std::minmax(f.vertex[static_cast<std::size_t>(a - 1)],
                                         f.vertex[static_cast<std::size_t>(b - 1)]));
            w.figures.push_back(std::move(f));
        }
    }
    w.edges.assign(edges.begin(), edges.end());
    w.adjacency.assign(w.vertices.size(), {});
    for (auto [a, b] : w.edges) {
        w.adjacency[a].push_back(b);
        w.adjacency[b].push_back(a);
    }
    for (auto& n : w.adjacency) std::sort(n.begin(), n.end());
    return w;
}

nlohmann::json window_to_json(const TonnetzWindow& w) {
    using nlohmann::json;
    json doc;
    doc["format"] = "golden-tonnetz-window";
    doc["version"] = 1;
    doc["variant"] = {
        {"horizontal", w.variant.horizontal == LatticeVariant::Horizontal::FifthShift ? "fifth" : "self"},
        {"vertical", w.variant.vertical == LatticeVariant::Vertical::RelativeMinorReflect ? "relative" : "major"},
    };
    doc["extent"] = {{"columns", w.columns}, {"rows", w.rows},
                     {"first_column", w.first_column}, {"first_row", w.first_row}};
    doc["atlas_hash"] = w.atlas_hash;
    json verts = json::array();
    for (const auto& v : w.vertices)
        verts.push_back({{"point", point_to_json(v.point)}, {"tone", render_tone(v.tone)}});
    doc["vertices"] = std::move(verts);
    json edges = json::array();
    for (auto [a, b] : w.edges) edges.push_back({a, b});
    doc["edges"] = std::move(edges);
    json figs = json::array();
    for (const auto& f : w.figures) {
        json tones = json::array();
        for (const auto& t : f.tones) tones.push_back(render_tone(t));
        figs.push_back({
            {"cell", {f.column, f.row}},
            {"scale", render_scale(f.scale)},
            {"transform", {{"kind", isometry_kind_name(f.transform.kind)},
                           {"offset", point_to_json(f.transform.offset)}}},
            {"vertices", f.vertex},
            {"tones", std::move(tones)},
        });
    }
    doc["figures"] = std::move(figs);
    return doc;
}

std::vector<std::size_t> find_scale_figures(const TonnetzWindow& w, const Scale& s) {
    auto want = scale_tones(s);
    std::sort(want.begin(), want.end());
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w.figures.size(); ++i) {
        auto have = w.figures[i].tones;
        std::sort(have.begin(), have.end());
        if (have == want && w.figures[i].scale.root == s.root) out.push_back(i);
    }
    return out;
}

std::vector<Scale> spelled_key_domain() {
    std::vector<Scale> out;
    for (int r = -7; r <= 7; ++r) out.push_back({Tone{r}, ScaleKind::Major});
    for (int r = -7; r <= 7; ++r) out.push_back({relative_minor_root(Tone{r}), ScaleKind::NaturalMinor});
    return out;
}

std::set<Scale> representable_scales(const TonnetzWindow& w) {
    std::set<Scale> out;
    for (const auto& s : spelled_key_domain())
        if (!find_scale_figures(w, s).empty()) out.insert(s);
    return out;
}

std::vector<Occurrence> find_tone_triple_occurrences(const TonnetzWindow& w,
                                                     const std::array<Tone, 3>& tones) {
    auto want = tones;
    std::sort(want.begin(), want.end());
    std::map<std::array<std::size_t, 3>, Occurrence> found;
    for (std::size_t fi = 0; fi < w.figures.size(); ++fi) {
        const auto& f = w.figures[fi];
        for (int deg : kGoldenChordDegrees) {
            std::array<std::size_t, 3> vs = {f.vertex_of_index(deg - 1), f.vertex_of_index(deg + 1),
                                             f.vertex_of_index(deg + 3)};
            std::array<Tone, 3> have = {w.vertices[vs[0]].tone, w.vertices[vs[1]].tone,
                                        w.vertices[vs[2]].tone};
            std::sort(have.begin(), have.end());
            if (have != want) continue;
            auto key = vs;
            std::sort(key.begin(), key.end());
            auto it = found.find(key);
            if (it == found.end()) {
                Occurrence occ;
                occ.tones = tones;
                for (std::size_t i = 0; i < 3; ++i)
                    for (auto v : vs)
                        if (w.vertices[v].tone == tones[i]) occ.vertices[i] = v;
                occ.shape = classify_triangle(w.vertices[vs[0]].point, w.vertices[vs[1]].point,
                                              w.vertices[vs[2]].point);
                it = found.emplace(key, std::move(occ)).first;
            }
            it->second.figure_refs.push_back({fi, deg});
        }
    }
    std::vector<Occurrence> out;
    for (auto& [key, occ] : found) out.push_back(std::move(occ));
    return out;
}

std::vector<Occurrence> find_triad_occurrences(const TonnetzWindow& w, const Triad& t) {
    auto out = find_tone_triple_occurrences(w, triad_tones(t));
    for (auto& o : out) o.triad = t;
    return out;
}

int figure_distance(const TonnetzWindow& w, const Occurrence& a, const Occurrence& b) {
    int best = std::numeric_limits<int>::max();
    for (const auto& ra : a.figure_refs)
        for (const auto& rb : b.figure_refs) {
            const auto& fa = w.figures[ra.figure];
            const auto& fb = w.figures[rb.figure];
            best = std::min(best, std::abs(fa.column - fb.column) + std::abs(fa.row - fb.row));
        }
    return best;
}

namespace {

std::optional<Triad> infer_triad(const std::array<Tone, 3>& tones) {
    for (const auto& root : tones)
        for (auto q : {TriadQuality::Major, TriadQuality::Minor}) {
            auto t = triad_tones(Triad{root, q});
            auto a = t;
            auto b = tones;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a == b) return Triad{root, q};
        }
    return std::nullopt;
}

} // namespace

Occurrence plr_realize(const TonnetzWindow& w, const Occurrence& occ, PlrOp op) {
    auto start = occ.triad ? occ.triad : infer_triad(occ.tones);
    if (!start) throw DomainError("plr_realize: occurrence is not a major or minor triad");
    Triad target = plr_apply(*start, op);
    auto target_tones = triad_tones(target);

    // Common tones and the vertices occ assigns them.
    std::vector<std::pair<Tone, std::size_t>> common;
    for (std::size_t i = 0; i < 3; ++i)
        if (std::find(target_tones.begin(), target_tones.end(), occ.tones[i]) != target_tones.end())
            common.emplace_back(occ.tones[i], occ.vertices[i]);

    using Rank = std::tuple<int, int, int, std::array<std::size_t, 3>>;
    std::optional<std::pair<Rank, Occurrence>> best;
    for (auto& cand : find_triad_occurrences(w, target)) {
        bool shares = std::all_of(common.begin(), common.end(), [&](const auto& tv) {
            for (std::size_t i = 0; i < 3; ++i)
                if (cand.tones[i] == tv.first) return cand.vertices[i] == tv.second;
            return false;
        });
        if (!shares) continue;
        int dist = figure_distance(w, occ, cand);
        // Closest figure of the candidate, ordered by (row, column).
        std::pair<int, int> cell{std::numeric_limits<int>::max(), 0};
        for (const auto& ref : cand.figure_refs) {
            const auto& f = w.figures[ref.figure];
            cell = std::min(cell, std::make_pair(f.row, f.column));
        }
        auto key = cand.vertices;
        std::sort(key.begin(), key.end());
        Rank rank{dist, cell.first, cell.second, key};
        if (!best || rank < best->first) best.emplace(rank, std::move(cand));
    }
    if (!best)
        throw NotFound("plr_realize: no " + describe_triad(target) +
                       " occurrence shares the common-tone vertices; enlarge the window");
    return std::move(best->second);
}

std::optional<std::vector<std::size_t>> mode_path(const TonnetzWindow& w, ScaleKind kind, Tone root) {
    if (!is_gregorian(kind)) throw DomainError("mode_path: kind must be a Gregorian mode");
    auto tones = scale_tones(Scale{root, kind});
    std::vector<std::size_t> path;
    auto extend = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == 7) return true;
        for (auto n : w.adjacency[path.back()]) {
            if (w.vertices[n].tone != tones[depth]) continue;
            path.push_back(n);
            if (self(self, depth + 1)) return true;
            path.pop_back();
        }
        return false;
    };
    for (auto v : w.vertices_with_tone(tones[0])) {
        path = {v};
        if (extend(extend, 1)) return path;
    }
    return std::nullopt;
}

Connectivity tones_connected(const TonnetzWindow& w, const std::vector<Tone>& query) {
    std::vector<Tone> tones;
    for (const auto& t : query)
        if (std::find(tones.begin(), tones.end(), t) == tones.end()) tones.push_back(t);

    Connectivity out;
    std::map<Tone, std::size_t> slot;
    for (std::size_t i = 0; i < tones.size(); ++i) {
        if (w.vertices_with_tone(tones[i]).empty()) {
            out.missing = tones[i];
            return out;
        }
        slot[tones[i]] = i;
    }
    if (tones.empty()) {
        out.connected = true;
        return out;
    }

    // Grow connected sets one tone at a time. Every connected choice can be
    // reached this way from its tone-0 vertex.
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::size_t> chosen;
    std::vector<bool> covered(tones.size(), false);
    auto grow = [&](auto&& self) -> bool {
        if (chosen.size() == tones.size()) return true;
        auto key = chosen;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) return false;
        std::set<std::size_t> frontier;
        for (auto v : chosen)
            for (auto n : w.adjacency[v]) {
                auto it = slot.find(w.vertices[n].tone);
                if (it != slot.end() && !covered[it->second]) frontier.insert(n);
            }
        for (auto n : frontier) {
            auto s = slot.at(w.vertices[n].tone);
            covered[s] = true;
            chosen.push_back(n);
            if (self(self)) return true;
            chosen.pop_back();
            covered[s] = false;
        }
        return false;
    };
    for (auto v : w.vertices_with_tone(tones[0])) {
        chosen = {v};
        std::fill(covered.begin(), covered.end(), false);
        covered[0] = true;
        if (grow(grow)) {
            out.connected = true;
            out.witness.assign(tones.size(), 0);
            for (auto c : chosen) out.witness[slot.at(w.vertices[c].tone)] = c;
            for (std::size_t i = 0; i < chosen.size(); ++i)
                for (std::size_t j = i + 1; j < chosen.size(); ++j)
                    if (w.adjacent(chosen[i], chosen[j]))
                        out.witness_edges.push_back(std::minmax(chosen[i], chosen[j]));
            std::sort(out.witness_edges.begin(), out.witness_edges.end());
            return out;
        }
    }
    return out;
}

} // namespace gtz
