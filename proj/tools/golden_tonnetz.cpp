// golden-tonnetz: command-line front end.
//
// Exit status: 0 success, 1 domain error (not found, label conflict, bad
// atlas), 2 usage or parse error. Every failure prints "error: <CODE>" on
// its own line before any detail.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gtz/atlas_io.hpp"
#include "gtz/render.hpp"
#include "gtz/tonnetz.hpp"

using namespace gtz;

namespace {

struct Extent {
    int columns = 10;
    int rows = 6;
};

// "CxR", both positive.
Extent parse_extent(const std::string& text) {
    auto x = text.find('x');
    if (x == std::string::npos) throw ParseError("extent must look like CxR", text, text.size());
    auto number = [&](std::size_t from, std::size_t to) {
        if (from == to) throw ParseError("extent is missing a number", text, from);
        int v = 0;
        for (std::size_t i = from; i < to; ++i) {
            if (text[i] < '0' || text[i] > '9')
                throw ParseError(std::string("unexpected character '") + text[i] + "' in extent", text, i);
            v = v * 10 + (text[i] - '0');
            if (v > 1000) throw ParseError("extent too large", text, i);
        }
        if (v < 1) throw ParseError("extent must be at least 1", text, from);
        return v;
    };
    return {number(0, x), number(x + 1, text.size())};
}

// Comma-separated note names; error positions are relative to the whole list.
std::vector<Tone> parse_tone_list(const std::string& text) {
    std::vector<Tone> out;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        auto end = comma == std::string::npos ? text.size() : comma;
        try {
            out.push_back(parse_tone(std::string_view(text).substr(start, end - start)));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), text, start + e.position());
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

LatticeVariant parse_variant(const std::string& h, const std::string& v) {
    LatticeVariant out;
    out.horizontal = h == "self" ? LatticeVariant::Horizontal::SelfRepeat : LatticeVariant::Horizontal::FifthShift;
    out.vertical = v == "major" ? LatticeVariant::Vertical::MajorReflect
                                : LatticeVariant::Vertical::RelativeMinorReflect;
    return out;
}

std::string tone_join(const std::vector<Tone>& ts, bool unicode, const char* sep = ",") {
    std::string out;
    for (const auto& t : ts) {
        if (!out.empty()) out += sep;
        out += render_tone(t, unicode);
    }
    return out;
}

std::string index_list(const std::vector<std::size_t>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + "]";
}

std::string cells_of(const TonnetzWindow& w, const Occurrence& o) {
    std::string out;
    for (const auto& r : o.figure_refs) {
        const auto& f = w.figures[r.figure];
        if (!out.empty()) out += " ";
        out += "(" + std::to_string(f.column) + "," + std::to_string(f.row) + ")" +
               std::string(roman_numeral(r.chord_degree));
    }
    return out;
}

std::string describe_occurrence(const TonnetzWindow& w, const Occurrence& o, bool unicode) {
    std::ostringstream os;
    os << "vertices ";
    for (std::size_t i = 0; i < 3; ++i)
        os << (i ? "," : "") << render_tone(o.tones[i], unicode) << "@" << o.vertices[i];
    os << " shape " << shape_name(o.shape) << " cells " << cells_of(w, o);
    return os.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write " + path);
    out << text;
}

struct Common {
    std::string atlas_path;
    bool unicode = false;

    FigureAtlas load() const {
        auto path = atlas_path.empty() ? default_atlas_path() : std::filesystem::path(atlas_path);
        return load_atlas(path);
    }
};

struct WindowOpts {
    std::string extent = "10x6";
    std::string horizontal = "fifth";
    std::string vertical = "relative";

    void add(CLI::App* cmd, const std::string& default_extent = "10x6") {
        extent = default_extent;
        cmd->add_option("--window", extent, "window extent CxR")->capture_default_str();
        cmd->add_option("--horizontal", horizontal, "horizontal gluing: fifth|self")
            ->check(CLI::IsMember({"fifth", "self"}))
            ->capture_default_str();
        cmd->add_option("--vertical", vertical, "vertical gluing: relative|major")
            ->check(CLI::IsMember({"relative", "major"}))
            ->capture_default_str();
    }

    TonnetzWindow build(const FigureAtlas& atlas) const {
        auto e = parse_extent(extent);
        return build_window(atlas, parse_variant(horizontal, vertical), e.columns, e.rows);
    }
};

void print_header(const FigureAtlas& atlas) { std::cout << "atlas_hash: " << atlas.content_hash << "\n"; }

void print_window_line(const TonnetzWindow& w) {
    std::cout << "window: " << w.columns << "x" << w.rows << " variant " << w.variant.name() << ", "
              << w.vertices.size() << " vertices, " << w.edges.size() << " edges, " << w.figures.size()
              << " figures\n";
}

// ---- verify ---------------------------------------------------------------

int run_verify(const Common& common) {
    auto atlas = common.load();
    print_header(atlas);
    bool ok = true;
    auto line = [&](const std::string& name, bool pass, const std::string& detail = {}) {
        ok = ok && pass;
        std::cout << (pass ? "ok   " : "FAIL ") << name;
        if (!detail.empty()) std::cout << ": " << detail;
        std::cout << "\n";
    };

    for (const auto& c : validate_atlas(atlas).checks) line("atlas." + c.name, c.pass, c.detail);

    const Scale c_major{Tone{0}, ScaleKind::Major};
    auto tri = enumerate_labelings(atlas.figure, c_major, atlas.symmetry_quotient);
    auto tri_golden = filter_golden(atlas.figure, c_major, tri);
    line("triangle.adjacency_labelings", tri.size() == 7, std::to_string(tri.size()));
    line("triangle.golden_labelings", tri_golden.size() == 1, std::to_string(tri_golden.size()));
    line("triangle.golden_is_canonical", tri_golden.size() == 1 && tri_golden[0] == atlas.canonical_labeling);

    std::size_t gno_count = 0, gno_golden_count = 0;
    if (atlas.gnomon) {
        auto gno = enumerate_labelings(*atlas.gnomon, c_major, atlas.symmetry_quotient);
        auto gno_golden = filter_golden(*atlas.gnomon, c_major, gno);
        gno_count = gno.size();
        gno_golden_count = gno_golden.size();
        bool incompatible = !gno_golden.empty();
        for (const auto& lab : gno_golden) {
            auto ec = extension_compatibility(*atlas.gnomon, lab);
            incompatible = incompatible && !ec.horizontal && !ec.vertical;
        }
        line("gnomon.adjacency_labelings", gno_count == 7, std::to_string(gno_count));
        line("gnomon.golden_labelings", gno_golden_count == 1, std::to_string(gno_golden_count));
        line("gnomon.golden_fails_extensions", incompatible);
    } else {
        line("gnomon.present", false, "atlas has no gnomon template");
    }

    auto h = gluing_candidates(GlueDirection::Horizontal, atlas);
    auto v = gluing_candidates(GlueDirection::Vertical, atlas);
    auto names = [&](const std::vector<GluingCandidate>& cs) {
        std::string out;
        for (const auto& c : cs) {
            if (!out.empty()) out += " ";
            out += render_scale(c.major);
            if (c.relative_minor) out += "/" + render_scale(*c.relative_minor);
        }
        return out;
    };
    line("extensions.horizontal", h.size() == 2, std::to_string(h.size()) + " " + names(h));
    line("extensions.vertical", v.size() == 6, std::to_string(v.size()) + " " + names(v));

    // Lattice invariants on the golden 10x6 window.
    auto w = build_window(atlas, LatticeVariant::golden(), 10, 6);
    line("lattice.label_consistent_merge", true, std::to_string(w.vertices.size()) + " vertices");
    bool conditions = true, steps = true;
    for (const auto& f : w.figures) {
        conditions = conditions && check_condition1(atlas.figure, f.labeling, f.scale).pass &&
                     check_condition2(atlas.figure, f.labeling, f.scale).condition2_pass;
        if (auto right = w.figure_at(f.column + 1, f.row))
            steps = steps && w.figures[*right].scale.root == transpose_fifths(f.scale.root, 1) &&
                    w.figures[*right].scale.kind == f.scale.kind;
        if (auto up = w.figure_at(f.column, f.row + 2))
            steps = steps && w.figures[*up].scale.root == transpose_fifths(f.scale.root, 7) &&
                    w.figures[*up].scale.kind == f.scale.kind;
    }
    line("lattice.figures_pass_conditions", conditions);
    line("lattice.scale_steps", steps, "column +1 fifth, row pair +7 fifths");

    std::cout << "counts: " << tri.size() << ", " << tri_golden.size() << ", " << gno_count << ", "
              << gno_golden_count << ", " << h.size() << ", " << v.size() << "\n";
    std::cout << "result: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

// ---- enumerate ------------------------------------------------------------

int run_enumerate(const Common& common, const std::string& shape, const std::string& scale_text,
                  const std::string& quotient_text) {
    auto atlas = common.load();
    Scale s = parse_scale(scale_text);
    if (s.kind != ScaleKind::Major && s.kind != ScaleKind::NaturalMinor)
        throw DomainError("enumerate: scale must be major or natural minor");
    const FigureTemplate* t = &atlas.figure;
    Labeling canonical = atlas.canonical_labeling;
    if (shape == "gnomon") {
        if (!atlas.gnomon) throw AtlasError("atlas has no gnomon template");
        t = &*atlas.gnomon;
        canonical = atlas.gnomon_labeling;
    }
    auto q = quotient_text.empty() ? atlas.symmetry_quotient : parse_quotient(quotient_text);
    auto labs = enumerate_labelings(*t, s, q);
    auto golden = filter_golden(*t, s, labs);
    print_header(atlas);
    std::cout << "shape: " << shape << "  scale: " << describe_scale(s) << "  quotient: " << quotient_name(q)
              << "\n";
    for (std::size_t i = 0; i < labs.size(); ++i) {
        auto tones = tones_by_degree(labs[i], s);
        std::cout << "labeling " << i + 1 << ":";
        for (std::size_t d = 0; d < 7; ++d) std::cout << " " << d + 1 << "=" << render_tone(tones[d], common.unicode);
        bool g = std::find(golden.begin(), golden.end(), labs[i]) != golden.end();
        if (g) std::cout << "  [golden]";
        if (labs[i] == canonical) std::cout << "  [canonical]";
        if (g && shape == "gnomon") {
            auto ec = extension_compatibility(*t, labs[i]);
            std::cout << "  [horizontal-ext " << (ec.horizontal ? "yes" : "no") << ", vertical-ext "
                      << (ec.vertical ? "yes" : "no") << "]";
        }
        std::cout << "\n";
    }
    std::cout << "adjacency: " << labs.size() << "  golden: " << golden.size() << "\n";
    return 0;
}

// ---- extensions -----------------------------------------------------------

int run_extensions(const Common& common, const std::string& direction) {
    auto atlas = common.load();
    print_header(atlas);
    for (auto d : {GlueDirection::Horizontal, GlueDirection::Vertical}) {
        bool horiz = d == GlueDirection::Horizontal;
        if (direction != "both" && direction != (horiz ? "horizontal" : "vertical")) continue;
        const auto& glue = horiz ? atlas.h_glue : atlas.v_glue;
        auto cs = gluing_candidates(d, atlas);
        std::cout << (horiz ? "horizontal" : "vertical") << " (shared " << tone_join(glue.shared, common.unicode)
                  << "): " << cs.size() << "\n";
        for (const auto& c : cs) {
            std::cout << "  " << describe_scale(c.major);
            if (c.relative_minor) std::cout << " / " << describe_scale(*c.relative_minor);
            std::cout << "\n";
        }
    }
    return 0;
}

// ---- lattice --------------------------------------------------------------

int run_lattice(const Common& common, const WindowOpts& wo, const std::string& out) {
    auto atlas = common.load();
    auto w = wo.build(atlas);
    write_output(out, window_to_json(w).dump(2) + "\n");
    if (!out.empty() && out != "-") {
        print_header(atlas);
        print_window_line(w);
    }
    return 0;
}

// ---- find -----------------------------------------------------------------

int run_find(const Common& common, const WindowOpts& wo, const std::string& what, const std::string& arg) {
    auto atlas = common.load();
    auto w = wo.build(atlas);
    print_header(atlas);
    print_window_line(w);
    const bool u = common.unicode;

    if (what == "scale") {
        Scale s = parse_scale(arg);
        if (s.kind != ScaleKind::Major && s.kind != ScaleKind::NaturalMinor)
            throw DomainError("find scale: kind must be maj or min");
        auto figs = find_scale_figures(w, s);
        if (figs.empty()) throw NotFound("no placed figure carries " + describe_scale(s));
        for (auto fi : figs) {
            const auto& f = w.figures[fi];
            std::cout << describe_scale(s) << " at cell (" << f.column << "," << f.row << ") vertices "
                      << index_list({f.vertex.begin(), f.vertex.end()}) << "\n";
        }
        std::cout << "found: " << figs.size() << "\n";
    } else if (what == "triad") {
        Triad t = parse_triad(arg);
        auto occ = find_triad_occurrences(w, t);
        if (occ.empty()) throw NotFound("no occurrence of " + describe_triad(t));
        for (const auto& o : occ) std::cout << describe_triad(t) << " " << describe_occurrence(w, o, u) << "\n";
        std::cout << "found: " << occ.size() << "\n";
    } else if (what == "mode") {
        Scale s = parse_scale(arg);
        if (!is_gregorian(s.kind)) throw DomainError("find mode: kind must be a Gregorian mode");
        auto path = mode_path(w, s.kind, s.root);
        if (!path) throw NotFound("no " + describe_scale(s) + " path in this window; enlarge it");
        std::cout << describe_scale(s) << " path:";
        for (auto v : *path) std::cout << " " << render_tone(w.vertices[v].tone, u) << "@" << v;
        std::cout << "\n";
    } else {
        // A scale name or an explicit comma-separated tone list.
        std::vector<Tone> tones;
        if (arg.find('-') != std::string::npos) {
            auto st = scale_tones(parse_scale(arg));
            tones.assign(st.begin(), st.end());
        } else {
            tones = parse_tone_list(arg);
        }
        auto c = tones_connected(w, tones);
        if (c.missing) {
            std::cout << "tones " << tone_join(tones, u) << ": missing " << render_tone(*c.missing, u) << "\n";
            throw NotFound("tone " + render_tone(*c.missing) + " is absent from the window");
        }
        std::cout << "tones " << tone_join(tones, u) << ": " << (c.connected ? "connected" : "disconnected")
                  << "\n";
        if (c.connected) {
            std::cout << "witness:";
            for (auto v : c.witness) std::cout << " " << render_tone(w.vertices[v].tone, u) << "@" << v;
            std::cout << "\nedges:";
            for (auto [a, b] : c.witness_edges) std::cout << " " << a << "-" << b;
            std::cout << "\n";
        }
    }
    return 0;
}

// ---- transform ------------------------------------------------------------

// Occurrence of `t` nearest cell (0,0); ties by (row, column, vertices).
Occurrence start_occurrence(const TonnetzWindow& w, const Triad& t) {
    auto occ = find_triad_occurrences(w, t);
    if (occ.empty()) throw NotFound("no occurrence of " + describe_triad(t) + " in this window");
    auto rank = [&](const Occurrence& o) {
        std::tuple<int, int, int> best{std::numeric_limits<int>::max(), 0, 0};
        for (const auto& r : o.figure_refs) {
            const auto& f = w.figures[r.figure];
            best = std::min(best, std::make_tuple(std::abs(f.column) + std::abs(f.row), f.row, f.column));
        }
        return best;
    };
    return *std::min_element(occ.begin(), occ.end(),
                             [&](const auto& a, const auto& b) { return rank(a) < rank(b); });
}

int run_transform(const Common& common, const WindowOpts& wo, const std::string& start_text,
                  const std::string& word_text) {
    Triad start = parse_triad(start_text);
    auto word = parse_plr_word(word_text);
    auto atlas = common.load();
    auto w = wo.build(atlas);
    print_header(atlas);
    print_window_line(w);
    auto traj = plr_word(start, word);
    std::cout << "trajectory:";
    for (std::size_t i = 0; i < traj.size(); ++i) std::cout << (i ? " -> " : " ") << describe_triad(traj[i]);
    std::cout << "\n";
    auto occ = start_occurrence(w, start);
    std::cout << "0 " << describe_triad(start) << " " << describe_occurrence(w, occ, common.unicode) << "\n";
    for (std::size_t i = 0; i < word.size(); ++i) {
        occ = plr_realize(w, occ, word[i]);
        std::cout << i + 1 << " " << plr_letter(word[i]) << " " << describe_triad(*occ.triad) << " "
                  << describe_occurrence(w, occ, common.unicode) << "\n";
    }
    return 0;
}

// ---- render ---------------------------------------------------------------

struct RenderArgs {
    std::string template_shape;  // render a template instead of a window
    std::string scale_label = "C-maj";
    std::vector<std::string> scales, triads, modes, tonesets, plr;
    int precision = 6;
    double scale = 60.0;
    std::string out;
};

int run_render(const Common& common, const WindowOpts& wo, const RenderArgs& ra) {
    auto atlas = common.load();
    RenderOptions opts;
    opts.precision = ra.precision;
    opts.scale = ra.scale;
    opts.unicode = common.unicode;
    if (ra.precision < 0 || ra.precision > 12) throw DomainError("precision must be within 0..12");

    std::string svg;
    std::string summary;
    if (!ra.template_shape.empty()) {
        Scale s = parse_scale(ra.scale_label);
        if (ra.template_shape == "gnomon") {
            if (!atlas.gnomon) throw AtlasError("atlas has no gnomon template");
            svg = render_svg(*atlas.gnomon, atlas.gnomon_labeling, s, opts);
        } else {
            svg = render_svg(atlas.figure, atlas.canonical_labeling, s, opts);
        }
        summary = "template: " + ra.template_shape + "\n";
    } else {
        auto w = wo.build(atlas);
        std::vector<Highlight> hs;
        for (const auto& text : ra.scales) {
            Scale s = parse_scale(text);
            auto figs = find_scale_figures(w, s);
            if (figs.empty()) throw NotFound("no placed figure carries " + describe_scale(s));
            hs.push_back(Highlight::scale_figure(figs.front()));
        }
        for (const auto& text : ra.triads) {
            auto occ = find_triad_occurrences(w, parse_triad(text));
            if (occ.empty()) throw NotFound("no occurrence of " + text);
            hs.push_back(Highlight::triad(start_occurrence(w, parse_triad(text)), {"#1f77b4", 3.0}));
        }
        for (const auto& text : ra.modes) {
            Scale s = parse_scale(text);
            if (!is_gregorian(s.kind)) throw DomainError("mode highlight needs a Gregorian mode");
            auto path = mode_path(w, s.kind, s.root);
            if (!path) throw NotFound("no " + describe_scale(s) + " path in this window");
            hs.push_back(Highlight::mode(*path, {"#2ca02c", 4.0}));
        }
        for (const auto& text : ra.tonesets) {
            std::vector<Tone> tones;
            if (text.find('-') != std::string::npos) {
                auto st = scale_tones(parse_scale(text));
                tones.assign(st.begin(), st.end());
            } else {
                tones = parse_tone_list(text);
            }
            auto c = tones_connected(w, tones);
            if (!c.connected) throw NotFound("tones " + text + " are not connected in this window");
            hs.push_back(Highlight::tone_subgraph(c, {"#9467bd", 4.0}));
        }
        for (const auto& text : ra.plr) {
            auto colon = text.find(':');
            if (colon == std::string::npos) throw ParseError("expected <triad>:<op>", text, text.size());
            Triad t = parse_triad(text.substr(0, colon));
            auto word = parse_plr_word(text.substr(colon + 1));
            auto occ = start_occurrence(w, t);
            for (auto op : word) {
                auto next = plr_realize(w, occ, op);
                hs.push_back(Highlight::plr_move(occ, next, {"#ff7f0e", 3.0}));
                occ = next;
            }
        }
        svg = render_svg(w, hs, opts);
        std::ostringstream os;
        os << "window: " << w.columns << "x" << w.rows << " variant " << w.variant.name() << ", "
           << hs.size() << " highlights\n";
        summary = os.str();
    }
    write_output(ra.out, svg);
    if (!ra.out.empty() && ra.out != "-") {
        print_header(atlas);
        std::cout << summary;
    }
    return 0;
}

int fail(const char* code, const std::string& detail, int status) {
    std::cerr << "error: " << code << "\n" << detail << "\n";
    return status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Golden Tonnetz toolkit: exact base-figure geometry, lattice windows and queries."};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--atlas", common.atlas_path,
                   std::string("atlas file (default: $") + kAtlasEnvVar + " or the bundled atlas)");
    app.add_flag("--unicode", common.unicode, "Unicode accidentals in tone names");

    auto* verify = app.add_subcommand("verify", "validate the atlas and reproduce the enumeration counts");

    auto* enumerate = app.add_subcommand("enumerate", "list labelings passing the adjacency condition");
    std::string shape = "triangle", scale_text = "C-maj", quotient;
    enumerate->add_option("--shape", shape, "triangle|gnomon")
        ->check(CLI::IsMember({"triangle", "gnomon"}))
        ->capture_default_str();
    enumerate->add_option("--scale", scale_text, "scale, e.g. C-maj")->capture_default_str();
    enumerate->add_option("--quotient", quotient, "none|isometry (default: the atlas setting)");

    auto* extensions = app.add_subcommand("extensions", "scales admitting each gluing");
    std::string direction = "both";
    extensions->add_option("--direction", direction, "horizontal|vertical|both")
        ->check(CLI::IsMember({"horizontal", "vertical", "both"}))
        ->capture_default_str();

    auto* lattice = app.add_subcommand("lattice", "build a window and export it as JSON");
    WindowOpts lattice_w;
    lattice_w.add(lattice);
    std::string lattice_out;
    lattice->add_option("-o,--output", lattice_out, "output file (default: stdout)");

    auto* find = app.add_subcommand("find", "representability queries on a window");
    WindowOpts find_w;
    find_w.add(find, "14x8");
    std::string find_what, find_arg;
    find->add_option("what", find_what, "scale|triad|mode|toneset")
        ->required()
        ->check(CLI::IsMember({"scale", "triad", "mode", "toneset"}));
    find->add_option("query", find_arg, "C-maj | Cmaj | C-lydian | C,E,G or C-acoustic")->required();

    auto* transform = app.add_subcommand("transform", "realize a P/L/R word on a window");
    WindowOpts transform_w;
    transform_w.add(transform);
    std::string start_text, word_text;
    transform->add_option("--start", start_text, "start triad, e.g. Cmaj")->required();
    transform->add_option("--word", word_text, "word over P, L, R applied left to right")->required();

    auto* render = app.add_subcommand("render", "SVG of a template or a window with highlights");
    WindowOpts render_w;
    render_w.add(render);
    RenderArgs ra;
    render->add_option("--template", ra.template_shape, "render a template: triangle|gnomon")
        ->check(CLI::IsMember({"triangle", "gnomon"}));
    render->add_option("--label-scale", ra.scale_label, "scale labeling a template")->capture_default_str();
    render->add_option("--highlight-scale", ra.scales, "outline a scale figure (repeatable)");
    render->add_option("--highlight-triad", ra.triads, "fill a triad occurrence (repeatable)");
    render->add_option("--highlight-mode", ra.modes, "draw a mode path, e.g. C-lydian (repeatable)");
    render->add_option("--highlight-toneset", ra.tonesets, "connected tone subgraph (repeatable)");
    render->add_option("--highlight-plr", ra.plr, "P/L/R moves from a triad, e.g. Cmaj:R (repeatable)");
    render->add_option("--precision", ra.precision, "decimal places")->capture_default_str();
    render->add_option("--scale", ra.scale, "SVG units per unit length")->capture_default_str();
    render->add_option("-o,--output", ra.out, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("USAGE", e.what(), 2);
    }

    try {
        if (*verify) return run_verify(common);
        if (*enumerate) return run_enumerate(common, shape, scale_text, quotient);
        if (*extensions) return run_extensions(common, direction);
        if (*lattice) return run_lattice(common, lattice_w, lattice_out);
        if (*find) return run_find(common, find_w, find_what, find_arg);
        if (*transform) return run_transform(common, transform_w, start_text, word_text);
        if (*render) return run_render(common, render_w, ra);
    } catch (const ParseError& e) {
        return fail("PARSE_ERROR",
                    std::string(e.what()) + " (token \"" + e.token() + "\", position " +
                        std::to_string(e.position()) + ")",
                    2);
    } catch (const NotFound& e) {
        return fail("NOT_FOUND", e.what(), 1);
    } catch (const LabelConflict& e) {
        return fail("LABEL_CONFLICT", e.what(), 1);
    } catch (const AtlasError& e) {
        return fail("ATLAS_ERROR", e.what(), 1);
    } catch (const DomainError& e) {
        return fail("DOMAIN_ERROR", e.what(), 1);
    } catch (const std::exception& e) {
        return fail("INTERNAL_ERROR", e.what(), 1);
    }
    return 2;
}
