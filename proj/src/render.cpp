#include "gtz/render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace gtz {
namespace {

std::string fixed(double v, int precision) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, precision);
    std::string s(buf, res.ptr);
    if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
    return s;
}

std::string xml_escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

// Maps exact points to SVG user space (y axis flipped).
class Canvas {
public:
    Canvas(const std::vector<CycPoint>& pts, const RenderOptions& opts) : opts_(opts) {
        // Extremes are picked with exact comparisons, then converted once.
        std::size_t lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            if (compare_real(pts[i], pts[lo_x]) < 0) lo_x = i;
            if (compare_real(pts[i], pts[hi_x]) > 0) hi_x = i;
            if (compare_imag(pts[i], pts[lo_y]) < 0) lo_y = i;
            if (compare_imag(pts[i], pts[hi_y]) > 0) hi_y = i;
        }
        double min_x = pts[lo_x].to_complex().real() * opts.scale;
        double max_x = pts[hi_x].to_complex().real() * opts.scale;
        double min_y = -pts[hi_y].to_complex().imag() * opts.scale;
        double max_y = -pts[lo_y].to_complex().imag() * opts.scale;
        double w = std::max(max_x - min_x, opts.scale);
        double h = std::max(max_y - min_y, opts.scale);
        double pad = 0.05 * std::max(w, h);
        view_ = {min_x - pad, min_y - pad, (max_x - min_x) + 2 * pad, (max_y - min_y) + 2 * pad};
    }

    std::string num(double v) const { return fixed(v, opts_.precision); }
    std::string x(const CycPoint& p) const { return num(p.to_complex().real() * opts_.scale); }
    std::string y(const CycPoint& p) const { return num(-p.to_complex().imag() * opts_.scale); }
    std::string xy(const CycPoint& p) const { return x(p) + "," + y(p); }

    std::string header() const {
        std::ostringstream os;
        os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(view_[0]) << ' '
           << num(view_[1]) << ' ' << num(view_[2]) << ' ' << num(view_[3]) << "\" width=\"" << num(view_[2])
           << "\" height=\"" << num(view_[3]) << "\">\n";
        return os.str();
    }

    double radius() const { return opts_.scale * 0.16; }
    double font() const { return opts_.scale * 0.18; }

private:
    RenderOptions opts_;
    std::array<double, 4> view_{};
};

// Gift wrapping with exact orientation tests; counter-clockwise, collinear
// boundary points dropped.
std::vector<CycPoint> convex_hull(const std::vector<CycPoint>& pts) {
    std::size_t start = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        int c = compare_real(pts[i], pts[start]);
        if (c < 0 || (c == 0 && compare_imag(pts[i], pts[start]) < 0)) start = i;
    }
    std::vector<CycPoint> hull;
    std::size_t cur = start;
    do {
        hull.push_back(pts[cur]);
        std::size_t next = cur == 0 ? 1 : 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i == cur || pts[i] == pts[cur]) continue;
            int o = orientation(pts[cur], pts[next], pts[i]);
            if (o < 0 || (o == 0 && sq_distance(pts[cur], pts[i]) > sq_distance(pts[cur], pts[next])))
                next = i;
        }
        cur = next;
    } while (cur != start && hull.size() <= pts.size());
    return hull;
}

void emit_line(std::ostringstream& os, const Canvas& cv, const CycPoint& a, const CycPoint& b,
               const std::string& attrs) {
    os << "    <line x1=\"" << cv.x(a) << "\" y1=\"" << cv.y(a) << "\" x2=\"" << cv.x(b) << "\" y2=\""
       << cv.y(b) << "\" " << attrs << "/>\n";
}

void emit_polygon(std::ostringstream& os, const Canvas& cv, const std::vector<CycPoint>& pts,
                  const std::string& attrs) {
    os << "    <polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << cv.xy(pts[i]);
    os << "\" " << attrs << "/>\n";
}

void emit_vertex(std::ostringstream& os, const Canvas& cv, const CycPoint& p, const std::string& label) {
    os << "    <circle cx=\"" << cv.x(p) << "\" cy=\"" << cv.y(p) << "\" r=\"" << cv.num(cv.radius())
       << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "    <text x=\"" << cv.x(p) << "\" y=\"" << cv.y(p) << "\" font-size=\"" << cv.num(cv.font())
       << "\" text-anchor=\"middle\" dominant-baseline=\"central\" font-family=\"sans-serif\">"
       << xml_escape(label) << "</text>\n";
}

std::string stroke_attrs(const HighlightStyle& s, const Canvas& cv, bool fill) {
    return "fill=\"" + (fill ? xml_escape(s.color) + "\" fill-opacity=\"0.2" : std::string("none")) +
           "\" stroke=\"" + xml_escape(s.color) + "\" stroke-width=\"" + cv.num(s.stroke_width) + "\"";
}

void validate(const TonnetzWindow& w, const Highlight& h, std::size_t index) {
    auto fail = [&](const std::string& why) {
        throw DomainError("highlight " + std::to_string(index) + " (" +
                          std::string(highlight_kind_name(h.kind)) + "): " + why);
    };
    for (auto f : h.figures)
        if (f >= w.figures.size()) fail("figure index " + std::to_string(f) + " out of range");
    for (auto v : h.vertices)
        if (v >= w.vertices.size()) fail("vertex index " + std::to_string(v) + " out of range");
    for (auto [a, b] : h.edges)
        if (a >= w.vertices.size() || b >= w.vertices.size() || !w.adjacent(a, b))
            fail("edge " + std::to_string(a) + "-" + std::to_string(b) + " is not a window edge");
    switch (h.kind) {
    case Highlight::Kind::ScaleFigure:
        if (h.figures.empty()) fail("no figure given");
        break;
    case Highlight::Kind::TriadOccurrence:
        if (h.vertices.size() != 3) fail("expected 3 vertices");
        break;
    case Highlight::Kind::PlrMove:
        if (h.vertices.size() != 6) fail("expected 6 vertices");
        break;
    case Highlight::Kind::ModePath:
        if (h.vertices.size() < 2) fail("expected a path of at least 2 vertices");
        for (std::size_t i = 0; i + 1 < h.vertices.size(); ++i)
            if (!w.adjacent(h.vertices[i], h.vertices[i + 1])) fail("path step is not a window edge");
        break;
    case Highlight::Kind::ToneSubgraph:
        if (h.vertices.empty()) fail("no vertices given");
        break;
    }
}

} // namespace

std::string_view highlight_kind_name(Highlight::Kind k) noexcept {
    switch (k) {
    case Highlight::Kind::ScaleFigure: return "scale-figure";
    case Highlight::Kind::TriadOccurrence: return "triad";
    case Highlight::Kind::ModePath: return "mode-path";
    case Highlight::Kind::ToneSubgraph: return "tone-subgraph";
    case Highlight::Kind::PlrMove: return "plr-move";
    }
    return "?";
}

Highlight Highlight::scale_figure(std::size_t figure, HighlightStyle style) {
    Highlight h;
    h.kind = Kind::ScaleFigure;
    h.figures = {figure};
    h.style = std::move(style);
    return h;
}

Highlight Highlight::triad(const Occurrence& occ, HighlightStyle style) {
    Highlight h;
    h.kind = Kind::TriadOccurrence;
    h.vertices.assign(occ.vertices.begin(), occ.vertices.end());
    h.style = std::move(style);
    return h;
}

Highlight Highlight::mode(const std::vector<std::size_t>& path, HighlightStyle style) {
    Highlight h;
    h.kind = Kind::ModePath;
    h.vertices = path;
    h.style = std::move(style);
    return h;
}

Highlight Highlight::tone_subgraph(const Connectivity& c, HighlightStyle style) {
    Highlight h;
    h.kind = Kind::ToneSubgraph;
    h.vertices = c.witness;
    h.edges = c.witness_edges;
    h.style = std::move(style);
    return h;
}

Highlight Highlight::plr_move(const Occurrence& from, const Occurrence& to, HighlightStyle style) {
    Highlight h;
    h.kind = Kind::PlrMove;
    h.vertices.assign(from.vertices.begin(), from.vertices.end());
    h.vertices.insert(h.vertices.end(), to.vertices.begin(), to.vertices.end());
    h.style = std::move(style);
    return h;
}

std::string render_svg(const FigureTemplate& t, const Labeling& lab, const std::optional<Scale>& s,
                       const RenderOptions& opts) {
    std::vector<CycPoint> pts(t.points.begin(), t.points.end());
    Canvas cv(pts, opts);
    std::ostringstream os;
    os << cv.header();
    os << "  <g id=\"edges\" stroke=\"black\" stroke-width=\"2\">\n";
    for (auto [a, b] : t.edges) emit_line(os, cv, t.point(a), t.point(b), "");
    os << "  </g>\n  <g id=\"vertices\">\n";
    std::array<std::string, 7> labels;
    if (s) {
        auto tones = tones_by_degree(lab, *s);
        for (std::size_t i = 0; i < 7; ++i) labels[i] = render_tone(tones[i], opts.unicode);
    } else {
        for (std::size_t i = 0; i < 7; ++i) labels[i] = std::to_string(i + 1);
    }
    for (int d = 1; d <= 7; ++d) emit_vertex(os, cv, t.point(d), labels[static_cast<std::size_t>(d - 1)]);
    os << "  </g>\n</svg>\n";
    return os.str();
}

std::string render_svg(const TonnetzWindow& w, const std::vector<Highlight>& highlights,
                       const RenderOptions& opts) {
    for (std::size_t i = 0; i < highlights.size(); ++i) validate(w, highlights[i], i);

    std::vector<CycPoint> pts;
    for (const auto& v : w.vertices) pts.push_back(v.point);
    Canvas cv(pts, opts);
    auto at = [&](std::size_t v) -> const CycPoint& { return w.vertices[v].point; };

    std::ostringstream os;
    os << cv.header();
    os << "  <g id=\"edges\" stroke=\"black\" stroke-width=\"1.5\">\n";
    for (auto [a, b] : w.edges) emit_line(os, cv, at(a), at(b), "");
    os << "  </g>\n";

    for (std::size_t i = 0; i < highlights.size(); ++i) {
        const auto& h = highlights[i];
        os << "  <g id=\"highlight-" << i << "\" class=\"" << highlight_kind_name(h.kind) << "\">\n";
        switch (h.kind) {
        case Highlight::Kind::ScaleFigure:
            for (auto fi : h.figures) {
                const auto& f = w.figures[fi];
                std::vector<CycPoint> outline;
                for (auto v : f.vertex) outline.push_back(at(v));
                emit_polygon(os, cv, convex_hull(outline), stroke_attrs(h.style, cv, true));
            }
            break;
        case Highlight::Kind::TriadOccurrence:
            emit_polygon(os, cv, {at(h.vertices[0]), at(h.vertices[1]), at(h.vertices[2])},
                         stroke_attrs(h.style, cv, true));
            break;
        case Highlight::Kind::PlrMove:
            emit_polygon(os, cv, {at(h.vertices[0]), at(h.vertices[1]), at(h.vertices[2])},
                         stroke_attrs(h.style, cv, false));
            emit_polygon(os, cv, {at(h.vertices[3]), at(h.vertices[4]), at(h.vertices[5])},
                         stroke_attrs(h.style, cv, true));
            break;
        case Highlight::Kind::ModePath:
            for (std::size_t k = 0; k + 1 < h.vertices.size(); ++k)
                emit_line(os, cv, at(h.vertices[k]), at(h.vertices[k + 1]), stroke_attrs(h.style, cv, false));
            break;
        case Highlight::Kind::ToneSubgraph:
            for (auto [a, b] : h.edges) emit_line(os, cv, at(a), at(b), stroke_attrs(h.style, cv, false));
            for (auto v : h.vertices)
                os << "    <circle cx=\"" << cv.x(at(v)) << "\" cy=\"" << cv.y(at(v)) << "\" r=\""
                   << cv.num(cv.radius() * 1.4) << "\" " << stroke_attrs(h.style, cv, false) << "/>\n";
            break;
        }
        os << "  </g>\n";
    }

    os << "  <g id=\"vertices\">\n";
    for (const auto& v : w.vertices) emit_vertex(os, cv, v.point, render_tone(v.tone, opts.unicode));
    os << "  </g>\n</svg>\n";
    return os.str();
}

} // namespace gtz
