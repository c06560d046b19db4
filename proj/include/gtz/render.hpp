#pragma once

// Deterministic SVG output for templates and windows. Exact coordinates are
// converted to decimals only here.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtz/figure.hpp"
#include "gtz/tonnetz.hpp"

namespace gtz {

struct HighlightStyle {
    std::string color = "#d62728";
    double stroke_width = 3.0;
};

/// An overlay on a window. Payload indices refer to the rendered window.
struct Highlight {
    enum class Kind { ScaleFigure, TriadOccurrence, ModePath, ToneSubgraph, PlrMove };

    Kind kind = Kind::ScaleFigure;
    std::vector<std::size_t> figures;                         // ScaleFigure
    std::vector<std::size_t> vertices;                        // triangle(s), path, subgraph
    std::vector<std::pair<std::size_t, std::size_t>> edges;   // ToneSubgraph
    HighlightStyle style;

    static Highlight scale_figure(std::size_t figure, HighlightStyle style = {});
    static Highlight triad(const Occurrence& occ, HighlightStyle style = {});
    static Highlight mode(const std::vector<std::size_t>& path, HighlightStyle style = {});
    static Highlight tone_subgraph(const Connectivity& c, HighlightStyle style = {});
    /// Source triangle followed by target triangle.
    static Highlight plr_move(const Occurrence& from, const Occurrence& to, HighlightStyle style = {});
};

std::string_view highlight_kind_name(Highlight::Kind k) noexcept;

struct RenderOptions {
    double scale = 60.0;   // SVG units per unit length
    int precision = 6;     // decimal places
    bool unicode = false;  // Unicode accidentals in labels
};

/// Template with its edge set; vertices labeled by `s` under `lab`, or by
/// degree number when no scale is given.
std::string render_svg(const FigureTemplate& t, const Labeling& lab, const std::optional<Scale>& s,
                       const RenderOptions& opts = {});

/// Window with overlays drawn in input order. Throws DomainError on a
/// dangling highlight reference before producing any output.
std::string render_svg(const TonnetzWindow& w, const std::vector<Highlight>& highlights,
                       const RenderOptions& opts = {});

} // namespace gtz
