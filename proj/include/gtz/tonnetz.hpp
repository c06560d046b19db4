#pragma once

// Finite windows of the glued lattice and the representability queries run
// on them. Cell (0,0) holds the C-major base figure; columns grow sharpward
// by fifths, rows grow upward. Odd rows hold mirrored figures.

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gtz/figure.hpp"

namespace gtz {

struct LatticeVariant {
    enum class Horizontal { FifthShift, SelfRepeat };
    enum class Vertical { RelativeMinorReflect, MajorReflect };

    Horizontal horizontal = Horizontal::FifthShift;
    Vertical vertical = Vertical::RelativeMinorReflect;

    static LatticeVariant golden() { return {}; }
    bool is_golden() const noexcept {
        return horizontal == Horizontal::FifthShift && vertical == Vertical::RelativeMinorReflect;
    }
    std::string name() const;

    friend bool operator==(const LatticeVariant&, const LatticeVariant&) = default;
};

struct PlacedFigure {
    int column = 0;
    int row = 0;
    Isometry transform;
    Scale scale;
    Labeling labeling;                 // scale index -> template degree
    std::array<Tone, 7> tones;         // by template degree
    std::array<std::size_t, 7> vertex; // by template degree

    /// Window vertex carrying scale index k (0..6).
    std::size_t vertex_of_index(int k) const {
        return vertex[static_cast<std::size_t>(labeling.degree_of[static_cast<std::size_t>(k % 7)] - 1)];
    }
};

struct WindowVertex {
    CycPoint point;
    Tone tone;
};

struct TonnetzWindow {
    LatticeVariant variant;
    int columns = 0;
    int rows = 0;
    int first_column = 0;
    int first_row = 0;
    std::string atlas_hash;

    std::vector<WindowVertex> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // sorted, first < second
    std::vector<PlacedFigure> figures;                        // row-major, bottom row first
    std::vector<std::vector<std::size_t>> adjacency;

    bool adjacent(std::size_t a, std::size_t b) const;
    std::vector<std::size_t> vertices_with_tone(Tone t) const;
    /// Index of the figure at a cell, if inside the window.
    std::optional<std::size_t> figure_at(int column, int row) const;
};

/// Cell range of an extent: columns [-(c-1)/2, c-1-(c-1)/2], rows [-r/2, r-1-r/2].
std::pair<int, int> column_range(int columns);
std::pair<int, int> row_range(int rows);

TonnetzWindow build_window(const FigureAtlas& atlas, LatticeVariant variant, int columns, int rows);

/// Window export document; byte-stable for identical inputs.
nlohmann::json window_to_json(const TonnetzWindow& w);

/// Figures carrying the scale's tone set with its tonic as the figure's
/// first degree; a major and its relative minor are told apart by tonic.
std::vector<std::size_t> find_scale_figures(const TonnetzWindow& w, const Scale& s);

/// The 15 spelled majors (roots -7..7) and their relative natural minors.
std::vector<Scale> spelled_key_domain();
std::set<Scale> representable_scales(const TonnetzWindow& w);

struct FigureRef {
    std::size_t figure = 0;
    int chord_degree = 1;
};

struct Occurrence {
    std::array<Tone, 3> tones;                // query order
    std::array<std::size_t, 3> vertices;      // aligned with tones
    ShapeClass shape = ShapeClass::Other;
    std::vector<FigureRef> figure_refs;
    std::optional<Triad> triad;
};

/// Vertex triples carrying exactly these spelled tones and forming one of a
/// placed figure's chords I, III, IV, V, VI. Sorted by vertex triple.
std::vector<Occurrence> find_tone_triple_occurrences(const TonnetzWindow& w,
                                                     const std::array<Tone, 3>& tones);
std::vector<Occurrence> find_triad_occurrences(const TonnetzWindow& w, const Triad& t);

/// Neighboring occurrence of the transformed triad sharing the two common
/// tones' vertices. Throws NotFound.
Occurrence plr_realize(const TonnetzWindow& w, const Occurrence& occ, PlrOp op);

/// Cell distance between the closest figures of two occurrences.
int figure_distance(const TonnetzWindow& w, const Occurrence& a, const Occurrence& b);

/// Vertices v1..v7 carrying the mode's degrees in order, consecutive ones
/// joined by edges. nullopt when the window holds no such path.
std::optional<std::vector<std::size_t>> mode_path(const TonnetzWindow& w, ScaleKind kind, Tone root);

struct Connectivity {
    bool connected = false;
    std::vector<std::size_t> witness;                              // one vertex per tone
    std::vector<std::pair<std::size_t, std::size_t>> witness_edges; // induced edges
    std::optional<Tone> missing;
};

Connectivity tones_connected(const TonnetzWindow& w, const std::vector<Tone>& tones);

} // namespace gtz
