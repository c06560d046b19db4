#pragma once

// The 7-point base figure: template geometry, the adjacency and golden-shape
// conditions as predicates, exhaustive labeling enumeration, and the atlas
// that fixes the canonical figure and its two gluing maps.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtz/golden.hpp"
#include "gtz/tones.hpp"

namespace gtz {

enum class ShapeKind { Triangle, Gnomon };
std::string_view shape_kind_name(ShapeKind k) noexcept;

/// Template degrees run 1..7; the canonical labeling puts scale degree k on
/// template degree k.
struct FigureTemplate {
    ShapeKind shape_kind = ShapeKind::Triangle;
    std::array<CycPoint, 7> points;
    std::vector<std::pair<int, int>> edges;
    int apex_degree = 3;

    const CycPoint& point(int degree) const { return points.at(static_cast<std::size_t>(degree - 1)); }
    bool has_edge(int a, int b) const;
};

/// Scale degree (index 0..6) -> template degree (1..7).
struct Labeling {
    std::array<int, 7> degree_of{1, 2, 3, 4, 5, 6, 7};

    static Labeling identity() { return {}; }
    bool is_bijective() const;
    /// Template degree -> scale index 0..6. Requires a bijection.
    std::array<int, 7> inverse() const;

    auto operator<=>(const Labeling&) const = default;
};

struct Condition1Result {
    bool pass = false;
    /// First consecutive scale-tone pair whose degrees are not joined.
    std::optional<std::pair<Tone, Tone>> witness;
};

/// Chords tested by the golden-shape condition.
inline constexpr std::array<int, 5> kGoldenChordDegrees = {1, 3, 4, 5, 6};

struct ConditionReport {
    Condition1Result condition1;
    std::map<int, ShapeClass> condition2;  // chord degree -> shape
    bool condition2_pass = false;

    bool pass() const { return condition1.pass && condition2_pass; }
};

Condition1Result check_condition1(const FigureTemplate& t, const Labeling& lab, const Scale& s);
ConditionReport check_condition2(const FigureTemplate& t, const Labeling& lab, const Scale& s);
/// Shape of the stacked-third chord on scale degree 1..7.
ShapeClass chord_shape(const FigureTemplate& t, const Labeling& lab, int degree);

/// Degree permutations that preserve all squared distances and the edge set.
std::vector<std::array<int, 7>> self_isometries(const FigureTemplate& t);

enum class SymmetryQuotient { None, Isometry };
std::string_view quotient_name(SymmetryQuotient q) noexcept;
SymmetryQuotient parse_quotient(std::string_view text);

/// Every labeling passing the adjacency condition. Under a quotient, one
/// representative per orbit (the lexicographically smallest); sorted.
std::vector<Labeling> enumerate_labelings(const FigureTemplate& t, const Scale& s,
                                          SymmetryQuotient q);
std::vector<Labeling> filter_golden(const FigureTemplate& t, const Scale& s,
                                    const std::vector<Labeling>& labs);

/// A gluing map plus the tones it identifies between the two figures.
struct Glue {
    Isometry map;
    std::vector<Tone> shared;
};

struct FigureAtlas {
    FigureTemplate figure;
    Labeling canonical_labeling;
    Glue h_glue;  // C-major figure -> G-major figure
    Glue v_glue;  // C-major figure -> C-minor figure
    /// Degree-preserving relabeling from the major figure to its parallel minor.
    std::map<Tone, Tone> minor_relabel;
    SymmetryQuotient symmetry_quotient = SymmetryQuotient::Isometry;

    /// Gnomon template with its own canonical labeling.
    std::optional<FigureTemplate> gnomon;
    Labeling gnomon_labeling;

    int version = 1;
    std::string content_hash;  // "sha256:<hex>"
};

enum class GlueDirection { Horizontal, Vertical };

struct GluingCandidate {
    Scale major;
    std::optional<Scale> relative_minor;
};

std::vector<GluingCandidate> gluing_candidates(GlueDirection d, const FigureAtlas& atlas);

struct ExtensionCompatibility {
    bool horizontal = false;
    bool vertical = false;
    std::optional<CycPoint> translation;
};

/// Whether a labeled figure can carry the lattice gluings: a translation
/// taking scale degrees (7,1,2,3) onto (3,4,5,6), and a horizontal mirror
/// through degrees 1 and 5 with degrees 6,3,7 collinear on a parallel line.
ExtensionCompatibility extension_compatibility(const FigureTemplate& t, const Labeling& lab);

struct AtlasCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct AtlasReport {
    std::vector<AtlasCheck> checks;
    bool ok() const;
};

AtlasReport validate_atlas(const FigureAtlas& atlas);

/// Tones of `s` placed by `lab`, indexed by template degree.
std::array<Tone, 7> tones_by_degree(const Labeling& lab, const Scale& s);

} // namespace gtz
