#pragma once

// Spelled pitch theory on the line of fifths: tones, scales, modes, triads
// and the Neo-Riemannian P/L/R involutions. No geometry lives here.

#include <array>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gtz/error.hpp"

namespace gtz {

/// Spelled pitch class. C = 0, G = +1, F = -1, one sharp = +7.
struct Tone {
    int fifth_index = 0;

    /// Semitone class in [0, 12).
    int semitone_class() const noexcept;
    /// Letter index C=0, D=1, ..., B=6.
    int letter() const noexcept;
    /// Sharps minus flats.
    int accidentals() const noexcept;

    auto operator<=>(const Tone&) const = default;
};

Tone parse_tone(std::string_view text);
std::string render_tone(Tone t, bool unicode = false);
Tone transpose_fifths(Tone t, int k) noexcept;

enum class ScaleKind {
    Major,
    NaturalMinor,
    Lydian,
    Ionian,
    Mixolydian,
    Dorian,
    Aeolian,
    Phrygian,
    Locrian,
    Acoustic,
    Altered,
};

inline constexpr std::array<ScaleKind, 7> kGregorianModes = {
    ScaleKind::Lydian,  ScaleKind::Ionian,   ScaleKind::Mixolydian, ScaleKind::Dorian,
    ScaleKind::Aeolian, ScaleKind::Phrygian, ScaleKind::Locrian,
};

bool is_gregorian(ScaleKind k) noexcept;
std::string_view kind_name(ScaleKind k) noexcept;
ScaleKind parse_kind(std::string_view text);

struct Scale {
    Tone root;
    ScaleKind kind = ScaleKind::Major;

    auto operator<=>(const Scale&) const = default;
};

/// Degree-ordered spelled tones (degree 1 first).
std::array<Tone, 7> scale_tones(const Scale& s);

/// `<note>-<kind>`, e.g. "Eb-min", "C-lydian".
Scale parse_scale(std::string_view text);
std::string render_scale(const Scale& s);
/// Human form, e.g. "Eb Major".
std::string describe_scale(const Scale& s);

enum class TriadQuality { Major, Minor };
enum class ChordQuality { Major, Minor, Diminished };

struct Triad {
    Tone root;
    TriadQuality quality = TriadQuality::Major;

    auto operator<=>(const Triad&) const = default;
};

/// root, third, fifth.
std::array<Tone, 3> triad_tones(const Triad& t);
/// `<note>maj` or `<note>min`.
Triad parse_triad(std::string_view text);
std::string render_triad(const Triad& t);
std::string describe_triad(const Triad& t);

struct DiatonicTriad {
    int degree = 1;  // 1..7
    std::array<Tone, 3> tones;
    ChordQuality quality = ChordQuality::Major;
};

/// Seven stacked-third chords of a major or natural-minor scale.
/// Throws DomainError for any other kind.
std::array<DiatonicTriad, 7> diatonic_triads(const Scale& s);

std::string_view roman_numeral(int degree);
std::string_view quality_name(ChordQuality q) noexcept;

enum class PlrOp { P, L, R };

Triad plr_apply(const Triad& t, PlrOp op) noexcept;
/// Trajectory of a left-to-right fold; size is word.size() + 1.
std::vector<Triad> plr_word(const Triad& start, std::span<const PlrOp> word);
std::vector<PlrOp> parse_plr_word(std::string_view text);
char plr_letter(PlrOp op) noexcept;

/// Scales of `kind` whose spelled tone set contains every required tone,
/// roots taken from [lo, hi] on the line of fifths, ordered by root.
std::vector<Scale> scales_containing(std::span<const Tone> required, ScaleKind kind,
                                     int lo = -7, int hi = 7);

/// Root of the natural minor sharing a major scale's tones.
Tone relative_minor_root(Tone major_root) noexcept;

} // namespace gtz
