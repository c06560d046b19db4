#include "gtz/tones.hpp"

#include <algorithm>
#include <set>

namespace gtz {
namespace {

int floor_mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

// Line-of-fifths position of each natural letter, in letter order C D E F G A B.
constexpr std::array<int, 7> kLetterFifths = {0, 2, 4, -1, 1, 3, 5};
constexpr std::string_view kLetters = "CDEFGAB";

constexpr std::string_view kSharpUtf8 = "\xE2\x99\xAF";
constexpr std::string_view kFlatUtf8 = "\xE2\x99\xAD";

std::array<int, 7> kind_offsets(ScaleKind k) {
    switch (k) {
    case ScaleKind::Major:
    case ScaleKind::Ionian: return {0, 2, 4, -1, 1, 3, 5};
    case ScaleKind::NaturalMinor:
    case ScaleKind::Aeolian: return {0, 2, -3, -1, 1, -4, -2};
    case ScaleKind::Lydian: return {0, 2, 4, 6, 1, 3, 5};
    case ScaleKind::Mixolydian: return {0, 2, 4, -1, 1, 3, -2};
    case ScaleKind::Dorian: return {0, 2, -3, -1, 1, 3, -2};
    case ScaleKind::Phrygian: return {0, -5, -3, -1, 1, -4, -2};
    case ScaleKind::Locrian: return {0, -5, -3, -1, -6, -4, -2};
    case ScaleKind::Acoustic: return {0, 2, 4, 6, 1, 3, -2};
    case ScaleKind::Altered: return {0, -5, -3, -8, -6, -4, -2};
    }
    return {};
}

struct KindName {
    ScaleKind kind;
    std::string_view name;
};

constexpr std::array<KindName, 11> kKindNames = {{
    {ScaleKind::Major, "maj"},
    {ScaleKind::NaturalMinor, "min"},
    {ScaleKind::Lydian, "lydian"},
    {ScaleKind::Ionian, "ionian"},
    {ScaleKind::Mixolydian, "mixolydian"},
    {ScaleKind::Dorian, "dorian"},
    {ScaleKind::Aeolian, "aeolian"},
    {ScaleKind::Phrygian, "phrygian"},
    {ScaleKind::Locrian, "locrian"},
    {ScaleKind::Acoustic, "acoustic"},
    {ScaleKind::Altered, "altered"},
}};

std::string_view long_kind_name(ScaleKind k) {
    switch (k) {
    case ScaleKind::Major: return "Major";
    case ScaleKind::NaturalMinor: return "Minor";
    case ScaleKind::Lydian: return "Lydian";
    case ScaleKind::Ionian: return "Ionian";
    case ScaleKind::Mixolydian: return "Mixolydian";
    case ScaleKind::Dorian: return "Dorian";
    case ScaleKind::Aeolian: return "Aeolian";
    case ScaleKind::Phrygian: return "Phrygian";
    case ScaleKind::Locrian: return "Locrian";
    case ScaleKind::Acoustic: return "Acoustic";
    case ScaleKind::Altered: return "Altered";
    }
    return "?";
}

// Parses a note name at the start of `text`; returns the consumed length.
// Trailing characters are left for the caller.
std::size_t parse_note_prefix(std::string_view text, std::size_t base, Tone& out) {
    if (text.empty())
        throw ParseError("empty note name", std::string(text), base);
    auto pos = kLetters.find(text[0]);
    if (pos == std::string_view::npos)
        throw ParseError("expected note letter A-G at position " + std::to_string(base),
                         std::string(text), base);
    int sharps = 0;
    int flats = 0;
    std::size_t i = 1;
    while (i < text.size()) {
        std::string_view rest = text.substr(i);
        int dir = 0;
        std::size_t len = 0;
        if (rest[0] == '#') {
            dir = 1;
            len = 1;
        } else if (rest[0] == 'b') {
            dir = -1;
            len = 1;
        } else if (rest.starts_with(kSharpUtf8)) {
            dir = 1;
            len = kSharpUtf8.size();
        } else if (rest.starts_with(kFlatUtf8)) {
            dir = -1;
            len = kFlatUtf8.size();
        } else {
            break;
        }
        if ((dir > 0 && flats > 0) || (dir < 0 && sharps > 0))
            throw ParseError("mixed sharps and flats at position " + std::to_string(base + i),
                             std::string(text), base + i);
        (dir > 0 ? sharps : flats) += 1;
        i += len;
    }
    out.fifth_index = kLetterFifths[pos] + 7 * (sharps - flats);
    return i;
}

} // namespace

int Tone::semitone_class() const noexcept { return floor_mod(7 * fifth_index, 12); }

int Tone::letter() const noexcept {
    // F C G D A E B are letters 3 0 4 1 5 2 6.
    return floor_mod(4 * fifth_index, 7);
}

int Tone::accidentals() const noexcept {
    int base = floor_mod(fifth_index + 1, 7) - 1;
    return (fifth_index - base) / 7;
}

Tone parse_tone(std::string_view text) {
    Tone t;
    std::size_t used = parse_note_prefix(text, 0, t);
    if (used != text.size())
        throw ParseError("unexpected character at position " + std::to_string(used),
                         std::string(text), used);
    return t;
}

std::string render_tone(Tone t, bool unicode) {
    std::string out(1, kLetters[static_cast<std::size_t>(t.letter())]);
    int acc = t.accidentals();
    for (int i = 0; i < std::abs(acc); ++i) {
        if (unicode)
            out += acc > 0 ? kSharpUtf8 : kFlatUtf8;
        else
            out += acc > 0 ? '#' : 'b';
    }
    return out;
}

Tone transpose_fifths(Tone t, int k) noexcept { return Tone{t.fifth_index + k}; }

bool is_gregorian(ScaleKind k) noexcept {
    return std::find(kGregorianModes.begin(), kGregorianModes.end(), k) != kGregorianModes.end();
}

std::string_view kind_name(ScaleKind k) noexcept {
    for (const auto& kn : kKindNames)
        if (kn.kind == k) return kn.name;
    return "?";
}

ScaleKind parse_kind(std::string_view text) {
    for (const auto& kn : kKindNames)
        if (kn.name == text) return kn.kind;
    throw ParseError("unknown scale kind '" + std::string(text) + "'", std::string(text), 0);
}

std::array<Tone, 7> scale_tones(const Scale& s) {
    auto off = kind_offsets(s.kind);
    std::array<Tone, 7> out;
    for (std::size_t i = 0; i < 7; ++i)
        out[i] = transpose_fifths(s.root, off[i]);
    return out;
}

Scale parse_scale(std::string_view text) {
    auto dash = text.find('-');
    if (dash == std::string_view::npos)
        throw ParseError("scale name needs '<note>-<kind>'", std::string(text), text.size());
    Tone root;
    std::size_t used = parse_note_prefix(text.substr(0, dash), 0, root);
    if (used != dash)
        throw ParseError("unexpected character at position " + std::to_string(used),
                         std::string(text), used);
    try {
        return Scale{root, parse_kind(text.substr(dash + 1))};
    } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + " at position " + std::to_string(dash + 1),
                         std::string(text), dash + 1);
    }
}

std::string render_scale(const Scale& s) {
    return render_tone(s.root) + "-" + std::string(kind_name(s.kind));
}

std::string describe_scale(const Scale& s) {
    return render_tone(s.root) + " " + std::string(long_kind_name(s.kind));
}

std::array<Tone, 3> triad_tones(const Triad& t) {
    int third = t.quality == TriadQuality::Major ? 4 : -3;
    return {t.root, transpose_fifths(t.root, third), transpose_fifths(t.root, 1)};
}

Triad parse_triad(std::string_view text) {
    Tone root;
    std::size_t used = parse_note_prefix(text, 0, root);
    std::string_view q = text.substr(used);
    if (q == "maj") return Triad{root, TriadQuality::Major};
    if (q == "min") return Triad{root, TriadQuality::Minor};
    throw ParseError("triad needs suffix 'maj' or 'min' at position " + std::to_string(used),
                     std::string(text), used);
}

std::string render_triad(const Triad& t) {
    return render_tone(t.root) + (t.quality == TriadQuality::Major ? "maj" : "min");
}

std::string describe_triad(const Triad& t) {
    return render_tone(t.root) + (t.quality == TriadQuality::Major ? " Major" : " Minor");
}

std::array<DiatonicTriad, 7> diatonic_triads(const Scale& s) {
    if (s.kind != ScaleKind::Major && s.kind != ScaleKind::NaturalMinor)
        throw DomainError("diatonic_triads: unsupported scale kind '" +
                          std::string(kind_name(s.kind)) + "'");
    auto tones = scale_tones(s);
    std::array<DiatonicTriad, 7> out;
    for (int k = 0; k < 7; ++k) {
        Tone root = tones[static_cast<std::size_t>(k)];
        Tone third = tones[static_cast<std::size_t>((k + 2) % 7)];
        Tone fifth = tones[static_cast<std::size_t>((k + 4) % 7)];
        int t3 = third.fifth_index - root.fifth_index;
        int t5 = fifth.fifth_index - root.fifth_index;
        ChordQuality q;
        if (t3 == 4 && t5 == 1)
            q = ChordQuality::Major;
        else if (t3 == -3 && t5 == 1)
            q = ChordQuality::Minor;
        else if (t3 == -3 && t5 == -6)
            q = ChordQuality::Diminished;
        else
            throw std::logic_error("diatonic_triads: unexpected interval structure");
        out[static_cast<std::size_t>(k)] = DiatonicTriad{k + 1, {root, third, fifth}, q};
    }
    return out;
}

std::string_view roman_numeral(int degree) {
    static constexpr std::array<std::string_view, 7> kRoman = {"I",  "II", "III", "IV",
                                                               "V", "VI", "VII"};
    if (degree < 1 || degree > 7) throw std::out_of_range("degree out of range");
    return kRoman[static_cast<std::size_t>(degree - 1)];
}

std::string_view quality_name(ChordQuality q) noexcept {
    switch (q) {
    case ChordQuality::Major: return "Major";
    case ChordQuality::Minor: return "Minor";
    case ChordQuality::Diminished: return "Diminished";
    }
    return "?";
}

Triad plr_apply(const Triad& t, PlrOp op) noexcept {
    const bool major = t.quality == TriadQuality::Major;
    const TriadQuality flipped = major ? TriadQuality::Minor : TriadQuality::Major;
    switch (op) {
    case PlrOp::P: return Triad{t.root, flipped};
    case PlrOp::R: return Triad{transpose_fifths(t.root, major ? 3 : -3), flipped};
    case PlrOp::L: return Triad{transpose_fifths(t.root, major ? 4 : -4), flipped};
    }
    return t;
}

std::vector<Triad> plr_word(const Triad& start, std::span<const PlrOp> word) {
    std::vector<Triad> out;
    out.reserve(word.size() + 1);
    out.push_back(start);
    for (PlrOp op : word)
        out.push_back(plr_apply(out.back(), op));
    return out;
}

std::vector<PlrOp> parse_plr_word(std::string_view text) {
    std::vector<PlrOp> out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
        case 'P': out.push_back(PlrOp::P); break;
        case 'L': out.push_back(PlrOp::L); break;
        case 'R': out.push_back(PlrOp::R); break;
        default:
            throw ParseError("PLR word: unexpected character at position " + std::to_string(i),
                             std::string(text), i);
        }
    }
    return out;
}

char plr_letter(PlrOp op) noexcept {
    switch (op) {
    case PlrOp::P: return 'P';
    case PlrOp::L: return 'L';
    case PlrOp::R: return 'R';
    }
    return '?';
}

std::vector<Scale> scales_containing(std::span<const Tone> required, ScaleKind kind, int lo,
                                     int hi) {
    std::vector<Scale> out;
    for (int r = lo; r <= hi; ++r) {
        Scale s{Tone{r}, kind};
        auto tones = scale_tones(s);
        std::set<Tone> set(tones.begin(), tones.end());
        bool ok = std::all_of(required.begin(), required.end(),
                              [&](Tone t) { return set.contains(t); });
        if (ok) out.push_back(s);
    }
    return out;
}

Tone relative_minor_root(Tone major_root) noexcept { return transpose_fifths(major_root, 3); }

} // namespace gtz
