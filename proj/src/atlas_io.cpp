#include "gtz/atlas_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#ifndef GTZ_BUNDLED_ATLAS
#define GTZ_BUNDLED_ATLAS "data/atlas.json"
#endif

namespace gtz {
namespace {

using nlohmann::json;

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw AtlasError(std::string("atlas: missing field '") + key + "'");
    return j.at(key);
}

ShapeKind parse_shape_kind(const std::string& s) {
    if (s == "triangle") return ShapeKind::Triangle;
    if (s == "gnomon") return ShapeKind::Gnomon;
    throw AtlasError("atlas: unknown shape_kind '" + s + "'");
}

FigureTemplate template_from_json(const json& j) {
    FigureTemplate t;
    t.shape_kind = parse_shape_kind(require(j, "shape_kind").get<std::string>());
    t.apex_degree = require(j, "apex_degree").get<int>();
    const json& pts = require(j, "points");
    for (int d = 1; d <= 7; ++d) {
        auto key = std::to_string(d);
        if (!pts.contains(key)) throw AtlasError("atlas: missing point for degree " + key);
        t.points[static_cast<std::size_t>(d - 1)] = point_from_json(pts.at(key));
    }
    for (const auto& e : require(j, "edges")) {
        if (!e.is_array() || e.size() != 2) throw AtlasError("atlas: edge must be a pair");
        t.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return t;
}

Labeling labeling_from_json(const json& j) {
    Labeling lab;
    auto tones = scale_tones(Scale{Tone{0}, ScaleKind::Major});
    for (std::size_t k = 0; k < 7; ++k) {
        auto name = render_tone(tones[k]);
        if (!j.contains(name)) throw AtlasError("atlas: canonical_labeling lacks " + name);
        lab.degree_of[k] = j.at(name).get<int>();
    }
    return lab;
}

Glue glue_from_json(const json& j) {
    Glue g;
    auto kind = require(j, "kind").get<std::string>();
    CycPoint off = point_from_json(require(j, "offset"));
    if (kind == "Translation")
        g.map = Isometry::translation(off);
    else if (kind == "ReflectThenTranslate")
        g.map = Isometry::reflection(off);
    else
        throw AtlasError("atlas: unknown isometry kind '" + kind + "'");
    for (const auto& t : require(j, "shared")) g.shared.push_back(parse_tone(t.get<std::string>()));
    return g;
}

} // namespace

json point_to_json(const CycPoint& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(format_rational(c));
    return out;
}

CycPoint point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw AtlasError("point must be an array of 4 rationals");
    return {parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>()),
            parse_rational(j[2].get<std::string>()), parse_rational(j[3].get<std::string>())};
}

std::string sha256_hex(std::string_view bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += kHex[md[i] >> 4];
        out += kHex[md[i] & 0xF];
    }
    return out;
}

FigureAtlas parse_atlas(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("atlas: ") + e.what(), "atlas", e.byte);
    }
    try {
        FigureAtlas a;
        a.version = require(j, "version").get<int>();
        if (a.version != 1) throw AtlasError("atlas: unsupported version " + std::to_string(a.version));
        a.figure = template_from_json(j);
        a.canonical_labeling = labeling_from_json(require(j, "canonical_labeling"));
        a.h_glue = glue_from_json(require(j, "h_glue"));
        a.v_glue = glue_from_json(require(j, "v_glue"));
        a.symmetry_quotient = parse_quotient(require(j, "symmetry_quotient").get<std::string>());
        for (const auto& [from, to] : require(j, "minor_relabel").items())
            a.minor_relabel.emplace(parse_tone(from), parse_tone(to.get<std::string>()));
        if (j.contains("gnomon")) {
            a.gnomon = template_from_json(j.at("gnomon"));
            a.gnomon_labeling = labeling_from_json(require(j.at("gnomon"), "canonical_labeling"));
        }
        a.content_hash = "sha256:" + sha256_hex(text);
        return a;
    } catch (const json::exception& e) {
        throw AtlasError(std::string("atlas: ") + e.what());
    }
}

FigureAtlas load_atlas(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw AtlasError("cannot open atlas file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_atlas(ss.str());
}

std::filesystem::path default_atlas_path() {
    if (const char* env = std::getenv(kAtlasEnvVar); env && *env) return env;
    return GTZ_BUNDLED_ATLAS;
}

} // namespace gtz
