#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "gtz/figure.hpp"

namespace gtz {

/// Environment variable that overrides the bundled atlas path.
inline constexpr const char* kAtlasEnvVar = "GOLDEN_TONNETZ_ATLAS";

nlohmann::json point_to_json(const CycPoint& p);
CycPoint point_from_json(const nlohmann::json& j);

/// Parses an atlas document; content_hash is the SHA-256 of `text`.
FigureAtlas parse_atlas(std::string_view text);
FigureAtlas load_atlas(const std::filesystem::path& path);
/// Env override if set, else the atlas shipped with the sources.
std::filesystem::path default_atlas_path();

std::string sha256_hex(std::string_view bytes);

} // namespace gtz
