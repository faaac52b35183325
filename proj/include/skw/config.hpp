#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace skw {

// Defaults read from a file of "key = value" lines ('#' starts a comment).
// Recognised keys: p, k, seed.
struct Config {
    std::optional<unsigned> p, k;
    std::optional<std::uint64_t> seed;
};

Config load_config(const std::filesystem::path& path);
Config parse_config(const std::string& text, const std::string& origin = "config");

// Flag, then SKWLAB_CACHE_DIR, then ~/.cache/skwlab.
std::filesystem::path resolve_cache_dir(const std::optional<std::filesystem::path>& flag);

} // namespace skw
