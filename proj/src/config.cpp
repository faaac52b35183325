#include "skw/config.hpp"

#include "skw/error.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace skw {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::uint64_t parse_uint(const std::string& v, const std::string& where) {
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError(where + ": expected a non-negative integer, got '" + v + "'");
    try {
        return std::stoull(v);
    } catch (const std::exception&) {
        throw UsageError(where + ": integer out of range '" + v + "'");
    }
}

} // namespace

Config parse_config(const std::string& text, const std::string& origin) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    for (std::size_t no = 1; std::getline(in, line); ++no) {
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = origin + ":" + std::to_string(no);
        auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError(where + ": expected key = value");
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key == "p")
            cfg.p = static_cast<unsigned>(parse_uint(val, where));
        else if (key == "k")
            cfg.k = static_cast<unsigned>(parse_uint(val, where));
        else if (key == "seed")
            cfg.seed = parse_uint(val, where);
        else
            throw UsageError(where + ": unknown key '" + key + "'");
    }
    return cfg;
}

Config load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path.string());
}

std::filesystem::path resolve_cache_dir(const std::optional<std::filesystem::path>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("SKWLAB_CACHE_DIR"); env && *env) return env;
    const char* home = std::getenv("HOME");
    if (!home || !*home) throw EnvironmentError("no cache directory: set SKWLAB_CACHE_DIR or HOME");
    return std::filesystem::path(home) / ".cache" / "skwlab";
}

} // namespace skw
