#pragma once

#include "json.hpp"

#include <fstream>
#include <stdexcept>

inline const nlohmann::json& fixtures() {
    static const nlohmann::json j = [] {
        std::ifstream in(SKW_FIXTURE_FILE);
        if (!in) throw std::runtime_error("cannot open " SKW_FIXTURE_FILE);
        return nlohmann::json::parse(in);
    }();
    return j;
}
