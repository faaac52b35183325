#pragma once

#include "skw/field.hpp"
#include "skw/linalg.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace skw {

// Explicit matrix representation with a Z/2-grading on the underlying space.
struct GradedRep {
    FieldPtr F;
    std::size_t dim = 0;
    std::vector<Matrix> gens;  // row convention
    std::vector<int> gen_parity;
    std::vector<int> parity;   // per basis vector
    std::vector<std::string> gen_labels;
    std::string provenance;

    // Each generator maps parity e to e + |gen|.
    bool parity_consistent() const;
    // The diagonal operator +1 on even, -1 on odd basis vectors.
    Matrix parity_operator() const;
};

constexpr std::uint32_t kCacheVersion = 1;

// "SKWL", version, p, k, modulus, D, G, G dense D x D matrices (k bytes per
// entry), then an optional "PRTY" trailer with D + G parity bytes.
void write_cache(const GradedRep& rep, const std::filesystem::path& path);
GradedRep read_cache(const std::filesystem::path& path);

} // namespace skw
