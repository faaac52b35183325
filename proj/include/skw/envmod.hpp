#pragma once

#include "skw/pchar.hpp"
#include "skw/rep.hpp"
#include "skw/superalg.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace skw {

// A module V over the subalgebra spanned by the basis vectors `sub` of g.
struct InducingData {
    std::vector<std::size_t> sub;
    std::size_t dim = 1;
    std::vector<Matrix> action;  // aligned with sub, row convention
    std::vector<int> parity;     // per V basis vector

    // One-dimensional even module: x acts by value(x).
    static InducingData character(const LieSuperalgebra& g, std::vector<std::size_t> sub,
                                  const std::function<Elem(std::size_t)>& value);
};

struct InduceOptions {
    // Ordered complement; default: every other basis vector, even ones first.
    std::optional<std::vector<std::size_t>> complement;
};

// U_chi(s) (x)_{U_chi(sub)} V for s = sub + complement, with PBW basis
// (monomial over the complement) x (basis of V).
class InducedModule {
public:
    AlgebraPtr g;
    PChar chi;
    InducingData V;
    std::vector<std::size_t> comp;
    std::vector<std::size_t> span;  // sub and comp, sorted
    std::vector<std::uint8_t> bound;  // p - 1 (even) or 1 (odd) per complement slot
    std::vector<std::vector<std::uint8_t>> monos;  // graded-lex order
    std::vector<Matrix> action;  // per basis vector of g; empty outside span
    std::vector<int> parity;

    std::size_t dim() const { return monos.size() * V.dim; }
    std::size_t index(std::size_t mono, std::size_t j) const { return mono * V.dim + j; }
    std::size_t mono_of(std::size_t idx) const { return idx / V.dim; }
    std::size_t mono_position(const std::vector<std::uint8_t>& e) const;
    std::size_t degree(std::size_t mono) const;
    std::size_t odd_degree(std::size_t mono) const;
    bool covers(std::size_t i) const { return !action[i].data.empty(); }
    const Matrix& rho(std::size_t i) const;
    Matrix rho(const Vec& x) const;
    // Generators restricted to `idx` (default: a generating subset of span).
    GradedRep to_rep(std::vector<std::size_t> idx = {}) const;

    std::vector<std::size_t> radix_code;   // mixed-radix code -> position
    std::vector<std::size_t> radix_weight;
    std::vector<std::size_t> sub_pos, comp_pos;  // per g index, npos if absent
};

InducedModule induce(AlgebraPtr g, const InducingData& V, const PChar& chi, InduceOptions opt = {});

// Apply word[0] word[1] ... word[r-1] to the module basis vector `idx`
// (rightmost letter first) by direct rewriting, without the memo tables.
Vec straighten(const InducedModule& M, const std::vector<std::size_t>& word, std::size_t idx);

// The module as inducing data over its span.
InducingData as_inducing(const InducedModule& M);

struct RepCheck {
    std::string name;
    bool pass = true;
    std::size_t checked = 0;
    std::string witness;
};

struct RepReport {
    std::vector<RepCheck> checks;
    bool pass() const;
};

// Bracket compatibility, p-power relations, odd squares and parity, on
// every covered basis element.
RepReport verify_representation(const InducedModule& M);
// The same checks for raw matrices indexed like g's basis (empty = absent).
RepReport verify_representation(const LieSuperalgebra& g, const PChar& chi, const std::vector<Matrix>& action,
                                const std::vector<int>& parity);

} // namespace skw
