#pragma once

#include "skw/field.hpp"
#include "skw/linalg.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace skw {

enum class Family { PTilde, PDer, Q, SQ, GL, Custom };

std::string family_name(Family f);
Family parse_family(const std::string& s);
bool is_periplectic(Family f);
bool is_queer(Family f);

struct BasisVector {
    std::size_t index = 0;
    int parity = 0;
    bool has_zdeg = false;
    int zdeg = 0;
    std::string label;
    // cartan, pos, neg, odd_cartan, odd_pos, odd_neg
    std::string kind;
    // weight as coefficients of eps_1..eps_n (zero for Cartan elements)
    std::vector<int> root;
    Matrix matrix;
};

class LieSuperalgebra {
public:
    Family family = Family::Custom;
    unsigned n = 0;
    FieldPtr F;
    std::size_t msize = 0;      // matrices are msize x msize
    std::size_t even_rows = 0;  // block split even_rows | msize - even_rows
    std::vector<BasisVector> basis;
    // [x_i, x_j] = sum_m sc[(i*dim + j)*dim + m] x_m
    Vec sc;
    // even i: coordinates of x_i^{[p]}; odd i: coordinates of [x_i, x_i]/2
    std::vector<Vec> pmap;
    bool pmap_closed = true;
    std::string pmap_witness;

    std::vector<std::size_t> cartan_even, cartan_odd;
    std::vector<std::size_t> even_pos, even_neg, odd_pos, odd_neg;
    std::vector<std::size_t> even, odd;
    std::vector<std::size_t> pos_nilpotent, neg_nilpotent;
    std::map<std::string, std::size_t> roots;
    bool degenerate = false;
    std::uint64_t id = 0;

    std::size_t dim() const { return basis.size(); }
    int parity(std::size_t i) const { return basis[i].parity; }
    const Elem* bracket_basis(std::size_t i, std::size_t j) const { return sc.data() + (i * dim() + j) * dim(); }
    Vec bracket(const Vec& x, const Vec& y) const;
    Vec unit(std::size_t i) const;
    Matrix matrix_of(const Vec& x) const;
    std::optional<Vec> coords(const Matrix& M) const;
    // Row m of the result is [x, x_m]; row vectors y map to y * ad = [x, y].
    Matrix ad(const Vec& x) const;
    // position of a basis index inside `even` (p-characters are indexed this way)
    std::size_t even_slot(std::size_t i) const;
    std::size_t index_of(const std::string& label) const;

    // Supercommutator of two supermatrices of the given parities.
    Matrix supercommutator(const Matrix& A, int pa, const Matrix& B, int pb) const;
    int matrix_parity(const Matrix& M) const;  // 0, 1, or -1 if mixed

    // internal: coordinate solver
    std::vector<std::size_t> solver_pivots;
    Matrix solver_transform;
    Matrix flat_basis;
};

using AlgebraPtr = std::shared_ptr<const LieSuperalgebra>;

AlgebraPtr build_algebra(Family f, unsigned n, FieldPtr F);
// Generic constructor from explicit supermatrices; computes structure
// constants, p-map table and index sets from the basis kinds.
AlgebraPtr build_from_basis(Family f, unsigned n, FieldPtr F, std::size_t msize, std::size_t even_rows,
                            std::vector<BasisVector> basis);

struct AxiomCheck {
    std::string name;
    bool pass = true;
    std::size_t checked = 0;
    std::string witness;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool pass() const;
};

AxiomReport verify_algebra(const LieSuperalgebra& g);

// Conjugation by diag(g, g^{-T}) (periplectic), diag(g, g) (queer) or g (gl).
Vec adjoint_conjugate(const LieSuperalgebra& g, const Matrix& gmat, const Vec& x);
// Matrix of x -> Ad(gmat) x on coordinates (row convention).
Matrix adjoint_matrix(const LieSuperalgebra& g, const Matrix& gmat);

// Greedy Lie generating subset of the span of `within` (indices of g), preferring
// simple root vectors.
std::vector<std::size_t> generating_subset(const LieSuperalgebra& g, const std::vector<std::size_t>& within);

} // namespace skw
