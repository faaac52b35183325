#pragma once

#include "skw/envmod.hpp"
#include "skw/meataxe.hpp"
#include "skw/pchar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace skw {

// Z^0_chi(lambda) = U_chi(g_0) (x)_{U_chi(b_0)} k_lambda inside any family
// (for gl(n) this is the whole algebra).
InducedModule gl_baby_verma(AlgebraPtr g, const PChar& chi, const Weight& lambda);
// Z_chi(lambda) = U_chi(g) (x)_{U_chi(b_0 + g_1)} k_lambda for ptilde / pder.
InducedModule ptilde_baby_verma(AlgebraPtr g, const PChar& chi, const Weight& lambda);

// p~(2) Cartan coordinates H = H1 - H2 and z = H1 + H2.
struct HzPair {
    Elem H = 0, z = 0;
};
HzPair to_hz(const Field& F, Elem h1, Elem h2);
std::pair<Elem, Elem> from_hz(const Field& F, HzPair v);

// K_chi(lambda) = U_chi(p~) (x)_{U_chi(p~_0 + p~_1)} L^0, with L^0 the simple
// head of the g_0 baby Verma, or the one-dimensional k_c when `one_dim_c` is
// given.
InducedModule kac_module_p2(AlgebraPtr g, const PChar& chi, const Weight& lambda,
                            std::optional<Elem> one_dim_c = std::nullopt);
// Basis index of Y (x) k_c in the one-dimensional Kac module.
std::size_t kac_y_vector(const InducedModule& K);

// prod_{i<j} (l_i - l_j + j - i - 1), on eps-coordinates
Elem omega(const Vec& eps, const Field& F);
// prod_{i<j} (l_i + l_j) prod_{k=1}^{p-1} (l_i - l_j - k)
Elem phi(const Vec& eps, const Field& F);
// Cartan-basis weight -> eps-coordinates (identity for ptilde and q).
Vec eps_coordinates(const LieSuperalgebra& g, const Weight& lambda);

// The product of odd positive (resp. negative) root vectors X_{+-(e_i+e_j)},
// i < j ascending; the vector y (x) v is y applied to the generator.
Vec y_vector(const InducedModule& Z);
// x y v = s v; throws ModuleError when x y v is not a multiple of v.
Elem xy_scalar(const InducedModule& Z);

struct TopPieceReport {
    std::size_t piece_dim = 0;    // dimension of the graded piece [N]
    std::size_t spin_dim = 0;     // g_0-submodule generated by y (x) v
    bool weight_ok = false;       // y (x) v has weight lambda + delta
    bool killed_by_n0_plus = false;
    bool inside_piece = false;
    SimplicityCertificate g0_certificate;  // [N] as a g_0-module
};
TopPieceReport top_piece(const InducedModule& Z, std::uint64_t seed);

struct CartanModule {
    AlgebraPtr h;           // h_0 + h_1 rebased: h_0, then h_1^lambda, then complement
    Matrix gram;            // f_lambda on g.cartan_odd
    std::size_t radical_dim = 0;
    Matrix isotropic;       // rows: basis of h_1^lambda in cartan_odd coordinates
    Matrix complement;      // rows: basis of the complement
    InducedModule V;        // over h
    InducingData borel;     // V over b = h + n^+ of g, n^+ acting by zero
};

// f_lambda(Z1, Z2) = lambda([Z1, Z2]) on h_1.
Matrix f_lambda(const LieSuperalgebra& g, const Weight& lambda);
// Maximal isotropic subspace of a symmetric form (rows); throws FieldTooSmall
// when its dimension falls short of the algebraic-closure value.
Matrix maximal_isotropic(const Field& F, const Matrix& gram, std::size_t* radical_dim = nullptr);
// No vector outside W keeps W + <v> isotropic (exhaustive over W^perp / W).
bool is_maximal_isotropic(const Field& F, const Matrix& gram, const Matrix& W);

CartanModule queer_cartan_module(AlgebraPtr g, const PChar& chi, const Weight& lambda);
InducedModule queer_baby_verma(AlgebraPtr g, const PChar& chi, const Weight& lambda,
                               CartanModule* cartan_out = nullptr);

struct P2Case {
    HzPair chi_hz;
    Elem chi_f = 0;
    HzPair lambda_hz;
    bool chi_p0_zero = false;  // chi vanishes on p_0 = sl(2)
    bool expect_irreducible = false;
    std::size_t expect_dim = 0;
    std::size_t dim = 0;
    Verdict verdict = Verdict::Reducible;
    bool y_submodule = false;  // Y (x) k_c spans a submodule (one-dimensional case)
    bool match = false;
    SimplicityCertificate certificate;
};

// Every lambda in Lambda(chi) for p~(2) with chi(E) = 0.
std::vector<P2Case> classify_p2(AlgebraPtr g, const PChar& chi, std::uint64_t seed);

} // namespace skw
