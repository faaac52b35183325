#pragma once

#include "skw/superalg.hpp"

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace skw {

// A linear functional on the even part, stored by its values on g.even.
struct PChar {
    AlgebraPtr g;
    Vec values;

    static PChar zero(AlgebraPtr g);
    // Value on basis vector i of g (zero for odd i).
    Elem at(std::size_t i) const;
    // Value on an arbitrary coefficient vector.
    Elem eval(const Vec& x) const;
    bool is_zero() const;
};

using Weight = Vec;  // values on g.cartan_even, in that order

// Entry (i, j) = theta([x_i, x_j]) over the even (part 0) or odd (part 1) basis.
Matrix gram_matrix(const PChar& theta, int part);

using u128 = unsigned __int128;
std::string to_string_u128(u128 v);

struct IsotropyReport {
    std::size_t b0 = 0, b1 = 0;
    std::size_t centralizer_even = 0, centralizer_odd = 0;
    std::size_t iso_even = 0, iso_odd = 0;
    u128 skw_term = 1;
};

IsotropyReport b_values(const PChar& theta);
u128 skw_term(unsigned p, std::size_t b0, std::size_t b1);
// Maximum skw_term over a nonempty collection.
u128 skw_bound(const std::vector<PChar>& thetas);

enum class Regularity { Regular, StronglyRegular };

// The first (i, j) breaking the separation constraints, if any.  j == i
// flags a single weight in F_p (queer families).
std::optional<std::pair<std::size_t, std::size_t>> weight_violation(Family f, const Field& F, const Vec& weights,
                                                                    Regularity mode);

struct GeneratedChar {
    PChar chi;
    Weight lambda;
};

// Weights-first construction: chi(h) = frobinv(lambda(h)^p - lambda(h)) on the
// Cartan, zero elsewhere; `weights` are the eps-coordinates lambda_1..lambda_n.
GeneratedChar gen_regular_semisimple(AlgebraPtr g, const Vec& weights, Regularity mode = Regularity::Regular);
// chi(X_{-alpha}) = 1 on simple alpha, zero elsewhere (periplectic families).
PChar gen_regular_nilpotent(AlgebraPtr g);
// Seeded search for weights satisfying the constraints.
std::optional<Vec> find_regular_weights(Family f, const Field& F, unsigned n, Regularity mode, std::mt19937_64& rng,
                                        std::size_t attempts = 10000);

// Lambda(chi) in lexicographic order on the Cartan coordinates; empty when the
// field has no Artin-Schreier roots for some coordinate.
std::vector<Weight> lambda_set(const PChar& chi);
// lambda evaluated on eps-coordinates -> values on the Cartan basis.
Weight weight_from_eps(const LieSuperalgebra& g, const Vec& eps);
bool in_lambda_set(const PChar& chi, const Weight& lambda);

// theta -> theta o Ad(gmat)^{-1}
PChar coadjoint(const PChar& theta, const Matrix& gmat);

// Every F_p-rational theta, in lexicographic order of the value vector.
// Requires p^{dim g_0} <= 10^6.
std::vector<PChar> enumerate_rational(AlgebraPtr g);
PChar random_pchar(AlgebraPtr g, std::mt19937_64& rng);

} // namespace skw
