#include "skw/pchar.hpp"

#include "skw/error.hpp"

#include <algorithm>

namespace skw {

PChar PChar::zero(AlgebraPtr g) {
    PChar c;
    c.values.assign(g->even.size(), 0);
    c.g = std::move(g);
    return c;
}

Elem PChar::at(std::size_t i) const {
    if (g->parity(i)) return 0;
    return values[g->even_slot(i)];
}

Elem PChar::eval(const Vec& x) const {
    const Field& F = *g->F;
    Elem acc = 0;
    for (std::size_t s = 0; s < g->even.size(); ++s) acc = F.add(acc, F.mul(values[s], x[g->even[s]]));
    return acc;
}

bool PChar::is_zero() const {
    return skw::is_zero(values);
}

Matrix gram_matrix(const PChar& theta, int part) {
    const LieSuperalgebra& g = *theta.g;
    const Field& F = *g.F;
    const auto& idx = part ? g.odd : g.even;
    Matrix G(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) {
            const Elem* br = g.bracket_basis(idx[a], idx[b]);
            Elem acc = 0;
            for (std::size_t s = 0; s < g.even.size(); ++s)
                if (theta.values[s]) acc = F.add(acc, F.mul(theta.values[s], br[g.even[s]]));
            G.at(a, b) = acc;
        }
    return G;
}

std::string to_string_u128(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

u128 skw_term(unsigned p, std::size_t b0, std::size_t b1) {
    u128 t = 1;
    for (std::size_t i = 0; i < b0 / 2; ++i) t *= p;
    for (std::size_t i = 0; i < (b1 + 1) / 2; ++i) t *= 2;
    return t;
}

IsotropyReport b_values(const PChar& theta) {
    const LieSuperalgebra& g = *theta.g;
    const Field& F = *g.F;
    IsotropyReport r;
    r.b0 = rank(F, gram_matrix(theta, 0));
    r.b1 = rank(F, gram_matrix(theta, 1));
    const std::size_t d0 = g.even.size(), d1 = g.odd.size();
    r.centralizer_even = d0 - r.b0;
    r.centralizer_odd = d1 - r.b1;
    r.iso_even = (d0 + r.centralizer_even) / 2;
    r.iso_odd = (d1 + r.centralizer_odd) / 2;
    r.skw_term = skw_term(F.p(), r.b0, r.b1);
    return r;
}

u128 skw_bound(const std::vector<PChar>& thetas) {
    if (thetas.empty()) throw UsageError("skw_bound: empty collection");
    u128 best = 0;
    for (const auto& t : thetas) best = std::max(best, b_values(t).skw_term);
    return best;
}

std::optional<std::pair<std::size_t, std::size_t>> weight_violation(Family f, const Field& F, const Vec& w,
                                                                    Regularity mode) {
    const bool queer = is_queer(f);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (queer && F.in_prime_field(w[i])) return std::pair{i, i};
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (F.in_prime_field(F.sub(w[i], w[j]))) return std::pair{i, j};
            if (queer && mode == Regularity::StronglyRegular && F.in_prime_field(F.add(w[i], w[j])))
                return std::pair{i, j};
        }
    }
    return std::nullopt;
}

Weight weight_from_eps(const LieSuperalgebra& g, const Vec& eps) {
    const Field& F = *g.F;
    if (eps.size() != g.n) throw UsageError("weight needs " + std::to_string(g.n) + " coordinates");
    Weight out;
    for (std::size_t h : g.cartan_even) {
        const Matrix& M = g.basis[h].matrix;
        Elem acc = 0;
        for (std::size_t k = 0; k < g.n; ++k) acc = F.add(acc, F.mul(M.at(k, k), eps[k]));
        out.push_back(acc);
    }
    return out;
}

GeneratedChar gen_regular_semisimple(AlgebraPtr g, const Vec& weights, Regularity mode) {
    const Field& F = *g->F;
    if (auto bad = weight_violation(g->family, F, weights, mode)) {
        auto [i, j] = *bad;
        throw UsageError("weights violate regularity at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
    GeneratedChar out{PChar::zero(g), weight_from_eps(*g, weights)};
    for (std::size_t c = 0; c < g->cartan_even.size(); ++c) {
        Elem l = out.lambda[c];
        out.chi.values[g->even_slot(g->cartan_even[c])] = F.frob_inv(F.sub(F.frob(l), l));
    }
    return out;
}

PChar gen_regular_nilpotent(AlgebraPtr g) {
    if (!is_periplectic(g->family)) throw UsageError("regular nilpotent characters are defined for ptilde and pder only");
    PChar chi = PChar::zero(g);
    for (std::size_t i : g->even_neg) {
        const auto& r = g->basis[i].root;
        for (std::size_t k = 0; k + 1 < r.size(); ++k)
            if (r[k] == -1 && r[k + 1] == 1) chi.values[g->even_slot(i)] = 1;
    }
    return chi;
}

std::optional<Vec> find_regular_weights(Family f, const Field& F, unsigned n, Regularity mode, std::mt19937_64& rng,
                                        std::size_t attempts) {
    for (std::size_t a = 0; a < attempts; ++a) {
        Vec w(n);
        for (auto& x : w) x = static_cast<Elem>(rng() % F.q());
        if (!weight_violation(f, F, w, mode)) return w;
    }
    return std::nullopt;
}

std::vector<Weight> lambda_set(const PChar& chi) {
    const LieSuperalgebra& g = *chi.g;
    const Field& F = *g.F;
    std::vector<std::vector<Elem>> roots;
    for (std::size_t h : g.cartan_even) {
        if (g.pmap[h] != g.unit(h)) throw AlgebraError("Cartan element " + g.basis[h].label + " is not toral");
        roots.push_back(F.artin_schreier_roots(F.frob(chi.at(h))));
        if (roots.back().empty()) return {};
    }
    std::vector<Weight> out{Weight{}};
    for (const auto& rs : roots) {
        std::vector<Weight> next;
        for (const auto& w : out)
            for (Elem r : rs) {
                next.push_back(w);
                next.back().push_back(r);
            }
        out = std::move(next);
    }
    return out;
}

bool in_lambda_set(const PChar& chi, const Weight& lambda) {
    const LieSuperalgebra& g = *chi.g;
    const Field& F = *g.F;
    if (lambda.size() != g.cartan_even.size()) return false;
    for (std::size_t c = 0; c < lambda.size(); ++c) {
        std::size_t h = g.cartan_even[c];
        // lambda(h)^p - lambda(h^{[p]}) = chi(h)^p; h^{[p]} = h for the toral basis
        Elem lhs = F.sub(F.frob(lambda[c]), lambda[c]);
        if (lhs != F.frob(chi.at(h))) return false;
    }
    return true;
}

PChar coadjoint(const PChar& theta, const Matrix& gmat) {
    const LieSuperalgebra& g = *theta.g;
    const Field& F = *g.F;
    auto inv = inverse(F, gmat);
    if (!inv) throw UsageError("conjugating matrix is singular");
    Matrix A = adjoint_matrix(g, *inv);
    PChar out = PChar::zero(theta.g);
    for (std::size_t s = 0; s < g.even.size(); ++s)
        out.values[s] = theta.eval(Vec(A.row(g.even[s]), A.row(g.even[s]) + g.dim()));
    return out;
}

std::vector<PChar> enumerate_rational(AlgebraPtr g) {
    const unsigned p = g->F->p();
    const std::size_t d0 = g->even.size();
    double total = 1;
    for (std::size_t i = 0; i < d0; ++i) total *= p;
    if (total > 1e6) throw UsageError("exhaustive enumeration limited to p^{dim g_0} <= 10^6");
    std::vector<PChar> out;
    out.reserve(static_cast<std::size_t>(total));
    PChar cur = PChar::zero(g);
    for (;;) {
        out.push_back(cur);
        std::size_t i = d0;
        while (i > 0) {
            --i;
            if (++cur.values[i] < p) break;
            cur.values[i] = 0;
            if (i == 0) return out;
        }
        if (d0 == 0) return out;
    }
}

PChar random_pchar(AlgebraPtr g, std::mt19937_64& rng) {
    PChar c = PChar::zero(g);
    for (auto& v : c.values) v = static_cast<Elem>(rng() % g->F->q());
    return c;
}

} // namespace skw
