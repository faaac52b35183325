#include "skw/verma.hpp"

#include "skw/error.hpp"
#include "skw/kernels.hpp"

#include <algorithm>

namespace skw {

namespace {

void require_lambda(const PChar& chi, const Weight& lambda) {
    if (!in_lambda_set(chi, lambda)) throw UsageError("weight is not in Lambda(chi)");
}

void require_nplus_zero(const PChar& chi) {
    for (std::size_t i : chi.g->even_pos)
        if (chi.at(i)) throw UsageError("chi does not vanish on n_0^+ (" + chi.g->basis[i].label + ")");
}

std::function<Elem(std::size_t)> weight_fn(const LieSuperalgebra& g, const Weight& lambda) {
    std::vector<Elem> val(g.dim(), 0);
    for (std::size_t c = 0; c < g.cartan_even.size(); ++c) val[g.cartan_even[c]] = lambda[c];
    return [val](std::size_t i) { return val[i]; };
}

std::vector<std::size_t> concat(std::initializer_list<const std::vector<std::size_t>*> parts) {
    std::vector<std::size_t> out;
    for (auto* p : parts) out.insert(out.end(), p->begin(), p->end());
    return out;
}

std::size_t root_index(const LieSuperalgebra& g, const std::string& key) {
    auto it = g.roots.find(key);
    if (it == g.roots.end()) throw AlgebraError("missing root vector " + key);
    return it->second;
}

std::string pair_key(std::size_t i, std::size_t j, bool negative) {
    std::string a = "e" + std::to_string(i + 1), b = "e" + std::to_string(j + 1);
    return negative ? "-" + a + "-" + b : a + "+" + b;
}

Matrix extend_to_basis(const Field& F, const Matrix& W, std::size_t dim) {
    Echelon E(F, dim);
    for (std::size_t r = 0; r < W.rows; ++r) E.insert(Vec(W.row(r), W.row(r) + dim));
    std::vector<Vec> extra;
    for (std::size_t k = 0; k < dim; ++k) {
        Vec e(dim, 0);
        e[k] = 1;
        if (E.insert(e)) {
            extra.emplace_back(dim, 0);
            extra.back()[k] = 1;
        }
    }
    return Matrix::from_rows(extra, dim);
}

Elem form(const Field& F, const Matrix& S, const Vec& a, const Vec& b) {
    Vec t = vecmat(F, a, S);
    Elem acc = 0;
    for (std::size_t i = 0; i < b.size(); ++i) acc = F.add(acc, F.mul(t[i], b[i]));
    return acc;
}

// The simple head of a module generated by basis vector `gen` whose other
// weight spaces avoid the weight of `gen`: the quotient by the largest
// submodule inside the kernel of the coordinate functional of `gen`.
InducingData simple_head(const InducedModule& M, std::size_t gen) {
    const Field& F = *M.g->F;
    InducingData V = as_inducing(M);
    GradedRep rep = M.to_rep();
    Vec phi(M.dim(), 0);
    phi[gen] = 1;
    Echelon D = spin(rep, {phi}, true);
    if (D.rank() == M.dim()) return V;
    Matrix rad = right_nullspace(F, D.matrix());
    Echelon R(F, M.dim());
    for (std::size_t r = 0; r < rad.rows; ++r) R.insert(Vec(rad.row(r), rad.row(r) + rad.cols));
    std::vector<char> pivot(M.dim(), 0);
    for (std::size_t c : R.pivots()) pivot[c] = 1;
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < M.dim(); ++c)
        if (!pivot[c]) keep.push_back(c);
    InducingData H;
    H.sub = V.sub;
    H.dim = keep.size();
    for (std::size_t c : keep) H.parity.push_back(V.parity[c]);
    for (const Matrix& A : V.action) {
        Matrix Q(H.dim, H.dim);
        for (std::size_t a = 0; a < H.dim; ++a) {
            Vec w(A.row(keep[a]), A.row(keep[a]) + A.cols);
            R.reduce(w);
            for (std::size_t b = 0; b < H.dim; ++b) Q.at(a, b) = w[keep[b]];
        }
        H.action.push_back(std::move(Q));
    }
    return H;
}

} // namespace

InducedModule gl_baby_verma(AlgebraPtr g, const PChar& chi, const Weight& lambda) {
    require_nplus_zero(chi);
    require_lambda(chi, lambda);
    auto sub = concat({&g->cartan_even, &g->even_pos});
    InduceOptions opt;
    opt.complement = g->even_neg;
    return induce(g, InducingData::character(*g, sub, weight_fn(*g, lambda)), chi, opt);
}

InducedModule ptilde_baby_verma(AlgebraPtr g, const PChar& chi, const Weight& lambda) {
    if (!is_periplectic(g->family)) throw UsageError("ptilde_baby_verma needs a periplectic family");
    require_nplus_zero(chi);
    require_lambda(chi, lambda);
    auto sub = concat({&g->cartan_even, &g->even_pos, &g->odd_pos});
    return induce(g, InducingData::character(*g, sub, weight_fn(*g, lambda)), chi);
}

HzPair to_hz(const Field& F, Elem h1, Elem h2) {
    return {F.sub(h1, h2), F.add(h1, h2)};
}

std::pair<Elem, Elem> from_hz(const Field& F, HzPair v) {
    Elem half = F.inv(2);
    return {F.mul(half, F.add(v.H, v.z)), F.mul(half, F.sub(v.z, v.H))};
}

InducedModule kac_module_p2(AlgebraPtr g, const PChar& chi, const Weight& lambda, std::optional<Elem> one_dim_c) {
    if (g->family != Family::PTilde || g->n != 2) throw UsageError("Kac modules are built for ptilde(2)");
    const Field& F = *g->F;
    if (chi.at(g->even_pos.at(0))) throw UsageError("chi(E) must vanish");
    require_lambda(chi, lambda);
    std::vector<std::size_t> g0 = concat({&g->cartan_even, &g->even_pos, &g->even_neg});
    InducingData V;
    if (one_dim_c) {
        auto [h1, h2] = from_hz(F, {0, *one_dim_c});
        if (lambda[0] != h1 || lambda[1] != h2) throw UsageError("k_c needs lambda(H) = 0 and lambda(z) = c");
        Weight w{h1, h2};
        V = InducingData::character(*g, concat({&g0, &g->odd_pos}), weight_fn(*g, w));
    } else {
        InducedModule Z0 = gl_baby_verma(g, chi, lambda);
        V = simple_head(Z0, Z0.index(0, 0));
        for (std::size_t i : g->odd_pos) {
            V.sub.push_back(i);
            V.action.push_back(Matrix(V.dim, V.dim));
        }
    }
    InduceOptions opt;
    opt.complement = g->odd_neg;
    return induce(g, V, chi, opt);
}

std::size_t kac_y_vector(const InducedModule& K) {
    std::vector<std::uint8_t> e(K.comp.size(), 0);
    e.at(0) = 1;
    return K.index(K.mono_position(e), 0);
}

Elem omega(const Vec& l, const Field& F) {
    Elem acc = 1;
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j) {
            Elem f = F.add(F.sub(l[i], l[j]), F.from_int(static_cast<long long>(j) - static_cast<long long>(i) - 1));
            acc = F.mul(acc, f);
        }
    return acc;
}

Elem phi(const Vec& l, const Field& F) {
    Elem acc = 1;
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j) {
            acc = F.mul(acc, F.add(l[i], l[j]));
            Elem d = F.sub(l[i], l[j]);
            for (unsigned k = 1; k < F.p(); ++k) acc = F.mul(acc, F.sub(d, F.from_int(k)));
        }
    return acc;
}

Vec eps_coordinates(const LieSuperalgebra& g, const Weight& lambda) {
    if (g.cartan_even.size() == g.n) return lambda;
    if (g.cartan_even.size() + 1 != g.n) throw UsageError("unsupported Cartan layout");
    // lambda on H_i - H_{i+1}; normalize eps_1 = 0
    const Field& F = *g.F;
    Vec e(g.n, 0);
    for (std::size_t i = 0; i + 1 < g.n; ++i) e[i + 1] = F.sub(e[i], lambda[i]);
    return e;
}

Vec y_vector(const InducedModule& Z) {
    const LieSuperalgebra& g = *Z.g;
    Vec v(Z.dim(), 0);
    v[Z.index(0, 0)] = 1;
    for (std::size_t i = g.n; i-- > 0;)
        for (std::size_t j = g.n; j-- > i + 1;) v = vecmat(*g.F, v, Z.rho(root_index(g, pair_key(i, j, true))));
    return v;
}

Elem xy_scalar(const InducedModule& Z) {
    const LieSuperalgebra& g = *Z.g;
    Vec v = y_vector(Z);
    for (std::size_t i = g.n; i-- > 0;)
        for (std::size_t j = g.n; j-- > i + 1;) v = vecmat(*g.F, v, Z.rho(root_index(g, pair_key(i, j, false))));
    const std::size_t gen = Z.index(0, 0);
    for (std::size_t k = 0; k < v.size(); ++k)
        if (k != gen && v[k]) throw ModuleError("x y v is not a multiple of v");
    return v[gen];
}

TopPieceReport top_piece(const InducedModule& Z, std::uint64_t seed) {
    const LieSuperalgebra& g = *Z.g;
    const Field& F = *g.F;
    TopPieceReport r;
    const std::size_t N = g.odd_neg.size();
    std::vector<std::size_t> piece;
    for (std::size_t idx = 0; idx < Z.dim(); ++idx)
        if (Z.odd_degree(Z.mono_of(idx)) == N) piece.push_back(idx);
    r.piece_dim = piece.size();

    Vec yv = y_vector(Z);
    r.weight_ok = !is_zero(yv);
    for (std::size_t h : g.cartan_even) {
        Elem lam = Z.V.action[Z.sub_pos[h]].at(0, 0);
        Elem delta = 0;
        for (std::size_t i = 0; i < g.n; ++i)
            for (std::size_t j = i + 1; j < g.n; ++j)
                delta = F.sub(delta, F.add(g.basis[h].matrix.at(i, i), g.basis[h].matrix.at(j, j)));
        Vec expect = yv;
        kern::scale(F, expect.data(), F.add(lam, delta), expect.size());
        if (vecmat(F, yv, Z.rho(h)) != expect) r.weight_ok = false;
    }
    r.killed_by_n0_plus = true;
    for (std::size_t x : g.even_pos)
        if (!is_zero(vecmat(F, yv, Z.rho(x)))) r.killed_by_n0_plus = false;

    auto g0gens = generating_subset(g, g.even);
    GradedRep full = Z.to_rep(g0gens);
    Echelon S = spin(full, {yv});
    r.spin_dim = S.rank();
    std::vector<char> in_piece(Z.dim(), 0);
    for (std::size_t idx : piece) in_piece[idx] = 1;
    r.inside_piece = true;
    for (const auto& row : S.rows())
        for (std::size_t k = 0; k < row.size(); ++k)
            if (row[k] && !in_piece[k]) r.inside_piece = false;

    GradedRep sub;
    sub.F = g.F;
    sub.dim = piece.size();
    sub.parity.assign(sub.dim, 0);
    for (std::size_t t = 0; t < full.gens.size(); ++t) {
        Matrix A(sub.dim, sub.dim);
        for (std::size_t a = 0; a < sub.dim; ++a)
            for (std::size_t b = 0; b < sub.dim; ++b) A.at(a, b) = full.gens[t].at(piece[a], piece[b]);
        sub.gens.push_back(std::move(A));
        sub.gen_parity.push_back(0);
        sub.gen_labels.push_back(full.gen_labels[t]);
    }
    r.g0_certificate = is_irreducible(sub, seed);
    return r;
}

Matrix f_lambda(const LieSuperalgebra& g, const Weight& lambda) {
    const Field& F = *g.F;
    const auto& h1 = g.cartan_odd;
    Matrix S(h1.size(), h1.size());
    std::vector<Elem> val(g.dim(), 0);
    std::vector<char> cartan(g.dim(), 0);
    for (std::size_t c = 0; c < g.cartan_even.size(); ++c) {
        val[g.cartan_even[c]] = lambda[c];
        cartan[g.cartan_even[c]] = 1;
    }
    for (std::size_t a = 0; a < h1.size(); ++a)
        for (std::size_t b = 0; b < h1.size(); ++b) {
            const Elem* br = g.bracket_basis(h1[a], h1[b]);
            Elem acc = 0;
            for (std::size_t m = 0; m < g.dim(); ++m) {
                if (!br[m]) continue;
                if (!cartan[m]) throw AlgebraError("[h_1, h_1] leaves h_0");
                acc = F.add(acc, F.mul(br[m], val[m]));
            }
            S.at(a, b) = acc;
        }
    return S;
}

Matrix maximal_isotropic(const Field& F, const Matrix& S, std::size_t* radical_dim) {
    const std::size_t k = S.rows;
    Matrix R = right_nullspace(F, S);
    if (radical_dim) *radical_dim = R.rows;
    std::vector<Vec> iso;
    for (std::size_t r = 0; r < R.rows; ++r) iso.emplace_back(R.row(r), R.row(r) + k);
    Matrix Nmat = extend_to_basis(F, R, k);
    const std::size_t nondeg = Nmat.rows;
    std::size_t found = 0;
    while (Nmat.rows >= 2) {
        std::vector<Vec> N;
        for (std::size_t r = 0; r < Nmat.rows; ++r) N.emplace_back(Nmat.row(r), Nmat.row(r) + k);
        std::optional<Vec> u;
        for (const auto& b : N)
            if (!form(F, S, b, b)) {
                u = b;
                break;
            }
        if (!u) {
            // orthogonal basis of N
            std::vector<Vec> e;
            std::vector<Elem> d;
            std::vector<Vec> rest = N;
            while (!rest.empty()) {
                auto it = std::find_if(rest.begin(), rest.end(), [&](const Vec& v) { return form(F, S, v, v) != 0; });
                Vec a;
                if (it != rest.end()) {
                    a = *it;
                    rest.erase(it);
                } else {
                    // all isotropic: a sum of a non-orthogonal pair is not
                    u = rest[0];
                    break;
                }
                Elem da = form(F, S, a, a), inv = F.inv(da);
                for (auto& v : rest) {
                    Elem c = F.mul(form(F, S, v, a), inv);
                    kern::axpy(F, v.data(), a.data(), F.neg(c), k);
                }
                rest.erase(std::remove_if(rest.begin(), rest.end(), [](const Vec& v) { return is_zero(v); }), rest.end());
                e.push_back(a);
                d.push_back(da);
            }
            for (std::size_t a = 0; a < e.size() && !u; ++a)
                for (std::size_t b = a + 1; b < e.size() && !u; ++b) {
                    Elem t;
                    if (F.sqrt(F.neg(F.div(d[a], d[b])), t)) {
                        Vec v = e[a];
                        kern::axpy(F, v.data(), e[b].data(), t, k);
                        u = v;
                    }
                }
            if (!u && e.size() >= 3) {
                for (Elem x = 1; x < F.q() && !u; ++x)
                    for (Elem y = 1; y < F.q() && !u; ++y) {
                        Elem s = F.add(F.add(F.mul(F.mul(x, x), d[0]), F.mul(F.mul(y, y), d[1])), d[2]);
                        if (!s) {
                            Vec v = e[2];
                            kern::axpy(F, v.data(), e[0].data(), x, k);
                            kern::axpy(F, v.data(), e[1].data(), y, k);
                            u = v;
                        }
                    }
            }
        }
        if (!u) break;
        Vec v;
        for (const auto& b : N)
            if (form(F, S, *u, b)) {
                v = b;
                break;
            }
        iso.push_back(*u);
        ++found;
        // N := N cap <u, v>^perp
        Matrix C(N.size(), 2);
        for (std::size_t r = 0; r < N.size(); ++r) {
            C.at(r, 0) = form(F, S, N[r], *u);
            C.at(r, 1) = form(F, S, N[r], v);
        }
        Matrix coef = left_nullspace(F, C);
        Nmat = matmul(F, coef, Nmat);
    }
    if (found < nondeg / 2)
        throw FieldTooSmall("Witt index over " + F.name() + " is " + std::to_string(found) + ", expected " +
                            std::to_string(nondeg / 2) + "; extend the field");
    return Matrix::from_rows(iso, k);
}

bool is_maximal_isotropic(const Field& F, const Matrix& S, const Matrix& W) {
    const std::size_t k = S.rows;
    if (!matmul(F, matmul(F, W, S), transpose(W)).is_zero()) return false;
    Matrix perp = left_nullspace(F, matmul(F, S, transpose(W)));  // v S W^T = 0
    Echelon E(F, k);
    for (std::size_t r = 0; r < W.rows; ++r) E.insert(Vec(W.row(r), W.row(r) + k));
    std::vector<Vec> comp;
    for (std::size_t r = 0; r < perp.rows; ++r) {
        Vec v(perp.row(r), perp.row(r) + k);
        if (E.insert(v)) comp.emplace_back(perp.row(r), perp.row(r) + k);
    }
    if (comp.empty()) return true;
    double pts = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) pts *= F.q();
    if (pts > 1e6) throw UsageError("maximality check too large");
    std::vector<Elem> c(comp.size(), 0);
    for (;;) {
        std::size_t i = 0;
        while (i < c.size() && ++c[i] == F.q()) c[i++] = 0;
        if (i == c.size()) break;
        Vec v(k, 0);
        for (std::size_t t = 0; t < comp.size(); ++t)
            if (c[t]) kern::axpy(F, v.data(), comp[t].data(), c[t], k);
        if (!form(F, S, v, v)) return false;
    }
    return true;
}

CartanModule queer_cartan_module(AlgebraPtr g, const PChar& chi, const Weight& lambda) {
    if (!is_queer(g->family)) throw UsageError("queer Cartan modules need family q or sq");
    require_lambda(chi, lambda);
    const Field& F = *g->F;
    CartanModule cm;
    cm.gram = f_lambda(*g, lambda);
    cm.isotropic = maximal_isotropic(F, cm.gram, &cm.radical_dim);
    cm.complement = extend_to_basis(F, cm.isotropic, g->cartan_odd.size());

    std::vector<BasisVector> basis;
    for (std::size_t h : g->cartan_even) basis.push_back(g->basis[h]);
    auto odd_vector = [&](const Elem* coef, const std::string& label) {
        BasisVector b;
        b.parity = 1;
        b.kind = "odd_cartan";
        b.label = label;
        b.root.assign(g->n, 0);
        b.matrix = Matrix(g->msize, g->msize);
        for (std::size_t m = 0; m < g->cartan_odd.size(); ++m)
            if (coef[m]) add_scaled(F, b.matrix, g->basis[g->cartan_odd[m]].matrix, coef[m]);
        return b;
    };
    for (std::size_t r = 0; r < cm.isotropic.rows; ++r)
        basis.push_back(odd_vector(cm.isotropic.row(r), "W" + std::to_string(r + 1)));
    for (std::size_t r = 0; r < cm.complement.rows; ++r)
        basis.push_back(odd_vector(cm.complement.row(r), "C" + std::to_string(r + 1)));
    cm.h = build_from_basis(Family::Custom, g->n, g->F, g->msize, g->even_rows, std::move(basis));

    const std::size_t n0 = g->cartan_even.size();
    PChar chi_h = PChar::zero(cm.h);
    for (std::size_t c = 0; c < n0; ++c) chi_h.values[c] = chi.at(g->cartan_even[c]);
    std::vector<std::size_t> sub;
    for (std::size_t i = 0; i < n0 + cm.isotropic.rows; ++i) sub.push_back(i);
    std::vector<Elem> val(cm.h->dim(), 0);
    for (std::size_t c = 0; c < n0; ++c) val[c] = lambda[c];
    cm.V = induce(cm.h, InducingData::character(*cm.h, sub, [&](std::size_t i) { return val[i]; }), chi_h);

    InducingData& B = cm.borel;
    B.dim = cm.V.dim();
    B.parity = cm.V.parity;
    for (std::size_t c = 0; c < n0; ++c) {
        B.sub.push_back(g->cartan_even[c]);
        B.action.push_back(cm.V.action[c]);
    }
    for (std::size_t m : g->cartan_odd) {
        auto co = cm.h->coords(g->basis[m].matrix);
        if (!co) throw AlgebraError("odd Cartan element outside the rebased algebra");
        B.sub.push_back(m);
        B.action.push_back(cm.V.rho(*co));
    }
    for (std::size_t i : concat({&g->even_pos, &g->odd_pos})) {
        B.sub.push_back(i);
        B.action.push_back(Matrix(B.dim, B.dim));
    }
    return cm;
}

InducedModule queer_baby_verma(AlgebraPtr g, const PChar& chi, const Weight& lambda, CartanModule* cartan_out) {
    require_nplus_zero(chi);
    CartanModule cm = queer_cartan_module(g, chi, lambda);
    InducedModule Z = induce(g, cm.borel, chi);
    if (cartan_out) *cartan_out = std::move(cm);
    return Z;
}

std::vector<P2Case> classify_p2(AlgebraPtr g, const PChar& chi, std::uint64_t seed) {
    if (g->family != Family::PTilde || g->n != 2) throw UsageError("classify_p2 needs ptilde(2)");
    const Field& F = *g->F;
    auto lams = lambda_set(chi);
    if (lams.empty()) throw FieldTooSmall("Lambda(chi) is empty over " + F.name());
    const std::size_t h1 = g->index_of("H1"), h2 = g->index_of("H2");
    P2Case base;
    base.chi_hz = to_hz(F, chi.at(h1), chi.at(h2));
    base.chi_f = chi.at(g->even_neg.at(0));
    // p_0 = sl(2): chi vanishes on H, E and F
    base.chi_p0_zero = base.chi_hz.H == 0 && chi.at(g->even_pos.at(0)) == 0 && base.chi_f == 0;
    std::vector<P2Case> out;
    for (const auto& lam : lams) {
        P2Case c = base;
        c.lambda_hz = to_hz(F, lam[0], lam[1]);
        const bool one_dim = c.chi_p0_zero && c.lambda_hz.H == 0;
        c.expect_irreducible = !one_dim;
        c.expect_dim = one_dim ? 2 : 2 * F.p();
        InducedModule K = one_dim ? kac_module_p2(g, chi, lam, c.lambda_hz.z) : kac_module_p2(g, chi, lam);
        c.dim = K.dim();
        GradedRep rep = K.to_rep();
        c.certificate = is_irreducible(rep, seed);
        c.verdict = c.certificate.verdict;
        if (one_dim) {
            Matrix Y(1, K.dim());
            Y.at(0, kac_y_vector(K)) = 1;
            c.y_submodule = is_invariant(rep, Y);
            c.match = c.dim == 2 && c.verdict == Verdict::Reducible && c.y_submodule;
        } else {
            c.match = c.dim == c.expect_dim && c.verdict == Verdict::Irreducible;
        }
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace skw
