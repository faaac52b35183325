#include "skw/superalg.hpp"

#include "skw/error.hpp"
#include "skw/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace skw {

std::string family_name(Family f) {
    switch (f) {
    case Family::PTilde: return "ptilde";
    case Family::PDer: return "pder";
    case Family::Q: return "q";
    case Family::SQ: return "sq";
    case Family::GL: return "gl";
    case Family::Custom: return "custom";
    }
    return "custom";
}

Family parse_family(const std::string& s) {
    if (s == "ptilde") return Family::PTilde;
    if (s == "pder") return Family::PDer;
    if (s == "q") return Family::Q;
    if (s == "sq") return Family::SQ;
    if (s == "gl") return Family::GL;
    throw UsageError("unknown family '" + s + "' (expected ptilde, pder, q, sq, gl)");
}

bool is_periplectic(Family f) {
    return f == Family::PTilde || f == Family::PDer;
}

bool is_queer(Family f) {
    return f == Family::Q || f == Family::SQ;
}

namespace {

std::string root_string(const std::vector<int>& r) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < r.size(); ++k) {
        int c = r[k];
        if (!c) continue;
        if (c < 0) os << '-';
        else if (!first) os << '+';
        if (std::abs(c) != 1) os << std::abs(c);
        os << 'e' << (k + 1);
        first = false;
    }
    return os.str();
}

std::atomic<std::uint64_t> next_id{1};

struct Builder {
    const Field& F;
    std::size_t m;
    Matrix E(std::size_t i, std::size_t j, long long c = 1) const {
        Matrix M(m, m);
        M.at(i, j) = F.from_int(c);
        return M;
    }
    Matrix sum(std::initializer_list<std::tuple<long long, std::size_t, std::size_t>> terms) const {
        Matrix M(m, m);
        for (auto [c, i, j] : terms) M.at(i, j) = F.add(M.at(i, j), F.from_int(c));
        return M;
    }
};

BasisVector make_bv(std::string label, std::string kind, int parity, std::vector<int> root, Matrix M) {
    BasisVector b;
    b.label = std::move(label);
    b.kind = std::move(kind);
    b.parity = parity;
    b.root = std::move(root);
    b.matrix = std::move(M);
    return b;
}

std::vector<int> eps(unsigned n, std::initializer_list<std::pair<std::size_t, int>> terms) {
    std::vector<int> r(n, 0);
    for (auto [k, c] : terms) r[k] += c;
    return r;
}

Matrix matpow(const Field& F, const Matrix& A, unsigned e) {
    Matrix R = Matrix::identity(A.rows);
    for (unsigned i = 0; i < e; ++i) R = matmul(F, R, A);
    return R;
}

} // namespace

Matrix LieSuperalgebra::supercommutator(const Matrix& A, int pa, const Matrix& B, int pb) const {
    Matrix AB = matmul(*F, A, B);
    Matrix BA = matmul(*F, B, A);
    Elem s = (pa && pb) ? F->one() : F->neg(F->one());  // AB - (-1)^{ab} BA
    add_scaled(*F, AB, BA, s);
    return AB;
}

int LieSuperalgebra::matrix_parity(const Matrix& M) const {
    bool diag = false, off = false;
    for (std::size_t i = 0; i < msize; ++i)
        for (std::size_t j = 0; j < msize; ++j) {
            if (!M.at(i, j)) continue;
            bool same = (i < even_rows) == (j < even_rows);
            (same ? diag : off) = true;
        }
    if (diag && off) return -1;
    return off ? 1 : 0;
}

Vec LieSuperalgebra::unit(std::size_t i) const {
    Vec v(dim(), 0);
    v[i] = 1;
    return v;
}

Vec LieSuperalgebra::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != dim() || y.size() != dim()) throw UsageError("bracket: coefficient vector of wrong length");
    Vec out(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!x[i]) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (!y[j]) continue;
            kern::axpy(*F, out.data(), bracket_basis(i, j), F->mul(x[i], y[j]), dim());
        }
    }
    return out;
}

Matrix LieSuperalgebra::matrix_of(const Vec& x) const {
    Matrix M(msize, msize);
    for (std::size_t i = 0; i < dim(); ++i)
        if (x[i]) add_scaled(*F, M, basis[i].matrix, x[i]);
    return M;
}

std::optional<Vec> LieSuperalgebra::coords(const Matrix& M) const {
    Vec d(dim(), 0);
    for (std::size_t r = 0; r < dim(); ++r) d[r] = M.data[solver_pivots[r]];
    Vec c = vecmat(*F, d, solver_transform);
    Vec back = vecmat(*F, c, flat_basis);
    if (back != M.data) return std::nullopt;
    return c;
}

Matrix LieSuperalgebra::ad(const Vec& x) const {
    Matrix A(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!x[i]) continue;
        for (std::size_t m = 0; m < dim(); ++m) kern::axpy(*F, A.row(m), bracket_basis(i, m), x[i], dim());
    }
    return A;
}

std::size_t LieSuperalgebra::even_slot(std::size_t i) const {
    auto it = std::find(even.begin(), even.end(), i);
    if (it == even.end()) throw UsageError("basis vector " + basis[i].label + " is not even");
    return static_cast<std::size_t>(it - even.begin());
}

std::size_t LieSuperalgebra::index_of(const std::string& label) const {
    for (const auto& b : basis)
        if (b.label == label) return b.index;
    throw UsageError("no basis vector labelled " + label);
}

AlgebraPtr build_from_basis(Family f, unsigned n, FieldPtr Fp, std::size_t msize, std::size_t even_rows,
                            std::vector<BasisVector> basis) {
    auto g = std::make_shared<LieSuperalgebra>();
    const Field& F = *Fp;
    g->family = f;
    g->n = n;
    g->F = Fp;
    g->msize = msize;
    g->even_rows = even_rows;
    g->basis = std::move(basis);
    g->id = next_id++;
    const std::size_t d = g->dim(), w = msize * msize;
    for (std::size_t i = 0; i < d; ++i) g->basis[i].index = i;

    // coordinate solver: Gauss-Jordan on [flat | I]
    g->flat_basis = Matrix(d, w);
    for (std::size_t i = 0; i < d; ++i)
        std::copy(g->basis[i].matrix.data.begin(), g->basis[i].matrix.data.end(), g->flat_basis.row(i));
    Matrix W(d, w + d);
    for (std::size_t i = 0; i < d; ++i) {
        std::copy(g->flat_basis.row(i), g->flat_basis.row(i) + w, W.row(i));
        W.at(i, w + i) = 1;
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < w && r < d; ++c) {
        std::size_t piv = r;
        while (piv < d && W.at(piv, c) == 0) ++piv;
        if (piv == d) continue;
        if (piv != r) std::swap_ranges(W.row(piv), W.row(piv) + w + d, W.row(r));
        kern::scale(F, W.row(r), F.inv(W.at(r, c)), w + d);
        for (std::size_t i = 0; i < d; ++i) {
            if (i == r) continue;
            Elem fct = W.at(i, c);
            if (fct) kern::axpy(F, W.row(i), W.row(r), F.neg(fct), w + d);
        }
        g->solver_pivots.push_back(c);
        ++r;
    }
    if (r != d) throw AlgebraError("basis matrices are linearly dependent");
    g->solver_transform = Matrix(d, d);
    for (std::size_t i = 0; i < d; ++i) std::copy(W.row(i) + w, W.row(i) + w + d, g->solver_transform.row(i));

    g->sc.assign(d * d * d, 0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Matrix S = g->supercommutator(g->basis[i].matrix, g->parity(i), g->basis[j].matrix, g->parity(j));
            auto c = g->coords(S);
            if (!c)
                throw AlgebraError("basis not closed under the bracket: [" + g->basis[i].label + ", " +
                                   g->basis[j].label + "]");
            std::copy(c->begin(), c->end(), g->sc.begin() + static_cast<std::ptrdiff_t>((i * d + j) * d));
        }

    g->pmap.assign(d, Vec(d, 0));
    const Elem half = F.inv(F.from_int(2));
    for (std::size_t i = 0; i < d; ++i) {
        if (g->parity(i) == 0) {
            auto c = g->coords(matpow(F, g->basis[i].matrix, F.p()));
            bool ok = c.has_value();
            if (ok)
                for (std::size_t m = 0; m < d; ++m)
                    if ((*c)[m] && g->parity(m)) ok = false;
            if (!ok) {
                g->pmap_closed = false;
                if (g->pmap_witness.empty()) g->pmap_witness = g->basis[i].label;
            } else {
                g->pmap[i] = *c;
            }
        } else {
            const Elem* b = g->bracket_basis(i, i);
            for (std::size_t m = 0; m < d; ++m) g->pmap[i][m] = F.mul(half, b[m]);
        }
    }

    for (std::size_t i = 0; i < d; ++i) {
        const auto& b = g->basis[i];
        (b.parity ? g->odd : g->even).push_back(i);
        if (b.kind == "cartan") g->cartan_even.push_back(i);
        else if (b.kind == "odd_cartan") g->cartan_odd.push_back(i);
        else if (b.kind == "pos") g->even_pos.push_back(i);
        else if (b.kind == "neg") g->even_neg.push_back(i);
        else if (b.kind == "odd_pos") g->odd_pos.push_back(i);
        else if (b.kind == "odd_neg") g->odd_neg.push_back(i);
        if (b.kind == "pos" || b.kind == "odd_pos") g->pos_nilpotent.push_back(i);
        if (b.kind == "neg" || b.kind == "odd_neg") g->neg_nilpotent.push_back(i);
        if (b.kind != "cartan" && b.kind != "odd_cartan" && !b.root.empty()) {
            std::string key = root_string(b.root);
            if (b.parity && is_queer(f)) key += "'";
            g->roots[key] = i;
        }
    }
    return g;
}

AlgebraPtr build_algebra(Family f, unsigned n, FieldPtr Fp) {
    if (n < 2) throw UsageError("rank n must be at least 2");
    if (!Fp) throw UsageError("missing field");
    if (Fp->p() == 2) throw UsageError("even characteristic is not supported");
    const Field& F = *Fp;
    std::vector<BasisVector> B;
    auto lab = [](const std::string& pre, const std::vector<int>& r, const std::string& post = "") {
        return pre + "[" + root_string(r) + "]" + post;
    };

    if (f == Family::GL) {
        Builder bd{F, n};
        for (std::size_t i = 0; i < n; ++i)
            B.push_back(make_bv("E" + std::to_string(i + 1) + std::to_string(i + 1), "cartan", 0,
                                std::vector<int>(n, 0), bd.E(i, i)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                auto r = eps(n, {{i, 1}, {j, -1}});
                B.push_back(make_bv(lab("X", r), "pos", 0, r, bd.E(i, j)));
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                auto r = eps(n, {{i, -1}, {j, 1}});
                B.push_back(make_bv(lab("X", r), "neg", 0, r, bd.E(j, i)));
            }
        return build_from_basis(f, n, Fp, n, n, std::move(B));
    }

    const std::size_t m = 2 * n;
    Builder bd{F, m};
    if (is_periplectic(f)) {
        if (f == Family::PTilde) {
            for (std::size_t i = 0; i < n; ++i)
                B.push_back(make_bv("H" + std::to_string(i + 1), "cartan", 0, std::vector<int>(n, 0),
                                    bd.sum({{1, i, i}, {-1, n + i, n + i}})));
        } else {
            for (std::size_t i = 0; i + 1 < n; ++i)
                B.push_back(make_bv("H" + std::to_string(i + 1) + "-H" + std::to_string(i + 2), "cartan", 0,
                                    std::vector<int>(n, 0),
                                    bd.sum({{1, i, i}, {-1, n + i, n + i}, {-1, i + 1, i + 1}, {1, n + i + 1, n + i + 1}})));
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                auto r = eps(n, {{i, 1}, {j, -1}});
                B.push_back(make_bv(lab("X", r), "pos", 0, r, bd.sum({{1, i, j}, {-1, n + j, n + i}})));
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                auto r = eps(n, {{i, -1}, {j, 1}});
                B.push_back(make_bv(lab("X", r), "neg", 0, r, bd.sum({{1, j, i}, {-1, n + i, n + j}})));
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                auto r = eps(n, {{i, 1}, {j, 1}});
                Matrix M = (i == j) ? bd.E(i, n + i) : bd.sum({{1, i, n + j}, {1, j, n + i}});
                B.push_back(make_bv(lab("X", r), "odd_pos", 1, r, std::move(M)));
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                auto r = eps(n, {{i, -1}, {j, -1}});
                B.push_back(make_bv(lab("X", r), "odd_neg", 1, r, bd.sum({{1, n + i, j}, {-1, n + j, i}})));
            }
        for (auto& b : B) {
            b.has_zdeg = true;
            b.zdeg = b.kind == "odd_pos" ? 1 : (b.kind == "odd_neg" ? -1 : 0);
        }
        auto g = build_from_basis(f, n, Fp, m, n, std::move(B));
        if (f == Family::PDer && n % F.p() == 0) {
            auto mg = std::const_pointer_cast<LieSuperalgebra>(g);
            mg->degenerate = true;
        }
        return g;
    }

    if (is_queer(f)) {
        for (std::size_t i = 0; i < n; ++i)
            B.push_back(make_bv("J" + std::to_string(i + 1), "cartan", 0, std::vector<int>(n, 0),
                                bd.sum({{1, i, i}, {1, n + i, n + i}})));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                auto r = eps(n, {{i, 1}, {j, -1}});
                B.push_back(make_bv(lab("X", r), "pos", 0, r, bd.sum({{1, i, j}, {1, n + i, n + j}})));
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                auto r = eps(n, {{i, -1}, {j, 1}});
                B.push_back(make_bv(lab("X", r), "neg", 0, r, bd.sum({{1, j, i}, {1, n + j, n + i}})));
            }
        if (f == Family::Q) {
            for (std::size_t i = 0; i < n; ++i)
                B.push_back(make_bv("J'" + std::to_string(i + 1), "odd_cartan", 1, std::vector<int>(n, 0),
                                    bd.sum({{1, i, n + i}, {1, n + i, i}})));
        } else {
            for (std::size_t i = 0; i + 1 < n; ++i)
                B.push_back(make_bv("J'" + std::to_string(i + 1) + "-J'" + std::to_string(i + 2), "odd_cartan", 1,
                                    std::vector<int>(n, 0),
                                    bd.sum({{1, i, n + i}, {1, n + i, i}, {-1, i + 1, n + i + 1}, {-1, n + i + 1, i + 1}})));
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                auto r = eps(n, {{i, 1}, {j, -1}});
                B.push_back(make_bv(lab("X", r, "'"), "odd_pos", 1, r, bd.sum({{1, i, n + j}, {1, n + i, j}})));
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                auto r = eps(n, {{i, -1}, {j, 1}});
                B.push_back(make_bv(lab("X", r, "'"), "odd_neg", 1, r, bd.sum({{1, j, n + i}, {1, n + j, i}})));
            }
        return build_from_basis(f, n, Fp, m, n, std::move(B));
    }
    throw UsageError("build_algebra: unsupported family " + family_name(f));
}

bool AxiomReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

AxiomReport verify_algebra(const LieSuperalgebra& g) {
    AxiomReport rep;
    const Field& F = *g.F;
    const std::size_t d = g.dim();
    auto label = [&](std::size_t i) { return g.basis[i].label; };

    {
        AxiomCheck c; c.name = "super_skew_symmetry";
        for (std::size_t i = 0; i < d && c.pass; ++i)
            for (std::size_t j = 0; j < d && c.pass; ++j) {
                ++c.checked;
                const Elem* a = g.bracket_basis(i, j);
                const Elem* b = g.bracket_basis(j, i);
                bool sym = g.parity(i) && g.parity(j);  // [x,y] = -(-1)^{|x||y|}[y,x]
                for (std::size_t m = 0; m < d; ++m) {
                    Elem expect = sym ? b[m] : F.neg(b[m]);
                    if (a[m] != expect) {
                        c.pass = false;
                        c.witness = "(" + label(i) + ", " + label(j) + ")";
                        break;
                    }
                }
            }
        rep.checks.push_back(c);
    }

    std::vector<Matrix> ads(d);
    for (std::size_t i = 0; i < d; ++i) ads[i] = g.ad(g.unit(i));

    {
        // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]; in row form
        // ad([x_i,x_j]) = Ad_j Ad_i - s Ad_i Ad_j.
        AxiomCheck c; c.name = "super_jacobi";
        for (std::size_t i = 0; i < d && c.pass; ++i)
            for (std::size_t j = 0; j < d && c.pass; ++j) {
                Matrix lhs(d, d);
                const Elem* b = g.bracket_basis(i, j);
                for (std::size_t m = 0; m < d; ++m)
                    if (b[m]) add_scaled(F, lhs, ads[m], b[m]);
                Matrix rhs = matmul(F, ads[j], ads[i]);
                Elem s = (g.parity(i) && g.parity(j)) ? F.one() : F.neg(F.one());
                add_scaled(F, rhs, matmul(F, ads[i], ads[j]), s);
                c.checked += d;
                if (!(lhs == rhs)) {
                    std::size_t k = 0;
                    while (k < d && std::equal(lhs.row(k), lhs.row(k) + d, rhs.row(k))) ++k;
                    c.pass = false;
                    c.witness = "(" + label(i) + ", " + label(j) + ", " + label(k) + ")";
                }
            }
        rep.checks.push_back(c);
    }

    {
        AxiomCheck c; c.name = "restrictedness";
        for (std::size_t i : g.even) {
            ++c.checked;
            Matrix lhs = g.ad(g.pmap[i]);
            Matrix rhs = Matrix::identity(d);
            for (unsigned e = 0; e < F.p(); ++e) rhs = matmul(F, rhs, ads[i]);
            if (!(lhs == rhs)) {
                c.pass = false;
                c.witness = label(i);
                break;
            }
        }
        rep.checks.push_back(c);
    }

    {
        AxiomCheck c; c.name = "p_map_closure";
        c.pass = g.pmap_closed;
        c.witness = g.pmap_witness;
        for (std::size_t i : g.even) {
            if (!c.pass) break;
            ++c.checked;
            Matrix P = Matrix::identity(g.msize);
            for (unsigned e = 0; e < F.p(); ++e) P = matmul(F, P, g.basis[i].matrix);
            if (!(g.matrix_of(g.pmap[i]) == P)) {
                c.pass = false;
                c.witness = label(i);
            }
            const auto& k = g.basis[i].kind;
            if (k == "cartan" && g.pmap[i] != g.unit(i)) {
                c.pass = false;
                c.witness = label(i) + " is not toral";
            }
            if ((k == "pos" || k == "neg") && !is_zero(g.pmap[i])) {
                c.pass = false;
                c.witness = label(i) + " is not p-nilpotent";
            }
        }
        rep.checks.push_back(c);
    }

    {
        AxiomCheck c; c.name = "grading";
        for (std::size_t i = 0; i < d && c.pass; ++i)
            for (std::size_t j = 0; j < d && c.pass; ++j) {
                ++c.checked;
                const Elem* b = g.bracket_basis(i, j);
                for (std::size_t m = 0; m < d; ++m) {
                    if (!b[m]) continue;
                    bool bad = g.parity(m) != (g.parity(i) ^ g.parity(j));
                    if (g.basis[i].has_zdeg) {
                        int z = g.basis[i].zdeg + g.basis[j].zdeg;
                        if (z < -1 || z > 1 || g.basis[m].zdeg != z) bad = true;
                    }
                    if (bad) {
                        c.pass = false;
                        c.witness = "[" + label(i) + ", " + label(j) + "] meets " + label(m);
                        break;
                    }
                }
            }
        rep.checks.push_back(c);
    }

    {
        AxiomCheck c; c.name = "structure_constants";
        for (std::size_t i = 0; i < d && c.pass; ++i)
            for (std::size_t j = 0; j < d && c.pass; ++j) {
                ++c.checked;
                Matrix S = g.supercommutator(g.basis[i].matrix, g.parity(i), g.basis[j].matrix, g.parity(j));
                Vec coef(g.bracket_basis(i, j), g.bracket_basis(i, j) + d);
                if (!(g.matrix_of(coef) == S)) {
                    c.pass = false;
                    c.witness = "(" + label(i) + ", " + label(j) + ")";
                }
            }
        rep.checks.push_back(c);
    }

    {
        AxiomCheck c; c.name = "block_shape";
        const std::size_t n = g.even_rows;
        for (std::size_t i = 0; i < d && c.pass; ++i) {
            ++c.checked;
            const Matrix& M = g.basis[i].matrix;
            if (g.matrix_parity(M) != g.parity(i) && !M.is_zero()) {
                c.pass = false;
                c.witness = label(i) + " parity";
            }
            if (is_periplectic(g.family) && g.parity(i)) {
                for (std::size_t a = 0; a < n && c.pass; ++a)
                    for (std::size_t b = 0; b < n && c.pass; ++b) {
                        if (M.at(a, n + b) != M.at(b, n + a)) c.pass = false;                 // B = B^T
                        if (M.at(n + a, b) != F.neg(M.at(n + b, a))) c.pass = false;         // C = -C^T
                        if (!c.pass) c.witness = label(i) + " off-diagonal symmetry";
                    }
            }
        }
        rep.checks.push_back(c);
    }

    {
        AxiomCheck c; c.name = "root_spaces";
        const std::size_t n = g.n;
        for (std::size_t h : g.cartan_even) {
            const Matrix& H = g.basis[h].matrix;
            for (std::size_t x = 0; x < d && c.pass; ++x) {
                const auto& bx = g.basis[x];
                if (bx.kind == "cartan" || bx.kind == "odd_cartan" || bx.root.empty()) continue;
                ++c.checked;
                Elem alpha = 0;
                for (std::size_t k = 0; k < n; ++k)
                    alpha = F.add(alpha, F.mul(F.from_int(bx.root[k]), H.at(k, k)));
                Vec expect = g.unit(x);
                kern::scale(F, expect.data(), alpha, d);
                Vec got(g.bracket_basis(h, x), g.bracket_basis(h, x) + d);
                if (got != expect) {
                    c.pass = false;
                    c.witness = "[" + label(h) + ", " + bx.label + "]";
                }
            }
        }
        rep.checks.push_back(c);
    }

    {
        AxiomCheck c; c.name = "dimensions";
        const std::size_t n = g.n;
        std::size_t dp = 0, dm = 0;
        for (std::size_t i : g.odd) {
            if (g.basis[i].zdeg > 0) ++dp;
            if (g.basis[i].zdeg < 0) ++dm;
        }
        std::size_t e = g.even.size(), o = g.odd.size();
        switch (g.family) {
        case Family::PTilde:
            c.pass = e == n * n && dp == (n * n + n) / 2 && dm == (n * n - n) / 2;
            break;
        case Family::PDer:
            c.pass = e == n * n - 1 && dp == (n * n + n) / 2 && dm == (n * n - n) / 2;
            break;
        case Family::Q:
            c.pass = e == n * n && o == n * n && g.cartan_odd.size() == n;
            break;
        case Family::SQ:
            c.pass = e == n * n && o == n * n - 1 && g.cartan_odd.size() == n - 1;
            break;
        case Family::GL:
            c.pass = e == n * n && o == 0;
            break;
        case Family::Custom:
            break;
        }
        c.checked = 1;
        if (!c.pass) c.witness = "superdimension (" + std::to_string(e) + "|" + std::to_string(o) + ")";
        rep.checks.push_back(c);
    }
    return rep;
}

namespace {

void conjugators(const LieSuperalgebra& g, const Matrix& gmat, Matrix& C, Matrix& Cinv) {
    const Field& F = *g.F;
    if (gmat.rows != g.n || gmat.cols != g.n) throw UsageError("conjugating matrix must be n x n");
    auto ginv = inverse(F, gmat);
    if (!ginv) throw UsageError("conjugating matrix is singular");
    const std::size_t n = g.n;
    C = Matrix(g.msize, g.msize);
    Cinv = Matrix(g.msize, g.msize);
    auto put = [](Matrix& dst, const Matrix& src, std::size_t off) {
        for (std::size_t i = 0; i < src.rows; ++i)
            for (std::size_t j = 0; j < src.cols; ++j) dst.at(off + i, off + j) = src.at(i, j);
    };
    put(C, gmat, 0);
    put(Cinv, *ginv, 0);
    if (g.msize == 2 * n) {
        if (is_periplectic(g.family)) {
            put(C, transpose(*ginv), n);
            put(Cinv, transpose(gmat), n);
        } else {
            put(C, gmat, n);
            put(Cinv, *ginv, n);
        }
    }
}

} // namespace

Vec adjoint_conjugate(const LieSuperalgebra& g, const Matrix& gmat, const Vec& x) {
    Matrix C, Cinv;
    conjugators(g, gmat, C, Cinv);
    const Field& F = *g.F;
    Matrix M = matmul(F, matmul(F, C, g.matrix_of(x)), Cinv);
    auto c = g.coords(M);
    if (!c) throw AlgebraError("conjugate leaves the algebra");
    return *c;
}

Matrix adjoint_matrix(const LieSuperalgebra& g, const Matrix& gmat) {
    Matrix C, Cinv;
    conjugators(g, gmat, C, Cinv);
    const Field& F = *g.F;
    Matrix A(g.dim(), g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) {
        Matrix M = matmul(F, matmul(F, C, g.basis[i].matrix), Cinv);
        auto c = g.coords(M);
        if (!c) throw AlgebraError("conjugate leaves the algebra");
        std::copy(c->begin(), c->end(), A.row(i));
    }
    return A;
}

std::vector<std::size_t> generating_subset(const LieSuperalgebra& g, const std::vector<std::size_t>& within) {
    const Field& F = *g.F;
    const std::size_t d = g.dim();
    auto in_within = [&](std::size_t i) { return std::find(within.begin(), within.end(), i) != within.end(); };
    auto is_simple = [&](std::size_t i) {
        const auto& r = g.basis[i].root;
        int nz = 0, sum = 0;
        for (std::size_t k = 0; k < r.size(); ++k) {
            if (r[k]) ++nz;
            sum += r[k];
        }
        if (nz != 2 || sum != 0) return false;
        for (std::size_t k = 0; k + 1 < r.size(); ++k)
            if (r[k] && r[k + 1]) return true;
        return false;
    };
    std::vector<std::size_t> order;
    for (std::size_t i : g.even_pos) if (is_simple(i)) order.push_back(i);
    for (std::size_t i : g.even_neg) if (is_simple(i)) order.push_back(i);
    for (std::size_t i : g.cartan_odd) order.push_back(i);
    for (std::size_t i : g.odd_pos) order.push_back(i);
    for (std::size_t i : g.odd_neg) order.push_back(i);
    for (std::size_t i : g.cartan_even) order.push_back(i);
    for (std::size_t i = 0; i < d; ++i) order.push_back(i);

    std::vector<std::size_t> chosen;
    Echelon span(F, d);
    std::vector<Vec> elems;
    auto close = [&](Vec v) {
        std::vector<Vec> queue{std::move(v)};
        while (!queue.empty()) {
            Vec x = std::move(queue.back());
            queue.pop_back();
            Vec probe = x;
            if (!span.insert(probe)) continue;
            for (const Vec& y : elems) queue.push_back(g.bracket(x, y));
            queue.push_back(g.bracket(x, x));
            elems.push_back(std::move(x));
        }
    };
    for (std::size_t i : order) {
        if (!in_within(i)) continue;
        if (span.rank() == within.size()) break;
        if (span.contains(g.unit(i))) continue;
        chosen.push_back(i);
        close(g.unit(i));
    }
    return chosen;
}

} // namespace skw
