#include "skw/envmod.hpp"

#include "skw/error.hpp"
#include "skw/kernels.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace skw {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// A * B for sparse A, B, written densely into out.
void spmul(const Field& F, const Sparse& A, const Sparse& B, Matrix& out) {
    out = Matrix(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i) {
        Elem* o = out.row(i);
        for (std::uint32_t t = A.start[i]; t < A.start[i + 1]; ++t) {
            Elem a = A.val[t];
            std::size_t k = A.col[t];
            for (std::uint32_t u = B.start[k]; u < B.start[k + 1]; ++u)
                o[B.col[u]] = F.add(o[B.col[u]], F.mul(a, B.val[u]));
        }
    }
}

class Engine {
public:
    Engine(InducedModule& M, bool memo) : M_(M), g_(*M.g), F_(*M.g->F), memo_(memo) {
        if (memo_) state_.assign(g_.dim(), std::vector<std::uint8_t>());
    }

    // out += coef * (x . basis[row])
    void act_into(std::size_t x, std::size_t row, Elem coef, Elem* out) {
        if (!coef) return;
        if (!memo_) {
            rule(x, row, coef, out);
            return;
        }
        ensure(x, row);
        kern::axpy(F_, out, M_.action[x].row(row), coef, M_.dim());
    }

    void ensure(std::size_t x, std::size_t row) {
        auto& st = state_[x];
        if (st.empty()) st.assign(M_.dim(), 0);
        if (st[row] == 2) return;
        if (st[row] == 1)
            throw ModuleError("straightening cycle at " + g_.basis[x].label + " on basis vector " + std::to_string(row));
        st[row] = 1;
        Vec buf(M_.dim(), 0);
        rule(x, row, 1, buf.data());
        std::copy(buf.begin(), buf.end(), M_.action[x].row(row));
        st[row] = 2;
    }

private:
    void rule(std::size_t x, std::size_t row, Elem coef, Elem* out) {
        const std::size_t pos = M_.mono_of(row), j = row % M_.V.dim;
        const auto& a = M_.monos[pos];
        const std::size_t kx = M_.comp_pos[x];
        std::size_t l = 0;
        while (l < a.size() && a[l] == 0) ++l;

        if (l == a.size()) {
            if (kx == npos) {
                const Matrix& A = M_.V.action[M_.sub_pos[x]];
                const Elem* vr = A.row(j);
                for (std::size_t jj = 0; jj < M_.V.dim; ++jj)
                    if (vr[jj]) out[M_.index(0, jj)] = F_.add(out[M_.index(0, jj)], F_.mul(coef, vr[jj]));
                return;
            }
            std::vector<std::uint8_t> e(a.size(), 0);
            e[kx] = 1;
            bump(out, M_.index(M_.mono_position(e), j), coef);
            return;
        }

        if (kx != npos && (kx < l || (kx == l && a[l] < M_.bound[l]))) {
            auto e = a;
            ++e[kx];
            bump(out, M_.index(M_.mono_position(e), j), coef);
            return;
        }
        if (kx == l) {
            auto rest = a;
            rest[l] = 0;
            const std::size_t rrow = M_.index(M_.mono_position(rest), j);
            const Vec& pm = g_.pmap[x];
            for (std::size_t m = 0; m < pm.size(); ++m)
                if (pm[m]) act_into(m, rrow, F_.mul(coef, pm[m]), out);
            if (g_.parity(x) == 0) {
                Elem c = F_.frob(M_.chi.at(x));
                if (c) bump(out, rrow, F_.mul(coef, c));
            }
            return;
        }

        // x y rest1 = (-1)^{|x||y|} y (x rest1) + [x, y] rest1
        const std::size_t y = M_.comp[l];
        auto rest = a;
        --rest[l];
        const std::size_t r1 = M_.index(M_.mono_position(rest), j);
        Vec tmp(M_.dim(), 0);
        act_into(x, r1, 1, tmp.data());
        Elem s = (g_.parity(x) && g_.parity(y)) ? F_.neg(coef) : coef;
        for (std::size_t b = 0; b < tmp.size(); ++b)
            if (tmp[b]) act_into(y, b, F_.mul(s, tmp[b]), out);
        const Elem* br = g_.bracket_basis(x, y);
        for (std::size_t m = 0; m < g_.dim(); ++m)
            if (br[m]) act_into(m, r1, F_.mul(coef, br[m]), out);
    }

    void bump(Elem* out, std::size_t idx, Elem c) { out[idx] = F_.add(out[idx], c); }

    InducedModule& M_;
    const LieSuperalgebra& g_;
    const Field& F_;
    bool memo_;
    std::vector<std::vector<std::uint8_t>> state_;
};

void check_subalgebra(const LieSuperalgebra& g, const std::vector<std::size_t>& s, const char* what) {
    std::vector<char> in(g.dim(), 0);
    for (std::size_t i : s) in[i] = 1;
    for (std::size_t a : s) {
        for (std::size_t b : s) {
            const Elem* br = g.bracket_basis(a, b);
            for (std::size_t m = 0; m < g.dim(); ++m)
                if (br[m] && !in[m])
                    throw ModuleError(std::string(what) + " not closed: [" + g.basis[a].label + ", " + g.basis[b].label +
                                      "] meets " + g.basis[m].label);
        }
        for (std::size_t m = 0; m < g.dim(); ++m)
            if (g.pmap[a][m] && !in[m])
                throw ModuleError(std::string(what) + " not restricted: p-map of " + g.basis[a].label);
    }
}

} // namespace

InducingData InducingData::character(const LieSuperalgebra& g, std::vector<std::size_t> sub,
                                     const std::function<Elem(std::size_t)>& value) {
    InducingData V;
    V.dim = 1;
    V.parity = {0};
    for (std::size_t i : sub) {
        Matrix A(1, 1);
        A.at(0, 0) = g.parity(i) ? 0 : value(i);
        V.action.push_back(A);
    }
    V.sub = std::move(sub);
    return V;
}

std::size_t InducedModule::mono_position(const std::vector<std::uint8_t>& e) const {
    std::size_t code = 0;
    for (std::size_t k = 0; k < e.size(); ++k) code += e[k] * radix_weight[k];
    return radix_code[code];
}

std::size_t InducedModule::degree(std::size_t mono) const {
    std::size_t d = 0;
    for (auto e : monos[mono]) d += e;
    return d;
}

std::size_t InducedModule::odd_degree(std::size_t mono) const {
    std::size_t d = 0;
    for (std::size_t k = 0; k < comp.size(); ++k)
        if (g->parity(comp[k])) d += monos[mono][k];
    return d;
}

const Matrix& InducedModule::rho(std::size_t i) const {
    if (!covers(i)) throw UsageError("module carries no action of " + g->basis[i].label);
    return action[i];
}

Matrix InducedModule::rho(const Vec& x) const {
    Matrix R(dim(), dim());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) add_scaled(*g->F, R, rho(i), x[i]);
    return R;
}

GradedRep InducedModule::to_rep(std::vector<std::size_t> idx) const {
    if (idx.empty()) idx = generating_subset(*g, span);
    GradedRep r;
    r.F = g->F;
    r.dim = dim();
    r.parity = parity;
    for (std::size_t i : idx) {
        r.gens.push_back(rho(i));
        r.gen_parity.push_back(g->parity(i));
        r.gen_labels.push_back(g->basis[i].label);
    }
    return r;
}

InducedModule induce(AlgebraPtr gp, const InducingData& V, const PChar& chi, InduceOptions opt) {
    const LieSuperalgebra& g = *gp;
    const Field& F = *g.F;
    if (chi.g->id != g.id) throw UsageError("p-character belongs to a different algebra");
    if (V.action.size() != V.sub.size() || V.parity.size() != V.dim)
        throw UsageError("inducing data: inconsistent sizes");
    for (const auto& A : V.action)
        if (A.rows != V.dim || A.cols != V.dim) throw UsageError("inducing data: action matrix of wrong size");

    InducedModule M;
    M.g = gp;
    M.chi = chi;
    M.V = V;
    M.sub_pos.assign(g.dim(), npos);
    M.comp_pos.assign(g.dim(), npos);
    for (std::size_t t = 0; t < V.sub.size(); ++t) {
        if (V.sub[t] >= g.dim() || M.sub_pos[V.sub[t]] != npos) throw UsageError("inducing data: bad subalgebra index");
        M.sub_pos[V.sub[t]] = t;
    }
    if (opt.complement) {
        M.comp = *opt.complement;
    } else {
        for (int par : {0, 1})
            for (std::size_t i = 0; i < g.dim(); ++i)
                if (M.sub_pos[i] == npos && g.parity(i) == par) M.comp.push_back(i);
    }
    for (std::size_t k = 0; k < M.comp.size(); ++k) {
        std::size_t i = M.comp[k];
        if (i >= g.dim() || M.sub_pos[i] != npos || M.comp_pos[i] != npos)
            throw UsageError("complement overlaps the subalgebra");
        M.comp_pos[i] = k;
    }
    M.span = V.sub;
    M.span.insert(M.span.end(), M.comp.begin(), M.comp.end());
    std::sort(M.span.begin(), M.span.end());

    check_subalgebra(g, V.sub, "inducing subalgebra");
    check_subalgebra(g, M.span, "induced span");
    {
        std::vector<Matrix> act(g.dim());
        for (std::size_t t = 0; t < V.sub.size(); ++t) act[V.sub[t]] = V.action[t];
        auto rep = verify_representation(g, chi, act, V.parity);
        for (const auto& c : rep.checks)
            if (!c.pass) throw ModuleError("inducing module fails " + c.name + ": " + c.witness);
    }

    // PBW monomials in graded-lex order
    const std::size_t c = M.comp.size();
    M.bound.resize(c);
    M.radix_weight.resize(c);
    std::size_t total = 1;
    for (std::size_t k = c; k-- > 0;) {
        M.bound[k] = static_cast<std::uint8_t>(g.parity(M.comp[k]) ? 1 : F.p() - 1);
        M.radix_weight[k] = total;
        total *= M.bound[k] + 1u;
        if (total > 1u << 22) throw UsageError("induced module too large");
    }
    M.monos.reserve(total);
    std::vector<std::uint8_t> e(c, 0);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t r = code;
        for (std::size_t k = 0; k < c; ++k) {
            e[k] = static_cast<std::uint8_t>(r / M.radix_weight[k]);
            r %= M.radix_weight[k];
        }
        M.monos.push_back(e);
    }
    std::stable_sort(M.monos.begin(), M.monos.end(), [](const auto& x, const auto& y) {
        unsigned dx = std::accumulate(x.begin(), x.end(), 0u), dy = std::accumulate(y.begin(), y.end(), 0u);
        if (dx != dy) return dx < dy;
        return x > y;
    });
    M.radix_code.assign(total, 0);
    for (std::size_t pos = 0; pos < total; ++pos) {
        std::size_t code = 0;
        for (std::size_t k = 0; k < c; ++k) code += M.monos[pos][k] * M.radix_weight[k];
        M.radix_code[code] = pos;
    }

    const std::size_t D = M.dim();
    M.parity.resize(D);
    for (std::size_t pos = 0; pos < total; ++pos)
        for (std::size_t j = 0; j < V.dim; ++j) M.parity[M.index(pos, j)] = static_cast<int>((M.odd_degree(pos) + V.parity[j]) % 2);

    M.action.assign(g.dim(), Matrix());
    for (std::size_t i : M.span) M.action[i] = Matrix(D, D);
    Engine eng(M, true);
    for (std::size_t i : M.span)
        for (std::size_t row = 0; row < D; ++row) eng.ensure(i, row);
    return M;
}

Vec straighten(const InducedModule& M, const std::vector<std::size_t>& word, std::size_t idx) {
    InducedModule& mut = const_cast<InducedModule&>(M);  // the non-memo engine never writes
    Engine eng(mut, false);
    Vec cur(M.dim(), 0);
    cur[idx] = 1;
    for (std::size_t w = word.size(); w-- > 0;) {
        if (!M.covers(word[w])) throw UsageError("word letter outside the module's span");
        Vec next(M.dim(), 0);
        for (std::size_t b = 0; b < cur.size(); ++b)
            if (cur[b]) eng.act_into(word[w], b, cur[b], next.data());
        cur = std::move(next);
    }
    return cur;
}

InducingData as_inducing(const InducedModule& M) {
    InducingData V;
    V.sub = M.span;
    V.dim = M.dim();
    V.parity = M.parity;
    for (std::size_t i : M.span) V.action.push_back(M.action[i]);
    return V;
}

bool RepReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const RepCheck& c) { return c.pass; });
}

RepReport verify_representation(const InducedModule& M) {
    return verify_representation(*M.g, M.chi, M.action, M.parity);
}

RepReport verify_representation(const LieSuperalgebra& g, const PChar& chi, const std::vector<Matrix>& action,
                                const std::vector<int>& parity) {
    const Field& F = *g.F;
    std::vector<std::size_t> cov;
    for (std::size_t i = 0; i < action.size(); ++i)
        if (!action[i].data.empty()) cov.push_back(i);
    const std::size_t D = parity.size();
    std::vector<Sparse> S(g.dim());
    for (std::size_t i : cov) S[i] = Sparse::from_dense(action[i]);
    auto label = [&](std::size_t i) { return g.basis[i].label; };
    RepReport rep;

    RepCheck par;
    par.name = "parity";
    for (std::size_t i : cov) {
        ++par.checked;
        for (std::size_t r = 0; r < D && par.pass; ++r)
            for (std::uint32_t t = S[i].start[r]; t < S[i].start[r + 1]; ++t)
                if (parity[S[i].col[t]] != (parity[r] ^ g.parity(i))) {
                    par.pass = false;
                    par.witness = label(i);
                    break;
                }
    }

    RepCheck brk;
    brk.name = "bracket";
    Matrix L, T;
    for (std::size_t a = 0; a < cov.size() && brk.pass; ++a)
        for (std::size_t b = a; b < cov.size() && brk.pass; ++b) {
            std::size_t x = cov[a], y = cov[b];
            ++brk.checked;
            // rho(x) rho(y) - s rho(y) rho(x)  <->  A_y A_x - s A_x A_y
            spmul(F, S[y], S[x], L);
            spmul(F, S[x], S[y], T);
            Elem s = (g.parity(x) && g.parity(y)) ? 1 : F.neg(1);
            add_scaled(F, L, T, s);
            const Elem* br = g.bracket_basis(x, y);
            for (std::size_t m = 0; m < g.dim() && brk.pass; ++m) {
                if (!br[m]) continue;
                if (action[m].data.empty()) {
                    brk.pass = false;
                    brk.witness = "[" + label(x) + ", " + label(y) + "] leaves the covered span";
                    break;
                }
                add_scaled(F, L, action[m], F.neg(br[m]));
            }
            if (brk.pass && !L.is_zero()) {
                brk.pass = false;
                brk.witness = "(" + label(x) + ", " + label(y) + ")";
            }
        }

    RepCheck pp;
    pp.name = "p_power";
    RepCheck sq;
    sq.name = "odd_square";
    for (std::size_t x : cov) {
        RepCheck& chk = g.parity(x) ? sq : pp;
        if (!chk.pass) continue;
        ++chk.checked;
        Matrix P;
        if (g.parity(x)) {
            spmul(F, S[x], S[x], P);
        } else {
            P = action[x];
            for (unsigned e = 1; e < F.p(); ++e) P = matmul(F, P, S[x]);
            Elem c = F.frob(chi.at(x));
            for (std::size_t i = 0; i < D; ++i) P.at(i, i) = F.sub(P.at(i, i), c);
        }
        bool ok = true;
        for (std::size_t m = 0; m < g.dim() && ok; ++m) {
            Elem cm = g.pmap[x][m];
            if (!cm) continue;
            if (action[m].data.empty()) {
                ok = false;
                break;
            }
            add_scaled(F, P, action[m], F.neg(cm));
        }
        if (!ok || !P.is_zero()) {
            chk.pass = false;
            chk.witness = label(x);
        }
    }
    rep.checks = {brk, pp, sq, par};
    return rep;
}

} // namespace skw
