#include "skw/meataxe.hpp"

#include "skw/error.hpp"
#include "skw/kernels.hpp"

#include <algorithm>
#include <random>

namespace skw {

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Irreducible: return "irreducible";
    case Verdict::GradedSimpleQ: return "graded_simple_type_Q";
    case Verdict::GradedSimple: return "graded_simple";
    case Verdict::Reducible: return "reducible";
    }
    return "reducible";
}

namespace {

constexpr std::size_t kWordBudget = 200;
constexpr std::size_t kHardCap = 400;
constexpr std::size_t kTypeBudget = 60;
constexpr double kEnumerationLimit = 20000;

struct Gens {
    const Field* F;
    std::size_t D;
    std::vector<Sparse> sp, spT;
};

Gens make_gens(const GradedRep& rep, bool graded) {
    if (rep.dim == 0) throw UsageError("representation of dimension 0");
    for (const auto& A : rep.gens)
        if (A.rows != rep.dim || A.cols != rep.dim) throw UsageError("generator of wrong size");
    Gens g{rep.F.get(), rep.dim, {}, {}};
    std::vector<Matrix> all = rep.gens;
    if (graded) {
        if (rep.parity.size() != rep.dim) throw UsageError("parity vector of wrong length");
        all.push_back(rep.parity_operator());
    }
    for (const auto& A : all) {
        g.sp.push_back(Sparse::from_dense(A));
        g.spT.push_back(Sparse::from_dense(transpose(A)));
    }
    return g;
}

Echelon spin_gens(const Gens& g, const std::vector<Vec>& seeds, bool transposed) {
    const Field& F = *g.F;
    const auto& mats = transposed ? g.spT : g.sp;
    Echelon E(F, g.D);
    std::vector<Vec> queue;
    for (const auto& s : seeds) {
        if (s.size() != g.D) throw UsageError("seed of wrong length");
        if (E.insert(s)) queue.push_back(E.rows().back());
    }
    Vec w(g.D);
    for (std::size_t at = 0; at < queue.size() && E.rank() < g.D; ++at)
        for (const auto& A : mats) {
            std::fill(w.begin(), w.end(), 0);
            vecmat_into(F, queue[at].data(), A, w.data());
            if (E.insert(w)) queue.push_back(E.rows().back());
            if (E.rank() == g.D) break;
        }
    return E;
}

Matrix build_element(const Gens& g, const std::vector<WordTerm>& terms) {
    const Field& F = *g.F;
    Matrix B(g.D, g.D);
    for (const auto& t : terms) {
        if (t.letters.empty()) throw UsageError("empty word");
        for (std::size_t l : t.letters)
            if (l >= g.sp.size()) throw UsageError("word letter out of range");
        Matrix W(g.D, g.D);
        const Sparse& first = g.sp[t.letters[0]];
        for (std::size_t r = 0; r < g.D; ++r)
            for (std::uint32_t u = first.start[r]; u < first.start[r + 1]; ++u) W.at(r, first.col[u]) = first.val[u];
        for (std::size_t k = 1; k < t.letters.size(); ++k) W = matmul(F, W, g.sp[t.letters[k]]);
        add_scaled(F, B, W, t.coef);
    }
    return B;
}

Matrix annihilator(const Field& F, const Echelon& E) {
    // {v : v . w = 0 for all w in E}
    return right_nullspace(F, E.matrix());
}

Matrix echelon_basis(const Echelon& E) {
    return E.matrix();
}

// All nonzero vectors of the row space of N, one per projective point.
template <class Fn>
bool for_each_point(const Field& F, const Matrix& N, Fn&& fn) {
    const std::size_t r = N.rows;
    for (std::size_t lead = 0; lead < r; ++lead) {
        std::vector<Elem> c(r, 0);
        c[lead] = 1;
        for (;;) {
            Vec v(N.cols, 0);
            for (std::size_t i = lead; i < r; ++i)
                if (c[i]) kern::axpy(F, v.data(), N.row(i), c[i], N.cols);
            if (!fn(v)) return false;
            std::size_t i = r;
            while (i > lead + 1 && ++c[i - 1] == F.q()) {
                c[i - 1] = 0;
                --i;
            }
            if (i == lead + 1) break;
        }
    }
    return true;
}

double projective_points(const Field& F, std::size_t r) {
    double t = 1;
    for (std::size_t i = 0; i < r; ++i) t *= F.q();
    return (t - 1) / (F.q() - 1);
}

SimplicityCertificate run(const GradedRep& rep, bool graded, std::uint64_t seed, std::size_t budget,
                          std::size_t fallback_from) {
    const Field& F = *rep.F;
    Gens g = make_gens(rep, graded);
    SimplicityCertificate cert;
    cert.graded = graded;
    cert.seed = seed;
    if (g.D == 1) {
        cert.verdict = Verdict::Irreducible;
        cert.absolutely_irreducible = true;
        cert.null_vector = cert.dual_vector = Vec{1};
        cert.nullity = 1;
        cert.factor = {};
        return cert;
    }
    std::mt19937_64 rng(seed);
    const std::size_t G = g.sp.size();
    auto reducible = [&](Matrix W) {
        cert.verdict = Verdict::Reducible;
        cert.witness = std::move(W);
        cert.element.clear();
        return cert;
    };
    for (std::size_t trial = 0; trial < budget; ++trial) {
        cert.trials = trial + 1;
        std::vector<WordTerm> terms(2 + rng() % 4);
        for (auto& t : terms) {
            std::size_t len = 1 + rng() % 4;
            for (std::size_t k = 0; k < len; ++k) t.letters.push_back(rng() % G);
            t.coef = static_cast<Elem>(1 + rng() % (F.q() - 1));
        }
        Matrix B = build_element(g, terms);
        Poly cp = charpoly(F, B);
        const bool late = trial >= fallback_from;
        auto factors = poly::small_factors(F, cp, late ? static_cast<int>(g.D) : 4, rng);
        std::stable_sort(factors.begin(), factors.end(),
                         [](const Poly& a, const Poly& b) { return a.size() < b.size(); });
        for (const auto& f : factors) {
            Matrix fB = eval_matrix(F, f, B);
            Matrix N = left_nullspace(F, fB);
            const std::size_t deg = static_cast<std::size_t>(poly::degree(f));
            if (N.rows == 0) continue;
            Vec v(N.row(0), N.row(0) + g.D);
            Echelon S = spin_gens(g, {v}, false);
            if (S.rank() < g.D) return reducible(echelon_basis(S));
            bool all_full = N.rows == deg;
            if (!all_full) {
                if (!late || projective_points(F, N.rows) > kEnumerationLimit) continue;
                Matrix witness;
                bool full = for_each_point(F, N, [&](const Vec& u) {
                    Echelon Su = spin_gens(g, {u}, false);
                    if (Su.rank() < g.D) {
                        witness = echelon_basis(Su);
                        return false;
                    }
                    return true;
                });
                if (!full) return reducible(std::move(witness));
                cert.exhaustive_null = true;
            }
            Matrix NT = left_nullspace(F, transpose(fB));
            Vec w(NT.row(0), NT.row(0) + g.D);
            Echelon ST = spin_gens(g, {w}, true);
            if (ST.rank() < g.D) return reducible(annihilator(F, ST));
            cert.verdict = Verdict::Irreducible;
            cert.element = terms;
            cert.factor = f;
            cert.nullity = N.rows;
            cert.null_vector = v;
            cert.dual_vector = w;
            cert.absolutely_irreducible = deg == 1 && N.rows == 1;
            return cert;
        }
    }
    cert.verdict = Verdict::GradedSimple;  // marker: undecided within the budget
    return cert;
}

} // namespace

Echelon spin(const GradedRep& rep, const std::vector<Vec>& seeds, bool transposed) {
    for (const auto& s : seeds)
        if (is_zero(s)) throw UsageError("spin: zero seed");
    return spin_gens(make_gens(rep, false), seeds, transposed);
}

bool is_invariant(const GradedRep& rep, const Matrix& basis) {
    const Field& F = *rep.F;
    Echelon E(F, rep.dim);
    for (std::size_t r = 0; r < basis.rows; ++r) E.insert(Vec(basis.row(r), basis.row(r) + basis.cols));
    for (const auto& A : rep.gens)
        for (std::size_t r = 0; r < basis.rows; ++r) {
            Vec w = vecmat(F, Vec(basis.row(r), basis.row(r) + basis.cols), A);
            if (!E.contains(w)) return false;
        }
    return true;
}

SimplicityCertificate is_irreducible(const GradedRep& rep, std::uint64_t seed) {
    auto cert = run(rep, false, seed, kHardCap, kWordBudget);
    if (cert.verdict == Verdict::GradedSimple)
        throw ModuleError("MeatAxe exhausted its word budget without a verdict (dimension " + std::to_string(rep.dim) + ")");
    return cert;
}

SimplicityCertificate is_graded_simple(const GradedRep& rep, std::uint64_t seed) {
    if (!rep.parity_consistent()) throw UsageError("generators are not parity-homogeneous");
    auto graded = run(rep, true, seed, kHardCap, kWordBudget);
    if (graded.verdict == Verdict::GradedSimple)
        throw ModuleError("MeatAxe exhausted its word budget without a graded verdict");
    if (graded.verdict == Verdict::Reducible) return graded;
    auto plain = run(rep, false, seed, kTypeBudget, kTypeBudget / 3);
    if (plain.verdict == Verdict::Irreducible) return plain;
    graded.verdict = plain.verdict == Verdict::Reducible ? Verdict::GradedSimpleQ : Verdict::GradedSimple;
    return graded;
}

bool replay(const GradedRep& rep, const SimplicityCertificate& cert, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    const Field& F = *rep.F;
    if (cert.verdict == Verdict::Reducible) {
        const Matrix& W = cert.witness;
        if (W.cols != rep.dim) return fail("witness has the wrong width");
        std::size_t r = rank(F, W);
        if (r == 0 || r >= rep.dim) return fail("witness is not a proper nonzero subspace");
        GradedRep probe = rep;
        if (cert.graded) {
            probe.gens.push_back(rep.parity_operator());
            probe.gen_parity.push_back(0);
        }
        if (!is_invariant(probe, W)) return fail("witness is not invariant");
        return true;
    }
    Gens g = make_gens(rep, cert.graded);
    if (g.D == 1) return true;
    Matrix B = build_element(g, cert.element);
    Matrix fB = eval_matrix(F, cert.factor, B);
    if (!is_zero(vecmat(F, cert.null_vector, fB))) return fail("null vector is not annihilated");
    if (!is_zero(vecmat(F, cert.dual_vector, transpose(fB)))) return fail("dual vector is not annihilated");
    Matrix N = left_nullspace(F, fB);
    if (N.rows != cert.nullity) return fail("nullity differs");
    const std::size_t deg = static_cast<std::size_t>(poly::degree(cert.factor));
    if (N.rows != deg) {
        if (!cert.exhaustive_null) return fail("nullity exceeds the factor degree");
        bool full = for_each_point(F, N, [&](const Vec& u) { return spin_gens(g, {u}, false).rank() == g.D; });
        if (!full) return fail("a null vector spins to a proper subspace");
    } else if (spin_gens(g, {cert.null_vector}, false).rank() != g.D) {
        return fail("null vector spin is proper");
    }
    if (spin_gens(g, {cert.dual_vector}, true).rank() != g.D) return fail("dual spin is proper");
    return true;
}

} // namespace skw
