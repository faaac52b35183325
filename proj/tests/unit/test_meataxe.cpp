#include "doctest.h"

#include "skw/envmod.hpp"
#include "skw/error.hpp"
#include "skw/meataxe.hpp"
#include "skw/verma.hpp"

#include <random>

using namespace skw;

namespace {

// Irreducible iff every nonzero vector spins to the whole space.
bool brute_irreducible(const GradedRep& rep) {
    const Field& F = *rep.F;
    std::vector<Elem> c(rep.dim, 0);
    for (;;) {
        std::size_t i = 0;
        while (i < c.size() && ++c[i] == F.q()) c[i++] = 0;
        if (i == c.size()) return true;
        // projective points: last nonzero coordinate is 1
        std::size_t last = c.size();
        while (last-- > 0 && !c[last]) {}
        if (c[last] != 1) continue;
        if (spin(rep, {c}).rank() != rep.dim) return false;
    }
}

GradedRep direct_sum(const GradedRep& a, const GradedRep& b) {
    GradedRep s;
    s.F = a.F;
    s.dim = a.dim + b.dim;
    s.parity = a.parity;
    s.parity.insert(s.parity.end(), b.parity.begin(), b.parity.end());
    for (std::size_t t = 0; t < a.gens.size(); ++t) {
        Matrix M(s.dim, s.dim);
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) M.at(i, j) = a.gens[t].at(i, j);
        for (std::size_t i = 0; i < b.dim; ++i)
            for (std::size_t j = 0; j < b.dim; ++j) M.at(a.dim + i, a.dim + j) = b.gens[t].at(i, j);
        s.gens.push_back(std::move(M));
        s.gen_parity.push_back(a.gen_parity[t]);
        s.gen_labels.push_back(a.gen_labels[t]);
    }
    return s;
}

} // namespace

TEST_CASE("one-dimensional module is irreducible") {
    GradedRep r;
    r.F = Field::make(3, 1);
    r.dim = 1;
    r.parity = {0};
    r.gens = {Matrix(1, 1)};
    r.gen_parity = {0};
    r.gen_labels = {"x"};
    auto c = is_irreducible(r, 1);
    CHECK(c.verdict == Verdict::Irreducible);
    CHECK(replay(r, c));
}

TEST_CASE("spin rejects a zero seed") {
    auto g = build_algebra(Family::PTilde, 2, Field::make(3, 1));
    GradedRep rep = ptilde_baby_verma(g, PChar::zero(g), Weight{1, 2}).to_rep();
    CHECK_THROWS_AS(spin(rep, {Vec(rep.dim, 0)}), UsageError);
}

TEST_CASE("meataxe agrees with exhaustive spinning") {
    for (unsigned k : {1u, 2u}) {
        auto g = build_algebra(Family::PTilde, 2, Field::make(3, k));
        PChar chi = PChar::zero(g);
        std::size_t irr = 0, red = 0;
        for (const auto& lam : lambda_set(chi)) {
            GradedRep rep = ptilde_baby_verma(g, chi, lam).to_rep();
            bool expect = brute_irreducible(rep);
            for (std::uint64_t seed : {1u, 2u}) {
                auto c = is_irreducible(rep, seed);
                CAPTURE(lam[0]);
                CAPTURE(lam[1]);
                CHECK((c.verdict == Verdict::Irreducible) == expect);
                CHECK(replay(rep, c));
                if (c.verdict == Verdict::Reducible) CHECK(is_invariant(rep, c.witness));
            }
            (expect ? irr : red)++;
        }
        CHECK(red > 0);
    }
    // regular semisimple: every baby Verma is irreducible
    auto F9 = Field::make(3, 2);
    auto g = build_algebra(Family::PTilde, 2, F9);
    std::mt19937_64 rng(3);
    auto w = find_regular_weights(Family::PTilde, *F9, 2, Regularity::Regular, rng, 1000);
    REQUIRE(w);
    auto gen = gen_regular_semisimple(g, *w);
    for (const auto& lam : lambda_set(gen.chi)) {
        GradedRep rep = ptilde_baby_verma(g, gen.chi, lam).to_rep();
        CHECK(brute_irreducible(rep));
        CHECK(is_irreducible(rep, 9).verdict == Verdict::Irreducible);
    }
}

TEST_CASE("direct sums are reducible") {
    auto g = build_algebra(Family::PTilde, 2, Field::make(3, 2));
    std::mt19937_64 rng(4);
    auto w = find_regular_weights(Family::PTilde, *g->F, 2, Regularity::Regular, rng, 1000);
    REQUIRE(w);
    auto gen = gen_regular_semisimple(g, *w);
    GradedRep a = ptilde_baby_verma(g, gen.chi, gen.lambda).to_rep();
    GradedRep s = direct_sum(a, a);
    auto c = is_irreducible(s, 7);
    CHECK(c.verdict == Verdict::Reducible);
    CHECK(c.witness.rows > 0);
    CHECK(c.witness.rows < s.dim);
    CHECK(is_invariant(s, c.witness));
    CHECK(replay(s, c));
    CHECK(is_graded_simple(s, 7).verdict == Verdict::Reducible);
}

TEST_CASE("certificates are deterministic and tamper-evident") {
    auto g = build_algebra(Family::PTilde, 2, Field::make(3, 2));
    std::mt19937_64 rng(8);
    auto w = find_regular_weights(Family::PTilde, *g->F, 2, Regularity::Regular, rng, 1000);
    REQUIRE(w);
    auto gen = gen_regular_semisimple(g, *w);
    GradedRep rep = ptilde_baby_verma(g, gen.chi, gen.lambda).to_rep();
    auto a = is_irreducible(rep, 42), b = is_irreducible(rep, 42);
    REQUIRE(a.verdict == Verdict::Irreducible);
    CHECK(a.trials == b.trials);
    CHECK(a.null_vector == b.null_vector);
    CHECK(a.factor == b.factor);
    std::string why;
    CHECK(replay(rep, a, &why));
    auto bad = a;
    bad.factor[0] = g->F->add(bad.factor[0], 1);
    CHECK_FALSE(replay(rep, bad, &why));
    CHECK_FALSE(why.empty());
}

TEST_CASE("graded simplicity of queer modules") {
    auto F9 = Field::make(3, 2);
    auto g = build_algebra(Family::Q, 2, F9);
    std::mt19937_64 rng(12);
    auto w = find_regular_weights(Family::Q, *F9, 2, Regularity::Regular, rng, 1000);
    REQUIRE(w);
    auto gen = gen_regular_semisimple(g, *w);
    InducedModule Z = queer_baby_verma(g, gen.chi, gen.lambda);
    GradedRep rep = Z.to_rep();
    CHECK(rep.parity_consistent());
    auto c = is_graded_simple(rep, 5);
    CHECK(c.verdict != Verdict::Reducible);
    CHECK(replay(rep, c));
}
