#include "doctest.h"
#include "fixtures.hpp"

#include "skw/error.hpp"
#include "skw/pchar.hpp"

#include <random>

using namespace skw;

namespace {

bool alternating(const Field& F, const Matrix& G) {
    for (std::size_t i = 0; i < G.rows; ++i) {
        if (G.at(i, i)) return false;
        for (std::size_t j = 0; j < G.cols; ++j)
            if (G.at(i, j) != F.neg(G.at(j, i))) return false;
    }
    return true;
}

bool symmetric(const Matrix& G) {
    return G == transpose(G);
}

struct Extremes {
    u128 max_skw = 0;
    std::size_t min_cz_odd = 1000;
};

Extremes sweep(AlgebraPtr g) {
    Extremes e;
    for (const auto& t : enumerate_rational(g)) {
        auto r = b_values(t);
        e.max_skw = std::max(e.max_skw, r.skw_term);
        e.min_cz_odd = std::min(e.min_cz_odd, r.centralizer_odd);
    }
    return e;
}

} // namespace

TEST_CASE("zero character") {
    auto g = build_algebra(Family::PTilde, 2, Field::make(3, 1));
    PChar z = PChar::zero(g);
    CHECK(gram_matrix(z, 0).is_zero());
    auto r = b_values(z);
    CHECK(r.b0 == 0);
    CHECK(r.b1 == 0);
    CHECK(r.skw_term == 1);
    CHECK(lambda_set(z).size() == 9);
    CHECK_THROWS_AS(skw_bound({}), UsageError);
}

TEST_CASE("Gram blocks: alternating even, symmetric odd") {
    std::mt19937_64 rng(21);
    for (Family f : {Family::PTilde, Family::Q}) {
        auto g = build_algebra(f, 2, Field::make(3, 2));
        for (int it = 0; it < 100; ++it) {
            PChar t = random_pchar(g, rng);
            Matrix G0 = gram_matrix(t, 0);
            CHECK(alternating(*g->F, G0));
            CHECK(rank(*g->F, G0) % 2 == 0);
            CHECK(symmetric(gram_matrix(t, 1)));
        }
    }
}

TEST_CASE("regular semisimple examples") {
    auto F9 = Field::make(3, 2);
    const Elem t = F9->gen();
    auto pt = build_algebra(Family::PTilde, 2, F9);
    auto gc = gen_regular_semisimple(pt, {0, t});
    CHECK(gc.chi.at(pt->index_of("H1")) == 0);
    CHECK(in_lambda_set(gc.chi, gc.lambda));
    auto r = b_values(gc.chi);
    CHECK(r.b1 == 2);
    auto fx = fixtures()["pchar"]["ptilde2_regss_f9"];
    auto fw = fx["lambda"].get<std::vector<int>>();
    auto g2 = gen_regular_semisimple(pt, {static_cast<Elem>(fw[0]), static_cast<Elem>(fw[1])});
    CHECK(static_cast<int>(b_values(g2.chi).skw_term) == fx["value"].get<int>());
    auto lams = lambda_set(gc.chi);
    CHECK(lams.size() == 9);
    CHECK(std::find(lams.begin(), lams.end(), gc.lambda) != lams.end());

    auto q2 = build_algebra(Family::Q, 2, F9);
    CHECK_THROWS_AS(gen_regular_semisimple(q2, {t, F9->mul(2, t)}, Regularity::StronglyRegular), UsageError);
    auto F27 = Field::make(3, 3);
    auto q2b = build_algebra(Family::Q, 2, F27);
    std::mt19937_64 rng(1);
    auto w = find_regular_weights(Family::Q, *F27, 2, Regularity::StronglyRegular, rng);
    REQUIRE(w);
    auto sr = gen_regular_semisimple(q2b, *w, Regularity::StronglyRegular);
    auto rq = b_values(sr.chi);
    CHECK(rq.b1 == 4);
    CHECK(determinant(*F27, gram_matrix(sr.chi, 1)) != 0);
}

TEST_CASE("strongly regular tuples for n = 3") {
    auto fx = fixtures()["pchar"]["strong_regular_n3_p3"];
    for (auto [k, key] : {std::pair{2u, "F9"}, std::pair{3u, "F27"}}) {
        auto F = Field::make(3, k);
        long count = 0;
        for (Elem a = 0; a < F->q(); ++a)
            for (Elem b = 0; b < F->q(); ++b)
                for (Elem c = 0; c < F->q(); ++c)
                    if (!weight_violation(Family::Q, *F, {a, b, c}, Regularity::StronglyRegular)) ++count;
        CHECK(count == fx[key].get<long>());
    }
}

TEST_CASE("regular nilpotent") {
    auto fx = fixtures()["pchar"]["regnilp_b0"];
    for (unsigned n : {2u, 3u}) {
        auto g = build_algebra(Family::PTilde, n, Field::make(3, 1));
        PChar chi = gen_regular_nilpotent(g);
        std::size_t nz = 0;
        for (auto v : chi.values) nz += v != 0;
        CHECK(nz == n - 1);
        for (std::size_t i : g->even_pos) CHECK(chi.at(i) == 0);
        for (std::size_t i : g->cartan_even) CHECK(chi.at(i) == 0);
        CHECK(lambda_set(chi).size() == (n == 2 ? 9u : 27u));
        CHECK(b_values(chi).b0 == fx[std::to_string(n)].get<std::size_t>());
    }
    CHECK_THROWS_AS(gen_regular_nilpotent(build_algebra(Family::Q, 2, Field::make(3, 1))), UsageError);
}

TEST_CASE("lambda set over growing fields") {
    auto g3 = build_algebra(Family::PTilde, 2, Field::make(3, 1));
    PChar chi = PChar::zero(g3);
    chi.values[g3->even_slot(g3->index_of("H1"))] = 1;
    CHECK(lambda_set(chi).empty());
    auto g27 = build_algebra(Family::PTilde, 2, Field::make(3, 3));
    PChar chi27 = PChar::zero(g27);
    chi27.values[g27->even_slot(g27->index_of("H1"))] = 1;
    auto ls = lambda_set(chi27);
    CHECK(ls.size() == 9);
    for (auto& l : ls) CHECK(in_lambda_set(chi27, l));
}

TEST_CASE("b-values are coadjoint invariant") {
    std::mt19937_64 rng(8);
    for (Family f : {Family::PTilde, Family::Q, Family::SQ}) {
        auto g = build_algebra(f, 2, Field::make(3, 2));
        const Field& F = *g->F;
        for (int s = 0; s < 5; ++s) {
            PChar t = random_pchar(g, rng);
            auto r = b_values(t);
            for (int c = 0; c < 20; ++c) {
                Matrix gm(2, 2);
                do {
                    for (auto& x : gm.data) x = rng() % F.q();
                } while (!determinant(F, gm));
                auto r2 = b_values(coadjoint(t, gm));
                CHECK(r2.b0 == r.b0);
                CHECK(r2.b1 == r.b1);
            }
        }
    }
}

TEST_CASE("exhaustive F_3 sweeps match the oracle") {
    auto fx = fixtures()["pchar"]["exhaustive_f3"];
    auto F3 = Field::make(3, 1);
    for (auto [f, key] : {std::pair{Family::PTilde, "ptilde2"}, {Family::Q, "q2"}, {Family::SQ, "sq2"}}) {
        auto e = sweep(build_algebra(f, 2, F3));
        CHECK_MESSAGE(static_cast<int>(e.max_skw) == fx[key]["max_skw"].get<int>(), key);
        CHECK_MESSAGE(e.min_cz_odd == fx[key]["min_centralizer_odd"].get<std::size_t>(), key);
    }
    auto e3 = sweep(build_algebra(Family::PTilde, 3, F3));
    CHECK(e3.min_cz_odd == fx["ptilde3_min_centralizer_odd"].get<std::size_t>());
}

TEST_CASE("u128 formatting") {
    u128 big = skw_term(5, 40, 64);
    CHECK(to_string_u128(big) == "409600000000000000000000");
    CHECK(to_string_u128(0) == "0");
}
