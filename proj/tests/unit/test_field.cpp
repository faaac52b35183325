#include "doctest.h"
#include "fixtures.hpp"

#include "skw/error.hpp"
#include "skw/field.hpp"

#include <random>
#include <set>

using namespace skw;

TEST_CASE("make_field rejects bad parameters") {
    CHECK_THROWS_AS(Field::make(2, 1), UsageError);
    CHECK_THROWS_AS(Field::make(9, 1), UsageError);
    CHECK_THROWS_AS(Field::make(3, 0), UsageError);
}

TEST_CASE("moduli match the brute-force search") {
    for (auto& [key, low] : fixtures()["field"]["moduli"].items()) {
        auto pos = key.find('^');
        unsigned p = std::stoul(key.substr(0, pos)), k = std::stoul(key.substr(pos + 1));
        auto F = Field::make(p, k);
        std::vector<int> got(F->modulus().begin(), F->modulus().end());
        CHECK_MESSAGE(got == low.get<std::vector<int>>(), key);
    }
}

TEST_CASE("F_9 multiplicative orders") {
    auto F = Field::make(3, 2);
    std::vector<int> orders;
    for (Elem a = 1; a < 9; ++a) {
        int o = 1;
        Elem x = a;
        while (x != 1) {
            x = F->mul(x, a);
            ++o;
        }
        orders.push_back(o);
    }
    CHECK(orders == fixtures()["field"]["f9_orders"].get<std::vector<int>>());
    auto t2 = F->coeffs(F->mul(F->gen(), F->gen()));
    CHECK(std::vector<int>(t2.begin(), t2.end()) == fixtures()["field"]["f9_t_squared"].get<std::vector<int>>());
}

TEST_CASE("field axioms on F_27 and F_625") {
    for (auto [p, k] : {std::pair{3u, 3u}, std::pair{5u, 4u}}) {
        auto F = Field::make(p, k);
        std::mt19937_64 rng(7);
        for (int it = 0; it < 500; ++it) {
            Elem a = rng() % F->q(), b = rng() % F->q(), c = rng() % F->q();
            CHECK(F->add(a, 0) == a);
            CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
            CHECK(F->sub(F->add(a, b), b) == a);
            if (a) CHECK(F->mul(a, F->inv(a)) == 1);
            CHECK(F->frob_inv(F->frob(a)) == a);
            CHECK(F->frob(F->add(a, b)) == F->add(F->frob(a), F->frob(b)));
            CHECK(F->frob(a) == F->pow(a, p));
        }
        CHECK_THROWS_AS(F->inv(0), DivisionByZero);
    }
}

TEST_CASE("frobenius is the identity on F_3") {
    auto F = Field::make(3, 1);
    for (Elem a = 0; a < 3; ++a) CHECK(F->frob(a) == a);
}

TEST_CASE("Artin-Schreier roots") {
    auto F3 = Field::make(3, 1);
    CHECK(F3->artin_schreier_roots(0) == std::vector<Elem>{0, 1, 2});
    CHECK(F3->artin_schreier_roots(1).empty());
    auto F27 = Field::make(3, 3);
    auto r = F27->artin_schreier_roots(1);
    CHECK(std::vector<int>(r.begin(), r.end()) == fixtures()["field"]["as_roots_f27_c1"].get<std::vector<int>>());
    int kernel = 0;
    for (Elem x = 0; x < 27; ++x)
        if (F27->sub(F27->pow(x, 3), x) == 0) ++kernel;
    CHECK(kernel == fixtures()["field"]["f27_as_kernel_size"].get<int>());
    for (Elem c = 0; c < 27; ++c) {
        auto roots = F27->artin_schreier_roots(c);
        CHECK((roots.empty() || roots.size() == 3));
        for (Elem x : roots) CHECK(F27->sub(F27->frob(x), x) == c);
        for (Elem x : roots)
            for (Elem y : roots) CHECK(F27->in_prime_field(F27->sub(x, y)));
    }
}

TEST_CASE("serialization round trip and corrupt bytes") {
    auto F = Field::make(5, 3);
    for (Elem a = 0; a < F->q(); ++a) {
        auto b = F->serialize(a);
        CHECK(b.size() == 3);
        CHECK(F->deserialize(b.data()) == a);
    }
    std::uint8_t bad[3] = {7, 0, 0};
    CHECK_THROWS(F->deserialize(bad));
}

TEST_CASE("subfield embedding is a ring homomorphism") {
    auto small = Field::make(3, 2), big = Field::make(3, 4);
    auto e = embed_field(*small, *big);
    for (Elem a = 0; a < 9; ++a)
        for (Elem b = 0; b < 9; ++b) {
            CHECK(e[small->add(a, b)] == big->add(e[a], e[b]));
            CHECK(e[small->mul(a, b)] == big->mul(e[a], e[b]));
        }
    std::set<Elem> img(e.begin(), e.end());
    CHECK(img.size() == 9);
}

TEST_CASE("square roots") {
    auto F = Field::make(3, 4);
    int squares = 0;
    for (Elem a = 0; a < F->q(); ++a) {
        Elem r;
        if (F->sqrt(a, r)) {
            ++squares;
            CHECK(F->mul(r, r) == a);
        }
    }
    CHECK(squares == 41);
}
