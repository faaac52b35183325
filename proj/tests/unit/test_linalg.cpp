#include "doctest.h"

#include "skw/linalg.hpp"
#include "skw/poly.hpp"

#include <random>

using namespace skw;

namespace {

Matrix random_matrix(const Field& F, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    Matrix A(r, c);
    for (auto& x : A.data) x = rng() % F.q();
    return A;
}

} // namespace

TEST_CASE("left nullspace and rank") {
    auto F = Field::make(3, 2);
    std::mt19937_64 rng(3);
    for (int it = 0; it < 20; ++it) {
        Matrix B = random_matrix(*F, 4, 9, rng);
        Matrix A = matmul(*F, random_matrix(*F, 9, 4, rng), B);  // rank <= 4
        Matrix N = left_nullspace(*F, A);
        CHECK(N.rows + rank(*F, A) == 9);
        CHECK(matmul(*F, N, A).is_zero());
        Matrix R = right_nullspace(*F, A);
        CHECK(matmul(*F, A, transpose(R)).is_zero());
    }
}

TEST_CASE("inverse, determinant and solve_left") {
    auto F = Field::make(5, 2);
    std::mt19937_64 rng(5);
    for (int it = 0; it < 20; ++it) {
        Matrix A = random_matrix(*F, 6, 6, rng);
        auto inv = inverse(*F, A);
        CHECK(inv.has_value() == (determinant(*F, A) != 0));
        if (inv) CHECK(matmul(*F, A, *inv) == Matrix::identity(6));
        Vec x(6);
        for (auto& e : x) e = rng() % F->q();
        Vec b = vecmat(*F, x, A);
        auto sol = solve_left(*F, A, b);
        REQUIRE(sol);
        CHECK(vecmat(*F, *sol, A) == b);
    }
}

TEST_CASE("sparse and dense products agree") {
    auto F = Field::make(3, 3);
    std::mt19937_64 rng(9);
    Matrix A = random_matrix(*F, 7, 12, rng);
    Matrix B = random_matrix(*F, 12, 5, rng);
    for (std::size_t i = 0; i < B.data.size(); i += 3) B.data[i] = 0;
    CHECK(matmul(*F, A, B) == matmul(*F, A, Sparse::from_dense(B)));
}

TEST_CASE("echelon basis") {
    auto F = Field::make(3, 1);
    Echelon E(*F, 3);
    CHECK(E.insert({1, 2, 0}));
    CHECK(E.insert({0, 1, 1}));
    CHECK_FALSE(E.insert({1, 0, 1}));  // (1,2,0) + (0,1,1)
    CHECK(E.contains({2, 1, 0}));
    CHECK(E.rank() == 2);
}

TEST_CASE("characteristic polynomial") {
    auto F = Field::make(3, 2);
    std::mt19937_64 rng(1);
    for (int it = 0; it < 10; ++it) {
        Matrix A = random_matrix(*F, 7, 7, rng);
        Poly f = charpoly(*F, A);
        CHECK(f.size() == 8);
        CHECK(f.back() == 1);
        CHECK(eval_matrix(*F, f, A).is_zero());  // Cayley-Hamilton
        // f(0) = det(-A)
        Elem d = determinant(*F, A);
        CHECK(f[0] == F->neg(d));  // odd size: det(-A) = -det(A)
    }
}

TEST_CASE("small factors are irreducible divisors") {
    auto F = Field::make(3, 1);
    std::mt19937_64 rng(2);
    // (x+1)(x^2+1)(x^2+x+2) over F_3
    Poly f = poly::mul(*F, poly::mul(*F, Poly{1, 1}, Poly{1, 0, 1}), Poly{2, 1, 1});
    auto fs = poly::small_factors(*F, f, 3, rng);
    REQUIRE(fs.size() == 3);
    CHECK(fs[0] == Poly{1, 1});
    for (auto& g : fs) CHECK(poly::mod(*F, f, g).empty());
}
