#pragma once

#include "skw/field.hpp"
#include "skw/linalg.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace skw {

// Polynomial over F_q, low degree first, no trailing zeros (zero = empty).
using Poly = std::vector<Elem>;

namespace poly {

void trim(Poly& a);
int degree(const Poly& a);
Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly mul(const Field& F, const Poly& a, const Poly& b);
// a = qt * b + r
void divmod(const Field& F, const Poly& a, const Poly& b, Poly& qt, Poly& r);
Poly mod(const Field& F, const Poly& a, const Poly& b);
Poly div(const Field& F, const Poly& a, const Poly& b);
Poly monic(const Field& F, const Poly& a);
Poly gcd(const Field& F, Poly a, Poly b);
Poly powmod(const Field& F, Poly base, std::uint64_t e, const Poly& m);
Elem eval(const Field& F, const Poly& a, Elem x);

// Distinct monic irreducible factors of f with degree <= maxdeg, ordered by
// (degree, coefficients).  Multiplicities are ignored.
std::vector<Poly> small_factors(const Field& F, const Poly& f, int maxdeg, std::mt19937_64& rng);

} // namespace poly

// Characteristic polynomial det(xI - A) via Hessenberg reduction.
Poly charpoly(const Field& F, const Matrix& A);
// f(A) for a square matrix A.
Matrix eval_matrix(const Field& F, const Poly& f, const Matrix& A);

} // namespace skw
