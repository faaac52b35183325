#pragma once

#include "skw/poly.hpp"
#include "skw/rep.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace skw {

struct WordTerm {
    std::vector<std::size_t> letters;  // generator indices, product left to right
    Elem coef = 1;
};

enum class Verdict { Irreducible, GradedSimpleQ, GradedSimple, Reducible };
std::string verdict_name(Verdict v);

struct SimplicityCertificate {
    Verdict verdict = Verdict::Reducible;
    bool graded = false;       // the parity operator was adjoined as a generator
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    // irreducible: element B = sum coef * word, irreducible factor f of its
    // characteristic polynomial, a null vector of f(B) and of f(B)^T
    std::vector<WordTerm> element;
    Poly factor;
    std::size_t nullity = 0;
    bool exhaustive_null = false;  // every vector of null f(B) was spun
    Vec null_vector, dual_vector;
    bool absolutely_irreducible = false;
    // reducible: basis of a proper nonzero invariant subspace
    Matrix witness;
};

// Smallest invariant subspace containing the seeds (semi-echelon basis).
Echelon spin(const GradedRep& rep, const std::vector<Vec>& seeds, bool transposed = false);
// Is span(basis rows) invariant under every generator?
bool is_invariant(const GradedRep& rep, const Matrix& basis);

SimplicityCertificate is_irreducible(const GradedRep& rep, std::uint64_t seed);
// Graded simplicity; type M reported as Irreducible, type Q as GradedSimpleQ,
// GradedSimple when the ungraded type stays undetermined.
SimplicityCertificate is_graded_simple(const GradedRep& rep, std::uint64_t seed);
// Re-verify a certificate from its stored data.
bool replay(const GradedRep& rep, const SimplicityCertificate& cert, std::string* why = nullptr);

} // namespace skw
