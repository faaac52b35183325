#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace skw {

// An element of F_{p^k}: the integer sum c_0 + c_1 p + ... + c_{k-1} p^{k-1}
// of its coefficients in the power basis 1, t, ..., t^{k-1}.
using Elem = std::uint16_t;
using Vec = std::vector<Elem>;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
public:
    // Deterministic modulus: smallest irreducible for k <= 4, seeded random
    // search above.  Instances are cached, so equal (p, k) share one object.
    static FieldPtr make(unsigned p, unsigned k);

    unsigned p() const { return p_; }
    unsigned k() const { return k_; }
    unsigned q() const { return q_; }
    // Low coefficients c_0..c_{k-1} of the monic modulus.
    const std::vector<std::uint8_t>& modulus() const { return modulus_; }
    std::string name() const;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    // The residue class of X (zero when the modulus is X).
    Elem gen() const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    Elem frob(Elem a) const { return frob_[a]; }
    Elem frob_inv(Elem a) const { return frob_inv_[a]; }

    Elem from_int(long long n) const;
    bool in_prime_field(Elem a) const { return a < p_; }
    // Is a fixed by x -> x^{p^d}, i.e. in the subfield F_{p^d}?
    bool in_subfield(Elem a, unsigned d) const;

    std::vector<std::uint8_t> coeffs(Elem a) const;
    Elem from_coeffs(const std::vector<std::uint8_t>& c) const;

    // Solutions of x^p - x = c, sorted by code.  Empty or exactly p elements.
    std::vector<Elem> artin_schreier_roots(Elem c) const;
    // Square root when a is a square (smallest code among the roots).
    bool sqrt(Elem a, Elem& root) const;

    // Lookup tables for the row kernels; null when q is too large to tabulate.
    const std::uint16_t* add_table() const { return add_.empty() ? nullptr : add_.data(); }
    const std::uint16_t* mul_table() const { return mul_.empty() ? nullptr : mul_.data(); }
    const std::uint16_t* neg_table() const { return neg_.data(); }

    std::vector<std::uint8_t> serialize(Elem a) const { return coeffs(a); }
    Elem deserialize(const std::uint8_t* bytes) const;

    static bool is_prime(unsigned n);

    Field(unsigned p, unsigned k, std::vector<std::uint8_t> modulus);

private:
    unsigned p_, k_, q_;
    std::vector<std::uint8_t> modulus_;
    std::vector<std::uint16_t> add_, mul_;  // q*q tables when q <= kTableLimit
    std::vector<std::uint16_t> neg_, inv_;
    std::vector<std::uint16_t> log_, exp_;  // exp_ has 2(q-1) entries
    std::vector<std::uint16_t> frob_, frob_inv_;
    std::vector<std::uint32_t> pw_;          // p^i
    std::vector<std::int32_t> sqrt_;         // -1 for non-squares
};

constexpr unsigned kTableLimit = 1024;

// Monic modulus search, exposed for tests.
std::vector<std::uint8_t> find_modulus(unsigned p, unsigned k);
// Rabin irreducibility test for a monic polynomial over F_p given by its
// low coefficients.
bool is_irreducible_mod_p(const std::vector<std::uint8_t>& low, unsigned p);

// Map from a subfield into a larger field sharing the characteristic.
// Returns the image of every code of `small` (requires small.k | big.k).
std::vector<Elem> embed_field(const Field& small, const Field& big);

} // namespace skw
