#include "skw/poly.hpp"

#include "skw/error.hpp"
#include "skw/kernels.hpp"

#include <algorithm>

namespace skw {
namespace poly {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) {
    return static_cast<int>(a.size()) - 1;
}

Poly add(const Field& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
    trim(r);
    return r;
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    trim(r);
    return r;
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i]) kern::axpy(F, r.data() + i, b.data(), a[i], b.size());
    trim(r);
    return r;
}

void divmod(const Field& F, const Poly& a, const Poly& b, Poly& qt, Poly& r) {
    if (b.empty()) throw DivisionByZero();
    r = a;
    trim(r);
    int db = degree(b);
    qt.assign(r.size() > b.size() - 1 ? r.size() - b.size() + 1 : 0, 0);
    Elem lead_inv = F.inv(b.back());
    while (degree(r) >= db) {
        int shift = degree(r) - db;
        Elem c = F.mul(r.back(), lead_inv);
        qt[shift] = c;
        kern::axpy(F, r.data() + shift, b.data(), F.neg(c), b.size());
        trim(r);
    }
    trim(qt);
}

Poly mod(const Field& F, const Poly& a, const Poly& b) {
    Poly qt, r;
    divmod(F, a, b, qt, r);
    return r;
}

Poly div(const Field& F, const Poly& a, const Poly& b) {
    Poly qt, r;
    divmod(F, a, b, qt, r);
    return qt;
}

Poly monic(const Field& F, const Poly& a) {
    if (a.empty()) return a;
    Poly r = a;
    kern::scale(F, r.data(), F.inv(a.back()), r.size());
    return r;
}

Poly gcd(const Field& F, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

Poly powmod(const Field& F, Poly base, std::uint64_t e, const Poly& m) {
    Poly r{1};
    r = mod(F, r, m);
    base = mod(F, base, m);
    while (e) {
        if (e & 1) r = mod(F, mul(F, r, base), m);
        e >>= 1;
        if (e) base = mod(F, mul(F, base, base), m);
    }
    return r;
}

Elem eval(const Field& F, const Poly& a, Elem x) {
    Elem acc = 0;
    for (size_t i = a.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a[i]);
    return acc;
}

namespace {

// Split a product of distinct monic irreducibles of degree d.
void equal_degree_split(const Field& F, const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (degree(g) == d) {
        out.push_back(g);
        return;
    }
    std::uint64_t qd = 1;
    for (int i = 0; i < d; ++i) qd *= F.q();
    const std::uint64_t e = (qd - 1) / 2;
    for (;;) {
        Poly a(static_cast<size_t>(degree(g)), 0);
        for (auto& c : a) c = static_cast<Elem>(rng() % F.q());
        trim(a);
        if (degree(a) < 1) continue;
        Poly h = gcd(F, a, g);
        if (degree(h) > 0 && degree(h) < degree(g)) {
            equal_degree_split(F, h, d, rng, out);
            equal_degree_split(F, div(F, g, h), d, rng, out);
            return;
        }
        Poly b = powmod(F, a, e, g);
        b = sub(F, b, Poly{1});
        h = gcd(F, b, g);
        if (degree(h) > 0 && degree(h) < degree(g)) {
            equal_degree_split(F, h, d, rng, out);
            equal_degree_split(F, div(F, g, h), d, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<Poly> small_factors(const Field& F, const Poly& f_in, int maxdeg, std::mt19937_64& rng) {
    Poly f = monic(F, f_in);
    std::vector<Poly> out;
    if (degree(f) < 1) return out;
    const Poly x{0, 1};
    Poly xq = mod(F, x, f);        // x^{q^d} mod f, updated as d grows
    Poly found{1};                 // product of the factors of degree < d
    for (int d = 1; d <= maxdeg && d <= degree(f); ++d) {
        long double qd = 1;
        for (int i = 0; i < d; ++i) qd *= F.q();
        if (qd > 4.0e18L) break;
        xq = powmod(F, xq, F.q(), f);
        Poly g = gcd(F, sub(F, xq, x), f);
        // remove factors of degree dividing d but smaller than d
        Poly lower = gcd(F, g, found);
        while (degree(lower) > 0) {
            g = div(F, g, lower);
            lower = gcd(F, g, found);
        }
        if (degree(g) <= 0) continue;
        std::vector<Poly> parts;
        equal_degree_split(F, g, d, rng, parts);
        for (auto& part : parts) part = monic(F, part);
        std::sort(parts.begin(), parts.end(), [](const Poly& a, const Poly& b) {
            return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
        });
        for (auto& part : parts) {
            found = mul(F, found, part);
            out.push_back(part);
        }
    }
    return out;
}

} // namespace poly

Poly charpoly(const Field& F, const Matrix& A) {
    if (A.rows != A.cols) throw UsageError("charpoly: not square");
    const std::size_t n = A.rows;
    Matrix H = A;
    for (std::size_t c = 0; c + 2 < n; ++c) {
        std::size_t r = c + 1;
        while (r < n && H.at(r, c) == 0) ++r;
        if (r == n) continue;
        if (r != c + 1) {
            std::swap_ranges(H.row(r), H.row(r) + n, H.row(c + 1));
            for (std::size_t i = 0; i < n; ++i) std::swap(H.at(i, r), H.at(i, c + 1));
        }
        Elem inv = F.inv(H.at(c + 1, c));
        for (std::size_t i = c + 2; i < n; ++i) {
            Elem t = F.mul(H.at(i, c), inv);
            if (!t) continue;
            kern::axpy(F, H.row(i) + c, H.row(c + 1) + c, F.neg(t), n - c);
            for (std::size_t j = 0; j < n; ++j) {
                Elem hij = H.at(j, i);
                if (hij) H.at(j, c + 1) = F.add(H.at(j, c + 1), F.mul(t, hij));
            }
        }
    }
    // p_m = (x - h_{m-1,m-1}) p_{m-1} - sum_i t_i h_{m-i-1,m-1} p_{m-i-1}
    std::vector<Poly> P(n + 1);
    P[0] = Poly{1};
    for (std::size_t m = 1; m <= n; ++m) {
        Poly cur = poly::mul(F, Poly{F.neg(H.at(m - 1, m - 1)), 1}, P[m - 1]);
        Elem t = 1;
        for (std::size_t i = 1; i < m; ++i) {
            t = F.mul(t, H.at(m - i, m - i - 1));
            if (!t) break;
            Elem c = F.mul(t, H.at(m - i - 1, m - 1));
            if (c) {
                Poly term = P[m - i - 1];
                kern::scale(F, term.data(), c, term.size());
                cur = poly::sub(F, cur, term);
            }
        }
        P[m] = std::move(cur);
    }
    Poly out = P[n];
    out.resize(n + 1, 0);
    return out;
}

Matrix eval_matrix(const Field& F, const Poly& f, const Matrix& A) {
    const std::size_t n = A.rows;
    Matrix R(n, n);
    for (std::size_t i = f.size(); i-- > 0;) {
        R = matmul(F, R, A);
        for (std::size_t j = 0; j < n; ++j) R.at(j, j) = F.add(R.at(j, j), f[i]);
    }
    return R;
}

} // namespace skw
