#include "skw/field.hpp"

#include "skw/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

namespace skw {

namespace {

using IPoly = std::vector<int>;  // coefficients over F_p, low degree first

void trim(IPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
    int r = 1, e = p - 2, b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

IPoly pmod(IPoly a, const IPoly& m, int p) {
    trim(a);
    int dm = static_cast<int>(m.size()) - 1;
    int lead_inv = inv_mod(m.back(), p);
    while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
        int c = a.back() * lead_inv % p;
        int shift = static_cast<int>(a.size()) - 1 - dm;
        for (int i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

IPoly pmulmod(const IPoly& a, const IPoly& b, const IPoly& m, int p) {
    if (a.empty() || b.empty()) return {};
    IPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return pmod(r, m, p);
}

IPoly ppowmod(IPoly base, std::uint64_t e, const IPoly& m, int p) {
    IPoly r{1};
    base = pmod(base, m, p);
    while (e) {
        if (e & 1) r = pmulmod(r, base, m, p);
        base = pmulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

IPoly pgcd(IPoly a, IPoly b, int p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        IPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^{p^d} mod f
IPoly frob_power_x(const IPoly& f, unsigned d, int p) {
    IPoly x{0, 1};
    IPoly r = pmod(x, f, p);
    for (unsigned i = 0; i < d; ++i) r = ppowmod(r, static_cast<std::uint64_t>(p), f, p);
    return r;
}

std::vector<unsigned> prime_divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

bool is_irreducible_mod_p(const std::vector<std::uint8_t>& low, unsigned p) {
    unsigned k = static_cast<unsigned>(low.size());
    if (k == 0) return false;
    IPoly f(low.begin(), low.end());
    f.push_back(1);
    if (k == 1) return true;
    int ip = static_cast<int>(p);
    IPoly xq = frob_power_x(f, k, ip);
    IPoly diff = xq;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] - 1 + ip) % ip;
    trim(diff);
    if (!diff.empty()) return false;
    for (unsigned r : prime_divisors(k)) {
        IPoly h = frob_power_x(f, k / r, ip);
        h.resize(std::max<size_t>(h.size(), 2), 0);
        h[1] = (h[1] - 1 + ip) % ip;
        trim(h);
        IPoly g = pgcd(f, h, ip);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<std::uint8_t> find_modulus(unsigned p, unsigned k) {
    if (k == 1) return {0};
    if (k <= 4) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < k; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<std::uint8_t> low(k);
            std::uint64_t c = code;
            for (unsigned i = 0; i < k; ++i) {
                low[i] = static_cast<std::uint8_t>(c % p);
                c /= p;
            }
            if (is_irreducible_mod_p(low, p)) return low;
        }
        throw AlgebraError("no irreducible modulus found");
    }
    std::mt19937_64 rng((static_cast<std::uint64_t>(p) << 8) | k);
    for (;;) {
        std::vector<std::uint8_t> low(k);
        for (auto& c : low) c = static_cast<std::uint8_t>(rng() % p);
        if (low[0] == 0) continue;
        if (is_irreducible_mod_p(low, p)) return low;
    }
}

bool Field::is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldPtr Field::make(unsigned p, unsigned k) {
    if (p == 2) throw UsageError("characteristic 2 is not supported");
    if (!is_prime(p)) throw UsageError("field characteristic " + std::to_string(p) + " is not prime");
    if (p > 255) throw UsageError("characteristic must be below 256");
    if (k == 0) throw UsageError("extension degree must be positive");
    if (k > 8) throw UsageError("extension degree above 8 is not supported");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) q *= p;
    if (q > 65536) throw UsageError("field of order " + std::to_string(q) + " exceeds 65536");

    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, k});
    if (it != cache.end()) return it->second;
    auto f = std::make_shared<const Field>(p, k, find_modulus(p, k));
    cache[{p, k}] = f;
    return f;
}

Field::Field(unsigned p, unsigned k, std::vector<std::uint8_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    q_ = 1;
    pw_.resize(k + 1);
    for (unsigned i = 0; i <= k; ++i) {
        pw_[i] = q_;
        if (i < k) q_ *= p;
    }
    neg_.resize(q_);
    for (unsigned a = 0; a < q_; ++a) {
        unsigned r = 0, x = a;
        for (unsigned i = 0; i < k; ++i) {
            unsigned c = x % p;
            x /= p;
            r += ((p - c) % p) * pw_[i];
        }
        neg_[a] = static_cast<std::uint16_t>(r);
    }

    IPoly m(modulus_.begin(), modulus_.end());
    m.push_back(1);
    auto to_poly = [&](unsigned a) {
        IPoly v(k);
        for (unsigned i = 0; i < k; ++i) {
            v[i] = static_cast<int>(a % p);
            a /= p;
        }
        return v;
    };
    auto to_code = [&](const IPoly& v) {
        unsigned r = 0;
        for (size_t i = 0; i < v.size() && i < k; ++i) r += static_cast<unsigned>(v[i]) * pw_[i];
        return r;
    };
    auto slow_mul = [&](unsigned a, unsigned b) {
        if (k == 1) return (a * b) % p;
        return to_code(pmulmod(to_poly(a), to_poly(b), m, static_cast<int>(p)));
    };

    // primitive element
    std::vector<unsigned> qdiv = prime_divisors(q_ - 1);
    unsigned g = 0;
    for (unsigned cand = 1; cand < q_ && !g; ++cand) {
        if (q_ == 2) { g = 1; break; }
        bool ok = true;
        for (unsigned r : qdiv) {
            std::uint64_t e = (q_ - 1) / r;
            unsigned acc = 1, b = cand;
            while (e) {
                if (e & 1) acc = slow_mul(acc, b);
                b = slow_mul(b, b);
                e >>= 1;
            }
            if (acc == 1) { ok = false; break; }
        }
        if (ok) g = cand;
    }
    exp_.resize(2 * (q_ - 1));
    log_.assign(q_, 0);
    unsigned x = 1;
    for (unsigned i = 0; i < q_ - 1; ++i) {
        exp_[i] = exp_[i + q_ - 1] = static_cast<std::uint16_t>(x);
        log_[x] = static_cast<std::uint16_t>(i);
        x = slow_mul(x, g);
    }

    inv_.assign(q_, 0);
    for (unsigned a = 1; a < q_; ++a) inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];

    if (q_ <= kTableLimit) {
        // one spare entry so 32-bit gathers at the last index stay in bounds
        add_.assign(static_cast<size_t>(q_) * q_ + 1, 0);
        mul_.assign(static_cast<size_t>(q_) * q_ + 1, 0);
        for (unsigned a = 0; a < q_; ++a) {
            for (unsigned b = 0; b < q_; ++b) {
                unsigned r = 0, xa = a, xb = b;
                for (unsigned i = 0; i < k; ++i) {
                    r += ((xa % p + xb % p) % p) * pw_[i];
                    xa /= p;
                    xb /= p;
                }
                add_[static_cast<size_t>(a) * q_ + b] = static_cast<std::uint16_t>(r);
                mul_[static_cast<size_t>(a) * q_ + b] =
                    (a == 0 || b == 0) ? 0 : exp_[log_[a] + log_[b]];
            }
        }
    }

    frob_.resize(q_);
    frob_inv_.resize(q_);
    std::uint64_t pk1 = 1;
    for (unsigned i = 0; i + 1 < k; ++i) pk1 *= p;
    for (unsigned a = 0; a < q_; ++a) {
        frob_[a] = pow(static_cast<Elem>(a), p);
        frob_inv_[a] = pow(static_cast<Elem>(a), pk1);
    }

    sqrt_.assign(q_, -1);
    for (unsigned a = 0; a < q_; ++a) {
        Elem s = mul(static_cast<Elem>(a), static_cast<Elem>(a));
        if (sqrt_[s] < 0) sqrt_[s] = static_cast<std::int32_t>(a);
    }
}

std::string Field::name() const {
    return "F_" + std::to_string(q_);
}

Elem Field::gen() const {
    if (k_ == 1) return 0;
    return static_cast<Elem>(p_);
}

Elem Field::add(Elem a, Elem b) const {
    if (!add_.empty()) return add_[static_cast<size_t>(a) * q_ + b];
    unsigned r = 0, xa = a, xb = b;
    for (unsigned i = 0; i < k_; ++i) {
        r += ((xa % p_ + xb % p_) % p_) * pw_[i];
        xa /= p_;
        xb /= p_;
    }
    return static_cast<Elem>(r);
}

Elem Field::mul(Elem a, Elem b) const {
    if (!mul_.empty()) return mul_[static_cast<size_t>(a) * q_ + b];
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw DivisionByZero();
    return inv_[a];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    std::uint64_t l = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[l];
}

Elem Field::from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

bool Field::in_subfield(Elem a, unsigned d) const {
    std::uint64_t e = 1;
    for (unsigned i = 0; i < d; ++i) e *= p_;
    return pow(a, e) == a;
}

std::vector<std::uint8_t> Field::coeffs(Elem a) const {
    std::vector<std::uint8_t> c(k_);
    unsigned x = a;
    for (unsigned i = 0; i < k_; ++i) {
        c[i] = static_cast<std::uint8_t>(x % p_);
        x /= p_;
    }
    return c;
}

Elem Field::from_coeffs(const std::vector<std::uint8_t>& c) const {
    unsigned r = 0;
    for (unsigned i = 0; i < k_ && i < c.size(); ++i) r += (c[i] % p_) * pw_[i];
    return static_cast<Elem>(r);
}

Elem Field::deserialize(const std::uint8_t* bytes) const {
    unsigned r = 0;
    for (unsigned i = 0; i < k_; ++i) {
        if (bytes[i] >= p_) throw CacheError("field element byte out of range");
        r += bytes[i] * pw_[i];
    }
    return static_cast<Elem>(r);
}

bool Field::sqrt(Elem a, Elem& root) const {
    if (sqrt_[a] < 0) return false;
    root = static_cast<Elem>(sqrt_[a]);
    return true;
}

std::vector<Elem> Field::artin_schreier_roots(Elem c) const {
    // Solve sum_i x_i L(t^i) = c over F_p, L(x) = x^p - x.
    unsigned k = k_, p = p_;
    std::vector<std::vector<int>> aug(k, std::vector<int>(k + 1, 0));
    for (unsigned i = 0; i < k; ++i) {
        Elem ti = static_cast<Elem>(pw_[i]);
        auto img = coeffs(sub(frob(ti), ti));
        for (unsigned j = 0; j < k; ++j) aug[j][i] = img[j];
    }
    auto cc = coeffs(c);
    for (unsigned j = 0; j < k; ++j) aug[j][k] = cc[j];

    std::vector<int> pivcol;
    unsigned row = 0;
    for (unsigned col = 0; col < k && row < k; ++col) {
        unsigned piv = row;
        while (piv < k && aug[piv][col] == 0) ++piv;
        if (piv == k) continue;
        std::swap(aug[piv], aug[row]);
        int iv = inv_mod(aug[row][col], static_cast<int>(p));
        for (auto& v : aug[row]) v = v * iv % static_cast<int>(p);
        for (unsigned r = 0; r < k; ++r) {
            if (r == row || aug[r][col] == 0) continue;
            int f = aug[r][col];
            for (unsigned t = 0; t <= k; ++t)
                aug[r][t] = ((aug[r][t] - f * aug[row][t]) % static_cast<int>(p) + static_cast<int>(p)) %
                            static_cast<int>(p);
        }
        pivcol.push_back(static_cast<int>(col));
        ++row;
    }
    for (unsigned r = row; r < k; ++r)
        if (aug[r][k] != 0) return {};
    std::vector<std::uint8_t> x(k, 0);
    for (unsigned r = 0; r < row; ++r) x[pivcol[r]] = static_cast<std::uint8_t>(aug[r][k]);
    Elem x0 = from_coeffs(x);
    std::vector<Elem> roots;
    for (unsigned a = 0; a < p; ++a) roots.push_back(add(x0, static_cast<Elem>(a)));
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Elem> embed_field(const Field& small, const Field& big) {
    if (small.p() != big.p() || big.k() % small.k() != 0)
        throw UsageError(small.name() + " does not embed in " + big.name());
    std::vector<Elem> img(small.q());
    if (small.k() == 1) {
        for (unsigned a = 0; a < small.q(); ++a) img[a] = big.from_int(a);
        return img;
    }
    const auto& low = small.modulus();
    Elem root = 0;
    bool found = false;
    for (unsigned x = 0; x < big.q() && !found; ++x) {
        Elem acc = 1;  // Horner on the monic modulus
        for (int i = static_cast<int>(small.k()) - 1; i >= 0; --i)
            acc = big.add(big.mul(acc, static_cast<Elem>(x)), big.from_int(low[i]));
        if (acc == 0) {
            root = static_cast<Elem>(x);
            found = true;
        }
    }
    if (!found) throw AlgebraError("no embedding root found");
    for (unsigned a = 0; a < small.q(); ++a) {
        auto c = small.coeffs(static_cast<Elem>(a));
        Elem acc = 0;
        for (int i = static_cast<int>(small.k()) - 1; i >= 0; --i)
            acc = big.add(big.mul(acc, root), big.from_int(c[i]));
        img[a] = acc;
    }
    return img;
}

} // namespace skw
