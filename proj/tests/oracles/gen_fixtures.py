#!/usr/bin/env python3
"""Independent brute-force oracles for the frozen test fixtures.

Nothing here shares code with the C++ library: finite fields are naive
polynomial residues, searches are exhaustive, and the xy-identity is
evaluated symbolically over the integers.

  gen_fixtures.py            write tests/fixtures/derived.json
  gen_fixtures.py --check    recompute and compare with the frozen file
"""
import itertools
import json
import sys
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import sympy

FIXTURE = Path(__file__).resolve().parent.parent / "fixtures" / "derived.json"


# ---------------------------------------------------------------- fields

def poly_mod(a, m, p):
    a = [x % p for x in a]
    dm = len(m) - 1
    while len(a) - 1 >= dm and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < dm:
            break
        c = a[-1]
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def poly_mul(a, b, p):
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            r[i + j] = (r[i + j] + x * y) % p
    return r


def monic_polys(p, d):
    for tail in itertools.product(range(p), repeat=d):
        yield list(tail) + [1]


def is_irreducible_trial(f, p):
    d = len(f) - 1
    for e in range(1, d // 2 + 1):
        for g in monic_polys(p, e):
            if not poly_mod(f, g, p):
                return False
    return True


def smallest_modulus(p, k):
    """Monic irreducible of degree k, smallest by the integer sum c_i p^i."""
    for code in range(p ** k):
        tail = [(code // p ** i) % p for i in range(k)]
        f = tail + [1]
        if k == 1:
            return tail
        if is_irreducible_trial(f, p):
            return tail
    raise RuntimeError("no irreducible")


class GF:
    def __init__(self, p, k):
        self.p, self.k, self.q = p, k, p ** k
        self.tail = smallest_modulus(p, k)
        self.mod = self.tail + [1]

    def vec(self, code):
        return [(code // self.p ** i) % self.p for i in range(self.k)]

    def code(self, v):
        v = list(v) + [0] * (self.k - len(v))
        return sum((c % self.p) * self.p ** i for i, c in enumerate(v[: self.k]))

    def add(self, a, b):
        return self.code([x + y for x, y in zip(self.vec(a), self.vec(b))])

    def neg(self, a):
        return self.code([-x for x in self.vec(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        return self.code(poly_mod(poly_mul(self.vec(a), self.vec(b), self.p), self.mod, self.p))

    def pow(self, a, e):
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def from_int(self, n):
        return self.code([n % self.p])

    def in_prime(self, a):
        return all(c == 0 for c in self.vec(a)[1:])

    def order(self, a):
        x, n = a, 1
        while x != 1:
            x = self.mul(x, a)
            n += 1
        return n


# ---------------------------------------------------------------- ranks

def rank_mod(rows, p):
    rows = [[x % p for x in r] for r in rows]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                c = rows[i][col]
                rows[i] = [(x - c * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


# ---------------------------------------------------------------- matrices

def E(m, i, j):
    M = [[0] * m for _ in range(m)]
    M[i][j] = 1
    return M


def madd(*Ms, coeffs=None):
    m = len(Ms[0])
    coeffs = coeffs or [1] * len(Ms)
    return [[sum(c * M[i][j] for c, M in zip(coeffs, Ms)) for j in range(m)] for i in range(m)]


def mmul(A, B):
    m = len(A)
    return [[sum(A[i][t] * B[t][j] for t in range(m)) for j in range(m)] for i in range(m)]


def supercomm(A, pa, B, pb):
    s = -1 if (pa and pb) else 1
    return madd(mmul(A, B), mmul(B, A), coeffs=[1, -s])


def ptilde_basis(n):
    """(matrix, parity, kind, tag) with 0-based indices."""
    m = 2 * n
    out = []
    for i in range(n):
        out.append((madd(E(m, i, i), E(m, n + i, n + i), coeffs=[1, -1]), 0, "h", i))
    for i, j in itertools.combinations(range(n), 2):
        out.append((madd(E(m, i, j), E(m, n + j, n + i), coeffs=[1, -1]), 0, "pos", (i, j)))
    for i, j in itertools.combinations(range(n), 2):
        out.append((madd(E(m, j, i), E(m, n + i, n + j), coeffs=[1, -1]), 0, "neg", (i, j)))
    for i in range(n):
        for j in range(i, n):
            if i == j:
                out.append((E(m, i, n + i), 1, "opos", (i, i)))
            else:
                out.append((madd(E(m, i, n + j), E(m, j, n + i)), 1, "opos", (i, j)))
    for i, j in itertools.combinations(range(n), 2):
        out.append((madd(E(m, n + i, j), E(m, n + j, i), coeffs=[1, -1]), 1, "oneg", (i, j)))
    return out


def queer_even_odd(n, traceless_odd):
    m = 2 * n
    even, odd = [], []
    for i in range(n):
        even.append(madd(E(m, i, i), E(m, n + i, n + i)))
    for i, j in itertools.combinations(range(n), 2):
        even.append(madd(E(m, i, j), E(m, n + i, n + j)))
    for i, j in itertools.combinations(range(n), 2):
        even.append(madd(E(m, j, i), E(m, n + j, n + i)))
    jp = [madd(E(m, i, n + i), E(m, n + i, i)) for i in range(n)]
    if traceless_odd:
        odd += [madd(jp[i], jp[i + 1], coeffs=[1, -1]) for i in range(n - 1)]
    else:
        odd += jp
    for i, j in itertools.combinations(range(n), 2):
        odd.append(madd(E(m, i, n + j), E(m, n + i, j)))
    for i, j in itertools.combinations(range(n), 2):
        odd.append(madd(E(m, j, n + i), E(m, n + j, i)))
    return even, odd


def theta_of(Theta, M, n):
    """θ(M) = Σ Θ_ab A_ab, A the upper-left n×n block of an even matrix."""
    return sum(Theta[a][b] * M[a][b] for a in range(n) for b in range(n))


def gram(Theta, mats, parity, n, p):
    return [[theta_of(Theta, supercomm(X, parity, Y, parity), n) % p for Y in mats] for X in mats]


def exhaustive_f3(even, odd, n, p):
    best, min_cent_odd = 0, None
    be = [[supercomm(X, 0, Y, 0) for Y in even] for X in even]
    bo = [[supercomm(X, 1, Y, 1) for Y in odd] for X in odd]
    for vals in itertools.product(range(p), repeat=n * n):
        Theta = [list(vals[a * n:(a + 1) * n]) for a in range(n)]
        b0 = rank_mod([[theta_of(Theta, M, n) for M in row] for row in be], p)
        b1 = rank_mod([[theta_of(Theta, M, n) for M in row] for row in bo], p)
        skw = p ** (b0 // 2) * 2 ** ((b1 + 1) // 2)
        best = max(best, skw)
        cent = len(odd) - b1
        min_cent_odd = cent if min_cent_odd is None else min(min_cent_odd, cent)
    return {"max_skw": best, "min_centralizer_odd": min_cent_odd}


# ---------------------------------------------------------------- xy identity

def xy_polynomial(n):
    """𝗑𝗒v in the characteristic-0 Verma module of p̃(n), v of weight λ."""
    basis = ptilde_basis(n)
    lam = sympy.symbols(f"l1:{n + 1}")
    m = 2 * n
    flat = sympy.Matrix([[x for row in b[0] for x in row] for b in basis]).T
    pinv = (flat.T * flat).inv() * flat.T
    dim = len(basis)

    @lru_cache(maxsize=None)
    def bracket(a, b):
        M = supercomm(basis[a][0], basis[a][1], basis[b][0], basis[b][1])
        c = pinv * sympy.Matrix([x for row in M for x in row])
        assert flat * c == sympy.Matrix([x for row in M for x in row])
        return tuple((t, Fraction(int(sympy.fraction(v)[0]), int(sympy.fraction(v)[1])))
                     for t, v in enumerate(c) if v != 0)

    neg = [i for i, b in enumerate(basis) if b[2] == "neg"] + \
          [i for i, b in enumerate(basis) if b[2] == "oneg"]
    pos_in_neg = {b: t for t, b in enumerate(neg)}

    def parity(i):
        return basis[i][1]

    @lru_cache(maxsize=None)
    def act(x, mono):
        out = {}

        def addv(vec, c):
            for k, v in vec.items():
                out[k] = out.get(k, 0) + c * v

        if not any(mono):
            if x in pos_in_neg:
                e = [0] * len(neg)
                e[pos_in_neg[x]] = 1
                return ((tuple(e), sympy.Integer(1)),)
            if basis[x][2] == "h":
                return ((mono, lam[basis[x][3]]),)
            return ()
        l = next(t for t, a in enumerate(mono) if a)
        y = neg[l]
        if x in pos_in_neg and pos_in_neg[x] <= l:
            k = pos_in_neg[x]
            if k < l or not parity(x):
                e = list(mono)
                e[k] += 1
                return ((tuple(e), sympy.Integer(1)),)
            rest = list(mono)
            rest[l] = 0
            for t, c in bracket(x, x):
                addv(dict(act(t, tuple(rest))), sympy.Rational(c.numerator, c.denominator) / 2)
            return tuple((k2, v) for k2, v in out.items() if sympy.expand(v) != 0)
        rest = list(mono)
        rest[l] -= 1
        rest = tuple(rest)
        sign = -1 if (parity(x) and parity(y)) else 1
        inner = dict(act(x, rest))
        for mk, c in inner.items():
            addv(dict(act(y, mk)), sign * c)
        for t, c in bracket(x, y):
            addv(dict(act(t, rest)), sympy.Rational(c.numerator, c.denominator))
        return tuple((k2, sympy.expand(v)) for k2, v in out.items() if sympy.expand(v) != 0)

    def apply(x, vec):
        out = {}
        for mk, c in vec.items():
            for k2, v in act(x, mk):
                out[k2] = sympy.expand(out.get(k2, 0) + c * v)
        return {k2: v for k2, v in out.items() if v != 0}

    pairs = list(itertools.combinations(range(n), 2))
    X = {b[3]: i for i, b in enumerate(basis) if b[2] == "opos" and b[3][0] != b[3][1]}
    Y = {b[3]: i for i, b in enumerate(basis) if b[2] == "oneg"}
    vec = {tuple([0] * len(neg)): sympy.Integer(1)}
    for pr in reversed(pairs):
        vec = apply(Y[pr], vec)
    for pr in reversed(pairs):
        vec = apply(X[pr], vec)
    zero = tuple([0] * len(neg))
    assert set(vec) <= {zero}, "xy v is not a multiple of v"
    P = sympy.expand(vec.get(zero, 0))
    omega = sympy.expand(sympy.prod(lam[i] - lam[j] + j - i - 1 for i, j in pairs))
    if P == omega:
        return 1
    if P == -omega:
        return -1
    raise AssertionError(f"xy polynomial {P} is not ±Ω")


# ---------------------------------------------------------------- assemble

def build():
    fx = {}
    moduli = {}
    for p, k in [(3, 1), (3, 2), (3, 3), (3, 4), (5, 1), (5, 2), (5, 3), (5, 4), (7, 2)]:
        moduli[f"{p}^{k}"] = smallest_modulus(p, k)
    F3, F9, F27 = GF(3, 1), GF(3, 2), GF(3, 3)
    t9 = F9.code([0, 1])
    as27 = [x for x in range(27) if F27.sub(F27.pow(x, 3), x) == 1]
    fx["field"] = {
        "moduli": moduli,
        "f9_orders": [F9.order(a) for a in range(1, 9)],
        "f27_as_kernel_size": sum(1 for x in range(27) if F27.sub(F27.pow(x, 3), x) == 0),
        "f9_t_squared": F9.vec(F9.mul(t9, t9)),
        "as_roots_f3_c1": [x for x in range(3) if F3.sub(F3.pow(x, 3), x) == 1],
        "as_roots_f27_c1": as27,
    }

    sup = {}
    for p in (3, 5):
        even, odd = queer_even_odd(2, False)
        M = supercomm(odd[0], 1, odd[0], 1)
        sup[f"q2_Jp1_Jp1_p{p}"] = [[x % p for x in row] for row in M]
    fx["superalg"] = sup

    lam = (0, t9)
    d = F9.sub(lam[0], lam[1])
    val = F9.sub(F9.pow(d, 3), d)

    def strongly_regular_count(F):
        cnt = 0
        for tup in itertools.product(range(F.q), repeat=3):
            ok = all(not F.in_prime(x) for x in tup)
            for i, j in itertools.combinations(range(3), 2):
                ok = ok and not F.in_prime(F.sub(tup[i], tup[j]))
                ok = ok and not F.in_prime(F.add(tup[i], tup[j]))
            cnt += ok
        return cnt

    regnilp = {}
    for n in (2, 3):
        even = [b[0] for b in ptilde_basis(n) if b[1] == 0]
        Theta = [[0] * n for _ in range(n)]
        for i in range(n - 1):
            Theta[i + 1][i] = 1
        regnilp[str(n)] = rank_mod(gram(Theta, even, 0, n, 3), 3)

    ex = {}
    pt = ptilde_basis(2)
    ex["ptilde2"] = exhaustive_f3([b[0] for b in pt if b[1] == 0], [b[0] for b in pt if b[1] == 1], 2, 3)
    e, o = queer_even_odd(2, False)
    ex["q2"] = exhaustive_f3(e, o, 2, 3)
    e, o = queer_even_odd(2, True)
    ex["sq2"] = exhaustive_f3(e, o, 2, 3)
    pt3 = ptilde_basis(3)
    ex["ptilde3_min_centralizer_odd"] = exhaustive_f3(
        [b[0] for b in pt3 if b[1] == 0], [b[0] for b in pt3 if b[1] == 1], 3, 3)["min_centralizer_odd"]

    fx["pchar"] = {
        "ptilde2_regss_f9": {"lambda": [lam[0], lam[1]], "value": val},
        "strong_regular_n3_p3": {"F9": strongly_regular_count(F9), "F27": strongly_regular_count(F27)},
        "regnilp_b0": regnilp,
        "exhaustive_f3": ex,
    }

    # gl(2) baby Verma, p = 3: h f^i v = (λ(h) - i α(h)) f^i v, from [h, f] = -α(h) f.
    weights = []
    for l1, l2 in itertools.product(range(3), repeat=2):
        for name, hcoef in (("H1", (1, 0)), ("H2", (0, 1)), ("H1-H2", (1, -1))):
            lam_h = hcoef[0] * l1 + hcoef[1] * l2
            alpha_h = hcoef[0] - hcoef[1]
            weights.append({"lambda": [l1, l2], "h": name,
                            "values": [(lam_h - i * alpha_h) % 3 for i in range(3)]})
    fx["envmod"] = {"gl2_weights_p3": weights}

    fx["verma"] = {"xy_sign": {str(n): xy_polynomial(n) for n in (2, 3)}}
    return fx


def main():
    fx = build()
    text = json.dumps(fx, indent=1, sort_keys=True) + "\n"
    if "--check" in sys.argv:
        frozen = FIXTURE.read_text()
        if json.loads(frozen) != json.loads(text):
            print("fixture mismatch")
            return 1
        print("fixtures match")
        return 0
    FIXTURE.parent.mkdir(parents=True, exist_ok=True)
    FIXTURE.write_text(text)
    print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
