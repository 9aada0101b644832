"""Slow, independent reference implementations used only by the tests.

Nothing here touches the package's tables: polynomials are plain tuples,
elements are packed the same way (sum c_i p^i) so results can be compared,
and every search is a naive loop.
"""

import cmath
from itertools import product
from math import gcd


def poly_divmod(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    out = [0] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        out[shift] = c
        for i, v in enumerate(b):
            a[shift + i] = (a[shift + i] - c * v) % p
        a.pop()
    return out, a


def monic_polys(p, d):
    for low in product(range(p), repeat=d):
        yield tuple(low) + (1,)


def irreducible_by_trial_division(f, p):
    d = len(f) - 1
    for deg in range(1, d // 2 + 1):
        for g in monic_polys(p, deg):
            _, rem = poly_divmod(f, g, p)
            if not any(rem):
                return False
    return True


def first_irreducible(p, d):
    """First monic irreducible of degree d, constant term most significant."""
    for f in monic_polys(p, d):
        if irreducible_by_trial_division(f, p):
            return f


class NaiveField:
    """GF(p^d) by schoolbook polynomial arithmetic modulo ``modulus``."""

    def __init__(self, p, modulus):
        self.p = p
        self.modulus = tuple(modulus)
        self.d = len(modulus) - 1
        self.size = p**self.d

    def unpack(self, x):
        return [(x // self.p**i) % self.p for i in range(self.d)]

    def pack(self, c):
        return sum(v * self.p**i for i, v in enumerate(c))

    def add(self, a, b):
        return self.pack([(u + v) % self.p for u, v in zip(self.unpack(a), self.unpack(b))])

    def neg(self, a):
        return self.pack([(-u) % self.p for u in self.unpack(a)])

    def mul(self, a, b):
        ua, ub = self.unpack(a), self.unpack(b)
        prod = [0] * (2 * self.d)
        for i, u in enumerate(ua):
            if u:
                for j, v in enumerate(ub):
                    prod[i + j] = (prod[i + j] + u * v) % self.p
        _, rem = poly_divmod(prod, self.modulus, self.p)
        rem = list(rem) + [0] * (self.d - len(rem))
        return self.pack(rem[: self.d])

    def pow(self, a, e):
        out = 1
        for _ in range(e):
            out = self.mul(out, a)
        return out

    def order(self, a):
        if a == 0:
            return None
        x, n = a, 1
        while x != 1:
            x = self.mul(x, a)
            n += 1
        return n

    def first_primitive(self):
        for c in product(range(self.p), repeat=self.d):
            x = self.pack(c)
            if x and self.order(x) == self.size - 1:
                return x

    def frob_trace(self, x, base, count):
        """x + x^base + ... + x^(base^(count-1)) by repeated powering."""
        total, y = 0, x
        for _ in range(count):
            total = self.add(total, y)
            y = self.pow(y, base)
        return total

    def logs(self, theta):
        out, x = {}, 1
        for j in range(self.size - 1):
            out[x] = j
            x = self.mul(x, theta)
        return out


def naive_code(p, l, n):
    """(field, theta, q, k, codewords) with codewords indexed by beta, from scratch."""
    q = p**l
    k = 1
    while (q**k - 1) % n:
        k += 1
    F = NaiveField(p, first_irreducible(p, l * k))
    theta = F.first_primitive()
    e = (q**k - 1) // n
    alpha = F.pow(theta, e)
    powers = [F.pow(alpha, i) for i in range(n)]
    words = {}
    for beta in range(F.size):
        words[beta] = tuple(F.frob_trace(F.mul(beta, a), q, k) for a in powers)
    return F, theta, q, k, words


def naive_hierarchy(F, q, k, words):
    """d_1..d_k by closing spans of codewords; only for a few thousand subcodes."""
    scalars = sorted({x for x in range(F.size) if F.pow(x, q) == x})
    add = {(a, b): F.add(a, b) for a in scalars for b in scalars}
    mul = {(a, b): F.mul(a, b) for a in scalars for b in scalars}
    n = len(next(iter(words.values())))
    zero = (0,) * n
    vecs = sorted(set(words.values()) - {zero})

    def extend(span, v):
        out = set(span)
        for c in scalars:
            cv = [mul[c, b] for b in v]
            for s in span:
                out.add(tuple(add[a, b] for a, b in zip(s, cv)))
        return frozenset(out)

    layer = {frozenset([zero])}
    result = []
    for _ in range(k):
        nxt = set()
        for span in layer:
            grown = []
            for v in vecs:
                if v not in span and not any(v in g for g in grown):
                    grown.append(extend(span, v))
            nxt.update(grown)
        layer = nxt
        best = min(sum(1 for i in range(n) if any(w[i] for w in span)) for span in layer)
        result.append(best)
    return result


def hierarchy_by_rank(words_basis, p):
    """d_r = n - max{|Z| : k - rank(G restricted to Z) >= r}; prime fields only.

    ``words_basis`` is a list of k codewords with entries in 0..p-1.
    """
    k, n = len(words_basis), len(words_basis[0])
    cols = [[row[j] for row in words_basis] for j in range(n)]
    best = [0] * (k + 1)
    for mask in range(1 << n):
        z = [cols[j] for j in range(n) if mask >> j & 1]
        free = k - (rank_mod_p(z, p) if z else 0)
        size = bin(mask).count("1")
        for r in range(1, free + 1):
            best[r] = max(best[r], size)
    return [n - best[r] for r in range(1, k + 1)]


def naive_gauss_sum(F, theta, order, b=1):
    """Direct sum over nonzero x of chi(x) zeta_p^{Tr(b x)}, chi(theta) = zeta_order."""
    p = F.p
    total = 0
    x = 1
    for j in range(F.size - 1):
        tr = F.frob_trace(F.mul(b, x), p, F.d)
        total += cmath.exp(2j * cmath.pi * j / order) * cmath.exp(2j * cmath.pi * tr / p)
        x = F.mul(x, theta)
    return total


def rank_mod_p(rows, p):
    rows = [list(r) for r in rows]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [v * inv % p for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                c = rows[i][col]
                rows[i] = [(a - c * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def coprime(n, q):
    return gcd(n, q) == 1
