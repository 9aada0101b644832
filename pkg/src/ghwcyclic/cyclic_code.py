"""Irreducible cyclic codes in trace form.

The code of length n over GF(q) is {c(beta) : beta in GF(Q)} with
c(beta)_i = T_q^Q(beta * alpha^i) and alpha = theta^e of order n.
"""

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from math import gcd

import numpy as np

from . import config
from .errors import CapExceededError, InvalidParameterError
from .finite_field import build_field, is_prime, multiplicative_order

__all__ = ["CodeSpec", "Codeword", "build_code", "encode", "weight_distribution", "generator_matrix", "iter_parameters"]


@dataclass(frozen=True, eq=False)
class CodeSpec:
    fs: object
    n: int
    k: int
    e: int
    e_prime: int
    alpha: int

    @property
    def p(self):
        return self.fs.p

    @property
    def l(self):
        return self.fs.l

    @property
    def q(self):
        return self.fs.q

    @property
    def Q(self):
        return self.fs.Q

    def __repr__(self):
        return f"CodeSpec(q={self.q}, n={self.n}, k={self.k}, e={self.e}, e_prime={self.e_prime})"

    @cached_property
    def alpha_powers(self):
        return np.asarray(self.fs.theta_power(self.e * np.arange(self.n, dtype=np.int64)))

    @cached_property
    def trace_by_log(self):
        """T_q^Q(theta^j) for j = 0..Q-2."""
        return self.fs.trace_table[self.fs.exp]

    @cached_property
    def zero_masks(self):
        """(Q, ceil(n/8)) packed bits: bit i of row x is set iff T(x alpha^i) = 0."""
        fs = self.fs
        nbytes = (self.n + 7) // 8
        out = np.empty((fs.Q, nbytes), dtype=np.uint8)
        out[0] = np.packbits(np.ones(self.n, dtype=bool))[:nbytes]
        steps = self.e * np.arange(self.n, dtype=np.int64)
        chunk = max(1, (1 << 22) // max(self.n, 1))
        for start in range(1, fs.Q, chunk):
            x = np.arange(start, min(fs.Q, start + chunk), dtype=np.int64)
            idx = (fs.log[x][:, None] + steps[None, :]) % fs.order
            out[x] = np.packbits(self.trace_by_log[idx] == 0, axis=1)
        return out


@dataclass(frozen=True)
class Codeword:
    beta: int
    symbols: tuple

    @property
    def weight(self):
        return sum(1 for s in self.symbols if s)


def build_code(p, l, n, field_cap=None):
    """Irreducible cyclic [n, k]_q code, q = p^l, with k = ord_n(q)."""
    if not is_prime(p):
        raise InvalidParameterError(f"p={p} is not prime")
    if l < 1 or n < 1:
        raise InvalidParameterError("l and n must be positive")
    q = p**l
    if gcd(n, q) != 1:
        raise InvalidParameterError(f"gcd(n={n}, q={q}) != 1")
    k = multiplicative_order(q, n)
    field_cap = config.env_field_cap() if field_cap is None else field_cap
    if q**k > field_cap:
        raise CapExceededError("field cap", q**k, field_cap)
    fs = build_field(p, l, k, cap=field_cap)
    e = fs.order // n
    e_prime = gcd(e, fs.order // (q - 1))
    return CodeSpec(fs=fs, n=n, k=k, e=e, e_prime=e_prime, alpha=int(fs.theta_power(e)))


def encode(cs, beta):
    """c(beta) = (T(beta), T(beta alpha), ..., T(beta alpha^(n-1)))."""
    beta = int(beta)
    x = np.asarray(cs.fs.mul(beta, cs.alpha_powers))
    return Codeword(beta, tuple(int(v) for v in cs.fs.trace_table[x]))


def weight_distribution(cs, cap=None):
    """Map weight -> number of codewords, over all Q codewords."""
    cap = config.WEIGHT_DIST_CAP if cap is None else cap
    if cs.Q > cap:
        raise CapExceededError("weight distribution cap", cs.Q, cap)
    zeros = np.bitwise_count(cs.zero_masks).sum(axis=1, dtype=np.int64)
    weights = cs.n - zeros
    return dict(sorted(Counter(int(w) for w in weights).items()))


def generator_matrix(cs):
    """(k, n) matrix of GF(q) labels with rows c(theta^j), j < k."""
    rows = [encode(cs, cs.fs.theta_power(j)).symbols for j in range(cs.k)]
    return cs.fs.label_of[np.asarray(rows, dtype=np.int64)]


def iter_parameters(max_field=1 << 12, max_subspaces=10**6, primes=None):
    """Every (p, l, n) with gcd(n, q) = 1, q^k <= max_field and all subspace counts < max_subspaces.

    n has ord_n(q) = k exactly when n divides q^k - 1 but no q^j - 1 with j < k.
    Sorted by (p, l, n).
    """
    from .subspaces import gaussian_binomial

    primes = primes or [x for x in range(2, max_field + 1) if is_prime(x)]
    for p in primes:
        l = 1
        while p**l <= max_field:
            q = p**l
            found = []
            k = 1
            while q**k <= max_field:
                if max(gaussian_binomial(k, r, q) for r in range(k + 1)) < max_subspaces:
                    m = q**k - 1
                    found += [n for n in range(1, m + 1) if m % n == 0 and multiplicative_order(q, n) == k]
                k += 1
            for n in sorted(found):
                yield p, l, n
            l += 1
