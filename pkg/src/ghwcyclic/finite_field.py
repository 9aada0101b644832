"""Table-driven arithmetic in GF(p^(l*k)).

Elements are plain integers: the coefficient vector ``(c_0, ..., c_{D-1})``
of the polynomial-basis representation is packed as ``sum(c_i * p**i)``.
Every operation accepts a Python int or an integer numpy array and
broadcasts like numpy does.

The subfield GF(q), q = p^l, is never a separate object.  Its elements live
inside GF(Q) and are addressed by *labels* 0..q-1 when they act as
coordinates: label 0 is zero, label 1 is one, the remaining labels follow the
coefficient order of :func:`lex_key`.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from math import gcd

import numpy as np

from . import config
from .errors import CapExceededError, InvalidParameterError

__all__ = [
    "FieldSpec",
    "build_field",
    "rel_trace",
    "discrete_log",
    "subfield_elements",
    "is_prime",
    "prime_factors",
    "multiplicative_order",
    "is_irreducible",
]


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n):
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def multiplicative_order(a, n):
    """Least ``k >= 1`` with ``a**k % n == 1 % n``; requires gcd(a, n) = 1."""
    if n == 1:
        return 1
    if gcd(a, n) != 1:
        raise InvalidParameterError(f"{a} is not invertible modulo {n}")
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


# -- polynomials over GF(p), coefficient lists from the constant term up ------


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, f, p):
    a = _trim(list(a))
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        _trim(a)
    return a


def _poly_mulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_mod(out, f, p)


def _poly_powmod(a, e, f, p):
    result = [1]
    base = _poly_mod(a, f, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def is_irreducible(f, p):
    """Rabin's test for a monic ``f`` (coefficients constant term first)."""
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    # cheap rejection: a root in GF(p) means a linear factor
    for a in range(p):
        acc = 0
        for c in reversed(f):
            acc = (acc * a + c) % p
        if acc == 0:
            return False
    x = [0, 1]
    if _poly_powmod(x, p**d, f, p) != _poly_mod(x, f, p):
        return False
    for r in prime_factors(d):
        h = _poly_powmod(x, p ** (d // r), f, p)
        h = h + [0] * (2 - len(h))
        h[1] = (h[1] - 1) % p
        if len(_poly_gcd(f, h, p)) > 1:
            return False
    return True


def _smallest_irreducible(p, d):
    # product() varies the last slot fastest, so tuples come out in
    # lexicographic order with the constant term most significant.
    # a zero constant term means x divides f, so those are skipped outright
    first = range(p) if d == 1 else range(1, p)
    for low in product(first, *[range(p)] * (d - 1)):
        f = list(low) + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError(f"no irreducible polynomial of degree {d} over GF({p})")


def _has_full_order(g, f, p, group_order, factors):
    if not _trim(list(g)):
        return False
    if _poly_powmod(g, group_order, f, p) != [1]:
        return False
    return all(_poly_powmod(g, group_order // r, f, p) != [1] for r in factors)


def _smallest_primitive(f, p, d):
    group_order = p**d - 1
    factors = prime_factors(group_order)
    for coeffs in product(range(p), repeat=d):
        g = _trim(list(coeffs))
        if _has_full_order(g, f, p, group_order, factors):
            return tuple(coeffs)
    raise AssertionError("multiplicative group has no generator")


def _multiplication_matrix(a, f, p, d):
    """Rows are the coefficient vectors of ``x**i * a mod f``."""
    m = np.zeros((d, d), dtype=np.int64)
    row = _poly_mod(list(a), f, p)
    for i in range(d):
        m[i, : len(row)] = row
        row = _poly_mulmod(row, [0, 1], f, p)
    return m


def lex_key(digits):
    """Sort key for a coefficient vector: constant term compared first."""
    return tuple(int(c) for c in digits)


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """GF(Q), Q = q^k = p^(l*k), with a fixed modulus and primitive element.

    ``exp[j]`` is theta^j for 0 <= j < Q-1; ``log[x]`` is the discrete log of
    a nonzero ``x`` and -1 at zero.
    """

    p: int
    l: int
    k: int
    modulus: tuple
    theta: int
    exp: np.ndarray
    log: np.ndarray

    @property
    def degree(self):
        return self.l * self.k

    @property
    def q(self):
        return self.p**self.l

    @property
    def Q(self):
        return self.p ** self.degree

    @property
    def order(self):
        """Order of the multiplicative group, Q - 1."""
        return self.Q - 1

    def __repr__(self):
        return f"FieldSpec(p={self.p}, l={self.l}, k={self.k}, modulus={self.modulus}, theta={self.theta})"

    # -- element <-> coefficients ------------------------------------------

    @cached_property
    def _powers_of_p(self):
        return self.p ** np.arange(self.degree, dtype=np.int64)

    @cached_property
    def digits(self):
        """(Q, D) array: coefficient vector of every element."""
        x = np.arange(self.Q, dtype=np.int64)
        out = np.empty((self.Q, self.degree), dtype=np.int64)
        for i in range(self.degree):
            out[:, i] = x % self.p
            x //= self.p
        return out

    def element(self, coeffs):
        """Pack a coefficient sequence (constant term first) into an element."""
        coeffs = list(coeffs)
        if len(coeffs) > self.degree:
            raise InvalidParameterError("too many coefficients")
        return sum((int(c) % self.p) * self.p**i for i, c in enumerate(coeffs))

    def coeffs(self, x):
        return tuple(int(c) for c in self.digits[int(x)])

    def lex_key(self, x):
        return lex_key(self.digits[int(x)])

    # -- arithmetic --------------------------------------------------------

    def add(self, a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return _unwrap(a ^ b)
        # a + b = a (1 + b/a), with log(1 + theta^j) read from the Zech table
        la, lb = self.log[a], self.log[b]
        z = self.zech[(lb - la) % self.order]
        out = np.where(z < 0, 0, self.exp[(la + z) % self.order])
        out = np.where(la < 0, b, np.where(lb < 0, a, out))
        return _unwrap(out)

    @cached_property
    def zech(self):
        """zech[j] = log(1 + theta^j), or -1 where 1 + theta^j = 0."""
        one = self.digits[1]
        ones = (self.digits[self.exp] + one) % self.p @ self._powers_of_p
        return self.log[ones]

    def neg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return _unwrap(a)
        return _unwrap(((self.p - self.digits[a]) % self.p) @ self._powers_of_p)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        la, lb = self.log[a], self.log[b]
        out = self.exp[(la + lb) % self.order]
        out = np.where((la < 0) | (lb < 0), 0, out)
        return _unwrap(out)

    def power(self, a, e):
        """``a**e`` for integer ``e >= 0`` (0**0 == 1)."""
        a = np.asarray(a, dtype=np.int64)
        la = self.log[a]
        out = self.exp[(la * (e % self.order)) % self.order]
        if e == 0:
            out = np.ones_like(a)
        else:
            out = np.where(la < 0, 0, out)
        return _unwrap(out)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("zero has no inverse")
        return _unwrap(self.exp[(-self.log[a]) % self.order])

    def theta_power(self, j):
        return _unwrap(self.exp[np.asarray(j, dtype=np.int64) % self.order])

    # -- traces and subfields ----------------------------------------------

    def _frobenius_sum(self, x, base, count):
        x = np.asarray(x, dtype=np.int64)
        acc = np.zeros_like(x)
        e = 1
        for _ in range(count):
            acc = np.asarray(self.add(acc, self.power(x, e)))
            e *= base
        return _unwrap(acc)

    @cached_property
    def trace_table(self):
        """T_q^Q(x) for every element x, as elements of GF(Q)."""
        return np.asarray(rel_trace(self, np.arange(self.Q), 1))

    @cached_property
    def abs_trace_table(self):
        """Absolute trace GF(Q) -> GF(p) as integers 0..p-1."""
        return np.asarray(self._frobenius_sum(np.arange(self.Q), self.p, self.degree))

    @cached_property
    def base_elements(self):
        """GF(q) inside GF(Q), indexed by label."""
        elems = subfield_elements(self, 1)
        rest = sorted((x for x in elems if x not in (0, 1)), key=self.lex_key)
        return np.array([0, 1] + rest, dtype=np.int64)

    @cached_property
    def label_of(self):
        """Label of each GF(q) element; -1 for elements outside GF(q)."""
        out = np.full(self.Q, -1, dtype=np.int64)
        out[self.base_elements] = np.arange(self.q)
        return out

    @cached_property
    def base_tables(self):
        """Addition, multiplication, negation and inversion tables of GF(q) on labels."""
        b = self.base_elements
        lab = self.label_of
        add = lab[np.asarray(self.add(b[:, None], b[None, :]))]
        mul = lab[np.asarray(self.mul(b[:, None], b[None, :]))]
        neg = lab[np.asarray(self.neg(b))]
        inv = np.zeros(self.q, dtype=np.int64)
        inv[1:] = lab[np.asarray(self.inv(b[1:]))]
        return BaseFieldTables(add, mul, neg, inv)

    @cached_property
    def coordinate_table(self):
        """Element with GF(q)-coordinates ``(a_0..a_{k-1})`` w.r.t. 1, theta, ..., theta^(k-1).

        Indexed by ``sum(label(a_j) * q**j)``.
        """
        q, k = self.q, self.k
        idx = np.arange(q**k, dtype=np.int64)
        acc = np.zeros_like(idx)
        for j in range(k):
            lab = idx % q
            idx = idx // q
            acc = np.asarray(self.add(acc, self.mul(self.base_elements[lab], self.theta_power(j))))
        return acc

    @cached_property
    def coordinate_index(self):
        """Inverse of :attr:`coordinate_table`."""
        inv = np.empty(self.Q, dtype=np.int64)
        inv[self.coordinate_table] = np.arange(self.Q)
        return inv

    def coordinates(self, x):
        """Label vector of ``x`` over the basis 1, theta, ..., theta^(k-1)."""
        i = int(self.coordinate_index[int(x)])
        out = []
        for _ in range(self.k):
            out.append(i % self.q)
            i //= self.q
        return tuple(out)


@dataclass(frozen=True)
class BaseFieldTables:
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray

    @property
    def q(self):
        return len(self.neg)


def _unwrap(x):
    x = np.asarray(x)
    return int(x) if x.ndim == 0 else x


def build_field(p, l, k, cap=None):
    """Build GF(p^(l*k)) with the canonical modulus and primitive element.

    The modulus is the first monic irreducible polynomial of degree ``l*k``
    when coefficient vectors are compared from the constant term upward; theta
    is the first element, in the same order, of multiplicative order Q - 1.
    """
    cap = config.env_field_cap() if cap is None else cap
    if not is_prime(p):
        raise InvalidParameterError(f"p={p} is not prime")
    if l < 1 or k < 1:
        raise InvalidParameterError("l and k must be positive")
    d = l * k
    if p**d > cap:
        raise CapExceededError("field cap", p**d, cap)
    return _build_field(p, l, k)


# fields are immutable, so codes of different lengths share one instance
@lru_cache(maxsize=16)
def _build_field(p, l, k):
    d = l * k
    modulus = _smallest_irreducible(p, d)
    f = list(modulus)
    theta_coeffs = _smallest_primitive(f, p, d)
    powers = p ** np.arange(d, dtype=np.int64)
    order = p**d - 1

    exp_dig = np.zeros((order, d), dtype=np.int64)
    exp_dig[0, 0] = 1
    filled = 1
    while filled < order:
        step = _poly_powmod(list(theta_coeffs), filled, f, p)
        m = _multiplication_matrix(step, f, p, d)
        take = min(filled, order - filled)
        exp_dig[filled : filled + take] = (exp_dig[:take] @ m) % p
        filled += take
    exp = exp_dig @ powers
    log = np.full(p**d, -1, dtype=np.int64)
    log[exp] = np.arange(order, dtype=np.int64)
    if np.any(log[1:] < 0):
        raise AssertionError("theta is not primitive")

    exp.setflags(write=False)
    log.setflags(write=False)
    theta = int(sum(c * p**i for i, c in enumerate(theta_coeffs)))
    return FieldSpec(p=p, l=l, k=k, modulus=modulus, theta=theta, exp=exp, log=log)


def _check_divisor(fs, m):
    if m < 1 or fs.k % m:
        raise InvalidParameterError(f"m={m} does not divide k={fs.k}")


def rel_trace(fs, x, m):
    """Trace from GF(Q) down to GF(q^m): sum of x^((q^m)^j), j < k/m."""
    _check_divisor(fs, m)
    return fs._frobenius_sum(x, fs.q**m, fs.k // m)


def discrete_log(fs, x):
    x = int(x)
    if x == 0:
        raise InvalidParameterError("discrete log of zero is undefined")
    return int(fs.log[x])


def subfield_elements(fs, m):
    """The q^m elements of GF(q^m) as a subset of GF(Q)."""
    _check_divisor(fs, m)
    step = fs.order // (fs.q**m - 1)
    gens = fs.exp[np.arange(0, fs.order, step)]
    return frozenset([0, *(int(g) for g in gens)])
