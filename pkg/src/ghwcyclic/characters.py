"""Characters of GF(Q) and Gauss sums.

Multiplicative characters are written through the discrete log: the
character ``MultiplicativeCharacter(d, j)`` sends theta to zeta_d^j and zero
to 0.  Numeric Gauss sums are direct summations over GF(Q)^*; exact values
are available in the quadratic and semiprimitive cases.
"""

from dataclasses import dataclass
from math import gcd, isqrt

import numpy as np

from . import config
from .errors import InvalidParameterError
from .finite_field import multiplicative_order

__all__ = [
    "MultiplicativeCharacter",
    "AdditiveCharacter",
    "GaussSumValue",
    "SemiprimitiveParams",
    "roots_of_unity",
    "gauss_sum_numeric",
    "gauss_sum_table",
    "gauss_sum_quadratic",
    "gauss_sum_semiprimitive",
    "gauss_sum_exact",
    "semiprimitive_t",
    "semiprimitive_params",
    "conjugation_check",
]


def roots_of_unity(m):
    """Table of zeta_m^j, j = 0..m-1."""
    return np.exp(2j * np.pi * np.arange(m) / m)


@dataclass(frozen=True)
class MultiplicativeCharacter:
    """chi(theta) = zeta_base^power, chi(0) = 0."""

    base: int
    power: int = 1

    def __post_init__(self):
        if self.base < 1:
            raise InvalidParameterError("character base order must be positive")

    @property
    def order(self):
        return self.base // gcd(self.base, self.power % self.base)

    @property
    def is_trivial(self):
        return self.order == 1

    def conj(self):
        return MultiplicativeCharacter(self.base, (-self.power) % self.base)

    def __pow__(self, t):
        return MultiplicativeCharacter(self.base, (self.power * t) % self.base)

    def exponents(self, fs, x):
        """Exponent of zeta_base in chi(x) for nonzero ``x``."""
        if (fs.order) % self.base:
            raise InvalidParameterError(f"order {self.base} does not divide Q-1={fs.order}")
        return (self.power * fs.log[np.asarray(x)]) % self.base

    def __call__(self, fs, x):
        x = np.asarray(x, dtype=np.int64)
        vals = roots_of_unity(self.base)[self.exponents(fs, x)]
        return np.where(x == 0, 0, vals)


@dataclass(frozen=True)
class AdditiveCharacter:
    """lambda_b(x) = zeta_p^{Tr(b x)} with Tr the absolute trace."""

    b: int

    def __call__(self, fs, x):
        bx = np.asarray(fs.mul(self.b, x))
        return roots_of_unity(fs.p)[fs.abs_trace_table[bx]]


@dataclass(frozen=True)
class GaussSumValue:
    """A Gauss sum, numeric or exact.

    The exact form is ``coeff * i**i_power * sqrt(root)**root_power`` with
    ``i_power`` in {0, 1}; ``value`` always holds the complex number.
    """

    kind: str
    value: complex
    coeff: int = 0
    i_power: int = 0
    root: int = 1
    root_power: int = 0

    @classmethod
    def exact(cls, coeff, i_power=0, root=1, root_power=0):
        i_power %= 4
        if i_power >= 2:
            coeff, i_power = -coeff, i_power - 2
        # fold perfect squares and even powers into the integer coefficient
        coeff *= root ** (root_power // 2)
        root_power %= 2
        r = isqrt(root)
        if root_power and r * r == root:
            coeff, root_power = coeff * r, 0
        if not root_power:
            root = 1
        value = complex(coeff * (1j**i_power) * (root**0.5 if root_power else 1.0))
        return cls("exact", value, coeff, i_power, root, root_power)

    @classmethod
    def numeric(cls, value):
        return cls("numeric", complex(value))

    @property
    def is_exact(self):
        return self.kind == "exact"

    def symbolic(self):
        if not self.is_exact:
            return None
        if self.coeff == 0:
            return "0"
        parts = []
        mag = abs(self.coeff)
        if mag != 1 or not (self.i_power or self.root_power):
            parts.append(str(mag))
        if self.i_power:
            parts.append("i")
        if self.root_power:
            parts.append(f"sqrt({self.root})")
        return ("-" if self.coeff < 0 else "") + "*".join(parts)

    def __str__(self):
        if self.is_exact:
            return self.symbolic()
        return f"{self.value.real:.12g}{self.value.imag:+.12g}i"


def gauss_sum_numeric(fs, chi, b=1):
    """G(chi, lambda_b) = sum over nonzero x of chi(x) lambda_b(x)."""
    if not isinstance(chi, MultiplicativeCharacter):
        chi = MultiplicativeCharacter(int(chi))
    x = np.asarray(fs.exp)
    total = np.sum(chi(fs, x) * AdditiveCharacter(int(b))(fs, x))
    return GaussSumValue.numeric(total)


def gauss_sum_table(fs, b=1, chunk=512):
    """G(psi^j, lambda_b) for every j in 0..Q-2, where psi(theta) = zeta_{Q-1}.

    Row-by-row direct summation, vectorized in chunks of characters.
    """
    n = fs.order
    lam = AdditiveCharacter(int(b))(fs, fs.exp)
    zeta = roots_of_unity(n)
    m = np.arange(n, dtype=np.int64)
    out = np.empty(n, dtype=complex)
    for start in range(0, n, chunk):
        j = np.arange(start, min(n, start + chunk), dtype=np.int64)
        out[j] = zeta[(j[:, None] * m[None, :]) % n] @ lam
    return out


def gauss_sum_quadratic(fs):
    """Exact Gauss sum of the quadratic character of GF(p^D), p odd."""
    p, d = fs.p, fs.degree
    if p == 2:
        raise InvalidParameterError("no quadratic character in characteristic 2")
    sign = (-1) ** (d - 1)
    if p % 4 == 1:
        return GaussSumValue.exact(sign, 0, fs.Q, 1)
    return GaussSumValue.exact(sign, d, fs.Q, 1)


def semiprimitive_t(p, e):
    """Least t >= 1 with p^t = -1 (mod e), or None."""
    if e < 3 or gcd(p, e) != 1:
        return None
    ordp = multiplicative_order(p, e)
    for t in range(1, ordp // 2 + 1):
        if pow(p, t, e) == e - 1:
            return t
    return None


def gauss_sum_semiprimitive(fs, chi):
    """Exact Gauss sum of a character of order e >= 3 in the semiprimitive case.

    Returns None when no power of p is -1 modulo e.
    """
    e = chi.order if isinstance(chi, MultiplicativeCharacter) else int(chi)
    if e < 3:
        return None
    if fs.order % e:
        raise InvalidParameterError(f"order {e} does not divide Q-1={fs.order}")
    t = semiprimitive_t(fs.p, e)
    if t is None:
        return None
    d = fs.degree
    assert d % (2 * t) == 0
    s = d // (2 * t)
    if fs.p == 2:
        exponent = s - 1
    else:
        exponent = s - 1 + (fs.p**t + 1) * s // e
    return GaussSumValue.exact((-1) ** exponent, 0, fs.Q, 1)


def gauss_sum_exact(fs, chi, b=1):
    """Exact G(chi, lambda_b) when a known closed form applies, else None."""
    if not isinstance(chi, MultiplicativeCharacter):
        chi = MultiplicativeCharacter(int(chi))
    b = int(b)
    if chi.is_trivial:
        return GaussSumValue.exact(fs.order if b == 0 else -1)
    if b == 0:
        return GaussSumValue.exact(0)
    if chi.order == 2 and fs.p != 2:
        g = gauss_sum_quadratic(fs)
    else:
        g = gauss_sum_semiprimitive(fs, chi)
    if g is None:
        return None
    if b == 1:
        return g
    # G(chi, lambda_b) = conj(chi)(b) G(chi); representable when that factor is a 4th root of 1
    k = int(chi.conj().exponents(fs, b))
    if (4 * k) % chi.base:
        return None
    i_pow = 4 * k // chi.base
    return GaussSumValue.exact(g.coeff, g.i_power + i_pow, g.root, g.root_power)


@dataclass(frozen=True)
class SemiprimitiveParams:
    """Data attached to phi^tau when phi has semiprimitive order e'.

    ``e_tau`` is the order of phi^tau, ``t_tau`` the least exponent with
    p^t_tau = -1 mod e_tau, ``m_tau = t / t_tau`` and ``s`` solves l*k = 2*t*s.
    """

    p: int
    t: int
    s: int
    e_tau: int
    t_tau: int
    m_tau: int

    @property
    def epsilon(self):
        """Sign of G_Q(phi^tau) / sqrt(Q)."""
        ms = self.m_tau * self.s
        if self.p == 2:
            return (-1) ** (ms - 1)
        return (-1) ** (ms - 1 + (self.p**self.t_tau + 1) * ms // self.e_tau)


def semiprimitive_params(p, degree, e_prime, tau):
    """Parameters for phi^tau, 1 <= tau < e'; None if e' is not semiprimitive."""
    t = semiprimitive_t(p, e_prime)
    if t is None:
        return None
    if degree % (2 * t):
        raise InvalidParameterError("2t does not divide the field degree")
    e_tau = e_prime // gcd(e_prime, tau)
    if e_tau == 2:
        # p^1 is odd, so p = -1 mod 2 holds at t_tau = 1
        t_tau = 1
    else:
        t_tau = semiprimitive_t(p, e_tau)
    assert t % t_tau == 0
    return SemiprimitiveParams(p, t, degree // (2 * t), e_tau, t_tau, t // t_tau)


def conjugation_check(fs, chi, b, tol=None):
    """Numerically confirm G(chi, lambda_b) = conj(chi)(b) G(chi) and G(conj chi) = chi(-1) conj(G(chi))."""
    tol = config.TOLERANCE if tol is None else tol
    b = int(b)
    if b == 0:
        raise InvalidParameterError("b must be nonzero")
    g1 = gauss_sum_numeric(fs, chi, 1).value
    gb = gauss_sum_numeric(fs, chi, b).value
    lhs_ok = abs(gb - complex(chi.conj()(fs, b)) * g1) < tol
    gbar = gauss_sum_numeric(fs, chi.conj(), 1).value
    minus_one = fs.neg(1)
    rhs_ok = abs(gbar - complex(chi(fs, minus_one)) * np.conj(g1)) < tol
    return bool(lhs_ok and rhs_ok)
