"""Generalized Hamming weights d_r of irreducible cyclic codes.

Four routes compute d_r = n - N_r:

* ``ghw_oracle`` minimizes the support size over every r-dim subspace H of
  GF(Q) (the subcode {c(beta) : beta in H}).
* ``nr_formula34`` maximizes |H n <theta^e'>| over (k-r)-dim subspaces and
  scales by e'/e.
* ``nr_formula33`` maximizes the Gauss-sum weighted character sum
  S(H) = sum_tau G_Q(phi^tau) sum_{beta in H*} conj(phi)^tau(beta) over r-dim H.
* ``ghw_closed_form`` evaluates the closed forms that apply to the code.

``weight_hierarchy`` assembles d_1..d_k and cross-checks every route it runs.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import config
from .characters import MultiplicativeCharacter, gauss_sum_numeric, roots_of_unity, semiprimitive_t
from .errors import CapExceededError, CrossCheckError, PrecisionError
from .subspaces import (
    Subspace,
    basis_elements,
    check_subspace_cap,
    residue_histograms,
    subspace_batches,
    support_sizes,
)

__all__ = [
    "METHODS",
    "RouteResult",
    "HierarchyEntry",
    "WeightHierarchy",
    "ghw_oracle",
    "nr_formula34",
    "nr_formula33",
    "closed_form_candidates",
    "ghw_closed_form",
    "weight_hierarchy",
    "check_monotone",
]

# most specific first; used to pick the reported name when several closed forms apply
CLOSED_FORMS = ("cor44", "thm43", "thm42", "thm41", "cor32", "thm34", "thm33")
METHODS = ("oracle", "formula33", "formula34") + CLOSED_FORMS
STRATEGIES = ("auto", "oracle", "formulas")

_SPAN_BUDGET = 1 << 18


@dataclass(frozen=True)
class RouteResult:
    """Outcome of one route for one r.

    ``witness`` is the first extremal subspace in canonical order: an r-dim
    subspace for the oracle and formula33, a (k-r)-dim one for formula34.
    """

    r: int
    d: int
    N: int
    method: str
    witness: Subspace = None
    max_abs_imag: float = None
    residual: float = None


def _batch_size(q, dim):
    return max(1, _SPAN_BUDGET // q**dim)


def _to_subspace(cs, mat):
    return Subspace(cs.k, cs.q, tuple(tuple(int(v) for v in row) for row in mat))


def ghw_oracle(cs, r, cap=None):
    """Exact d_r by minimizing support size over every r-dim subspace."""
    check_subspace_cap(cs.k, r, cs.q, cap)
    best, witness = None, None
    for batch in subspace_batches(cs.k, r, cs.q, batch_size=1 << 15):
        sizes = support_sizes(cs, basis_elements(cs.fs, batch))
        i = int(np.argmin(sizes))
        if best is None or sizes[i] < best:
            best, witness = int(sizes[i]), batch[i]
    return RouteResult(r, best, cs.n - best, "oracle", _to_subspace(cs, witness))


def nr_formula34(cs, r, cap=None):
    """N_r = (e'/e) max |H n <theta^e'>| over (k-r)-dim H; d_r = n - N_r."""
    dim = cs.k - r
    check_subspace_cap(cs.k, dim, cs.q, cap)
    best, witness = None, None
    for batch in subspace_batches(cs.k, dim, cs.q, batch_size=_batch_size(cs.q, dim)):
        counts = residue_histograms(cs, basis_elements(cs.fs, batch), cs.e_prime)[:, 0]
        i = int(np.argmax(counts))
        if best is None or counts[i] > best:
            best, witness = int(counts[i]), batch[i]
    N = Fraction(cs.e_prime, cs.e) * best
    if N.denominator != 1 or N < 0:
        raise CrossCheckError(f"formula34 gave non-integral N_{r} = {N}")
    N = int(N)
    return RouteResult(r, cs.n - N, N, "formula34", _to_subspace(cs, witness))


@lru_cache(maxsize=4)
def formula33_weights(cs):
    """w_j = sum_{tau=1}^{e'-1} G_Q(phi^tau) zeta_{e'}^(-tau j), j = 0..e'-1.

    S(H) is then sum_j w_j * #{beta in H*: log(beta) = j mod e'}.
    """
    ep = cs.e_prime
    zeta = roots_of_unity(ep)
    j = np.arange(ep)
    w = np.zeros(ep, dtype=complex)
    for tau in range(1, ep):
        g = gauss_sum_numeric(cs.fs, MultiplicativeCharacter(ep, tau), 1).value
        w += g * zeta[(-tau * j) % ep]
    return w


def nr_formula33(cs, r, cap=None, tol=None):
    """N_r from the Gauss-sum formula, rounded with the residual checked."""
    tol = config.env_tolerance() if tol is None else tol
    check_subspace_cap(cs.k, r, cs.q, cap)
    w = formula33_weights(cs)
    best, witness, max_imag = None, None, 0.0
    for batch in subspace_batches(cs.k, r, cs.q, batch_size=_batch_size(cs.q, r)):
        hist = residue_histograms(cs, basis_elements(cs.fs, batch), cs.e_prime)
        s = hist @ w
        max_imag = max(max_imag, float(np.max(np.abs(s.imag))))
        i = int(np.argmax(s.real))
        if best is None or s.real[i] > best:
            best, witness = float(s.real[i]), batch[i]
    if max_imag >= tol:
        raise PrecisionError(f"formula33, r={r}: imaginary part {max_imag:.3g} exceeds {tol}")
    denom = cs.e * cs.q**r
    N_float = (cs.q**cs.k - cs.q**r + best) / denom
    N = int(round(N_float))
    residual = abs(N_float - N)
    if residual >= tol:
        raise PrecisionError(f"formula33, r={r}: N_r={N_float!r} is not within {tol} of an integer")
    return RouteResult(r, cs.n - N, N, "formula33", _to_subspace(cs, witness), max_imag, residual)


# -- closed forms ------------------------------------------------------------


def _v2(x):
    v = 0
    while x % 2 == 0:
        x //= 2
        v += 1
    return v


def _as_int(value, method, r):
    value = Fraction(value)
    if value.denominator != 1:
        raise CrossCheckError(f"{method} gives non-integral d_{r} = {value}")
    return int(value)


def _upper_form(cs, r):
    # d_r = n - (e'/e)(q^(k-r) - 1)
    return cs.n - Fraction(cs.e_prime, cs.e) * (cs.q ** (cs.k - r) - 1)


def _lower_form(cs, r, coef):
    # d_r = n - (q^k - q^r + coef * q^(k/2) (q^r - 1)) / (e q^r); q^(k/2) = p^(lk/2)
    q, k = cs.q, cs.k
    half = cs.p ** (cs.l * k // 2)
    return cs.n - Fraction(q**k - q**r + coef * half * (q**r - 1), cs.e * q**r)


def _largest_subfield_degree(cs):
    q, k, ep = cs.q, cs.k, cs.e_prime
    for m in range(k - 1, 0, -1):
        if k % m == 0 and ((q**k - 1) // (q**m - 1)) % ep == 0:
            return m
    return None


def closed_form_candidates(cs, r):
    """Every closed form whose hypotheses hold at this r, as (method, d_r) pairs."""
    q, k, e, ep, p, l = cs.q, cs.k, cs.e, cs.e_prime, cs.p, cs.l
    out = []
    if ep == 1:
        out.append(("cor32", Fraction(q**k - q ** (k - r), e)))
    if ep == 2 and k % 2 == 0:
        s = k // 2
        if r <= s:
            # (q^s - 1)(q^(s-r) + 1)/e is N_r here, so d_r = n - N_r
            out.append(("thm41", cs.n - Fraction((q**s - 1) * (q ** (s - r) + 1), e)))
        if r >= s:
            out.append(("thm41", Fraction(q ** (2 * s) - 2 * q ** (2 * s - r) + 1, e)))
    if ep >= 2 and (q - 1) % ep == 0 and k % ep == 0:
        m = k // ep
        if r >= k - m:
            out.append(("thm33", _upper_form(cs, r)))
    if ep >= 2 and (q - 1) % ep != 0:
        m = _largest_subfield_degree(cs)
        if m is not None and r >= k - m:
            out.append(("thm34", _upper_form(cs, r)))
    t = semiprimitive_t(p, ep) if ep >= 3 else None
    if t is not None:
        s = l * k // (2 * t)
        odd_se = (s * ep) % 2 == 1
        if (q - 1) % ep == 0:
            kp = k // ep
            if r >= k - kp:
                out.append(("thm42", _upper_form(cs, r)))
            if 1 <= r <= kp and s % 2 == 0:
                out.append(("thm42", _lower_form(cs, r, 1)))
            if 1 <= r <= kp and odd_se:
                out.append(("thm42", _lower_form(cs, r, ep - 1)))
        else:
            a, b, c = _v2(l), _v2(k), _v2(t)
            if c >= a:
                m = 2 ** (c - a) * (k >> b)
                if r >= k - m:
                    out.append(("thm43", _upper_form(cs, r)))
                if 1 <= r <= m and s % 2 == 0:
                    out.append(("thm43", _lower_form(cs, r, 1)))
                if 1 <= r <= m and odd_se:
                    out.append(("thm43", _lower_form(cs, r, ep - 1)))
                if odd_se:
                    if 2 * r <= k:
                        out.append(("cor44", _lower_form(cs, r, ep - 1)))
                    if 2 * r >= k:
                        out.append(("cor44", _upper_form(cs, r)))
    return [(method, _as_int(d, method, r)) for method, d in out]


def ghw_closed_form(cs, r):
    """(d_r, method) from the most specific applicable closed form, or None.

    When several closed forms apply they must agree; a disagreement raises.
    """
    cands = closed_form_candidates(cs, r)
    if not cands:
        return None
    values = {d for _, d in cands}
    if len(values) > 1:
        raise CrossCheckError(f"closed forms disagree at r={r}: {cands}")
    method = min((m for m, _ in cands), key=CLOSED_FORMS.index)
    return values.pop(), method


# -- hierarchy ---------------------------------------------------------------


@dataclass
class HierarchyEntry:
    r: int
    d: int
    method: str
    witness: Subspace = None
    witness_route: str = None
    routes: dict = field(default_factory=dict)
    max_abs_imag: float = None
    residual: float = None


@dataclass
class WeightHierarchy:
    code: object
    entries: list

    @property
    def values(self):
        return [entry.d for entry in self.entries]

    def __getitem__(self, r):
        if r == 0:
            return 0
        return self.entries[r - 1].d

    def __len__(self):
        return len(self.entries)


def check_monotone(values, n):
    """1 <= d_1 < d_2 < ... < d_k <= n."""
    if not values:
        return True
    return values[0] >= 1 and values[-1] <= n and all(a < b for a, b in zip(values, values[1:]))


def _route_under_cap(cs, r, cap):
    try:
        check_subspace_cap(cs.k, r, cs.q, cap)
    except CapExceededError:
        return False
    return True


def weight_hierarchy(cs, strategy="auto", cap=None, tol=None):
    """Compute d_1..d_k.

    ``oracle`` runs only the exhaustive search; ``formulas`` prefers a closed
    form, then formula34, then formula33; ``auto`` runs every route under the
    subspace cap and requires them all to agree.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    cap = config.env_subspace_cap() if cap is None else cap
    entries = []
    for r in range(1, cs.k + 1):
        results = []
        closed = ghw_closed_form(cs, r) if strategy != "oracle" else None
        if strategy == "oracle":
            results.append(ghw_oracle(cs, r, cap))
        elif strategy == "formulas":
            if closed is None:
                try:
                    results.append(nr_formula34(cs, r, cap))
                except CapExceededError:
                    results.append(nr_formula33(cs, r, cap, tol))
        else:
            if _route_under_cap(cs, r, cap):
                results.append(ghw_oracle(cs, r, cap))
                results.append(nr_formula34(cs, r, cap))
                results.append(nr_formula33(cs, r, cap, tol))
            elif closed is None:
                check_subspace_cap(cs.k, r, cs.q, cap)

        routes = {res.method: res.d for res in results}
        if closed is not None:
            routes[closed[1]] = closed[0]
        if len(set(routes.values())) > 1:
            detail = ", ".join(
                f"{res.method}: d={res.d} witness={res.witness.to_list() if res.witness else None}"
                for res in results
            )
            if closed is not None:
                detail += f", {closed[1]}: d={closed[0]}"
            raise CrossCheckError(f"routes disagree at r={r}: {detail}")

        if closed is not None:
            method = closed[1]
        elif "formula34" in routes and strategy != "oracle":
            method = "formula34"
        else:
            method = results[0].method
        by_method = {res.method: res for res in results}
        source = by_method.get("oracle") or by_method.get(method)
        f33 = by_method.get("formula33")
        entries.append(
            HierarchyEntry(
                r=r,
                d=next(iter(routes.values())),
                method=method,
                witness=source.witness if source else None,
                witness_route=source.method if source else None,
                routes=routes,
                max_abs_imag=f33.max_abs_imag if f33 else None,
                residual=f33.residual if f33 else None,
            )
        )

    hierarchy = WeightHierarchy(cs, entries)
    if not check_monotone(hierarchy.values, cs.n):
        raise CrossCheckError(f"hierarchy {hierarchy.values} is not strictly increasing in [1, {cs.n}]")
    return hierarchy
