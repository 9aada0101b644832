"""Classical GHW bounds, Wei duality, and brute force for arbitrary linear codes.

Everything except the last section works on plain integers.  The brute-force
routines take a generator matrix of GF(q) labels and the label arithmetic
tables of :attr:`FieldSpec.base_tables`; they exist so that the dual of a
cyclic code can be checked against Wei duality.
"""

from dataclasses import asdict, dataclass

import numpy as np

from .errors import CapExceededError, InvalidParameterError
from .subspaces import gaussian_binomial, rref, subspace_batches

__all__ = [
    "BoundReport",
    "singleton_bound",
    "plotkin_like_bound",
    "griesmer_like_bound",
    "bound_report",
    "bound_violations",
    "wei_duality",
    "dual_generator_matrix",
    "linear_code_hierarchy",
]


def singleton_bound(n, k, r):
    """(r, n - k + r): the range every d_r must lie in."""
    if not 1 <= r <= k <= n:
        raise InvalidParameterError(f"need 1 <= r <= k <= n, got r={r}, k={k}, n={n}")
    return r, n - k + r


def plotkin_like_bound(n, k, q, r):
    """floor(n (q^r - 1) q^(k-r) / (q^k - 1))."""
    if not 1 <= r <= k:
        raise InvalidParameterError(f"need 1 <= r <= k, got r={r}, k={k}")
    return n * (q**r - 1) * q ** (k - r) // (q**k - 1)


def griesmer_like_bound(d1, q, r):
    """sum_{i<r} ceil(d1 / q^i)."""
    if d1 < 1 or r < 1:
        raise InvalidParameterError("need d1 >= 1 and r >= 1")
    return sum(-(-d1 // q**i) for i in range(r))


@dataclass(frozen=True)
class BoundReport:
    r: int
    d: int
    lower_singleton: int
    upper_singleton: int
    upper_plotkin: int
    lower_griesmer: int

    @property
    def r_mds(self):
        return self.d == self.upper_singleton

    @property
    def meets_plotkin(self):
        return self.d == self.upper_plotkin

    @property
    def meets_griesmer(self):
        return self.d == self.lower_griesmer

    @property
    def satisfied(self):
        return (
            self.lower_singleton <= self.d <= self.upper_singleton
            and self.d <= self.upper_plotkin
            and self.d >= self.lower_griesmer
        )

    def to_dict(self):
        out = asdict(self)
        del out["r"], out["d"]
        out.update(r_mds=self.r_mds, meets_plotkin=self.meets_plotkin, meets_griesmer=self.meets_griesmer)
        return out


def bound_report(d, r, n, k, q, d1):
    lo, hi = singleton_bound(n, k, r)
    return BoundReport(
        r=r,
        d=d,
        lower_singleton=lo,
        upper_singleton=hi,
        upper_plotkin=plotkin_like_bound(n, k, q, r),
        lower_griesmer=griesmer_like_bound(d1, q, r),
    )


def bound_violations(values, n, k, q):
    """Messages for every d_r outside the Singleton, Plotkin or Griesmer bounds."""
    out = []
    for r, d in enumerate(values, start=1):
        rep = bound_report(d, r, n, k, q, values[0])
        if not rep.lower_singleton <= d <= rep.upper_singleton:
            out.append(f"d_{r}={d} outside Singleton range [{rep.lower_singleton}, {rep.upper_singleton}]")
        if d > rep.upper_plotkin:
            out.append(f"d_{r}={d} above Plotkin-like bound {rep.upper_plotkin}")
        if d < rep.lower_griesmer:
            out.append(f"d_{r}={d} below Griesmer-like bound {rep.lower_griesmer}")
    return out


def wei_duality(values, n, k):
    """Hierarchy of the dual code: {1..n} minus {n + 1 - d_r}."""
    values = list(values)
    if len(values) != k or k > n:
        raise InvalidParameterError(f"expected {k} values with k <= n={n}")
    if any(not 1 <= d <= n for d in values) or any(a >= b for a, b in zip(values, values[1:])):
        raise InvalidParameterError(f"hierarchy {values} is not strictly increasing in [1, {n}]")
    excluded = {n + 1 - d for d in values}
    return [x for x in range(1, n + 1) if x not in excluded]


# -- arbitrary linear codes over GF(q) -------------------------------------


def dual_generator_matrix(G, tables):
    """Generator matrix of the dual code (null space of G), as GF(q) labels."""
    G = np.asarray(G, dtype=np.int64)
    n = G.shape[1]
    rows = rref(G, tables)
    pivots = [next(j for j, v in enumerate(row) if v) for row in rows]
    free = [j for j in range(n) if j not in pivots]
    out = []
    for f in free:
        vec = [0] * n
        vec[f] = 1
        for row, pc in zip(rows, pivots):
            vec[pc] = int(tables.neg[row[f]])
        out.append(vec)
    return np.asarray(out, dtype=np.int64).reshape(len(out), n)


def _hierarchy_by_subsets(G, tables, cap):
    # d_r = n - max{|T| : rank(G restricted to columns T) <= dim - r}
    dim, n = G.shape
    if 2**n > cap:
        raise CapExceededError("coordinate subset cap", 2**n, cap)
    add = tables.add.tolist()
    mul = tables.mul.tolist()
    neg = tables.neg.tolist()
    inv = tables.inv.tolist()
    cols = [tuple(int(v) for v in G[:, j]) for j in range(n)]
    best = [-1] * (dim + 1)

    def reduce(vec, basis):
        vec = list(vec)
        for piv, b in basis:
            c = vec[piv]
            if c:
                nc = neg[c]
                vec = [add[x][mul[nc][y]] for x, y in zip(vec, b)]
        return vec

    def walk(j, basis, size):
        if j == n:
            rank = len(basis)
            if size > best[rank]:
                best[rank] = size
            return
        walk(j + 1, basis, size)
        v = reduce(cols[j], basis)
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            walk(j + 1, basis, size + 1)
        else:
            s = inv[v[piv]]
            walk(j + 1, basis + [(piv, [mul[s][x] for x in v])], size + 1)

    walk(0, [], 0)
    out = []
    for r in range(1, dim + 1):
        out.append(n - max(best[: dim - r + 1]))
    return out


def _hierarchy_by_subspaces(G, tables, cap):
    dim, n = G.shape
    q = tables.q
    add, mul = tables.add, tables.mul
    out = []
    for r in range(1, dim + 1):
        if gaussian_binomial(dim, r, q) > cap:
            raise CapExceededError("subspace cap", gaussian_binomial(dim, r, q), cap)
        best = None
        for batch in subspace_batches(dim, r, q):
            # codewords of the basis rows: (B, r, n)
            words = np.zeros(batch.shape[:2] + (n,), dtype=np.int64)
            for i in range(dim):
                words = add[words, mul[batch[:, :, i, None], G[i][None, None, :]]]
            support = (words != 0).any(axis=1).sum(axis=1)
            m = int(support.min())
            best = m if best is None else min(best, m)
        out.append(best)
    return out


def linear_code_hierarchy(G, tables, method="auto", cap=1 << 22):
    """Brute-force weight hierarchy of the code generated by the rows of ``G``.

    ``subspaces`` minimizes support over every r-dim subcode; ``subsets``
    finds, for each r, the smallest coordinate set carrying an r-dim subcode.
    ``auto`` picks whichever enumeration is smaller.
    """
    G = np.asarray(rref(np.asarray(G, dtype=np.int64), tables), dtype=np.int64)
    if G.size == 0:
        return []
    dim, n = G.shape
    if method == "auto":
        n_sub = max(gaussian_binomial(dim, r, tables.q) for r in range(dim + 1))
        method = "subspaces" if n_sub <= 2**n else "subsets"
    if method == "subsets":
        return _hierarchy_by_subsets(G, tables, cap)
    if method == "subspaces":
        return _hierarchy_by_subspaces(G, tables, cap)
    raise ValueError(f"unknown method {method!r}")
