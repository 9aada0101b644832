"""Canonical enumeration of F_q-subspaces of F_q^k and per-subspace statistics.

A subspace is stored as its reduced row echelon basis over GF(q), entries
being the field labels of :mod:`ghwcyclic.finite_field` (0 is zero, 1 is one).
Streams run over pivot sets in lexicographic order and, inside a pivot set,
over the free entries (row-major) in lexicographic order with the first free
entry most significant.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from . import config
from .errors import CapExceededError, InvalidParameterError

__all__ = [
    "Subspace",
    "gaussian_binomial",
    "subspaces",
    "subspace_batches",
    "check_subspace_cap",
    "basis_elements",
    "span_elements",
    "projective_points",
    "support_size",
    "support_sizes",
    "subgroup_intersection_count",
    "residue_histograms",
    "rref",
]


@dataclass(frozen=True)
class Subspace:
    """An r-dimensional subspace of GF(q)^k given by its RREF basis."""

    k: int
    q: int
    basis: tuple

    @property
    def r(self):
        return len(self.basis)

    @property
    def pivots(self):
        return tuple(next(j for j, v in enumerate(row) if v) for row in self.basis)

    def basis_elements(self, fs):
        """Basis vectors as elements of GF(Q)."""
        if self.r == 0:
            return np.zeros(0, dtype=np.int64)
        return basis_elements(fs, np.asarray(self.basis, dtype=np.int64)[None])[0]

    def to_list(self):
        return [list(row) for row in self.basis]


def gaussian_binomial(k, r, q):
    """Number of r-dimensional subspaces of GF(q)^k."""
    if r < 0 or r > k:
        raise InvalidParameterError(f"need 0 <= r <= k, got r={r}, k={k}")
    num = den = 1
    for i in range(r):
        num *= q ** (k - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def check_subspace_cap(k, r, q, cap=None):
    cap = config.env_subspace_cap() if cap is None else cap
    count = gaussian_binomial(k, r, q)
    if count > cap:
        raise CapExceededError("subspace cap", count, cap)
    return count


def _pivot_blocks(k, r, q, batch_size):
    for piv in combinations(range(k), r):
        pivset = set(piv)
        free = [(i, j) for i in range(r) for j in range(piv[i] + 1, k) if j not in pivset]
        f = len(free)
        total = q**f
        for start in range(0, total, batch_size):
            idx = np.arange(start, min(total, start + batch_size), dtype=np.int64)
            out = np.zeros((len(idx), r, k), dtype=np.int64)
            for i, j in enumerate(piv):
                out[:, i, j] = 1
            for pos, (i, j) in enumerate(free):
                out[:, i, j] = (idx // q ** (f - 1 - pos)) % q
            yield out


def subspace_batches(k, r, q, batch_size=1 << 15):
    """Yield (B, r, k) label arrays covering every r-dim subspace once, in canonical order.

    Small pivot sets are packed together so that no batch but the last is
    much smaller than ``batch_size``.
    """
    if r < 0 or r > k:
        raise InvalidParameterError(f"need 0 <= r <= k, got r={r}, k={k}")
    pending, size = [], 0
    for block in _pivot_blocks(k, r, q, batch_size):
        if size + len(block) > batch_size and pending:
            yield np.concatenate(pending)
            pending, size = [], 0
        pending.append(block)
        size += len(block)
    if pending:
        yield np.concatenate(pending)


def subspaces(k, r, q):
    """Deterministic stream of every r-dimensional subspace of GF(q)^k."""
    for batch in subspace_batches(k, r, q):
        for mat in batch:
            yield Subspace(k, q, tuple(tuple(int(v) for v in row) for row in mat))


def rref(rows, tables):
    """Reduced row echelon form over GF(q) (label arithmetic); zero rows dropped."""
    m = [list(map(int, row)) for row in rows]
    out = []
    ncols = len(m[0]) if m else 0
    col = 0
    while m and col < ncols:
        pivot = next((row for row in m if row[col]), None)
        if pivot is None:
            col += 1
            continue
        m.remove(pivot)
        inv = tables.inv[pivot[col]]
        pivot = [int(tables.mul[inv, v]) for v in pivot]
        m = [_eliminate(row, pivot, col, tables) for row in m]
        out = [_eliminate(row, pivot, col, tables) for row in out]
        out.append(pivot)
        col += 1
    return [tuple(row) for row in out]


def _eliminate(row, pivot, col, tables):
    c = row[col]
    if not c:
        return row
    neg_c = tables.neg[c]
    return [int(tables.add[a, tables.mul[neg_c, b]]) for a, b in zip(row, pivot)]


# -- statistics over GF(Q) ---------------------------------------------------


def basis_elements(fs, labels):
    """(B, r, k) coordinate labels -> (B, r) elements of GF(Q)."""
    labels = np.asarray(labels, dtype=np.int64)
    weights = fs.q ** np.arange(fs.k, dtype=np.int64)
    return fs.coordinate_table[labels @ weights]


def _extend(fs, span, vec):
    # {s + c vec : s in span, c in GF(q)} for (B, m) spans and (B,) vectors
    multiples = np.asarray(fs.mul(fs.base_elements[None, :], vec[:, None]))
    return np.asarray(fs.add(span[:, :, None], multiples[:, None, :])).reshape(span.shape[0], -1)


def span_elements(fs, basis):
    """All q^d elements of the F_q-span of each row of a (B, d) element array."""
    basis = np.asarray(basis, dtype=np.int64)
    span = np.zeros((basis.shape[0], 1), dtype=np.int64)
    for j in range(basis.shape[1]):
        span = _extend(fs, span, basis[:, j])
    return span


def projective_points(fs, basis):
    """One representative per GF(q)*-orbit of nonzero span elements.

    Each orbit has exactly one element whose first nonzero coordinate on the
    given basis is 1, i.e. one element of b_j + span(b_{j+1}, ..., b_d).
    """
    basis = np.asarray(basis, dtype=np.int64)
    tail = np.zeros((basis.shape[0], 1), dtype=np.int64)
    parts = []
    for j in range(basis.shape[1] - 1, -1, -1):
        parts.append(np.asarray(fs.add(basis[:, j, None], tail)))
        if j:
            tail = _extend(fs, tail, basis[:, j])
    if not parts:
        return tail[:, :0]
    return np.concatenate(parts, axis=1)


def _unpack(H, fs):
    if isinstance(H, Subspace):
        return H.basis_elements(fs)
    return np.asarray(H, dtype=np.int64)


def support_sizes(cs, basis):
    """Support size of the subcode generated by each (B, r) basis of GF(Q) elements.

    A position i is outside the support iff every basis element has trace
    zero there, so only the r basis elements are consulted.
    """
    basis = np.asarray(basis, dtype=np.int64)
    if basis.shape[1] == 0:
        return np.zeros(basis.shape[0], dtype=np.int64)
    masks = cs.zero_masks[basis]
    common = np.bitwise_and.reduce(masks, axis=1)
    zeros = np.bitwise_count(common).sum(axis=1, dtype=np.int64)
    return cs.n - zeros


def support_size(cs, H):
    """Support size of the subcode {c(beta) : beta in H}."""
    basis = _unpack(H, cs.fs)
    return int(support_sizes(cs, basis[None])[0])


@lru_cache(maxsize=8)
def _residue_table(fs, modulus):
    # log mod modulus, with zero sent to the extra bin ``modulus``
    return np.where(fs.log < 0, modulus, fs.log % modulus)


def residue_histograms(cs, basis, modulus):
    """(B, modulus) counts of nonzero span elements by discrete log mod ``modulus``."""
    fs = cs.fs
    basis = np.asarray(basis, dtype=np.int64)
    b, d = basis.shape
    total = fs.q**d - 1
    if modulus == 1:
        return np.full((b, 1), total, dtype=np.int64)
    if (fs.order // (fs.q - 1)) % modulus == 0:
        # GF(q)* sits inside the subgroup, so residues are constant on orbits
        elems, scale = projective_points(fs, basis), fs.q - 1
    else:
        elems, scale = span_elements(fs, basis), 1
    res = _residue_table(fs, modulus)[elems]
    flat = (np.arange(b, dtype=np.int64)[:, None] * (modulus + 1) + res).ravel()
    hist = np.bincount(flat, minlength=b * (modulus + 1)).reshape(b, modulus + 1)
    return hist[:, :modulus] * scale


def subgroup_intersection_count(cs, H):
    """Number of nonzero x in H whose discrete log is divisible by e'."""
    basis = _unpack(H, cs.fs)
    return int(residue_histograms(cs, basis[None], cs.e_prime)[0, 0])
