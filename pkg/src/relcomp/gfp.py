"""
Dense exact linear algebra over a prime field GF(p).

Matrices are numpy int64 arrays with entries reduced into [0, p).  All row
operations are vectorized; intermediate products stay below p**2 * rows,
so any p below 2**31 is safe in int64.

The pivot choice is deterministic (first nonzero entry in the column,
scanning top to bottom), so reduced row echelon forms, pivot columns and
kernel bases are reproducible across runs.
"""

import numpy as np

__all__ = [
    "PrimeMatrix",
    "rref",
    "rank",
    "kernel_basis",
    "stack",
]


def _as_array(entries, p):
    a = np.asarray(entries, dtype=np.int64)
    if a.ndim != 2:
        raise ValueError("matrix entries must be two dimensional")
    return a % p


class PrimeMatrix:
    """A dense matrix over GF(p).  Thin wrapper around a numpy array."""

    def __init__(self, entries, p):
        if p < 2:
            raise ValueError("modulus must be a prime >= 2")
        self.p = p
        self.a = _as_array(entries, p)

    @classmethod
    def zeros(cls, rows, cols, p):
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    @property
    def rows(self):
        return self.a.shape[0]

    @property
    def cols(self):
        return self.a.shape[1]

    def copy(self):
        return PrimeMatrix(self.a.copy(), self.p)

    def __eq__(self, other):
        return (
            isinstance(other, PrimeMatrix)
            and self.p == other.p
            and self.a.shape == other.a.shape
            and bool(np.array_equal(self.a, other.a))
        )

    def __repr__(self):
        return "PrimeMatrix(%dx%d mod %d)" % (self.rows, self.cols, self.p)

    def matmul(self, other):
        if self.p != other.p:
            raise ValueError("modulus mismatch")
        # Chunk the product so accumulated dot products stay inside int64.
        # Each term is < p**2; we can sum at most 2**63 // p**2 of them.
        k = self.cols
        step = max(1, (2**62) // (self.p * self.p))
        out = np.zeros((self.rows, other.cols), dtype=np.int64)
        for lo in range(0, k, step):
            hi = min(k, lo + step)
            out = (out + self.a[:, lo:hi] @ other.a[lo:hi, :]) % self.p
        return PrimeMatrix(out, self.p)


def _inv(x, p):
    return pow(int(x), p - 2, p)


def _rref_inplace(a, p):
    """Gauss-Jordan elimination.  Returns the list of pivot columns."""
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = (a[r] * _inv(a[r, c], p)) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return pivots


def rref(m):
    """Reduced row echelon form.

    Returns (reduced PrimeMatrix, pivot column list).  Zero rows are kept
    at the bottom; the nonzero rows form a canonical basis of the row
    space, so two matrices have the same row space iff their rrefs agree
    on the nonzero rows.
    """
    a = m.a.copy()
    pivots = _rref_inplace(a, m.p)
    return PrimeMatrix(a, m.p), pivots


def rank(m):
    """Rank via forward elimination only (cheaper than full rref)."""
    a = m.a.copy()
    p = m.p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        below = a[r + 1:, c]
        hit = np.nonzero(below)[0]
        if hit.size:
            factor = (below[hit] * _inv(a[r, c], p)) % p
            a[r + 1:][hit, c:] = (a[r + 1:][hit, c:] - np.outer(factor, a[r, c:])) % p
        r += 1
    return r


def kernel_basis(m):
    """Basis of the right kernel, as the rows of a PrimeMatrix.

    One basis vector per free column, produced in increasing free-column
    order.  The vector for free column f has entry 1 at position f.
    """
    red, pivots = rref(m)
    p, cols = m.p, m.cols
    pivset = set(pivots)
    free = [c for c in range(cols) if c not in pivset]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for r, c in enumerate(pivots):
            basis[k, c] = (-red.a[r, f]) % p
    return PrimeMatrix(basis, p)


def stack(mats):
    """Vertical concatenation of PrimeMatrix blocks with equal cols."""
    if not mats:
        raise ValueError("nothing to stack")
    p = mats[0].p
    if any(m.p != p for m in mats):
        raise ValueError("modulus mismatch")
    return PrimeMatrix(np.vstack([m.a for m in mats]), p)
