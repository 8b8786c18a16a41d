"""
Graded polynomial rings over GF(p) with a fixed monomial order.

A ring context knows its variable count n and modulus p, and caches the
monomial basis of each degree.  Monomials of one degree are listed in
descending lexicographic order of exponent vectors (x1-heavy first);
combined with the grading this is the graded lex order.  Column order in
every matrix produced here follows these bases, so it must never change.

Homogeneous polynomials are coefficient vectors over the basis of their
degree.  The same representation doubles as the dual space: a "dual" form
of degree s is paired against operators through contraction, where a
variable acts as the partial derivative with respect to its dual partner.
"""

import math
import re

import numpy as np

from .errors import DegreeError, ParamError
from .gfp import PrimeMatrix

__all__ = [
    "RingCtx",
    "HomogPoly",
    "FormStream",
    "contraction_map",
    "pairing_weights",
]


def _monomials(n, d):
    """All exponent tuples of length n with sum d, lex descending."""
    if n == 1:
        return [(d,)]
    out = []
    for a in range(d, -1, -1):
        for tail in _monomials(n - 1, d - a):
            out.append((a,) + tail)
    return out


class RingCtx:
    """Polynomial ring k[x_1..x_n] over GF(p), with cached bases."""

    def __init__(self, n, p=32003):
        if n < 1:
            raise ParamError("need at least one variable")
        if p < 2:
            raise ParamError("modulus must be a prime >= 2")
        self.n = n
        self.p = p
        self._basis = {}
        self._index = {}

    def dim(self, d):
        """dim of the degree d graded piece; 0 for negative d."""
        if d < 0:
            return 0
        return math.comb(d + self.n - 1, self.n - 1)

    def basis(self, d):
        if d not in self._basis:
            self._basis[d] = _monomials(self.n, d)
        return self._basis[d]

    def index(self, d):
        if d not in self._index:
            self._index[d] = {m: i for i, m in enumerate(self.basis(d))}
        return self._index[d]

    def zero(self, d):
        return HomogPoly(self, d, np.zeros(self.dim(d), dtype=np.int64))

    def monomial(self, expo):
        d = sum(expo)
        v = np.zeros(self.dim(d), dtype=np.int64)
        v[self.index(d)[tuple(expo)]] = 1
        return HomogPoly(self, d, v)

    def variable(self, i):
        """The variable x_i, 1-based."""
        if not 1 <= i <= self.n:
            raise ParamError("variable index out of range")
        expo = [0] * self.n
        expo[i - 1] = 1
        return self.monomial(tuple(expo))

    def from_terms(self, d, terms):
        """Build a polynomial from {exponent tuple: coefficient}."""
        v = np.zeros(self.dim(d), dtype=np.int64)
        idx = self.index(d)
        for expo, c in terms.items():
            if sum(expo) != d:
                raise DegreeError("term of degree %d in a degree %d form" % (sum(expo), d))
            v[idx[tuple(expo)]] = (v[idx[tuple(expo)]] + c) % self.p
        return HomogPoly(self, d, v)

    def mult_map(self, f, d):
        """Matrix of multiplication by f from degree d to degree d + deg f.

        Columns follow the degree d basis, rows the degree d + deg f basis.
        """
        e = f.degree
        rows = self.dim(d + e)
        cols = self.dim(d)
        a = np.zeros((rows, cols), dtype=np.int64)
        tgt = self.index(d + e)
        fb = self.basis(e)
        nz = np.nonzero(f.coeffs)[0]
        for j, m in enumerate(self.basis(d)):
            for k in nz:
                prod = tuple(x + y for x, y in zip(m, fb[k]))
                a[tgt[prod], j] = (a[tgt[prod], j] + f.coeffs[k]) % self.p
        return PrimeMatrix(a, self.p)


_TERM_RE = re.compile(r"^\s*(?:(\d+)\s*\*?\s*)?((?:x\d+(?:\^\d+)?(?:\s*\*\s*)?)*)\s*$")
_VAR_RE = re.compile(r"x(\d+)(?:\^(\d+))?")


class HomogPoly:
    """A homogeneous polynomial: a ring, a degree, a coefficient vector."""

    def __init__(self, ring, degree, coeffs):
        self.ring = ring
        self.degree = degree
        self.coeffs = np.asarray(coeffs, dtype=np.int64) % ring.p
        if self.coeffs.shape != (ring.dim(degree),):
            raise DegreeError("coefficient vector has the wrong length")

    def is_zero(self):
        return not self.coeffs.any()

    def __eq__(self, other):
        return (
            isinstance(other, HomogPoly)
            and self.ring is other.ring
            and self.degree == other.degree
            and bool(np.array_equal(self.coeffs, other.coeffs))
        )

    def __add__(self, other):
        self._check(other)
        return HomogPoly(self.ring, self.degree, (self.coeffs + other.coeffs) % self.ring.p)

    def __sub__(self, other):
        self._check(other)
        return HomogPoly(self.ring, self.degree, (self.coeffs - other.coeffs) % self.ring.p)

    def scale(self, c):
        return HomogPoly(self.ring, self.degree, (self.coeffs * (c % self.ring.p)) % self.ring.p)

    def __mul__(self, other):
        if not isinstance(other, HomogPoly):
            return self.scale(other)
        if other.ring is not self.ring:
            raise ParamError("mixed rings")
        m = self.ring.mult_map(self, other.degree)
        v = m.matmul(PrimeMatrix(other.coeffs.reshape(-1, 1), self.ring.p))
        return HomogPoly(self.ring, self.degree + other.degree, v.a.ravel())

    def _check(self, other):
        if other.ring is not self.ring or other.degree != self.degree:
            raise DegreeError("operands live in different graded pieces")

    def terms(self):
        basis = self.ring.basis(self.degree)
        for i in np.nonzero(self.coeffs)[0]:
            yield basis[int(i)], int(self.coeffs[i])

    def text(self, names="x"):
        parts = []
        for expo, c in self.terms():
            factors = []
            for i, e in enumerate(expo):
                if e == 1:
                    factors.append("%s%d" % (names, i + 1))
                elif e > 1:
                    factors.append("%s%d^%d" % (names, i + 1, e))
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append(str(c) + "*" + "*".join(factors))
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return "HomogPoly(%s)" % self.text()

    @classmethod
    def parse(cls, ring, text, degree=None):
        """Parse '+'-separated terms like '3*x1^2*x2 + x3^3'."""
        terms = {}
        deg = degree
        for chunk in text.replace("y", "x").split("+"):
            chunk = chunk.strip()
            if not chunk or chunk == "0":
                continue
            m = _TERM_RE.match(chunk)
            if not m:
                raise ParamError("cannot parse term %r" % chunk)
            coeff = int(m.group(1)) if m.group(1) else 1
            expo = [0] * ring.n
            for vm in _VAR_RE.finditer(m.group(2) or ""):
                i = int(vm.group(1))
                if not 1 <= i <= ring.n:
                    raise ParamError("variable index %d out of range" % i)
                expo[i - 1] += int(vm.group(2)) if vm.group(2) else 1
            tdeg = sum(expo)
            if deg is None:
                deg = tdeg
            if tdeg != deg:
                raise DegreeError("mixed degrees in %r" % text)
            key = tuple(expo)
            terms[key] = terms.get(key, 0) + coeff
        if deg is None:
            raise ParamError("cannot infer the degree of %r" % text)
        return ring.from_terms(deg, terms)


def _falling(b, a):
    """b! / (b-a)! as an integer (0 if a > b)."""
    if a > b:
        return 0
    out = 1
    for t in range(b - a + 1, b + 1):
        out *= t
    return out


def contraction_map(F, d):
    """Matrix of the contraction action of degree d operators on F.

    F is a dual form of degree s; the result maps the degree d piece of
    the polynomial ring to the dual forms of degree s - d.  A monomial
    x^a sends y^b to (prod_i b_i!/(b_i-a_i)!) y^(b-a) when b >= a
    componentwise, else to zero.  Over small characteristic the falling
    factorials can vanish mod p, so the pairing may degenerate; callers
    who care should check p > s.
    """
    ring = F.ring
    s = F.degree
    if d > s:
        raise DegreeError("cannot contract a degree %d form by degree %d" % (s, d))
    rows = ring.dim(s - d)
    cols = ring.dim(d)
    a = np.zeros((rows, cols), dtype=np.int64)
    tgt = ring.index(s - d)
    for j, mono in enumerate(ring.basis(d)):
        for b, c in F.terms():
            if all(bi >= ai for bi, ai in zip(b, mono)):
                w = 1
                for bi, ai in zip(b, mono):
                    w = (w * _falling(bi, ai)) % ring.p
                if w:
                    rest = tuple(bi - ai for bi, ai in zip(b, mono))
                    a[tgt[rest], j] = (a[tgt[rest], j] + c * w) % ring.p
    return PrimeMatrix(a, ring.p)


def pairing_weights(ring, d):
    """Diagonal of the degree d apolarity pairing: prod_i a_i! mod p."""
    out = np.empty(ring.dim(d), dtype=np.int64)
    for j, mono in enumerate(ring.basis(d)):
        w = 1
        for e in mono:
            w = (w * math.factorial(e)) % ring.p
        out[j] = w
    return out


class FormStream:
    """Deterministic stream of "general" forms.

    The underlying generator is seeded from (seed, n, p), so the k-th form
    drawn for given parameters is the same in every run.  Coefficients are
    uniform over GF(p).
    """

    def __init__(self, ring, seed=1):
        self.ring = ring
        self.seed = seed
        self._rng = np.random.default_rng([seed, ring.n, ring.p])

    def form(self, d):
        """A uniformly random form of degree d, redrawn if identically zero
        (relevant only over tiny fields)."""
        while True:
            v = self._rng.integers(0, self.ring.p, size=self.ring.dim(d), dtype=np.int64)
            if v.any() or d < 0:
                return HomogPoly(self.ring, d, v)

    def forms(self, degrees):
        return [self.form(d) for d in degrees]

    def coefficients(self, count):
        return self._rng.integers(0, self.ring.p, size=count, dtype=np.int64)
