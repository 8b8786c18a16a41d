"""
Symbolic calculus of graded free modules, resolution shapes and Betti
tables, together with closed-form builders for the minimal free
resolutions of several families of Artinian algebras:

* compressed Gorenstein algebras of even socle degree (binomial formula);
* Gorenstein algebras of even socle degree squeezed inside a complete
  intersection (exterior-power summands plus one solved multiplicity per
  column, obtained from the Euler characteristic identity);
* the analogous odd socle degree shape, which keeps genuinely free
  parameters y_2, y_3, ... that only a concrete computation can pin down;
* general points on a smooth quadric surface and the odd-socle Gorenstein
  algebras squeezed by a quadric that are derived from them;
* the conditional shape for odd socle degree over a codimension <= n-2
  complete intersection;
* almost complete intersections with even degree sum, via a dualized
  mapping cone over the even-socle Gorenstein shape.

The numeric mapping cone for linkage and the classification of repeated
twists in consecutive modules ("ghost" terms) live here as well.
"""

import math
from collections import Counter
from dataclasses import dataclass, field

from .errors import InfeasibleError, ParamError, ParityError, RangeError, SplitError
from .series import HilbertSeries, froberg_prediction, rc_min_bound

__all__ = [
    "FreeModule",
    "ResolutionShape",
    "BettiTable",
    "GhostReport",
    "koszul_module",
    "koszul_shape",
    "compressed_gor_even",
    "rc_gor_even",
    "rc_gor_odd_shape",
    "OddSocleShape",
    "quadric_points_resolution",
    "rc_gor_odd_quadric",
    "mrc_resolution",
    "aci_resolution",
    "mapping_cone_link",
    "ghost_classify",
    "KOSZUL",
    "DUALITY_FORCED",
    "NON_KOSZUL",
]


class FreeModule:
    """A finite direct sum of twists R(-t), stored as multiset t -> mult."""

    def __init__(self, twists=None):
        self.twists = Counter()
        if twists:
            for t, m in dict(twists).items():
                if m < 0:
                    raise ParamError("negative multiplicity")
                if m:
                    self.twists[t] += m

    def copy(self):
        return FreeModule(self.twists)

    def add(self, t, mult=1):
        if mult < 0:
            raise ParamError("negative multiplicity")
        if mult:
            self.twists[t] += mult
        return self

    def __add__(self, other):
        out = self.copy()
        for t, m in other.twists.items():
            out.add(t, m)
        return out

    def __eq__(self, other):
        return isinstance(other, FreeModule) and self.twists == other.twists

    def is_zero(self):
        return not self.twists

    @property
    def rank(self):
        return sum(self.twists.values())

    def items(self):
        return sorted(self.twists.items())

    def truncate_le(self, y):
        """Keep only the summands R(-t) with t <= y."""
        return FreeModule({t: m for t, m in self.twists.items() if t <= y})

    def dual_twist(self, e):
        """Dualize and twist: R(-t) becomes R(-(e - t))."""
        return FreeModule({e - t: m for t, m in self.twists.items()})

    def text(self):
        if not self.twists:
            return "0"
        parts = []
        for t, m in self.items():
            base = "R" if t == 0 else "R(-%d)" % t
            parts.append(base if m == 1 else base + "^%d" % m)
        return " + ".join(parts)

    def __repr__(self):
        return "FreeModule(%s)" % self.text()


def koszul_module(degrees, i):
    """i-th exterior power of a direct sum of twists R(-d_j).

    Twists are the sums of the degrees over all i-element subsets.
    """
    degrees = list(degrees)
    if i < 0:
        raise RangeError("exterior power index %d out of range" % i)
    out = FreeModule()
    if i > len(degrees):
        return out
    # dp[k] counts k-subsets by their degree sum
    dp = [Counter() for _ in range(i + 1)]
    dp[0][0] = 1
    for d in degrees:
        for k in range(min(i, len(degrees)) - 1, -1, -1):
            for s, c in dp[k].items():
                dp[k + 1][s + d] += c
    for s, c in dp[i].items():
        out.add(s, c)
    return out


def koszul_shape(degrees):
    """The resolution shape of a complete intersection: all exterior powers."""
    degrees = list(degrees)
    return ResolutionShape([koszul_module(degrees, i) for i in range(len(degrees) + 1)])


class ResolutionShape:
    """A list of free modules F_0, F_1, ..., F_len with F_0 = R."""

    def __init__(self, modules):
        self.modules = [m if isinstance(m, FreeModule) else FreeModule(m) for m in modules]
        if not self.modules or self.modules[0] != FreeModule({0: 1}):
            raise ParamError("a shape must start with R itself")

    @property
    def length(self):
        return len(self.modules) - 1

    def __eq__(self, other):
        return isinstance(other, ResolutionShape) and self.modules == other.modules

    def max_twist(self):
        return max((max(m.twists) for m in self.modules if not m.is_zero()), default=0)

    def euler_coeffs(self):
        """Coefficients of sum_i (-1)^i sum_t mult * z^t."""
        top = self.max_twist()
        out = [0] * (top + 1)
        for i, m in enumerate(self.modules):
            s = 1 if i % 2 == 0 else -1
            for t, mult in m.twists.items():
                out[t] += s * mult
        return out

    def check_euler(self, hf, n):
        """True iff the alternating twist sum equals (1 - z)^n times hf."""
        return self.euler_coeffs() == _hf_shifted(hf, n, self.max_twist())

    def betti_table(self):
        beta = {}
        for i, m in enumerate(self.modules):
            for t, mult in m.twists.items():
                beta[(i, t)] = beta.get((i, t), 0) + mult
        return BettiTable(beta)

    def is_self_dual(self, e):
        return all(
            self.modules[i] == self.modules[self.length - i].dual_twist(e)
            for i in range(self.length + 1)
        )

    def text(self):
        parts = [m.text() for m in reversed(self.modules)]
        return "0 -> " + " -> ".join(parts)

    def __repr__(self):
        return "ResolutionShape(%s)" % self.text()


def _hf_shifted(hf, n, top):
    """(1 - z)^n * H(z) as a coefficient list of length top + 1."""
    if not isinstance(hf, HilbertSeries):
        hf = HilbertSeries(hf)
    out = [0] * (top + 1)
    for k in range(n + 1):
        c = (-1) ** k * math.comb(n, k)
        for d, h in enumerate(hf.coeffs):
            if h and d + k <= top:
                out[d + k] += c * h
    return out


class BettiTable:
    """Graded Betti numbers beta_{i,j} as a sparse map (i, j) -> count."""

    def __init__(self, beta):
        self.beta = {k: int(v) for k, v in dict(beta).items() if v}

    def __getitem__(self, key):
        return self.beta.get(tuple(key), 0)

    def __eq__(self, other):
        if isinstance(other, ResolutionShape):
            other = other.betti_table()
        return isinstance(other, BettiTable) and self.beta == other.beta

    def max_index(self):
        return max((i for i, _ in self.beta), default=0)

    def max_row(self):
        return max((j - i for i, j in self.beta), default=0)

    def totals(self):
        out = [0] * (self.max_index() + 1)
        for (i, _), m in self.beta.items():
            out[i] += m
        return out

    def column(self, i):
        """The i-th free module of the shape the table describes."""
        return FreeModule({j: m for (k, j), m in self.beta.items() if k == i})

    def to_shape(self):
        return ResolutionShape([self.column(i) for i in range(self.max_index() + 1)])

    def generator_degrees(self):
        """Degrees of the module generators, with multiplicity, from column 1."""
        out = []
        for (i, j), m in sorted(self.beta.items()):
            if i == 1:
                out.extend([j] * m)
        return out

    def render(self):
        """Classic diagram: `total:` header, rows indexed by j - i, `-` for 0."""
        imax = self.max_index()
        rmax = self.max_row()
        width = max(6, max((len(str(v)) for v in self.beta.values()), default=1) + 2)
        cell = "%%%dd" % width
        dash = "-".rjust(width)
        lines = ["total: " + "".join(cell % t for t in self.totals())]
        lines.append("-" * (8 + width * (imax + 1)))
        for r in range(rmax + 1):
            row = "%7d: " % r
            for i in range(imax + 1):
                v = self.beta.get((i, r + i), 0)
                row += (cell % v) if v else dash
            lines.append(row)
        return "\n".join(lines)

    def to_json(self):
        return {"betti": [[i, j, m] for (i, j), m in sorted(self.beta.items())]}

    @classmethod
    def from_json(cls, data):
        return cls({(i, j): m for i, j, m in data["betti"]})

    def __repr__(self):
        return "BettiTable(%d entries)" % len(self.beta)


# ---------------------------------------------------------------------------
# closed-form builders


def compressed_gor_even(n, t):
    """Resolution of a compressed Gorenstein algebra with socle degree 2t.

    Multiplicities come from a closed binomial formula; the shape is
    almost pure: R(-t-i)^{alpha_i} in homological position i.
    """
    if n < 2 or t < 1:
        raise ParamError("need n >= 2 and t >= 1")
    mods = [FreeModule({0: 1})]
    for i in range(1, n):
        a = math.comb(t + i - 1, i - 1) * math.comb(t + n, n - i) - math.comb(
            t - 1 + n - i, n - i
        ) * math.comb(t - 1 + n, i - 1)
        mods.append(FreeModule({t + i: a}))
    mods.append(FreeModule({2 * t + n: 1}))
    return ResolutionShape(mods)


def _normalize_ci(ci_degrees, t):
    degrees = sorted(ci_degrees)
    kept = [d for d in degrees if d <= t]
    dropped = [d for d in degrees if d > t]
    return kept, dropped


def rc_gor_even(n, t, ci_degrees=()):
    """Resolution shape of a Gorenstein algebra of socle degree 2t that is
    relatively compressed with respect to a general complete intersection.

    Each module is a truncated exterior-power summand, its dual, and one
    extra column R(-t-i)^{alpha_i}; the alpha_i are solved degree by
    degree from the Euler characteristic identity against the min-bound
    Hilbert function (each internal degree t+i holds exactly one unknown).
    Degrees above t are dropped: such a form imposes no condition.
    """
    if n < 2 or t < 1:
        raise ParamError("need n >= 2 and t >= 1")
    degrees, _ = _normalize_ci(ci_degrees, t)
    if len(degrees) > n:
        raise ParamError("more CI degrees than variables")
    hf = rc_min_bound(degrees, n, 2 * t, 1)
    e = 2 * t + n
    mods = [FreeModule({0: 1})]
    for i in range(1, n):
        m = koszul_module(degrees, i).truncate_le(t + i - 1)
        m = m + koszul_module(degrees, n - i).truncate_le(t + n - i - 1).dual_twist(e)
        mods.append(m)
    mods.append(FreeModule({e: 1}))
    target = _hf_shifted(hf, n, e)
    known = ResolutionShape(mods).euler_coeffs()
    for i in range(1, n):
        a = (-1) ** i * (target[t + i] - known[t + i])
        if a < 0:
            raise InfeasibleError("negative multiplicity at column %d" % i)
        mods[i].add(t + i, a)
    shape = ResolutionShape(mods)
    if shape.euler_coeffs() != target:
        raise InfeasibleError("Euler identity cannot be satisfied")
    if not shape.is_self_dual(e):
        raise InfeasibleError("solved shape is not self dual")
    return shape


@dataclass
class OddSocleShape:
    """Resolution shape for odd socle degree 2t+1 with free parameters.

    alphas[i] are the solved multiplicities; the parameters y_2, ..,
    (one per name in y_names) stay free: equal amounts are added to two
    adjacent columns in the same internal degree, so the Euler identity
    holds for every choice.  evaluate() substitutes concrete values.
    """
    n: int
    t: int
    degrees: list
    alphas: dict
    y_names: list
    hf: HilbertSeries = field(repr=False)

    def evaluate(self, ys=None):
        ys = dict(ys or {})
        for k in ys:
            if k not in self.y_names:
                raise ParamError("unknown parameter y_%d" % k)
            if ys[k] < 0:
                raise ParamError("parameters must be nonnegative")
        shape = _odd_socle_build(self.n, self.t, self.degrees, self.alphas, ys)
        e = 2 * self.t + 1 + self.n
        if not shape.check_euler(self.hf, self.n):
            raise InfeasibleError("Euler identity fails after substitution")
        if not shape.is_self_dual(e):
            raise InfeasibleError("substituted shape is not self dual")
        return shape

    def describe(self):
        """Symbolic rendering, largest homological degree first."""
        lines = []
        probe = self.evaluate({k: 0 for k in self.y_names})
        marks = _odd_socle_symbol_slots(self.n, self.t, self.y_names)
        for i in range(self.length(), -1, -1):
            parts = []
            for tw, m in probe.modules[i].items():
                label = str(m)
                sym = marks.get((i, tw))
                if sym:
                    label = "%d+%s" % (m, sym) if m else sym
                base = "R" if tw == 0 else "R(-%d)" % tw
                parts.append(base if label == "1" else base + "^[%s]" % label)
            lines.append("F_%d = %s" % (i, " + ".join(parts) if parts else "0"))
        return lines

    def length(self):
        return self.n


def _odd_socle_build(n, t, degrees, alphas, ys):
    e = 2 * t + 1 + n
    p = n // 2
    even = n % 2 == 0

    def yv(k):
        return ys.get(k, 0)

    mods = [None] * (n + 1)
    mods[0] = FreeModule({0: 1})
    mods[n] = FreeModule({e: 1})
    for i in range(1, p + 1):
        m = koszul_module(degrees, i).truncate_le(t + i - 1)
        m = m + koszul_module(degrees, n - i).truncate_le(t + n - i - 1).dual_twist(e)
        if even and i == p:
            m.add(t + p, alphas[p] + yv(p))
            m.add(t + p + 1, alphas[p] + yv(p))
        else:
            m.add(t + i, alphas[i] + yv(i))
            m.add(t + i + 1, yv(i + 1))
        mods[i] = m
    for i in range(p + 1, n):
        mods[i] = mods[n - i].dual_twist(e)
    return ResolutionShape(mods)


def _odd_socle_symbol_slots(n, t, y_names):
    """Positions (homological index, twist) where each free parameter adds."""
    e = 2 * t + 1 + n
    p = n // 2
    even = n % 2 == 0
    marks = {}

    def put(i, tw, name):
        key = (i, tw)
        marks[key] = (marks[key] + "+" + name) if key in marks else name

    for k in y_names:
        name = "y%d" % k
        if even and k == p:
            slots = [(p - 1, t + p), (p, t + p), (p, t + p + 1)]
        else:
            slots = [(k - 1, t + k), (k, t + k)] if k <= p else [(p, t + p + 1)]
        dual = [(n - i, e - tw) for i, tw in slots]
        for i, tw in set(slots + dual):
            put(i, tw, name)
    return marks


def rc_gor_odd_shape(n, t, ci_degrees=()):
    """Shape family for socle degree 2t+1 relative to a complete intersection.

    The Hilbert function pins down only the alpha multiplicities; ghost
    pairs of sizes y_2, y_3, ... in adjacent columns stay undetermined
    and are returned as free parameters of the OddSocleShape.
    """
    if n < 2 or t < 1:
        raise ParamError("need n >= 2 and t >= 1")
    degrees, _ = _normalize_ci(ci_degrees, t)
    if len(degrees) > n:
        raise ParamError("more CI degrees than variables")
    hf = rc_min_bound(degrees, n, 2 * t + 1, 1)
    e = 2 * t + 1 + n
    p = n // 2
    y_names = list(range(2, p + 1)) if n % 2 == 0 else list(range(2, p + 2))
    zero = {i: 0 for i in range(1, p + 1)}
    base = _odd_socle_build(n, t, degrees, zero, {})
    known = base.euler_coeffs()
    known += [0] * (e + 1 - len(known))
    target = _hf_shifted(hf, n, e)
    alphas = {}
    for i in range(1, p + 1):
        a = (-1) ** i * (target[t + i] - known[t + i])
        if a < 0:
            raise InfeasibleError("negative multiplicity at column %d" % i)
        alphas[i] = a
    shape = OddSocleShape(n=n, t=t, degrees=degrees, alphas=alphas, y_names=y_names, hf=hf)
    shape.evaluate({})
    return shape


def quadric_points_resolution(N):
    """h-vector and resolution of N general points on a smooth quadric
    surface in projective 3-space.

    N = i*i + h with 0 < h <= 2i + 1; the h-vector is 1, 3, ..., 2i-1, h
    and the multiplicities are read off the fourth differences of the
    Hilbert function of the points.
    """
    if N < 1:
        raise ParamError("need at least one point")
    i = math.isqrt(N - 1)
    h = N - i * i
    hvec = [min(2 * k + 1, h if k == i else 2 * k + 1) for k in range(i)] + [h]
    hvec = [2 * k + 1 for k in range(i)] + [h]
    # Hilbert function of the points, then fourth differences
    hf = []
    acc = 0
    for v in hvec + [0, 0, 0, 0]:
        acc += v
        hf.append(acc)

    def delta(seq):
        return [seq[0]] + [seq[k] - seq[k - 1] for k in range(1, len(seq))]

    d4 = delta(delta(delta(delta(hf))))
    d4 += [0] * (i + 3 - len(d4))
    di1, di2 = d4[i + 1], d4[i + 2]
    f1 = FreeModule()
    if i >= 1:
        f1.add(2)
        f1.add(i, 2 * i + 1 - h)
        f1.add(i + 1, max(0, -di1))
    else:
        f1.add(1, 2)  # a single point: two linear forms and a quadric drop out
        f1.add(2, 0)
    f2 = FreeModule({i + 1: max(0, di1), i + 2: max(0, di2)})
    f3 = FreeModule({i + 2: max(0, -di2), i + 3: h})
    if i == 0:
        # one point in the plane spanned by the quadric: codim 3 ideal
        f1 = FreeModule({1: 2, 2: 1})
        f2 = FreeModule({2: 1, 3: 2})
        f3 = FreeModule({4: 1})
    shape = ResolutionShape([FreeModule({0: 1}), f1, f2, f3])
    return HilbertSeries(hvec), shape


def rc_gor_odd_quadric(t):
    """Resolution of a Gorenstein algebra in 4 variables with socle degree
    2t+1, relatively compressed with respect to a general quadric."""
    if t < 2:
        raise ParamError("need t >= 2")
    a = 2 * t + 3
    return ResolutionShape(
        [
            FreeModule({0: 1}),
            FreeModule({t + 1: a, 2: 1}),
            FreeModule({t + 2: a, t + 3: a}),
            FreeModule({t + 4: a, 2 * t + 3: 1}),
            FreeModule({2 * t + 5: 1}),
        ]
    )


def mrc_resolution(n, ci_degrees, t):
    """Conditional odd-socle shape over a complete intersection of
    codimension r <= n-2: full (untruncated) exterior-power summands, one
    solved column per half position, filled in by duality.

    The output is only as good as the minimal-resolution hypothesis for
    general points on the intersection; callers should treat it as a
    prediction.
    """
    degrees = sorted(ci_degrees)
    if len(degrees) > n - 2:
        raise ParamError("codimension must be at most n - 2")
    if n < 3 or t < 1:
        raise ParamError("need n >= 3 and t >= 1")
    hf = rc_min_bound(degrees, n, 2 * t + 1, 1)
    e = 2 * t + 1 + n
    p = n // 2
    even = n % 2 == 0
    mods = [None] * (n + 1)
    mods[0] = FreeModule({0: 1})
    mods[n] = FreeModule({e: 1})
    for i in range(1, p + 1):
        mods[i] = koszul_module(degrees, i) + koszul_module(degrees, n - i).dual_twist(e)
    target = _hf_shifted(hf, n, e)
    # solve the single unknown per degree t+1 .. t+p against the knowns
    probe = list(mods)
    for i in range(p + 1, n):
        probe[i] = probe[n - i].dual_twist(e)
    known = ResolutionShape(probe).euler_coeffs()
    known += [0] * (e + 1 - len(known))
    alphas = {}
    for i in range(1, p + 1):
        a = (-1) ** i * (target[t + i] - known[t + i])
        if a < 0:
            raise InfeasibleError("negative multiplicity at column %d" % i)
        alphas[i] = a
    for i in range(1, p + 1):
        if even and i == p:
            mods[p].add(t + p, alphas[p])
            mods[p].add(t + p + 1, alphas[p])
        else:
            mods[i].add(t + i, alphas[i])
    for i in range(p + 1, n):
        mods[i] = mods[n - i].dual_twist(e)
    shape = ResolutionShape(mods)
    if shape.euler_coeffs() != target:
        raise InfeasibleError("Euler identity cannot be satisfied by this layout")
    return shape


def mapping_cone_link(res_ci, res_i, d=None, split="min-consistent", target_hf=None, n=None):
    """Shape of the residual of a link, by dualizing the cone of a
    comparison map from the Koszul shape of the complete intersection to
    the shape of the linked ideal.

    The raw cone puts, in homological position i, the dual-twist of
    K_{n-i} together with the dual-twist of F_{n-i+1} (twisting by the
    degree sum d of the CI).  Splitting policies:

    * "none": the raw cone;
    * "generator": cancel only the duplicated generators, i.e. the
      common twists between the dualized K_1 part and the dualized F_1
      part (adjacent modules);
    * "min-consistent": the same cancellation at every level j = 1..n-1
      between the dualized K_j part and the dualized F_j part.

    Cancellation never changes the Euler characteristic, so when a
    target Hilbert function is supplied it is checked as a consistency
    guard rather than used to steer.
    """
    if isinstance(res_ci, (list, tuple)):
        res_ci = koszul_shape(res_ci)
    if n is None:
        n = res_ci.length
    if d is None:
        d = max(res_ci.modules[n].twists)
    if res_i.length > n:
        raise ParamError("linked shape is longer than the Koszul shape")
    fmods = list(res_i.modules) + [FreeModule()] * (n + 1 - len(res_i.modules))
    kparts = {}
    fparts = {}
    for i in range(1, n + 1):
        kparts[i] = res_ci.modules[n - i].dual_twist(d) if 1 <= n - i else FreeModule()
        fparts[i] = fmods[n - i + 1].dual_twist(d) if n - i + 1 <= n else FreeModule()
    levels = []
    if split == "generator":
        levels = [1]
    elif split == "min-consistent":
        levels = list(range(1, n))
    elif split != "none":
        raise ParamError("unknown splitting policy %r" % split)
    for j in levels:
        # dualized K_j sits in position n-j, dualized F_j one step higher
        lo, hi = kparts[n - j], fparts[n - j + 1]
        common = lo.twists & hi.twists
        for t, m in common.items():
            lo.twists[t] -= m
            hi.twists[t] -= m
        lo.twists = +lo.twists
        hi.twists = +hi.twists
    mods = [FreeModule({0: 1})]
    for i in range(1, n + 1):
        mods.append(kparts[i] + fparts[i])
    while len(mods) > 1 and mods[-1].is_zero():
        mods.pop()
    shape = ResolutionShape(mods)
    if target_hf is not None and not shape.check_euler(target_hf, n):
        raise SplitError("cone shape is inconsistent with the requested Hilbert function")
    return shape


# ---------------------------------------------------------------------------
# almost complete intersections


def aci_resolution(n, degrees):
    """Predicted resolution of n+1 general forms whose degree sum minus n
    is even: the dualized mapping cone of the Koszul shape of the first n
    degrees over the even-socle Gorenstein shape it is linked to.

    Returns (aci shape, intermediate Gorenstein shape).
    """
    degrees = list(degrees)
    if len(degrees) != n + 1:
        raise ParamError("need exactly n + 1 degrees")
    if sorted(degrees) != degrees:
        raise ParamError("degrees must be sorted ascending")
    if degrees[0] < 2:
        raise ParamError("degrees must be at least 2")
    d_head, d_last = degrees[:n], degrees[n]
    if d_last > sum(d_head) - n:
        raise ParamError("last degree too large: the ideal would be a complete intersection")
    if (sum(degrees) - n) % 2:
        raise ParityError("degree sum minus n must be even")
    c = sum(d_head) - d_last - n
    t = c // 2
    small = [d for d in d_head if d <= t]
    gor = rc_gor_even(n, t, small)
    d = sum(d_head)
    hf = _aci_hf(d_head, d_last, n)
    shape = mapping_cone_link(koszul_shape(d_head), gor, d, split="min-consistent",
                              target_hf=hf, n=n)
    return shape, gor


def _aci_hf(d_head, d_last, n):
    """Hilbert function of the residual of an even-sum almost complete
    intersection: pointwise positive part of the complete intersection HF
    minus its shift by the last degree."""
    from .series import rational_series

    h = rational_series(d_head, n)
    top = sum(d_head) - n
    coeffs = [max(h[el] - h[el - d_last], 0) for el in range(top + 1)]
    return HilbertSeries(coeffs)


# ---------------------------------------------------------------------------
# ghost terms

KOSZUL = "KOSZUL"
DUALITY_FORCED = "DUALITY_FORCED"
NON_KOSZUL = "NON_KOSZUL"


@dataclass
class GhostEntry:
    i: int
    j: int
    mult_lower: int
    mult_upper: int
    cls: str
    koszul_lower: int
    koszul_upper: int


@dataclass
class GhostReport:
    entries: list

    def classes(self):
        return Counter(e.cls for e in self.entries)

    def find(self, i, j):
        for e in self.entries:
            if e.i == i and e.j == j:
                return e
        return None

    def lines(self):
        out = []
        for e in self.entries:
            out.append(
                "twist %d between F_%d (x%d) and F_%d (x%d): %s"
                " [subset counts %d / %d]"
                % (e.j, e.i, e.mult_lower, e.i + 1, e.mult_upper, e.cls,
                   e.koszul_lower, e.koszul_upper)
            )
        return out


def _subset_sum_counts(values, kmax, smax):
    """counts[k][s] = number of k-element index subsets with degree sum s."""
    counts = [Counter() for _ in range(kmax + 1)]
    counts[0][0] = 1
    for v in values:
        for k in range(kmax - 1, -1, -1):
            for s, c in counts[k].items():
                if s + v <= smax:
                    counts[k + 1][s + v] += c
    return counts


def ghost_classify(table, gen_degrees=None, socle_twist=None, n=None):
    """Classify repeated twists in consecutive columns of a Betti table.

    A pair (i, j) with entries in both column i and column i+1 is KOSZUL
    when j is simultaneously a sum of i distinct generator degrees and of
    i+1 distinct ones; DUALITY_FORCED when it is not, but the mirror
    position (n-i-1, socle_twist - j) would be; NON_KOSZUL otherwise.
    The subset counts are reported so callers can see how many copies the
    Koszul mechanism accounts for.
    """
    if isinstance(table, ResolutionShape):
        table = table.betti_table()
    if gen_degrees is None:
        gen_degrees = table.generator_degrees()
    if n is None:
        n = table.max_index()
    kmax = min(len(gen_degrees), n + 1)
    smax = max((j for _, j in table.beta), default=0)
    counts = _subset_sum_counts(sorted(gen_degrees), kmax, smax)

    def koszul_at(i, j):
        if not 1 <= i <= kmax - 1 or j < 0 or j > smax:
            return False
        return counts[i].get(j, 0) > 0 and counts[i + 1].get(j, 0) > 0

    entries = []
    for (i, j), m in sorted(table.beta.items()):
        up = table[(i + 1, j)]
        if i < 1 or up == 0:
            continue
        if koszul_at(i, j):
            cls = KOSZUL
        elif socle_twist is not None and koszul_at(n - i - 1, socle_twist - j):
            cls = DUALITY_FORCED
        else:
            cls = NON_KOSZUL
        entries.append(
            GhostEntry(
                i=i,
                j=j,
                mult_lower=m,
                mult_upper=up,
                cls=cls,
                koszul_lower=counts[i].get(j, 0) if i <= kmax else 0,
                koszul_upper=counts[i + 1].get(j, 0) if i + 1 <= kmax else 0,
            )
        )
    return GhostReport(entries)
