"""Branch counting for plane curve germs by Newton polygon recursion.

This is the independent ground truth for reducibility: a germ is reducible
iff it has at least two branches at the origin. Arithmetic stays in Q; when
the recursion would need an algebraic number (an irrational repeated root of
an edge polynomial, or a repeated root on an edge with p > 1) the verdict is
INCONCLUSIVE rather than a guess.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from .algebra import MultiPoly, substitute
from .errors import ContainsXAxis, InvariantViolation, NotReduced, WrongArity
from .weierstrass import WeierstrassPolynomial, is_reduced

DEFAULT_DEPTH_BUDGET = 16

Point = Tuple[int, int]
UPoly = List[Fraction]  # coefficients, index = degree


class OracleStatus(str, enum.Enum):
    EXACT = "EXACT"
    INCONCLUSIVE = "INCONCLUSIVE"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class NewtonPolygon:
    support: frozenset
    edges: Tuple[Tuple[Point, Point], ...]  # ((i1, j1), (i0, j0)), decreasing i


@dataclass(frozen=True)
class EdgeData:
    endpoints: Tuple[Point, Point]
    p: int
    q: int
    edge_poly: Tuple[Fraction, ...]

    @property
    def weight(self) -> int:
        """Value of ``q*i + p*j`` along the edge."""
        (i1, j1), _ = self.endpoints
        return self.q * i1 + self.p * j1


@dataclass(frozen=True)
class OracleVerdict:
    branches: Optional[int]
    status: OracleStatus
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def reducible(self) -> Optional[bool]:
        if self.status is not OracleStatus.EXACT:
            return None
        return self.branches >= 2


# univariate helpers over Q

def _utrim(a: UPoly) -> UPoly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _uderiv(a: UPoly) -> UPoly:
    return _utrim([i * c for i, c in enumerate(a)][1:])


def _udivmod(a: UPoly, b: UPoly) -> Tuple[UPoly, UPoly]:
    a, b = _utrim(a), _utrim(b)
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b):
        c = r[-1] / b[-1]
        s = len(r) - len(b)
        q[s] = c
        for i, bc in enumerate(b):
            r[s + i] -= c * bc
        r = _utrim(r)
    return q, r


def _umonic(a: UPoly) -> UPoly:
    a = _utrim(a)
    return [c / a[-1] for c in a] if a else a


def _ugcd(a: UPoly, b: UPoly) -> UPoly:
    a, b = _utrim(a), _utrim(b)
    while b:
        a, b = b, _udivmod(a, b)[1]
    return _umonic(a)


def _squarefree_decomposition(phi: UPoly) -> Dict[int, UPoly]:
    """Yun's algorithm: {multiplicity: monic squarefree factor}."""
    phi = _umonic(phi)
    out: Dict[int, UPoly] = {}
    d = _uderiv(phi)
    a = _ugcd(phi, d)
    b = _udivmod(phi, a)[0]
    c = _udivmod(d, a)[0]
    dd = _utrim([x - y for x, y in _zip_pad(c, _uderiv(b))])
    i = 1
    while len(b) > 1:
        a = _ugcd(b, dd)
        if len(a) > 1:
            out[i] = a
        b = _udivmod(b, a)[0]
        c = _udivmod(dd, a)[0]
        dd = _utrim([x - y for x, y in _zip_pad(c, _uderiv(b))])
        i += 1
    return out


def _zip_pad(a: UPoly, b: UPoly):
    n = max(len(a), len(b))
    return zip(list(a) + [Fraction(0)] * (n - len(a)), list(b) + [Fraction(0)] * (n - len(b)))


def distinct_complex_roots(phi) -> Tuple[int, Dict[int, UPoly]]:
    """Number of distinct complex roots of a nonzero phi in Q[t], with its
    squarefree decomposition ``{multiplicity: monic factor}``."""
    phi = _utrim([Fraction(c) for c in phi])
    if not phi:
        raise ValueError("phi must be nonzero")
    profile = _squarefree_decomposition(phi)
    count = (len(phi) - 1) - (len(_ugcd(phi, _uderiv(phi))) - 1) if len(phi) > 1 else 0
    if count != sum(len(f) - 1 for f in profile.values()):
        raise InvariantViolation("squarefree decomposition disagrees with gcd(phi, phi')")
    return count, profile


def _divisors(n: int) -> List[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _ueval(a: UPoly, t: Fraction) -> Fraction:
    v = Fraction(0)
    for c in reversed(a):
        v = v * t + c
    return v


def rational_roots(a: UPoly) -> List[Fraction]:
    """Rational roots of a polynomial with nonzero constant term."""
    a = _utrim(a)
    lcm = 1
    for c in a:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in a]
    if ints[0] == 0:
        raise ValueError("constant term must be nonzero")
    roots = []
    for num in _divisors(ints[0]):
        for den in _divisors(ints[-1]):
            for s in (1, -1):
                t = Fraction(s * num, den)
                if t not in roots and _ueval(a, t) == 0:
                    roots.append(t)
    return sorted(roots)


# Newton polygon

def _support(g: MultiPoly) -> Dict[Point, Fraction]:
    return {(m[0], m[1]): c for m, c in g.items()}


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _lower_hull(support, mu: int) -> Tuple[Tuple[Point, Point], ...]:
    """Compact edges of the lower hull between (0, m) and (mu, 0), decreasing i."""
    lowest: Dict[int, int] = {}
    for i, j in support:
        if i <= mu:
            lowest[i] = min(j, lowest.get(i, j))
    pts = sorted(lowest.items())
    hull: List[Point] = []
    for pt in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    edges = [(hull[n + 1], hull[n]) for n in range(len(hull) - 1)]
    return tuple(reversed(edges))


def _check_plane_curve(f: WeierstrassPolynomial):
    if f.nvars != 2:
        raise WrongArity(f"Newton polygon needs 2 variables, got {f.nvars}")
    if f.contains_x_axis:
        raise ContainsXAxis("F_0 = 0: x divides f")


def newton_polygon(f: WeierstrassPolynomial) -> NewtonPolygon:
    _check_plane_curve(f)
    sup = _support(f.poly)
    return NewtonPolygon(frozenset(sup), _lower_hull(sup, f.k))


def _edge_data(edge: Tuple[Point, Point], sup: Dict[Point, Fraction]) -> EdgeData:
    (i1, j1), (i0, j0) = edge
    di, dj = i1 - i0, j0 - j1
    g = math.gcd(di, dj)
    p, q = di // g, dj // g
    phi = tuple(sup.get((i0 + p * s, j0 - q * s), Fraction(0)) for s in range(g + 1))
    if not phi[0] or not phi[-1]:
        raise InvariantViolation(f"edge {edge} endpoints are not in the support")
    return EdgeData(edge, p, q, phi)


def edge_polynomial(edge: Tuple[Point, Point], f: Union[WeierstrassPolynomial, MultiPoly]) -> EdgeData:
    """Edge polynomial ``sum a_ij t^((i - i0)/p)`` over the lattice points of an edge."""
    poly = f.poly if isinstance(f, WeierstrassPolynomial) else f
    return _edge_data(tuple(tuple(pt) for pt in edge), _support(poly))


class _Inconclusive(Exception):
    pass


def _blow_up(g: MultiPoly, c: Fraction, e: EdgeData) -> MultiPoly:
    # g(y^q (c + x), y) / y^w, valid for p = 1
    q, w = e.q, e.weight
    yq = MultiPoly.monomial((0, q))
    h = substitute(g, 0, yq * c + yq * MultiPoly.variable(0, 2))
    out = {}
    for (i, j), a in h.items():
        if j < w:
            raise InvariantViolation("transformed curve is not divisible by y^w")
        out[(i, j - w)] = a
    return MultiPoly(out, 2)


def _count(g: MultiPoly, depth: int, notes: List[str], path: str) -> int:
    slice0 = [m[0] for m, _ in g.items() if m[1] == 0]
    if not slice0:
        raise InvariantViolation(f"{path}: y divides the curve")
    mu = min(slice0)
    branches = 0
    s = min(m[0] for m, _ in g.items())
    if s > 1:
        raise InvariantViolation(f"{path}: x^{s} divides the transformed curve; input not reduced")
    if s == 1:
        notes.append(f"{path}: smooth branch x = 0 split off")
        branches += 1
        g = g.shift_x(-1)
        mu -= 1
    if mu == 0:
        return branches
    sup = _support(g)
    for edge in _lower_hull(sup, mu):
        e = _edge_data(edge, sup)
        _, profile = distinct_complex_roots(e.edge_poly)
        for mult, factor in sorted(profile.items()):
            deg = len(factor) - 1
            if mult == 1:
                branches += deg
                notes.append(f"{path}: edge {edge} p={e.p} q={e.q}: {deg} simple root(s)")
                continue
            if e.p != 1:
                notes.append(f"{path}: edge {edge} p={e.p}: repeated root (mult {mult}) needs "
                             "a ramified substitution")
                raise _Inconclusive
            roots = rational_roots(factor)
            if len(roots) < deg:
                notes.append(f"{path}: edge {edge}: irrational repeated root (mult {mult})")
                raise _Inconclusive
            for c in roots:
                if depth <= 0:
                    notes.append(f"{path}: depth budget exhausted at root {c}")
                    raise _Inconclusive
                notes.append(f"{path}: edge {edge} q={e.q}: repeated root {c} (mult {mult}), recursing")
                branches += _count(_blow_up(g, c, e), depth - 1, notes, f"{path}/{c}")
    return branches


def branch_count(f: WeierstrassPolynomial, depth_budget: int = DEFAULT_DEPTH_BUDGET) -> OracleVerdict:
    _check_plane_curve(f)
    if not is_reduced(f):
        raise NotReduced("f has a repeated factor")
    notes: List[str] = []
    try:
        n = _count(f.poly, depth_budget, notes, "root")
    except _Inconclusive:
        return OracleVerdict(None, OracleStatus.INCONCLUSIVE, tuple(notes))
    if n < 1:
        raise InvariantViolation("exact branch count below 1")
    return OracleVerdict(n, OracleStatus.EXACT, tuple(notes))


def oracle_verdict(f: WeierstrassPolynomial) -> OracleVerdict:
    return branch_count(f, DEFAULT_DEPTH_BUDGET)
