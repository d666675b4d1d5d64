"""Weierstrass polynomials, division by them, and Weierstrass preparation."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple, Union

from .algebra import (
    MultiPoly,
    TruncatedSeries,
    order_in_x,
    partial_derivative,
    total_order,
)
from .errors import (
    InvariantViolation,
    NotDistinguished,
    NotFiniteOrder,
    NotMonic,
    OrderUndefined,
    PrecisionError,
    VariableCountMismatch,
)


@dataclass(frozen=True)
class WeierstrassPolynomial:
    """``x^k + sum_{i<k} F_i(y) x^i`` with every ``F_i(0) = 0``.

    ``coeffs[i]`` is ``F_i`` stored as a polynomial in all ``nvars`` variables
    with zero x-exponent.
    """

    k: int
    coeffs: Tuple[MultiPoly, ...]
    nvars: int

    def __post_init__(self):
        if self.k < 1:
            raise NotMonic("x-degree must be at least 1")
        if len(self.coeffs) != self.k:
            raise ValueError("need exactly k coefficients F_0..F_{k-1}")
        for i, F in enumerate(self.coeffs):
            if F.nvars != self.nvars:
                raise VariableCountMismatch(f"F_{i} has {F.nvars} variables")
            if F.degree_in(0) > 0:
                raise ValueError(f"F_{i} must not involve x")
            if F.constant_term():
                raise NotDistinguished(f"F_{i}(0) = {F.constant_term()} != 0")

    @property
    def poly(self) -> MultiPoly:
        p = MultiPoly.monomial((self.k,) + (0,) * (self.nvars - 1))
        for i, F in enumerate(self.coeffs):
            if F:
                p = p + F.shift_x(i)
        return p

    @property
    def contains_x_axis(self) -> bool:
        """True when F_0 = 0, i.e. x divides f."""
        return self.coeffs[0].is_zero()

    def satisfies_multiplicity(self) -> bool:
        """Whether the multiplicity of f equals k, i.e. ord F_i >= k - i."""
        return all(total_order(F) >= self.k - i for i, F in enumerate(self.coeffs))


@dataclass(frozen=True)
class DivisionResult:
    quotient: MultiPoly
    remainder: MultiPoly
    divisor_degree: int


@dataclass(frozen=True)
class PreparationResult:
    unit: TruncatedSeries
    wpoly: WeierstrassPolynomial
    precision: int


def to_weierstrass(p: MultiPoly) -> WeierstrassPolynomial:
    if p.is_zero():
        raise NotMonic("zero polynomial is not monic in x")
    k = p.degree_in(0)
    if k < 1:
        raise NotMonic("polynomial does not involve x (x-degree 0)")
    coeffs = p.x_coefficients()
    lead = coeffs[k]
    if lead != 1:
        raise NotMonic(f"coefficient of x^{k} is not 1")
    for i in range(k):
        c = coeffs.get(i)
        if c is not None and c.constant_term():
            raise NotDistinguished(
                f"coefficient of x^{i} does not vanish at the origin (F_{i}(0) = {c.constant_term()})")
    zero = MultiPoly.zero(p.nvars)
    return WeierstrassPolynomial(k, tuple(coeffs.get(i, zero) for i in range(k)), p.nvars)


def euclidean_divide(g: MultiPoly, f: WeierstrassPolynomial) -> DivisionResult:
    """Exact division ``g = Q f + R`` with ``deg_x R < k``.

    f is monic in x, so long division in (Q[y])[x] never leaves Q[y] and its
    result is the Weierstrass quotient and remainder.
    """
    if g.nvars != f.nvars:
        raise VariableCountMismatch(f"dividend has {g.nvars} variables, divisor {f.nvars}")
    k = f.k
    rem = dict(g.x_coefficients())
    quot: Dict[int, MultiPoly] = {}
    low = [(i, F) for i, F in enumerate(f.coeffs) if F]
    for d in range(g.degree_in(0), k - 1, -1):
        c = rem.pop(d, None)
        if c is None or c.is_zero():
            continue
        quot[d - k] = c
        # c x^d = c x^{d-k} f - c x^{d-k} sum F_i x^i
        for i, F in low:
            e = d - k + i
            rem[e] = rem.get(e, MultiPoly.zero(g.nvars)) - c * F
    return DivisionResult(_assemble(quot, g.nvars), _assemble(rem, g.nvars), k)


def _assemble(coeffs: Dict[int, MultiPoly], nvars: int) -> MultiPoly:
    p = MultiPoly.zero(nvars)
    for i, c in coeffs.items():
        if c:
            p = p + c.shift_x(i)
    return p


def _y_degree(mono) -> int:
    return sum(mono[1:])


def _drop_y_degree_above(p: MultiPoly, n: int) -> MultiPoly:
    return MultiPoly({m: c for m, c in p.items() if _y_degree(m) <= n}, p.nvars)


def truncated_divide(g: Union[TruncatedSeries, MultiPoly], f: WeierstrassPolynomial,
                     N: int) -> DivisionResult:
    """Weierstrass division of a truncated series, exact through total degree N.

    Fixed-point iteration: split the running dividend at x^k, bank the high
    part in Q and the low part in R, and feed back ``-high * sum F_i x^i``.
    Since every ``F_i(0) = 0`` the feedback raises y-order by at least one, so
    after N+1 rounds nothing of y-degree <= N is left.

    Intermediates are cut by y-degree, not total degree: rewriting x^k as
    ``-sum F_i x^i`` can lower total degree when some F_i has low order. The
    result therefore depends only on the known part of g; it is independent of
    g's unknown tail when ``f.satisfies_multiplicity()``.
    """
    if isinstance(g, MultiPoly):
        g = TruncatedSeries(g, max(g.total_degree(), N, 0))
    if g.nvars != f.nvars:
        raise VariableCountMismatch(f"dividend has {g.nvars} variables, divisor {f.nvars}")
    if g.precision < N:
        raise PrecisionError(f"series known through degree {g.precision}, {N} requested")
    k = f.k
    h = f.poly - MultiPoly.monomial((k,) + (0,) * (f.nvars - 1))
    Q = MultiPoly.zero(f.nvars)
    R = MultiPoly.zero(f.nvars)
    G = _drop_y_degree_above(g.poly, N)
    for _ in range(N + 1):
        if G.is_zero():
            break
        high = MultiPoly({m: c for m, c in G.items() if m[0] >= k}, f.nvars)
        R = R + (G - high)
        if high.is_zero():
            G = high
            break
        A = high.shift_x(-k)
        Q = Q + A
        G = _drop_y_degree_above(-(A * h), N)
    if G:
        raise InvariantViolation("division iteration did not converge within N+1 rounds")
    return DivisionResult(Q.truncate(N), R.truncate(N), k)


def _inverse_mod_x(u0: MultiPoly, k: int) -> MultiPoly:
    # inverse of a unit power series in x alone, modulo x^k
    nv = u0.nvars
    c = u0.constant_term()
    inv_c = 1 / c
    coef = [u0.coeff((i,) + (0,) * (nv - 1)) for i in range(k)]
    inv = [inv_c]
    for d in range(1, k):
        s = sum((coef[j] * inv[d - j] for j in range(1, d + 1)), Fraction(0))
        inv.append(-s * inv_c)
    return MultiPoly({(i,) + (0,) * (nv - 1): v for i, v in enumerate(inv)}, nv)


def _low_x(p: MultiPoly, k: int) -> MultiPoly:
    return MultiPoly({m: c for m, c in p.items() if m[0] < k}, p.nvars)


def weierstrass_prepare(g: MultiPoly, N: int) -> PreparationResult:
    """Factor ``g = u P`` through total degree N, u a unit, P Weierstrass.

    Solves grade by grade in y-degree. Writing ``g_j``, ``u_j``, ``P_j`` for
    the parts homogeneous of y-degree j (``P_0 = x^k``), the identity
    ``g_j = sum_b u_{j-b} P_b`` fixes ``P_j`` as the part of
    ``u_0^{-1} D_j`` below x^k and then ``u_j = (D_j - u_0 P_j) / x^k``,
    where ``D_j = g_j - sum_{0<b<j} u_{j-b} P_b``. Every piece is a
    polynomial when g is.
    """
    nv = g.nvars
    if N < 0:
        raise PrecisionError("precision must be non-negative")
    grades: Dict[int, Dict] = {}
    for m, c in g.items():
        grades.setdefault(_y_degree(m), {})[m] = c
    g0 = MultiPoly(grades.get(0, {}), nv)
    if g0.is_zero():
        raise OrderUndefined("g(x, 0) vanishes identically; x-order undefined")
    k = order_in_x(g0)
    if k < 1:
        raise NotFiniteOrder("g(0, 0) != 0: g is a unit, there is no Weierstrass factor")
    if k > N:
        raise NotFiniteOrder(f"x-order {k} of g(x, 0) exceeds precision {N}")
    u = [g0.shift_x(-k)]
    P: List[MultiPoly] = [MultiPoly.monomial((k,) + (0,) * (nv - 1))]
    inv0 = _inverse_mod_x(u[0], k)
    for j in range(1, N + 1):
        D = MultiPoly(grades.get(j, {}), nv)
        for b in range(1, j):
            if P[b] and u[j - b]:
                D = D - u[j - b] * P[b]
        Pj = _low_x(inv0 * _low_x(D, k), k)
        rest = D - u[0] * Pj
        if _low_x(rest, k):
            raise InvariantViolation("preparation step left a remainder below x^k")
        P.append(Pj)
        u.append(rest.shift_x(-k))
    unit = MultiPoly.zero(nv)
    for piece in u:
        unit = unit + piece.truncate(N)
    wp = P[0]
    for piece in P[1:]:
        wp = wp + piece.truncate(N)
    return PreparationResult(TruncatedSeries(unit, N), to_weierstrass(wp), N)


# squarefreeness over Frac(Q[y])

def _exact_quotient(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """a / b in Q[y1..]; raises if b does not divide a."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero():
        return a
    lm_b, lc_b = b.sorted_terms()[0]
    q = MultiPoly.zero(a.nvars)
    r = a
    while r:
        lm_r, lc_r = r.sorted_terms()[0]
        shift = tuple(x - y for x, y in zip(lm_r, lm_b))
        if any(e < 0 for e in shift):
            raise InvariantViolation("inexact division in coefficient ring")
        t = MultiPoly.monomial(shift, lc_r / lc_b)
        q = q + t
        r = r - t * b
    return q


def _x_list(p: MultiPoly) -> List[MultiPoly]:
    coeffs = p.x_coefficients()
    d = p.degree_in(0)
    return [coeffs.get(i, MultiPoly.zero(p.nvars)) for i in range(d + 1)]


def _trim(a: List[MultiPoly]) -> List[MultiPoly]:
    while a and a[-1].is_zero():
        a.pop()
    return a


def _prem(A: List[MultiPoly], B: List[MultiPoly]) -> List[MultiPoly]:
    """Pseudo-remainder lc(B)^(deg A - deg B + 1) * A mod B."""
    R = list(A)
    n = len(B) - 1
    lc = B[-1]
    e = len(A) - len(B) + 1
    while R and len(R) - 1 >= n:
        top = R[-1]
        shift = len(R) - 1 - n
        R = [c * lc for c in R]
        for i, b in enumerate(B):
            R[i + shift] = R[i + shift] - top * b
        _trim(R)
        e -= 1
    if e > 0:
        m = lc ** e
        R = [c * m for c in R]
    return R


def x_gcd_degree(a: MultiPoly, b: MultiPoly) -> int:
    """Degree in x of gcd(a, b) over the fraction field of Q[y] (subresultant PRS)."""
    A, B = _trim(_x_list(a)), _trim(_x_list(b))
    if not A or not B:
        return len(A or B) - 1
    if len(A) < len(B):
        A, B = B, A
    nv = a.nvars
    g = MultiPoly.constant(1, nv)
    h = MultiPoly.constant(1, nv)
    while True:
        delta = len(A) - len(B)
        R = _prem(A, B)
        if not R:
            return len(B) - 1
        if len(R) == 1:
            return 0
        A = B
        div = g * h ** delta
        B = [_exact_quotient(c, div) for c in R]
        g = A[-1]
        if delta == 0:
            continue
        h = _exact_quotient(g ** delta, h ** (delta - 1))


def is_reduced(f: WeierstrassPolynomial) -> bool:
    """True iff f is squarefree in x over the fraction field of Q[y]."""
    p = f.poly
    return x_gcd_degree(p, partial_derivative(p, 0)) == 0
