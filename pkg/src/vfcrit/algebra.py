"""Exact sparse multivariate polynomials and truncated power series over Q.

Variable 0 is always the distinguished variable ``x``; variables 1..n-1 are
the transversal coordinates ``y1, ..., y_{n-1}``. Coefficients are
:class:`fractions.Fraction`, so nothing is ever rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from .errors import NonUnitError, VariableCountMismatch

Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction]


class _Infinite:
    """Order of the zero polynomial. Compares greater than every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    __str__ = __repr__

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("INFINITE")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __reduce__(self):
        return (_Infinite, ())


INFINITE = _Infinite()


def _grlex_key(mono: Monomial):
    return (sum(mono), mono)


class MultiPoly:
    """Immutable polynomial in ``nvars`` variables with rational coefficients.

    Stored as a map from exponent tuples to nonzero Fractions; two polynomials
    are equal exactly when their maps are equal.
    """

    __slots__ = ("_terms", "nvars", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | Iterable = (), nvars: int = 2):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        clean: Dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, c in items:
            mono = tuple(mono)
            if len(mono) != nvars or any(e < 0 for e in mono):
                raise ValueError(f"bad monomial {mono!r} for {nvars} variables")
            c = Fraction(c)
            s = clean.get(mono, 0) + c
            if s:
                clean[mono] = s
            else:
                clean.pop(mono, None)
        self._terms = clean
        self.nvars = nvars
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction], nvars: int) -> "MultiPoly":
        # terms must already be canonical: nonzero Fractions, valid monomials
        p = object.__new__(cls)
        p._terms = terms
        p.nvars = nvars
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, c: Scalar, nvars: int) -> "MultiPoly":
        c = Fraction(c)
        return cls._raw({(0,) * nvars: c} if c else {}, nvars)

    @classmethod
    def variable(cls, index: int, nvars: int) -> "MultiPoly":
        if not 0 <= index < nvars:
            raise IndexError(f"variable index {index} out of range for {nvars} variables")
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return cls._raw({mono: Fraction(1)}, nvars)

    @classmethod
    def monomial(cls, exponents: Monomial, coeff: Scalar = 1) -> "MultiPoly":
        return cls({tuple(exponents): coeff}, len(exponents))

    # inspection

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def sorted_terms(self):
        """Terms in graded-lex order, highest first."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def coeff(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def degree_in(self, var: int) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        return max((m[var] for m in self._terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def coeff_in_x(self, i: int) -> "MultiPoly":
        """Coefficient of x^i, as a polynomial in the y-variables (same nvars)."""
        out = {(0,) + m[1:]: c for m, c in self._terms.items() if m[0] == i}
        return MultiPoly._raw(out, self.nvars)

    def x_coefficients(self) -> Dict[int, "MultiPoly"]:
        buckets: Dict[int, Dict[Monomial, Fraction]] = {}
        for m, c in self._terms.items():
            buckets.setdefault(m[0], {})[(0,) + m[1:]] = c
        return {i: MultiPoly._raw(t, self.nvars) for i, t in buckets.items()}

    def truncate(self, n: int) -> "MultiPoly":
        """Drop every term of total degree > n."""
        return MultiPoly._raw({m: c for m, c in self._terms.items() if sum(m) <= n}, self.nvars)

    def shift_x(self, e: int) -> "MultiPoly":
        """Multiply by x^e; negative e divides and requires every x-exponent >= -e."""
        out = {}
        for m, c in self._terms.items():
            if m[0] + e < 0:
                raise ValueError("x-shift would produce a negative exponent")
            out[(m[0] + e,) + m[1:]] = c
        return MultiPoly._raw(out, self.nvars)

    def evaluate(self, point) -> Fraction:
        total = Fraction(0)
        for m, c in self._terms.items():
            v = c
            for a, e in zip(point, m):
                if e:
                    v *= Fraction(a) ** e
            total += v
        return total

    # arithmetic

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise VariableCountMismatch(
                    f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, Rational):
            return MultiPoly.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                del out[m]
        return MultiPoly._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({m: -c for m, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, Rational):
            c0 = Fraction(other)
            if not c0:
                return MultiPoly.zero(self.nvars)
            return MultiPoly._raw({m: c * c0 for m, c in self._terms.items()}, self.nvars)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return MultiPoly._raw({m: c for m, c in out.items() if c}, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.constant(1, self.nvars)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, Rational):
            return self._terms == MultiPoly.constant(other, self.nvars)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        if not self._terms:
            return f"MultiPoly(0, nvars={self.nvars})"
        body = ", ".join(f"{m}: {c}" for m, c in self.sorted_terms())
        return f"MultiPoly({{{body}}}, nvars={self.nvars})"

    def __reduce__(self):
        return (MultiPoly, (self._terms, self.nvars))


def poly_add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a + b


def poly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a * b


def partial_derivative(p: MultiPoly, var_index: int) -> MultiPoly:
    if not 0 <= var_index < p.nvars:
        raise IndexError(f"variable index {var_index} out of range for {p.nvars} variables")
    out = {}
    for m, c in p.items():
        e = m[var_index]
        if e:
            dm = m[:var_index] + (e - 1,) + m[var_index + 1:]
            out[dm] = c * e
    return MultiPoly._raw(out, p.nvars)


def order_in_x(p: MultiPoly):
    """Smallest x-exponent among the terms of p, or INFINITE for zero."""
    if p.is_zero():
        return INFINITE
    return min(m[0] for m, _ in p.items())


def total_order(p: MultiPoly):
    """Lowest total degree of a term of p, or INFINITE for zero."""
    if p.is_zero():
        return INFINITE
    return min(sum(m) for m, _ in p.items())


def substitute(p: MultiPoly, var_index: int, replacement: MultiPoly) -> MultiPoly:
    """Compose: replace variable ``var_index`` of p by ``replacement``."""
    if not 0 <= var_index < p.nvars:
        raise IndexError(f"variable index {var_index} out of range for {p.nvars} variables")
    if replacement.nvars != p.nvars:
        raise VariableCountMismatch(
            f"replacement has {replacement.nvars} variables, expected {p.nvars}")
    # group by the exponent of the substituted variable, then Horner
    groups: Dict[int, Dict[Monomial, Fraction]] = {}
    for m, c in p.items():
        e = m[var_index]
        rest = m[:var_index] + (0,) + m[var_index + 1:]
        groups.setdefault(e, {})[rest] = c
    result = MultiPoly.zero(p.nvars)
    top = max(groups, default=-1)
    for e in range(top, -1, -1):
        result = result * replacement
        if e in groups:
            result = result + MultiPoly._raw(groups[e], p.nvars)
    return result


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series known exactly through total degree ``precision``."""

    poly: MultiPoly
    precision: int

    def __post_init__(self):
        if self.precision < 0:
            raise ValueError("precision must be non-negative")
        if self.poly.total_degree() > self.precision:
            object.__setattr__(self, "poly", self.poly.truncate(self.precision))

    @property
    def nvars(self) -> int:
        return self.poly.nvars

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.precision, other.precision)
        return TruncatedSeries((self.poly + other.poly).truncate(n), n)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.precision, other.precision)
        return TruncatedSeries((self.poly - other.poly).truncate(n), n)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.precision, other.precision)
        return TruncatedSeries(_mul_trunc(self.poly, other.poly, n), n)

    def agrees_with(self, p: MultiPoly) -> bool:
        """True if p matches this series on every total degree <= precision."""
        return p.truncate(self.precision) == self.poly


def _mul_trunc(a: MultiPoly, b: MultiPoly, n: int) -> MultiPoly:
    out: Dict[Monomial, Fraction] = {}
    bt = [(m, c, sum(m)) for m, c in b.items()]
    for m1, c1 in a.items():
        d1 = sum(m1)
        if d1 > n:
            continue
        for m2, c2, d2 in bt:
            if d1 + d2 > n:
                continue
            m = tuple(x + y for x, y in zip(m1, m2))
            out[m] = out.get(m, 0) + c1 * c2
    return MultiPoly._raw({m: c for m, c in out.items() if c}, a.nvars)


def series_invert(u: TruncatedSeries) -> TruncatedSeries:
    """Inverse of a unit series, exact through ``u.precision``."""
    c = u.poly.constant_term()
    if not c:
        raise NonUnitError("series has zero constant term and is not invertible")
    n, nv = u.precision, u.nvars
    inv_c = 1 / c
    # v = c^-1 (1 - (u - c) v); each pass fixes one more degree
    tail = u.poly - c
    v = MultiPoly.constant(inv_c, nv)
    for _ in range(n):
        v = (MultiPoly.constant(1, nv) - _mul_trunc(tail, v, n)) * inv_c
    return TruncatedSeries(v, n)
