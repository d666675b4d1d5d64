"""Tangency function and tangency order of a vector field with a hypersurface,
and the sweep over the fields ``x^r d/dx`` used by the irreducibility criterion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence

from .algebra import MultiPoly, order_in_x, partial_derivative
from .errors import ContainsXAxis, MultiplicityTooLow, NotReduced, VariableCountMismatch
from .weierstrass import WeierstrassPolynomial, euclidean_divide, is_reduced


@dataclass(frozen=True)
class VectorField:
    """``a d/dx + sum_i b_i d/dy_i``; ``components = (a, b_1, ..., b_{n-1})``."""

    components: tuple

    def __init__(self, components: Sequence[MultiPoly]):
        components = tuple(components)
        if not components:
            raise ValueError("a vector field needs at least one component")
        n = components[0].nvars
        if len(components) != n or any(c.nvars != n for c in components):
            raise VariableCountMismatch(
                f"vector field on {n} variables needs {n} components over {n} variables")
        object.__setattr__(self, "components", components)

    @property
    def nvars(self) -> int:
        return len(self.components)

    @classmethod
    def x_power(cls, r: int, nvars: int) -> "VectorField":
        """The field ``x^r d/dx``."""
        zero = MultiPoly.zero(nvars)
        a = MultiPoly.monomial((r,) + (0,) * (nvars - 1))
        return cls((a,) + (zero,) * (nvars - 1))

    def __add__(self, other: "VectorField") -> "VectorField":
        return VectorField([a + b for a, b in zip(self.components, other.components)])

    def apply(self, p: MultiPoly) -> MultiPoly:
        """The derivation ``dp(X)``."""
        out = MultiPoly.zero(p.nvars)
        for i, a in enumerate(self.components):
            if a:
                out = out + a * partial_derivative(p, i)
        return out


@dataclass(frozen=True)
class TangencyReport:
    r: Optional[int]
    remainder: MultiPoly
    order: object  # int or INFINITE


@dataclass(frozen=True)
class CriterionVerdict:
    k: int
    per_r: Dict[int, object] = field(default_factory=dict)
    claims_reducible: bool = False
    witness_r: Optional[int] = None


def tangency_function(f: WeierstrassPolynomial, X: VectorField, r: Optional[int] = None) -> TangencyReport:
    if X.nvars != f.nvars:
        raise VariableCountMismatch(f"vector field has {X.nvars} variables, f has {f.nvars}")
    R = euclidean_divide(X.apply(f.poly), f).remainder
    return TangencyReport(r, R, order_in_x(R))


def tangency_remainder_xr(f: WeierstrassPolynomial, r: int) -> TangencyReport:
    if r < 1:
        raise ValueError("r must be at least 1")
    return tangency_function(f, VectorField.x_power(r, f.nvars), r)


def check_criterion_hypotheses(f: WeierstrassPolynomial) -> None:
    # reducedness first: a square such as (x - y)^2 is rejected as NotReduced
    if not is_reduced(f):
        raise NotReduced("f has a repeated factor")
    if f.k <= 2:
        raise MultiplicityTooLow(f"criterion assumes k > 2, got k = {f.k}")
    if f.contains_x_axis:
        raise ContainsXAxis("F_0 = 0: the hypersurface contains x = 0")


def criterion_sweep(f: WeierstrassPolynomial) -> CriterionVerdict:
    """Tangency order of ``x^r d/dx`` for every 2 <= r < k.

    The claimed criterion reads "reducible" iff some order is 0. All r are
    evaluated even after a witness turns up so the full profile is reported.
    """
    check_criterion_hypotheses(f)
    per_r = {r: tangency_remainder_xr(f, r).order for r in range(2, f.k)}
    zeros = [r for r, o in per_r.items() if o == 0]
    return CriterionVerdict(f.k, per_r, bool(zeros), min(zeros) if zeros else None)
