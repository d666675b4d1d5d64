import pytest

from conftest import P, W, random_weierstrass
from vfcrit import (
    INFINITE,
    MultiPoly,
    VariableContext,
    VectorField,
    criterion_sweep,
    euclidean_divide,
    is_reduced,
    partial_derivative,
    tangency_function,
    tangency_remainder_xr,
)
from vfcrit.errors import ContainsXAxis, MultiplicityTooLow, NotReduced, VariableCountMismatch


def _hand_reduce(g, f):
    """Independent reduction: repeatedly replace the top x-power by x^{d-k} (x^k - f)."""
    k = f.k
    x = P("x")
    while g.degree_in(0) >= k:
        d = g.degree_in(0)
        lead = g.coeff_in_x(d)
        g = g - lead * x ** (d - k) * f.poly
    return g


def test_genzmer_cubic_x2():
    f = W("x^3 + x*y^2 + y^3")
    rep = tangency_function(f, VectorField.x_power(2, 2))
    assert rep.remainder == P("-2*x^2*y^2 - 3*x*y^3")
    assert rep.order == 1
    assert _hand_reduce(P("x^2") * P("3*x^2 + y^2"), f) == rep.remainder


def test_zero_field():
    f = W("x^3 - y^4")
    rep = tangency_function(f, VectorField([MultiPoly.zero(2)] * 2))
    assert rep.remainder.is_zero()
    assert rep.order is INFINITE


def test_cusp_x2():
    rep = tangency_remainder_xr(W("x^3 - y^4"), 2)
    assert rep.remainder == P("3*x*y^4")
    assert rep.order == 1 == rep.r - 1


def test_three_lines_x2():
    f = W("x^3 - 6*x^2*y + 11*x*y^2 - 6*y^3")
    rep = tangency_remainder_xr(f, 2)
    assert rep.remainder == P("14*x^2*y^2 - 48*x*y^3 + 36*y^4")
    assert rep.order == 0
    assert _hand_reduce(P("3*x^4 - 12*x^3*y + 11*x^2*y^2"), f) == rep.remainder


def test_k2_tangency_allowed():
    rep = tangency_remainder_xr(W("x^2 + y^3"), 2)
    assert rep.remainder == P("-2*x*y^3")
    assert rep.order == 1


def test_general_field_uses_all_components():
    f = W("x^3 + x*y^2 + y^3")
    X = VectorField([P("y"), P("x")])
    df = P("y") * partial_derivative(f.poly, 0) + P("x") * partial_derivative(f.poly, 1)
    assert tangency_function(f, X).remainder == euclidean_divide(df, f).remainder


def test_field_arity_checked():
    with pytest.raises(VariableCountMismatch):
        tangency_function(W("x^3 - y^4"), VectorField.x_power(2, 3))
    with pytest.raises(VariableCountMismatch):
        VectorField([P("x")])


def test_xr_matches_general_and_is_linear(rng):
    for _ in range(40):
        f = random_weierstrass(rng, rng.choice([3, 4, 5]))
        for r in range(1, 5):
            X = VectorField([P("x") ** r, MultiPoly.zero(2)])
            assert tangency_remainder_xr(f, r).remainder == tangency_function(f, X).remainder
        X1 = VectorField([P("x^2 + y"), P("x*y")])
        X2 = VectorField([P("y^2"), P("x - 3*y")])
        lhs = tangency_function(f, X1 + X2).remainder
        assert lhs == tangency_function(f, X1).remainder + tangency_function(f, X2).remainder


def test_remainder_never_zero_for_reduced(rng):
    checked = 0
    for _ in range(150):
        f = random_weierstrass(rng, rng.choice([3, 4, 5]))
        if f.contains_x_axis or not is_reduced(f):
            continue
        for r in range(1, 6):
            rep = tangency_remainder_xr(f, r)
            assert rep.remainder
            assert 0 <= rep.order < f.k
        checked += 1
    assert checked > 50


class TestCriterion:
    def test_genzmer(self):
        v = criterion_sweep(W("x^3 + x*y^2 + y^3"))
        assert v.per_r == {2: 1}
        assert not v.claims_reducible
        assert v.witness_r is None

    def test_three_lines(self):
        v = criterion_sweep(W("x^3 - 6*x^2*y + 11*x*y^2 - 6*y^3"))
        assert v.per_r == {2: 0}
        assert v.claims_reducible and v.witness_r == 2

    def test_full_profile_after_witness(self):
        v = criterion_sweep(W("x^5 + x^3*y^3 + x^2*y^4 + y^7"))
        assert set(v.per_r) == {2, 3, 4}
        assert v.witness_r == min(r for r, o in v.per_r.items() if o == 0)

    def test_k2_rejected(self):
        with pytest.raises(MultiplicityTooLow):
            criterion_sweep(W("x^2 + y^3"))

    def test_contains_x_axis(self):
        with pytest.raises(ContainsXAxis):
            criterion_sweep(W("x^3 + x*y^2"))

    def test_not_reduced(self):
        with pytest.raises(NotReduced):
            criterion_sweep(W("(x - y)^2*(x + y)"))

    def test_three_variables(self):
        ctx = VariableContext(["x", "y1", "y2"])
        v = criterion_sweep(W("(x - y1)*(x - y2)*(x - y1 - y2)", ctx))
        assert v.k == 3 and v.per_r == {2: 0}
