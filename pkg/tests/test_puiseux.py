import itertools
import math
from fractions import Fraction

import pytest

from conftest import P, W
from vfcrit import (
    MultiPoly,
    OracleStatus,
    VariableContext,
    branch_count,
    distinct_complex_roots,
    edge_polynomial,
    newton_polygon,
    oracle_verdict,
    to_weierstrass,
)
from vfcrit.errors import NotReduced, WrongArity


def hull_edges_bruteforce(support, k):
    """Every maximal segment between support points (i <= k) with all points on or above it."""
    pts = [pt for pt in support if pt[0] <= k]
    edges = set()
    for a, b in itertools.combinations(pts, 2):
        if a[0] == b[0]:
            continue
        slope = Fraction(b[1] - a[1], b[0] - a[0])
        line = lambda i: a[1] + slope * (i - a[0])
        if all(p[1] >= line(p[0]) for p in pts):
            on = [p for p in pts if p[1] == line(p[0])]
            edges.add((max(on), min(on)))
    return edges


@pytest.mark.parametrize("text", [
    "x^3 + x*y^2 + y^3",
    "x^3 - y^4",
    "x^3 + x^2*y + x*y^3 + y^5",
    "x^5 + x^3*y^3 + x^2*y^4 + y^7",
    "x^4 - 2*x^2*y^3 + x*y^5 + y^6 - y^7",
    "x^6 + x^4*y + x*y^4 + y^9",
])
def test_newton_polygon_matches_bruteforce(text):
    f = W(text)
    npoly = newton_polygon(f)
    assert set(npoly.edges) == hull_edges_bruteforce(npoly.support, f.k)
    assert npoly.edges[0][0] == (f.k, 0)
    assert npoly.edges[-1][1][0] == 0
    i_values = [e[0][0] for e in npoly.edges]
    assert i_values == sorted(i_values, reverse=True)


def test_newton_polygon_examples():
    np1 = newton_polygon(W("x^3 + x*y^2 + y^3"))
    assert np1.edges == (((3, 0), (0, 3)),)
    assert np1.support == {(3, 0), (1, 2), (0, 3)}
    assert newton_polygon(W("x^3 - y^4")).edges == (((3, 0), (0, 4)),)
    assert newton_polygon(W("x^3 + x^2*y + x*y^3 + y^5")).edges == (
        ((3, 0), (2, 1)), ((2, 1), (0, 5)))


def test_newton_polygon_wrong_arity():
    ctx = VariableContext(["x", "y1", "y2"])
    with pytest.raises(WrongArity):
        newton_polygon(W("x^3 - y1^4 - y2^5", ctx))


def test_edge_polynomials():
    e = edge_polynomial(((3, 0), (0, 3)), W("x^3 + x*y^2 + y^3"))
    assert (e.p, e.q) == (1, 1)
    assert list(e.edge_poly) == [1, 1, 0, 1]
    e = edge_polynomial(((3, 0), (0, 4)), W("x^3 - y^4"))
    assert (e.p, e.q) == (3, 4)
    assert list(e.edge_poly) == [-1, 1]
    e = edge_polynomial(((2, 0), (0, 2)), P("x^2 - 2*y^2"))
    assert list(e.edge_poly) == [-2, 0, 1]


def test_edge_normalization():
    e = edge_polynomial(((6, 0), (0, 4)), W("x^6 - y^4"))
    assert math.gcd(e.p, e.q) == 1
    (i1, j1), (i0, j0) = e.endpoints
    assert e.p * (j0 - j1) == e.q * (i1 - i0)
    assert len(e.edge_poly) - 1 == (i1 - i0) // e.p


def test_distinct_roots():
    assert distinct_complex_roots([1, 1, 0, 1])[0] == 3
    count, profile = distinct_complex_roots([1, -2, 1])
    assert count == 1 and profile == {2: [-1, 1]}
    assert distinct_complex_roots([-1, 0, 0, 1])[0] == 3


def test_distinct_roots_profile_multiplies_back():
    # (t - 1)^3 (t + 2)^2 (t^2 + 1)
    phi = [Fraction(1)]
    for factor in [[-1, 1]] * 3 + [[2, 1]] * 2 + [[1, 0, 1]]:
        out = [Fraction(0)] * (len(phi) + len(factor) - 1)
        for i, a in enumerate(phi):
            for j, b in enumerate(factor):
                out[i + j] += a * b
        phi = out
    count, profile = distinct_complex_roots(phi)
    assert count == 4
    assert set(profile) == {1, 2, 3}
    assert profile[3] == [-1, 1] and profile[2] == [2, 1] and profile[1] == [1, 0, 1]


class TestBranchCount:
    def test_genzmer_cubic(self):
        v = branch_count(W("x^3 + x*y^2 + y^3"), 16)
        assert (v.branches, v.status) == (3, OracleStatus.EXACT)

    def test_cusp(self):
        v = branch_count(W("x^3 - y^4"), 16)
        assert (v.branches, v.status) == (1, OracleStatus.EXACT)

    def test_binomial_two_branches(self):
        v = branch_count(W("x^6 - y^4"), 16)
        assert (v.branches, v.status) == (2, OracleStatus.EXACT)

    def test_three_lines(self):
        v = oracle_verdict(W("x^3 - 6*x^2*y + 11*x*y^2 - 6*y^3"))
        assert v.branches == 3 and v.reducible

    def test_recursion(self):
        v = oracle_verdict(W("x^2 - 2*x*y^2 + y^4 - y^5"))
        assert v.status is OracleStatus.EXACT and v.branches == 1
        assert not v.reducible
        assert any("recursing" in n for n in v.notes)

    def test_recursion_splits_branches(self):
        # (x - y - y^2)(x - y + y^2): repeated root 1 on the first edge, separated one level down
        v = oracle_verdict(W("(x - y - y^2)*(x - y + y^2)"))
        assert (v.branches, v.status) == (2, OracleStatus.EXACT)

    def test_smooth_branch_on_transformed_axis(self):
        # (x - y)(x - y - y^3): after x = y(1 + x1), one branch is x1 = 0
        v = oracle_verdict(W("(x - y)*(x - y - y^3)"))
        assert (v.branches, v.status) == (2, OracleStatus.EXACT)

    def test_ramified_repeated_root_is_inconclusive(self):
        v = oracle_verdict(W("(x^2 - y^3)*(x^2 - y^3 - y^4)"))
        assert v.status is OracleStatus.INCONCLUSIVE
        assert v.branches is None and v.reducible is None

    def test_irrational_repeated_root_is_inconclusive(self):
        v = oracle_verdict(W("(x^2 - 2*y^2)*(x^2 - 2*y^2 - y^3)"))
        assert v.status is OracleStatus.INCONCLUSIVE

    def test_budget_exhaustion_is_inconclusive(self):
        f = W("(x - y - y^2)*(x - y + y^2)")
        assert branch_count(f, 0).status is OracleStatus.INCONCLUSIVE
        assert branch_count(f, 1).status is OracleStatus.EXACT

    def test_inconclusive_is_sticky(self):
        # an exact-looking edge plus a ramified repeated root elsewhere
        f = W("(x - y)*(x^2 - y^3)*(x^2 - y^3 - y^4)")
        assert oracle_verdict(f).status is OracleStatus.INCONCLUSIVE

    def test_not_reduced(self):
        with pytest.raises(NotReduced):
            branch_count(W("(x - y)^2*(x + y)"), 16)

    def test_wrong_arity(self):
        ctx = VariableContext(["x", "y1", "y2"])
        with pytest.raises(WrongArity):
            branch_count(W("(x - y1)*(x - y2)*(x - y1 - y2)", ctx), 16)

    @pytest.mark.parametrize("k,m", [(k, m) for k in range(2, 9) for m in range(1, 9)])
    def test_binomials(self, k, m):
        v = branch_count(W(f"x^{k} - y^{m}"), 16)
        assert v.status is OracleStatus.EXACT
        assert v.branches == math.gcd(k, m)


def _linear_forms_product(slopes, quad=()):
    p = MultiPoly.constant(1, 2)
    for a in slopes:
        p = p * (P("x") - Fraction(a) * P("y"))
    for b in quad:
        p = p * (P("x^2") + Fraction(b) * P("y^2"))
    return to_weierstrass(p)


@pytest.mark.parametrize("slopes,quad", [
    ([1, 2, 3], ()),
    ([-2, 1], (1,)),
    ([-1, Fraction(1, 2), 5, 7], (2, 3)),
    ([], (1, 2)),
    ([4], (5,)),
])
def test_homogeneous_squarefree_gives_k_branches(slopes, quad):
    f = _linear_forms_product(slopes, quad)
    v = oracle_verdict(f)
    assert v.status is OracleStatus.EXACT and v.branches == f.k
