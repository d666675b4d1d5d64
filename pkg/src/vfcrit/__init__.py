"""Exact vector-field tangency computations for hypersurface germs, with a
Newton-Puiseux branch counter as independent ground truth."""

from .algebra import (
    INFINITE,
    MultiPoly,
    TruncatedSeries,
    order_in_x,
    partial_derivative,
    poly_add,
    poly_mul,
    series_invert,
    substitute,
    total_order,
)
from .parser import VariableContext, parse_poly, print_poly
from .puiseux import (
    OracleStatus,
    OracleVerdict,
    branch_count,
    distinct_complex_roots,
    edge_polynomial,
    newton_polygon,
    oracle_verdict,
)
from .tangency import (
    CriterionVerdict,
    TangencyReport,
    VectorField,
    criterion_sweep,
    tangency_function,
    tangency_remainder_xr,
)
from .weierstrass import (
    DivisionResult,
    PreparationResult,
    WeierstrassPolynomial,
    euclidean_divide,
    is_reduced,
    to_weierstrass,
    truncated_divide,
    weierstrass_prepare,
)

__version__ = "0.1.0"
