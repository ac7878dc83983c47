"""Exact Newton and Hodge polygons for L-functions of diagonal exponential sums.

The lattice/dynamics/polygon modules predict the Newton polygon from orbit
weights alone; the cyclotomic/finite-field/L-function modules recompute it
from raw character sums.  The two routes agree exactly on every in-budget
instance, and coincide with the Hodge polygon precisely when the weight is
stable under the multiply-by-p action.
"""

from .cyclotomic import ORD_INFINITY, CyclotomicInteger, CyclotomicRational
from .dynamics import Orbit, PrimeContext, is_p_stable, orbit_decomposition, p_action
from .errors import (
    BudgetExceededError,
    DetZeroError,
    HodgeMismatchError,
    InvalidInstanceError,
    MissingEndpointError,
    NewtonForgeError,
    NotCoprimeError,
    NotInConeError,
    NotInDomainError,
    NotIntegralError,
    NotPolynomialError,
    NotPrimeError,
    RangeMismatchError,
    TraceNotInPrimeFieldError,
)
from .finitefield import FieldTower, absolute_trace, build_field
from .lattice import (
    DomainPoint,
    ExponentMatrix,
    FundamentalDomain,
    coordinates,
    det_and_adjugate,
    fundamental_domain,
    in_cone,
    reduce_to_domain,
    smith_normal_form,
    weight,
    weight_denominator,
)
from .lfunction import (
    DEFAULT_BUDGET,
    LPolynomial,
    character_sum,
    character_sums,
    l_polynomial,
    newton_polygon_of_polynomial,
    torus_size,
)
from .polygons import (
    HodgeData,
    LowerPolygon,
    PolygonComparison,
    compare_polygons,
    count_monoid_points,
    count_monoid_points_bruteforce,
    hodge_numbers,
    hodge_polygon,
    newton_polygon_from_orbits,
    polygon_from_valuations,
)
from .report import ProblemInstance

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CyclotomicInteger",
    "CyclotomicRational",
    "DEFAULT_BUDGET",
    "DetZeroError",
    "DomainPoint",
    "ExponentMatrix",
    "FieldTower",
    "FundamentalDomain",
    "HodgeData",
    "HodgeMismatchError",
    "InvalidInstanceError",
    "LPolynomial",
    "LowerPolygon",
    "MissingEndpointError",
    "NewtonForgeError",
    "NotCoprimeError",
    "NotInConeError",
    "NotInDomainError",
    "NotIntegralError",
    "NotPolynomialError",
    "NotPrimeError",
    "ORD_INFINITY",
    "Orbit",
    "PolygonComparison",
    "PrimeContext",
    "ProblemInstance",
    "RangeMismatchError",
    "TraceNotInPrimeFieldError",
    "absolute_trace",
    "build_field",
    "character_sum",
    "character_sums",
    "compare_polygons",
    "coordinates",
    "count_monoid_points",
    "count_monoid_points_bruteforce",
    "det_and_adjugate",
    "fundamental_domain",
    "hodge_numbers",
    "hodge_polygon",
    "in_cone",
    "is_p_stable",
    "l_polynomial",
    "newton_polygon_from_orbits",
    "newton_polygon_of_polynomial",
    "orbit_decomposition",
    "p_action",
    "polygon_from_valuations",
    "reduce_to_domain",
    "smith_normal_form",
    "torus_size",
    "weight",
    "weight_denominator",
]
