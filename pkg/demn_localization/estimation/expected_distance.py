"""
Expected Distance
Distance expectation of a uniform point over the cross domain, by quadrature
"""

from typing import Tuple
import math

from scipy.integrate import quad

from ..exceptions import DomainError, NumericError
from .cross_domain import (
    CrossDomainCase, Region, RegionAreas, case_regions
)

QUAD_EPSREL = 1e-8
QUAD_EPSABS = 1e-10
QUAD_LIMIT = 200


def radial_antiderivative(x: float, y: float) -> float:
    """Closed form of the integral of sqrt(x^2 + t^2) dt from 0 to y"""
    ax = abs(x)
    if ax == 0.0:
        return 0.5 * y * abs(y)
    return 0.5 * (y * math.hypot(x, y) + x * x * math.asinh(y / ax))


def _integrate(func, lo: float, hi: float) -> float:
    if hi <= lo:
        return 0.0
    # full_output reports non-convergence as a trailing message instead of a warning
    result = quad(func, lo, hi, epsrel=QUAD_EPSREL, epsabs=QUAD_EPSABS, limit=QUAD_LIMIT,
                  full_output=1)
    if len(result) > 3:
        raise NumericError(f"quadrature over [{lo}, {hi}] did not converge: {result[3]}")
    return result[0]


def region_area(region: Region) -> float:
    lower = region.lower
    if lower is None:
        return _integrate(region.upper.height, region.lo, region.hi)
    return _integrate(lambda x: region.upper.height(x) - lower.height(x), region.lo, region.hi)


def region_moment(region: Region) -> float:
    """Integral of sqrt(x^2 + y^2) over the region"""
    upper, lower = region.upper, region.lower

    def inner(x: float) -> float:
        top = radial_antiderivative(x, upper.height(x))
        if lower is None:
            return top
        return top - radial_antiderivative(x, lower.height(x))

    return _integrate(inner, region.lo, region.hi)


def region_areas(case: CrossDomainCase) -> RegionAreas:
    """Areas D1, D2 (and D3 when m = 2) of the case's regions"""
    return RegionAreas.from_mapping({r.name: region_area(r) for r in case_regions(case)})


def _expectation(case: CrossDomainCase) -> Tuple[float, float]:
    moment = 0.0
    area = 0.0
    for region in case_regions(case):
        if region.width == 0.0:
            continue
        area += region_area(region)
        moment += region_moment(region)
    if area <= 0.0:
        raise DomainError(f"cross domain of {case.to_dict()} has zero area")
    return moment / area, area


def expected_distance_m1(case: CrossDomainCase) -> float:
    """
    Expected distance from a_i of a uniform point in D1 + D2

    D1 lies under Circle(a_j, R) between x = d - R and the crossing abscissa,
    D2 under Circle(a_i, ub) from the crossing to ub. Each region contributes its
    distance integral; the sum is normalized by the total area D1 + D2.
    """
    if case.m != 1:
        raise DomainError(f"expected_distance_m1 needs m = 1, got m = {case.m}")
    value, _ = _expectation(case)
    return value


def expected_distance_m2(case: CrossDomainCase) -> float:
    """
    Expected distance from a_i for a two-hop unknown node, valid for R < d < ub

    The node is within R of a_j and between R and ub from a_i. D1 and D2 are
    the lens regions right of x = R, and D3 is the part of Circle(a_j, R)
    outside Circle(a_i, R) for x in [d/2, R].
    """
    if case.m != 2:
        raise DomainError(f"expected_distance_m2 needs m = 2, got m = {case.m}")
    if not case.radius < case.d < case.ub:
        raise DomainError(
            f"m = 2 requires R < d < ub, got R={case.radius}, d={case.d}, ub={case.ub}"
        )
    if case.crossing < case.radius:
        raise DomainError(
            f"m = 2 needs the crossing at or beyond R, got {case.crossing:.4g} < {case.radius}"
        )
    value, _ = _expectation(case)
    return value


def expected_distance(case: CrossDomainCase) -> float:
    """Dispatch on the case's hop count"""
    if case.m == 1:
        return expected_distance_m1(case)
    return expected_distance_m2(case)
