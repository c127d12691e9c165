"""Jordan constants of quaternion algebras and of endomorphism algebras of abelian surfaces."""

from .groups import FiniteGroup, GroupFamily, build_group, jordan_constant, subgroups
from .quadfield import QuadraticField, RationalPlace, places_above, splitting_type
from .quatalg import QuaternionClass, base_change, d_p_infty, jordan, jordan_over_Q, jordan_over_quadratic
from .weil import analyze, analyze_poly, scan_weil, survey_sqrt_p, validate_weil

__all__ = [
    "FiniteGroup",
    "GroupFamily",
    "QuadraticField",
    "QuaternionClass",
    "RationalPlace",
    "analyze",
    "analyze_poly",
    "base_change",
    "build_group",
    "d_p_infty",
    "jordan",
    "jordan_constant",
    "jordan_over_Q",
    "jordan_over_quadratic",
    "places_above",
    "scan_weil",
    "splitting_type",
    "subgroups",
    "survey_sqrt_p",
    "validate_weil",
]
