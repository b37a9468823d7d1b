"""Weighted enumeration of tuples of polynomials over finite fields.

Counts are computed symbolically in ``q`` from a generating-function
identity and cross-checked against closed forms and exhaustive enumeration.
"""

from .counting import CountResult, alpha_of, closed_forms
from .errors import BudgetExceeded, DisagreementError, DomainError, ShapeError
from .exactalg import BiPoly, UniPoly
from .ffpoly import FieldSpec, GFPoly, build_field, factorize, field_of_order, irreducibles
from .numbertheory import DegreeVec, count_irreducibles, divisors, moebius
from .series import MultiSeries, alpha_series, extract_exponents, reconstruct_from_exponents
from .stats import expected_factor_count, qt_polynomial
from .weights import WeightFn, weight_series

__version__ = "0.1.0"

__all__ = [
    "BiPoly", "BudgetExceeded", "CountResult", "DegreeVec", "DisagreementError",
    "DomainError", "FieldSpec", "GFPoly", "MultiSeries", "ShapeError", "UniPoly",
    "WeightFn", "alpha_of", "alpha_series", "build_field", "closed_forms",
    "count_irreducibles", "divisors", "expected_factor_count", "extract_exponents",
    "factorize", "field_of_order", "irreducibles", "moebius", "qt_polynomial",
    "reconstruct_from_exponents", "weight_series",
]
