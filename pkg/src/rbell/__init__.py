"""Exact r-Stirling and r-Bell numbers and polynomials, the classical
identities connecting them, and numeric cross-checks with certified or
estimated error bounds.

All combinatorial values are exact (int / Fraction / integer-coefficient
polynomials); the analytic module converts to float only at the boundary and
reports an error bound alongside every approximate value.
"""

from .algebra import (
    ApproxReal,
    IntPolynomial,
    RationalSeries,
    falling_factorial_poly,
    fraction_free_det,
    pochhammer,
    series_exp,
    squarefree_part,
    sturm_root_count,
)
from .analytic import (
    MaxIndexReport,
    QuadratureResult,
    RootednessReport,
    cesaro_integral,
    cesaro_integrand_forms,
    dobinski_eval,
    dobinski_series_sum,
    egf_coeffs,
    hypergeom_1f1,
    kummer_residual,
    max_index,
    ogf_coefficient_pair,
    real_rootedness_report,
    sin_moment,
)
from .bell import (
    RBellPoly,
    bell_poly,
    carlitz_compose,
    carlitz_inverse,
    cross_r_printed,
    cross_r_step,
    rbell_from_bell,
    rbell_number,
    rbell_poly,
    rbell_poly_rec,
    rbell_table,
    whitehead_row_sum,
    whitehead_step,
)
from .errors import ConvergenceError, DomainError, InconsistencyError
from .oracle import PartitionCounts, enumerate_restricted_partitions
from .stirling import (
    binomial,
    horizontal_check,
    stirling1r,
    stirling2r,
    stirling2r_explicit,
)
from .transforms import (
    binomial_transform,
    cigler_d,
    hankel_det,
    hankel_transform_rbell,
    inverse_binomial_transform,
    log_convexity_check,
)
from .verify import CheckResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "ApproxReal",
    "CheckResult",
    "ConvergenceError",
    "DomainError",
    "InconsistencyError",
    "IntPolynomial",
    "MaxIndexReport",
    "PartitionCounts",
    "QuadratureResult",
    "RBellPoly",
    "RationalSeries",
    "RootednessReport",
    "bell_poly",
    "binomial",
    "binomial_transform",
    "carlitz_compose",
    "carlitz_inverse",
    "cesaro_integral",
    "cesaro_integrand_forms",
    "cigler_d",
    "cross_r_printed",
    "cross_r_step",
    "dobinski_eval",
    "dobinski_series_sum",
    "egf_coeffs",
    "enumerate_restricted_partitions",
    "falling_factorial_poly",
    "fraction_free_det",
    "hankel_det",
    "hankel_transform_rbell",
    "horizontal_check",
    "hypergeom_1f1",
    "inverse_binomial_transform",
    "kummer_residual",
    "log_convexity_check",
    "max_index",
    "ogf_coefficient_pair",
    "pochhammer",
    "rbell_from_bell",
    "rbell_number",
    "rbell_poly",
    "rbell_poly_rec",
    "rbell_table",
    "real_rootedness_report",
    "run_suite",
    "series_exp",
    "sin_moment",
    "squarefree_part",
    "stirling1r",
    "stirling2r",
    "stirling2r_explicit",
    "sturm_root_count",
    "whitehead_row_sum",
    "whitehead_step",
    "__version__",
]
