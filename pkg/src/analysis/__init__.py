"""
Simpson defect analysis: ranges, bounds, composite rules, witnesses and the coth application
"""

from .models import (
    ANALYTIC, SAMPLED, CLASSICAL, CORRECTED, ORACLE, SMOOTHNESS_ORDER,
    DerivativeRange, Enclosure, Interval, PanelResult, Partition, QuadratureResult,
    parse_smoothness,
)
from .ranges import chebyshev_nodes, estimate_derivative_range, estimate_ranges
from .simpson import (
    corrected_simpson, corrected_t_functional, correction_term, integrate_function,
    oracle_integral, second_derivative_defect, simpson_estimate, simpson_mean,
    t_functional, t_via_representation,
)
from .bounds import (
    applicable_bounds, best_bound, bound_c1, bound_c2, bound_c2_coarse, bound_c3,
    bound_convex2, bound_corrected, c4_enclosure, check_sign, hh_enclosure,
    hh_m2_enclosure, hh_M2_enclosure, hh_refined_enclosure, majorization_check,
    majorization_slacks, quartic_shift_enclosure, select_best, thm4_t_enclosure,
)
from .composite import adaptive_integrate, composite_integrate, integral_enclosure
from .extremal import (
    SearchReport, Witness, closed_form_sharpness, constant_search, sharpness_ratio,
    witness_antiderivative, witness_eval, witness_range, witness_t_functional,
)
from .applications import (
    CothBounds, coth, coth_mean_bounds, coth_mean_corrected, coth_mean_oracle,
    eq10_pointwise, eq11_corrected_pointwise, eq11_pointwise,
)

__all__ = [
    # Models
    'ANALYTIC', 'SAMPLED', 'CLASSICAL', 'CORRECTED', 'ORACLE', 'SMOOTHNESS_ORDER',
    'DerivativeRange', 'Enclosure', 'Interval', 'PanelResult', 'Partition', 'QuadratureResult',
    'parse_smoothness',

    # Ranges and Simpson core
    'chebyshev_nodes', 'estimate_derivative_range', 'estimate_ranges',
    'corrected_simpson', 'corrected_t_functional', 'correction_term', 'integrate_function',
    'oracle_integral', 'second_derivative_defect', 'simpson_estimate', 'simpson_mean',
    't_functional', 't_via_representation',

    # Bounds
    'applicable_bounds', 'best_bound', 'bound_c1', 'bound_c2', 'bound_c2_coarse', 'bound_c3',
    'bound_convex2', 'bound_corrected', 'c4_enclosure', 'check_sign', 'hh_enclosure',
    'hh_m2_enclosure', 'hh_M2_enclosure', 'hh_refined_enclosure', 'majorization_check',
    'majorization_slacks', 'quartic_shift_enclosure', 'select_best', 'thm4_t_enclosure',

    # Composite
    'adaptive_integrate', 'composite_integrate', 'integral_enclosure',

    # Witnesses and search
    'SearchReport', 'Witness', 'closed_form_sharpness', 'constant_search', 'sharpness_ratio',
    'witness_antiderivative', 'witness_eval', 'witness_range', 'witness_t_functional',

    # Coth application
    'CothBounds', 'coth', 'coth_mean_bounds', 'coth_mean_corrected', 'coth_mean_oracle',
    'eq10_pointwise', 'eq11_corrected_pointwise', 'eq11_pointwise',
]
