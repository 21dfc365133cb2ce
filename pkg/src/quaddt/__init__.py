"""Equivariant localization for quadratic and classical DT invariants of P^3."""
from .algebra import (
    FactoredRational,
    LinearForm,
    ParamChoice,
    Polynomial,
    Region,
    VirtualCharacter,
    rf_sum_to_constant,
)
from .euler import NonIsolatedFixedPoint, classical_euler, quadratic_euler
from .invariants import (
    classical_dt,
    conjecture_check,
    enumerate_fixed_points,
    param_independence,
    quadratic_dt,
)
from .partitions import Partition3D, enumerate_partitions, q_poly, sigma_transpose
from .series import TruncatedSeries, macmahon, series_pow, substitute
from .vertex import chart_weights_classical, chart_weights_quadratic, couple_trace, vertex_trace

__version__ = "0.1.0"
