"""Reconstruction of band-limited signals, including polynomially growing ones,
from samples on the integer grid."""
from ._backend import BACKEND
from .coeffs import (
    QuadratureSpec,
    coefficient_by_integration,
    coefficient_window_general,
    oracle_coefficient,
)
from .grid import BandConfig, DomainError, GridPosition, locate, min_smoothness, select_N
from .interp import ErrorRow, interpolate, rescale, truncation_sweep
from .kernels import CoefficientSeries, Method, d1_coefficient, kernel_window, wsk_coefficient
from .signals import SignalSpec, make_linear_growth, make_sinc_combo, make_tone
from .splice import IntegrityError, SplicePolynomials, build_splice, eval_E, seam_residuals

__version__ = "0.1.0"
