"""Interpolation weights as Fourier coefficients of a spliced exponential.

``a_k(t) = (1 / 2 pi) * integral_{-pi}^{pi} E(t, omega) exp(-i omega k) d omega``

The core band ``[-g, g]`` integrates in closed form; the polynomial tails
``[g, pi]`` and ``[-pi, -g]`` use composite Gauss-Legendre quadrature with
panels aligned to the seam.  :func:`oracle_coefficient` integrates any
extension by brute force and serves as the independent check.
"""
from __future__ import annotations

import functools
import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import _backend
from .grid import BandConfig, locate
from .kernels import CoefficientSeries, Method
from .splice import IntegrityError, SplicePolynomials, build_splice, eval_E

__all__ = [
    "QuadratureSpec",
    "IntegrityError",
    "coefficient_by_integration",
    "oracle_coefficient",
    "general_weights",
    "coefficient_window_general",
]


@dataclass(frozen=True)
class QuadratureSpec:
    """Composite Gauss-Legendre settings.

    For the tail integrals ``panels`` is a floor: the panel count grows to
    ``2 * ceil(|k - m| (pi - g) / pi)`` so each panel spans at most a quarter
    period of the oscillation.  For :func:`oracle_coefficient` it is the total
    number of panels over ``[-pi, pi]``.
    """

    panels: int = 8
    nodes_per_panel: int = 16
    abs_tol: float = 1e-9

    def __post_init__(self):
        if self.panels < 1 or self.nodes_per_panel < 1:
            raise ValueError("panels and nodes_per_panel must be positive")


@functools.lru_cache(maxsize=32)
def gauss_legendre_01(order: int):
    """Nodes and weights on ``[0, 1]``; weights sum to one."""
    x, w = np.polynomial.legendre.leggauss(order)
    return (x + 1.0) / 2.0, w / 2.0


def _check_resolution(n: int, h: float, panels: int, nodes: int):
    need = 8 * (1 + abs(n) * h / math.pi)
    if panels * nodes < need:
        warnings.warn(
            f"{panels} x {nodes} nodes may under-resolve frequency {n} on a tail of width {h:.3g}",
            RuntimeWarning,
            stacklevel=3,
        )


def _tail_integral(splice: SplicePolynomials, n: int, quad: QuadratureSpec, sign: int) -> complex:
    """``integral of E_N(t_r, omega) exp(-i omega n)`` over ``[g, pi]`` (sign=+1) or ``[-pi, -g]``."""
    h = splice.h
    if h == 0.0:
        return 0j
    panels = _backend.kernels.panel_count(n, h, quad.panels)
    _check_resolution(n, h, panels, quad.nodes_per_panel)
    xs, ws = gauss_legendre_01(quad.nodes_per_panel)
    left = np.arange(panels) / panels
    s = (left[:, None] + xs[None, :] / panels).ravel()
    w = np.tile(ws / panels, panels) * h
    omega = sign * (splice.g + h * s)
    E = eval_E(splice.t_reduced, omega, splice, 0)
    return complex(np.sum(w * E * np.exp(-1j * omega * n)))


def coefficient_by_integration(k: int, t: float, splice: SplicePolynomials, m: int,
                               quad: QuadratureSpec | None = None) -> float:
    """One weight ``a_k(t)`` from ``splice`` (built for ``t - m``).

    Both tails are integrated separately, so the imaginary part of the
    assembled value tests the conjugate symmetry of the extension.

    Raises
    ------
    IntegrityError
        If the imaginary part is not below ``quad.abs_tol``.
    """
    quad = quad or QuadratureSpec()
    n = int(k) - int(m)
    t_r = splice.t_reduced
    g = splice.g
    x = t_r - n
    core = 2.0 * g * float(_backend._fallback.sinc(g * x))
    total = core + _tail_integral(splice, n, quad, +1) + _tail_integral(splice, n, quad, -1)
    value = total / (2.0 * math.pi)
    if abs(value.imag) >= quad.abs_tol:
        raise IntegrityError(f"a_{k}({t}) has imaginary part {value.imag:.3g}")
    return value.real


def oracle_coefficient(k: int, t: float, E, quad: QuadratureSpec | None = None,
                       breakpoints=()) -> complex:
    """Brute-force ``(1/2pi) integral E(t, omega) exp(-i omega k)`` over ``[-pi, pi]``.

    ``E`` is called as ``E(t, omega_array)``.  ``breakpoints`` (typically
    ``+-g``) become panel boundaries; the ``quad.panels`` panels are shared
    among the pieces in proportion to their length, at least one each.
    """
    quad = quad or QuadratureSpec(panels=64)
    cuts = sorted({-math.pi, math.pi, *(float(b) for b in breakpoints if -math.pi < b < math.pi)})
    lengths = np.diff(cuts)
    counts = np.maximum(1, np.round(quad.panels * lengths / (2 * math.pi)).astype(int))
    x, w = np.polynomial.legendre.leggauss(quad.nodes_per_panel)
    total = 0j
    for a, b, p in zip(cuts[:-1], cuts[1:], counts):
        edges = np.linspace(a, b, p + 1)
        mid = (edges[:-1] + edges[1:]) / 2
        half = (edges[1:] - edges[:-1]) / 2
        omega = (mid[:, None] + half[:, None] * x[None, :]).ravel()
        weights = (half[:, None] * w[None, :]).ravel()
        vals = np.asarray(E(t, omega)) * np.exp(-1j * omega * k)
        total += np.sum(weights * vals)
    return total / (2 * math.pi)


def general_weights(ks, t: float, config: BandConfig, quad: QuadratureSpec | None = None,
                    extra_q_pi: bool = False) -> np.ndarray:
    """Weights of smoothness order ``config.d`` for every ``k`` in ``ks``."""
    quad = quad or QuadratureSpec()
    ks = np.asarray(ks, dtype=np.int64)
    pos = locate(t, config.N)
    n = ks - pos.m
    if pos.tau == 0.0:
        return (n == config.N).astype(float)
    splice = build_splice(pos.t_reduced, config.d, config.N, extra_q_pi=extra_q_pi)
    xs, ws = gauss_legendre_01(quad.nodes_per_panel)
    return _backend.chunked_map(
        _backend.kernels.general_weights, n, splice.t_reduced, splice.g, splice.h,
        splice.p_coeffs, splice.q_coeffs, xs, ws, quad.panels,
    )


def coefficient_window_general(t: float, L: int, config: BandConfig,
                               quad: QuadratureSpec | None = None,
                               extra_q_pi: bool = False) -> CoefficientSeries:
    """Window ``floor(t) - L .. floor(t) + L`` of order-``d`` weights.

    The splice is built once for the reduced time; each weight depends only
    on ``k - m``, which is what makes the window shift covariant.
    """
    if L < 1:
        raise ValueError(f"window half-width must be >= 1, got {L}")
    center = math.floor(t)
    ks = np.arange(center - L, center + L + 1)
    values = general_weights(ks, t, config, quad, extra_q_pi=extra_q_pi)
    return CoefficientSeries(method=Method.GENERAL, t=float(t), window=int(L),
                             center=int(center), values=values)
