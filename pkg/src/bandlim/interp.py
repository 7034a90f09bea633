"""Truncated reconstruction ``sum_k a_k(t) x(k)`` and error sweeps."""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .coeffs import QuadratureSpec
from .grid import BandConfig, DomainError
from .kernels import Method, kernel_window
from .signals import SignalSpec

__all__ = ["ErrorRow", "interpolate", "truncation_sweep", "rescale"]


@dataclass(frozen=True)
class ErrorRow:
    method: str
    t: float
    L: int
    reconstructed: float
    truth: float
    abs_error: float


def _as_scalar(v):
    v = np.asarray(v)
    return complex(v) if np.iscomplexobj(v) else float(v)


def interpolate(signal: SignalSpec, t: float, method, L: int, config: BandConfig,
                quad: QuadratureSpec | None = None, compensated: bool = False):
    """Reconstruct ``signal(t)`` from the samples ``k`` in ``floor(t) +- L``."""
    series = kernel_window(method, t, L, config, quad)
    return _as_scalar(series.apply(signal(series.ks), compensated=compensated))


def truncation_sweep(signal: SignalSpec, t: float, Ls, methods, config: BandConfig,
                     quad: QuadratureSpec | None = None, compensated: bool = False) -> list[ErrorRow]:
    """One :class:`ErrorRow` per ``(method, L)``, methods outermost.

    Weights do not depend on the window size, so each method computes the
    widest window once and the narrower sums use its central slice.
    """
    Ls = [int(L) for L in Ls]
    if not Ls:
        raise ValueError("Ls must be non-empty")
    truth = _as_scalar(signal(t))
    rows = []
    for method in methods:
        method = Method.parse(method)
        wide = kernel_window(method, t, max(Ls), config, quad)
        samples = signal(wide.ks)
        for L in Ls:
            lo = wide.window - L
            part = replace(wide, window=L, values=wide.values[lo:lo + 2 * L + 1])
            value = _as_scalar(part.apply(samples[lo:lo + 2 * L + 1], compensated=compensated))
            rows.append(ErrorRow(method.value, float(t), L, value, truth, abs(value - truth)))
    return rows


def rescale(signal: SignalSpec, mu: float) -> SignalSpec:
    """Time-rescaled signal ``t -> signal(mu t)`` with band edge ``mu * band_edge``."""
    if not mu > 0:
        raise DomainError(f"mu must be positive, got {mu!r}")
    edge = mu * signal.band_edge
    if edge >= math.pi:
        raise DomainError(f"rescaled band edge {edge:.6g} is not below pi")
    inner = signal.evaluator

    def x(t):
        return inner(mu * np.asarray(t, dtype=float))

    return SignalSpec(x, edge, signal.growth_exponent, f"{signal.label}*{mu!r}")
