"""Test signals with exact evaluators."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ._fallback import sinc
from .grid import DomainError


@dataclass(frozen=True)
class SignalSpec:
    evaluator: Callable
    band_edge: float
    growth_exponent: float
    label: str

    def __call__(self, t):
        return self.evaluator(t)


def _check_omega(omega):
    if not (0.0 < omega < math.pi):
        raise DomainError(f"omega must lie in (0, pi), got {omega!r}")


def make_sinc_combo(omega: float) -> SignalSpec:
    """``sinc(omega (t-1) + 1/2) - 2 sinc(omega (t+2) / sqrt 2 - 1)``, square integrable."""
    _check_omega(omega)
    r2 = math.sqrt(2.0)

    def x(t):
        t = np.asarray(t, dtype=float)
        return sinc(omega * (t - 1) + 0.5) - 2 * sinc(omega * (t + 2) / r2 - 1)

    return SignalSpec(x, omega, 0.0, "sinc-combo")


def make_linear_growth(omega: float) -> SignalSpec:
    """``t sin(omega (t-1) / 1.0001 + 1/2) - 2 t sin(omega (t+2) / sqrt 2 - 1)``."""
    _check_omega(omega)
    r2 = math.sqrt(2.0)

    def x(t):
        t = np.asarray(t, dtype=float)
        return t * np.sin(omega * (t - 1) / 1.0001 + 0.5) - 2 * t * np.sin(omega * (t + 2) / r2 - 1)

    return SignalSpec(x, omega, 1.0, "linear-growth")


def make_tone(omega0: float, poly_degree: int = 0) -> SignalSpec:
    """Complex tone ``t**p exp(i omega0 t)``."""
    if not abs(omega0) < math.pi:
        raise DomainError(f"|omega0| must be < pi, got {omega0!r}")
    if poly_degree < 0 or int(poly_degree) != poly_degree:
        raise DomainError(f"poly_degree must be a non-negative integer, got {poly_degree!r}")
    p = int(poly_degree)

    def x(t):
        t = np.asarray(t, dtype=float)
        return t ** p * np.exp(1j * omega0 * t)

    return SignalSpec(x, abs(omega0), float(p), f"tone:{omega0!r}:{p}")
