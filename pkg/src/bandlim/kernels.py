"""Closed-form interpolation weights and coefficient windows.

Two explicit kernels live here: the classical cardinal series weight
``sin(pi (k - t)) / (pi (k - t))`` and the first-order spliced weight, which
decays like ``1/k**2`` and therefore also reconstructs signals of sublinear
growth.  Higher smoothness orders are computed numerically in
:mod:`bandlim.coeffs`; :func:`kernel_window` dispatches to all three.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import _backend
from .grid import BandConfig, locate

__all__ = [
    "Method",
    "CoefficientSeries",
    "wsk_coefficient",
    "d1_coefficient",
    "classical_weights",
    "d1_weights",
    "kernel_window",
]


class Method(str, enum.Enum):
    CLASSICAL = "classical"
    D1 = "d1"
    GENERAL = "general-d"

    @classmethod
    def parse(cls, value) -> "Method":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        if key == "general":
            key = "general-d"
        try:
            return cls(key)
        except ValueError:
            raise ValueError(
                f"unknown method {value!r}; expected classical, d1 or general"
            ) from None


@dataclass(frozen=True)
class CoefficientSeries:
    """Weights ``a_k(t)`` for ``k`` in ``center - L .. center + L``."""

    method: Method
    t: float
    window: int
    center: int
    values: np.ndarray

    @property
    def ks(self) -> np.ndarray:
        return np.arange(self.center - self.window, self.center + self.window + 1)

    def __getitem__(self, k: int) -> float:
        i = k - self.center + self.window
        if not 0 <= i < self.values.size:
            raise KeyError(k)
        return float(self.values[i])

    def as_dict(self) -> dict[int, float]:
        return dict(zip(self.ks.tolist(), self.values.tolist()))

    def apply(self, samples, compensated: bool = False):
        """``sum_k a_k(t) x(k)`` in ascending ``k`` for samples aligned with :attr:`ks`."""
        samples = np.asarray(samples)
        terms = self.values * samples
        if not compensated:
            acc = 0.0
            for term in terms.tolist():
                acc += term
            return acc
        if np.iscomplexobj(terms):
            return complex(math.fsum(terms.real), math.fsum(terms.imag))
        return math.fsum(terms)


def _is_integer(x: float) -> bool:
    return float(x).is_integer()


def wsk_coefficient(k: int, t: float) -> float:
    """Classical cardinal-series weight; exactly 1 or 0 at integer ``t``."""
    return float(classical_weights(np.array([k]), t)[0])


def classical_weights(ks, t: float) -> np.ndarray:
    ks = np.asarray(ks, dtype=np.int64)
    if _is_integer(t):
        return (ks == int(t)).astype(float)
    return _backend._fallback.sinc(math.pi * (ks - t))


def d1_weights(ks, t: float, N: int) -> np.ndarray:
    """First-order weights for every ``k`` in ``ks`` (vectorized)."""
    ks = np.asarray(ks, dtype=np.int64)
    pos = locate(t, N)
    n = ks - pos.m
    if pos.tau == 0.0:
        return (n == N).astype(float)
    return _backend.chunked_map(_backend.kernels.d1_weights, n, pos.t_reduced, N)


def d1_coefficient(k: int, t: float, N: int) -> float:
    """First-order spliced weight ``a_k(t)``.

    With ``m = floor(t - N)`` and ``g = pi N / (t - m)`` this is ``1 - g/pi``
    for ``k == m`` and ``(t - m) sin(g (k - m)) / (pi (k - m) (k - t))``
    otherwise.  At integer ``t`` the Kronecker delta is returned exactly.
    """
    return float(d1_weights(np.array([k]), t, N)[0])


def kernel_window(method, t: float, L: int, config: BandConfig, quad=None) -> CoefficientSeries:
    """Materialize the weights for ``k`` in ``floor(t) - L .. floor(t) + L``."""
    if L < 1:
        raise ValueError(f"window half-width must be >= 1, got {L}")
    method = Method.parse(method)
    center = math.floor(t)
    ks = np.arange(center - L, center + L + 1)
    if method is Method.CLASSICAL:
        values = classical_weights(ks, t)
    elif method is Method.D1:
        values = d1_weights(ks, t, config.N)
    else:
        from .coeffs import general_weights

        values = general_weights(ks, t, config, quad)
    return CoefficientSeries(method=method, t=float(t), window=int(L),
                             center=int(center), values=values)
