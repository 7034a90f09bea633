"""Band configuration and the periodic seam-frequency grid.

Every interpolation weight in this package is computed in *reduced*
coordinates: an evaluation time ``t`` is split into an integer shift ``m``
and a reduced time ``t - m`` lying in ``[N, N + 1)``.  The seam frequency
``g = pi * N / (t - m)`` is periodic in ``t`` with period one.
"""
from __future__ import annotations

import math
from dataclasses import dataclass


class DomainError(ValueError):
    """Raised when an argument lies outside the admissible domain."""


def select_N(omega: float) -> int:
    """Smallest even integer ``N`` with ``N > omega / (pi - omega)``.

    The returned value also satisfies ``pi * N / (N + 1) > omega`` exactly in
    floating point, which is the form the seam bound is used in.
    """
    if not (0.0 < omega < math.pi):
        raise DomainError(f"omega must lie in (0, pi), got {omega!r}")
    ratio = omega / (math.pi - omega)
    N = 2 * (math.floor(ratio / 2) + 1)
    # guard against rounding in the ratio landing exactly on an even integer
    while not (math.pi * N / (N + 1) > omega):
        N += 2
    return N


def min_smoothness(alpha: float) -> int:
    """Smallest integer ``d`` with ``d > alpha + 1/2``."""
    if alpha < 0:
        raise DomainError(f"alpha must be non-negative, got {alpha!r}")
    return math.floor(alpha + 0.5) + 1


@dataclass(frozen=True)
class BandConfig:
    """Band edge, growth exponent, smoothness order and grid parameter.

    Use :meth:`resolve` to fill ``d`` and ``N`` with their minimal
    admissible values.
    """

    omega: float
    alpha: float = 0.0
    d: int = 1
    N: int = 2

    def __post_init__(self):
        if not (0.0 < self.omega < math.pi):
            raise DomainError(f"omega must lie in (0, pi), got {self.omega!r}")
        if self.alpha < 0:
            raise DomainError(f"alpha must be non-negative, got {self.alpha!r}")
        if int(self.d) != self.d or self.d < 1:
            raise DomainError(f"d must be a positive integer, got {self.d!r}")
        if not self.d > self.alpha + 0.5:
            raise DomainError(f"d={self.d} does not exceed alpha + 1/2 = {self.alpha + 0.5}")
        if int(self.N) != self.N or self.N < 2 or self.N % 2:
            raise DomainError(f"N must be an even integer >= 2, got {self.N!r}")
        if not (math.pi * self.N / (self.N + 1) > self.omega):
            raise DomainError(
                f"N={self.N} too small for omega={self.omega!r}: "
                f"need N > omega / (pi - omega) = {self.omega / (math.pi - self.omega):.6g}"
            )

    @classmethod
    def resolve(cls, omega: float, alpha: float = 0.0, d: int | None = None,
                N: int | None = None) -> "BandConfig":
        if d is None:
            d = min_smoothness(alpha)
        if N is None:
            N = select_N(omega)
        return cls(omega=float(omega), alpha=float(alpha), d=int(d), N=int(N))


@dataclass(frozen=True)
class GridPosition:
    t: float
    m: int
    tau: float
    g: float
    N: int

    @property
    def t_reduced(self) -> float:
        """``t - m``, always in ``[N, N + 1)``."""
        return self.N + self.tau

    @property
    def splice_width(self) -> float:
        """Length ``pi - g`` of the polynomial continuation interval."""
        return math.pi - self.g


def locate(t: float, N: int) -> GridPosition:
    """Decompose ``t`` as ``N + m + tau`` with integer ``m`` and ``tau`` in [0, 1).

    Intervals are closed on the left, so ``tau == 0`` exactly at integers,
    where ``g == pi``.
    """
    if int(N) != N or N < 2 or N % 2:
        raise DomainError(f"N must be an even integer >= 2, got {N!r}")
    N = int(N)
    t = float(t)
    m = math.floor(t - N)
    tau = (t - N) - m
    g = math.pi if tau == 0.0 else math.pi * N / (N + tau)
    return GridPosition(t=t, m=int(m), tau=tau, g=g, N=N)
