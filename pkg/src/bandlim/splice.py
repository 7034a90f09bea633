"""Polynomial continuation of ``exp(i omega t)`` from the core band to ``+-pi``.

For reduced time ``t_r`` in ``[N, N + 1)`` and seam ``g = pi N / t_r`` the
extension is

* ``exp(i omega t_r)`` for ``|omega| <= g``,
* ``P(omega) + i Q(omega)`` for ``omega`` in ``(g, pi]``,
* ``P(-omega) - i Q(-omega)`` for ``omega`` in ``[-pi, -g)``,

with real polynomials ``P`` and ``Q`` chosen so that the first ``d - 1``
derivatives match at the seam and agree at ``-pi`` and ``pi``.  Because
``g t_r = pi N`` with ``N`` even, ``exp(+-i g t_r) = 1`` and the seam targets
are simply ``(i t_r)**j``.  Conjugate symmetry turns the periodicity
requirement into ``Q^(j)(pi) = 0`` for even ``j`` and ``P^(j)(pi) = 0`` for odd
``j``.

Polynomials are stored in the normalized seam variable
``s = (omega - g) / (pi - g)`` in ``[0, 1]``.  In that basis the coefficients
stay bounded as ``tau -> 0`` and the constraint system is an integer matrix,
whereas monomial coefficients in ``omega`` blow up like ``(pi - g)**-j``.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

import numpy as np

from .grid import DomainError

__all__ = ["SplicePolynomials", "build_splice", "eval_E", "seam_residuals", "dump_csv"]


class IntegrityError(RuntimeError):
    """A computed quantity violates a construction guarantee."""


def _falling(i: int, j: int) -> float:
    """``i! / (i - j)!``, zero for ``j > i``."""
    return float(math.perm(i, j)) if j <= i else 0.0


def _deriv_at(c, j: int, s: float) -> float:
    """``j``-th derivative with respect to ``s`` of ``sum c_i s**i``."""
    return sum(c[i] * _falling(i, j) * s ** (i - j) for i in range(j, len(c)))


@dataclass(frozen=True)
class SplicePolynomials:
    t_reduced: float
    g: float
    d: int
    p_coeffs: np.ndarray = field(repr=False)
    q_coeffs: np.ndarray = field(repr=False)
    extra_q_pi: bool = False

    @property
    def h(self) -> float:
        return math.pi - self.g

    def _s(self, omega):
        if self.h == 0.0:
            return np.zeros_like(np.asarray(omega, dtype=float))
        return (np.asarray(omega, dtype=float) - self.g) / self.h

    def P(self, omega):
        return np.polynomial.polynomial.polyval(self._s(omega), self.p_coeffs)

    def Q(self, omega):
        return np.polynomial.polynomial.polyval(self._s(omega), self.q_coeffs)

    def monomial(self):
        """``(P, Q)`` as :class:`numpy.polynomial.Polynomial` in ``omega``."""
        if self.h == 0.0:
            raise DomainError("empty splice interval has no omega-polynomial form")
        Poly = np.polynomial.Polynomial
        s = Poly([-self.g / self.h, 1.0 / self.h])
        return Poly(self.p_coeffs)(s), Poly(self.q_coeffs)(s)


def _seam_targets(t_r: float, h: float, d: int):
    """Taylor coefficients (in ``s``) of ``exp(i omega t_r)`` at the seam."""
    z = [(1j * h * t_r) ** j / math.factorial(j) for j in range(d)]
    return [v.real for v in z], [v.imag for v in z]


def _solve_part(known, pi_orders):
    """Append coefficients so that ``d^j/ds^j`` vanishes at ``s = 1`` for ``j`` in ``pi_orders``."""
    d = len(known)
    if not pi_orders:
        return np.asarray(known, dtype=float)
    deg = d + len(pi_orders) - 1
    A = np.array([[_falling(i, j) for i in range(d, deg + 1)] for j in pi_orders])
    b = -np.array([sum(known[i] * _falling(i, j) for i in range(j, d)) for j in pi_orders])
    tail = np.linalg.solve(A, b)
    return np.concatenate([np.asarray(known, dtype=float), tail])


def build_splice(t_reduced: float, d: int, N: int, extra_q_pi: bool = False) -> SplicePolynomials:
    """Minimal-degree ``P``, ``Q`` meeting the seam and periodicity conditions.

    ``extra_q_pi`` adds ``Q'(pi) = 0`` for ``d >= 2``.  It is not needed for
    periodicity and produces a different (still valid) kernel.
    """
    if d < 1 or int(d) != d:
        raise DomainError(f"d must be a positive integer, got {d!r}")
    if not (N <= t_reduced < N + 1):
        raise DomainError(f"t_reduced={t_reduced!r} outside [{N}, {N + 1})")
    g = math.pi if t_reduced == N else math.pi * N / t_reduced
    h = math.pi - g
    p_known, q_known = _seam_targets(t_reduced, h, d)
    p_pi = [j for j in range(d) if j % 2 == 1]
    q_pi = [j for j in range(d) if j % 2 == 0]
    if extra_q_pi and d >= 2:
        q_pi.append(1)
    pc = _solve_part(p_known, p_pi)
    qc = _solve_part(q_known, sorted(q_pi))
    if not np.all(np.isfinite(pc)) or not np.all(np.isfinite(qc)):
        raise IntegrityError("splice solve produced non-finite coefficients")
    return SplicePolynomials(t_reduced=float(t_reduced), g=g, d=int(d),
                             p_coeffs=pc, q_coeffs=qc, extra_q_pi=extra_q_pi)


def eval_E(t: float, omega, splice: SplicePolynomials, m: int):
    """The extension ``E(t, omega) = E_N(t - m, omega) exp(i omega m)``.

    ``t`` must equal ``splice.t_reduced + m``; the core band is evaluated from
    the reduced time so the seam is continuous to rounding.
    """
    scalar = np.ndim(omega) == 0
    omega = np.atleast_1d(np.asarray(omega, dtype=float))
    if np.any(np.abs(omega) > math.pi):
        raise DomainError("omega must lie in [-pi, pi]")
    if abs((t - m) - splice.t_reduced) > 1e-9 * max(1.0, abs(t)):
        raise DomainError(f"splice built for t - m = {splice.t_reduced}, got {t - m}")
    g = splice.g
    a = np.abs(omega)
    out = np.exp(1j * omega * splice.t_reduced)
    tail = a > g
    if np.any(tail):
        w = a[tail]
        val = splice.P(w) + 1j * splice.Q(w)
        out[tail] = np.where(omega[tail] > 0, val, np.conj(val))
    out = out * np.exp(1j * omega * m)
    return complex(out[0]) if scalar else out


def seam_residuals(splice: SplicePolynomials, scaled: bool = True) -> list[float]:
    """Constraint mismatches, ``j = 0 .. d-1``.

    Order: for each ``j`` the ``P`` and ``Q`` mismatch at the seam against the
    derivatives of ``exp(i omega t_r)``; then the periodicity mismatches at
    ``pi`` (``Q`` for even ``j``, ``P`` for odd ``j``), then the optional
    ``Q'(pi)`` condition.

    With ``scaled`` (default) derivatives are taken in the normalized variable
    ``s``, i.e. the ``omega``-derivative of order ``j`` times ``(pi - g)**j``.
    Unscaled residuals amplify coefficient rounding by ``(pi - g)**-j``.
    """
    h = splice.h
    d = splice.d
    pc, qc = splice.p_coeffs, splice.q_coeffs
    z = [(1j * splice.t_reduced) ** j for j in range(d)]
    out = []
    for j in range(d):
        if h == 0.0:  # interval empty: nothing to match
            out += [0.0, 0.0]
            continue
        tp = z[j].real * h ** j
        tq = z[j].imag * h ** j
        scale = 1.0 if scaled else h ** -j
        out.append(abs(_deriv_at(pc, j, 0.0) - tp) * scale)
        out.append(abs(_deriv_at(qc, j, 0.0) - tq) * scale)
    pi_conds = [(qc if j % 2 == 0 else pc, j) for j in range(d)]
    if splice.extra_q_pi and d >= 2:
        pi_conds.append((qc, 1))
    for c, j in pi_conds:
        if h == 0.0:
            out.append(0.0)
            continue
        scale = 1.0 if scaled else h ** -j
        out.append(abs(_deriv_at(c, j, 1.0)) * scale)
    return out


def dump_csv(splice: SplicePolynomials, path) -> None:
    """Debug dump of the coefficients and residuals."""
    res = seam_residuals(splice)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["t_reduced", "g", "d", "part", "index", "value"])
        for part, vals in (("p", splice.p_coeffs), ("q", splice.q_coeffs), ("residual", res)):
            for i, v in enumerate(vals):
                w.writerow([repr(splice.t_reduced), repr(splice.g), splice.d, part, i, f"{v:.17g}"])
