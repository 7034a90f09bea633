"""Pure numpy implementations of the hot kernels.

Mirrors ``_ckernels.pyx`` function for function.  Inputs are in reduced
coordinates: ``n = k - m`` and ``t_r = t - m``.
"""
import math

import numpy as np

SINC_SERIES_CUTOFF = 1e-9


def sinc(x):
    """Unnormalized sinc, ``sin(x) / x``, with the series limit near zero."""
    x = np.asarray(x, dtype=float)
    small = np.abs(x) < SINC_SERIES_CUTOFF
    safe = np.where(small, 1.0, x)
    return np.where(small, 1.0 - x * x / 6.0, np.sin(safe) / safe)


def d1_weights(n, t_r, N):
    """Explicit first-order weights for a non-integer reduced time ``t_r``.

    Uses ``sin(g n) = sin(pi N (n - t_r) / t_r)`` (``N`` even) so the removable
    singularity at ``n == t_r`` is handled by a sinc rather than a 0/0.
    """
    n = np.asarray(n, dtype=np.int64)
    g = math.pi * N / t_r
    out = np.empty(n.shape, dtype=float)
    zero = n == 0
    nz = n[~zero].astype(float)
    out[~zero] = (N / nz) * sinc(math.pi * N * (nz - t_r) / t_r)
    out[zero] = 1.0 - g / math.pi
    return out


def panel_count(n, h, min_panels):
    return max(min_panels, 2 * math.ceil(abs(n) * h / math.pi))


def _horner(c, s):
    acc = np.zeros_like(s)
    for ci in c[::-1]:
        acc = acc * s + ci
    return acc


def general_weights(n, t_r, g, h, pc, qc, xs, ws, min_panels):
    """Weights from a polynomial splice on ``[g, pi]``.

    ``pc``/``qc`` are ascending coefficients in ``s = (omega - g) / h``;
    ``xs``/``ws`` a Gauss-Legendre rule on ``[0, 1]``.  Each weight is
    ``(A + 2 Re B) / (2 pi)`` with the core integral ``A`` in closed form and
    the tail ``B`` by composite quadrature whose panel count grows with ``|n|``.
    """
    n = np.asarray(n, dtype=np.int64)
    pc = np.asarray(pc, dtype=float)
    qc = np.asarray(qc, dtype=float)
    xs = np.asarray(xs, dtype=float)
    ws = np.asarray(ws, dtype=float)
    out = np.empty(n.shape, dtype=float)
    cache = {}
    for i, ni in enumerate(n.tolist()):
        core = 2.0 * g * float(sinc(g * (t_r - ni)))
        if h == 0.0:
            out[i] = core / (2.0 * math.pi)
            continue
        p = panel_count(ni, h, min_panels)
        if p not in cache:
            left = np.arange(p, dtype=float) / p
            s = (left[:, None] + xs[None, :] / p).ravel()
            w = np.tile(ws / p, p)
            cache[p] = (g + h * s, w * _horner(pc, s), w * _horner(qc, s))
        omega, wp, wq = cache[p]
        ph = omega * ni
        tail = h * (np.dot(wp, np.cos(ph)) + np.dot(wq, np.sin(ph)))
        out[i] = (core + 2.0 * tail) / (2.0 * math.pi)
    return out
