# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels; same contracts as ``bandlim._fallback``.

``general_weights`` advances the phasors ``exp(-i omega n)`` by one rotation
per unit step in ``n`` instead of calling sin/cos at every node.  Recurrences
restart at anchors that depend only on ``n`` (multiples of ``_BLOCK`` and
panel-count changes), so each weight is the same whatever chunk it is
computed in.
"""
import numpy as np

from libc.math cimport sin, cos, fabs, ceil, floor, M_PI
from libc.stdlib cimport malloc, free

cdef double SINC_SERIES_CUTOFF = 1e-9
cdef long long _BLOCK = 16


cdef inline double _sinc(double x) noexcept nogil:
    if fabs(x) < SINC_SERIES_CUTOFF:
        return 1.0 - x * x / 6.0
    return sin(x) / x


cdef inline double _horner(const double[::1] c, double s) noexcept nogil:
    cdef Py_ssize_t j
    cdef double acc = 0.0
    for j in range(c.shape[0] - 1, -1, -1):
        acc = acc * s + c[j]
    return acc


def d1_weights(n, double t_r, int N):
    cdef const long long[::1] nv = np.ascontiguousarray(n, dtype=np.int64)
    out = np.empty(nv.shape[0], dtype=np.float64)
    cdef double[::1] ov = out
    cdef double g = M_PI * N / t_r
    cdef double x
    cdef Py_ssize_t i
    with nogil:
        for i in range(nv.shape[0]):
            if nv[i] == 0:
                ov[i] = 1.0 - g / M_PI
            else:
                x = <double> nv[i]
                ov[i] = (N / x) * _sinc(M_PI * N * (x - t_r) / t_r)
    return out


def panel_count(long long n, double h, int min_panels):
    return _panel_count(n, h, min_panels)


cdef inline int _panel_count(long long n, double h, int min_panels) noexcept nogil:
    cdef int p = 2 * <int> ceil(fabs(<double> n) * h / M_PI)
    return p if p > min_panels else min_panels


cdef inline long long _anchor(long long n, double h, int min_panels) noexcept nogil:
    """First index of the run containing ``n`` with a fixed panel count."""
    cdef long long a = <long long> floor(<double> n / _BLOCK) * _BLOCK
    cdef int p = _panel_count(n, h, min_panels)
    cdef long long j = n
    while j > a and _panel_count(j - 1, h, min_panels) == p:
        j -= 1
    return j


def general_weights(n, double t_r, double g, double h, pc, qc, xs, ws, int min_panels):
    cdef const long long[::1] nv = np.ascontiguousarray(n, dtype=np.int64)
    cdef const double[::1] pcv = np.ascontiguousarray(pc, dtype=np.float64)
    cdef const double[::1] qcv = np.ascontiguousarray(qc, dtype=np.float64)
    cdef const double[::1] xv = np.ascontiguousarray(xs, dtype=np.float64)
    cdef const double[::1] wv = np.ascontiguousarray(ws, dtype=np.float64)
    out = np.empty(nv.shape[0], dtype=np.float64)
    cdef double[::1] ov = out
    cdef Py_ssize_t count = nv.shape[0]
    cdef Py_ssize_t nodes = xv.shape[0]
    if count == 0:
        return out

    cdef int pmax = min_panels
    cdef Py_ssize_t i
    for i in range(count):
        pmax = max(pmax, _panel_count(nv[i], h, min_panels))
    cdef Py_ssize_t cap = <Py_ssize_t> pmax * nodes
    # per node: w*P, w*Q, omega, rotation (re, im), phasor (re, im)
    cdef double* buf = <double*> malloc(7 * cap * sizeof(double))
    if buf == NULL:
        raise MemoryError()
    cdef double* wp = buf
    cdef double* wq = buf + cap
    cdef double* om = buf + 2 * cap
    cdef double* rr = buf + 3 * cap
    cdef double* ri = buf + 4 * cap
    cdef double* zr = buf + 5 * cap
    cdef double* zi = buf + 6 * cap

    cdef int p, cur_p = -1
    cdef long long ni, a, j, prev = 0
    cdef bint have_state = False
    cdef Py_ssize_t q, jp, size = 0
    cdef double s, w, core, acc, tr
    try:
        with nogil:
            for i in range(count):
                ni = nv[i]
                core = 2.0 * g * _sinc(g * (t_r - <double> ni))
                if h == 0.0:
                    ov[i] = core / (2.0 * M_PI)
                    continue
                p = _panel_count(ni, h, min_panels)
                if p != cur_p:
                    cur_p = p
                    size = <Py_ssize_t> p * nodes
                    for jp in range(p):
                        for q in range(nodes):
                            s = (<double> jp) / p + xv[q] / p
                            w = wv[q] / p
                            wp[jp * nodes + q] = w * _horner(pcv, s)
                            wq[jp * nodes + q] = w * _horner(qcv, s)
                            om[jp * nodes + q] = g + h * s
                            rr[jp * nodes + q] = cos(g + h * s)
                            ri[jp * nodes + q] = -sin(g + h * s)
                    have_state = False
                a = _anchor(ni, h, min_panels)
                if not (have_state and prev + 1 == ni and a <= prev):
                    # restart from the anchor and walk up to ni
                    for q in range(size):
                        zr[q] = cos(om[q] * a)
                        zi[q] = -sin(om[q] * a)
                    j = a
                else:
                    j = prev
                while j < ni:
                    for q in range(size):
                        tr = zr[q] * rr[q] - zi[q] * ri[q]
                        zi[q] = zr[q] * ri[q] + zi[q] * rr[q]
                        zr[q] = tr
                    j += 1
                have_state = True
                prev = ni
                acc = 0.0
                for q in range(size):
                    acc += wp[q] * zr[q] - wq[q] * zi[q]
                ov[i] = (core + 2.0 * h * acc) / (2.0 * M_PI)
    finally:
        free(buf)
    return out
