"""Pick the compiled kernels when available, else the numpy fallback.

Set ``BANDLIM_PURE=1`` to force the fallback.  ``BANDLIM_THREADS`` caps the
number of worker threads used to evaluate coefficient windows.
"""
import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _fallback

if os.environ.get("BANDLIM_PURE", "") not in ("", "0"):
    kernels = _fallback
else:
    try:
        from . import _ckernels as kernels
    except ImportError:  # extension not built
        kernels = _fallback

BACKEND = "compiled" if kernels is not _fallback else "python"

# below this many coefficients threading costs more than it saves
_MIN_CHUNK = 256


def thread_count():
    cap = os.environ.get("BANDLIM_THREADS")
    n = os.cpu_count() or 1
    if cap:
        n = min(n, max(1, int(cap)))
    return n


def chunked_map(func, n, *args):
    """Apply ``func(n_chunk, *args)`` over chunks of the integer array ``n``.

    Chunks are independent and concatenated in input order, so the result is
    identical to a single sequential call.
    """
    n = np.ascontiguousarray(n, dtype=np.int64)
    workers = thread_count()
    if workers == 1 or n.size < 2 * _MIN_CHUNK:
        return func(n, *args)
    chunks = np.array_split(n, min(workers * 4, max(1, n.size // _MIN_CHUNK)))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda c: func(c, *args), chunks))
    return np.concatenate(parts)
