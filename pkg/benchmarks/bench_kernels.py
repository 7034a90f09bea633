#!/usr/bin/env python3
"""Time the compiled and pure-Python kernels on coefficient windows.

Writes one CSV row per (kernel, backend, window): best-of-``--repeat`` wall
time, coefficients per second, and the max deviation from the compiled
result.  Usage::

    python3 benchmarks/bench_kernels.py --windows 1000,5000,10000 --out bench.csv
"""
import argparse
import csv
import math
import sys
import time

import numpy as np

from bandlim import BandConfig, _backend, _fallback
from bandlim.coeffs import general_weights
from bandlim.kernels import d1_weights

try:
    from bandlim import _ckernels
except ImportError:
    _ckernels = None


def best_time(fn, repeat):
    best, out = math.inf, None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--windows", default="1000,5000,10000")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--t", type=float, default=-1.71)
    ap.add_argument("--out", default="-")
    args = ap.parse_args(argv)

    cfg = BandConfig.resolve(5 * math.pi / 6, alpha=1.0)
    backends = [("python", _fallback)]
    if _ckernels is not None:
        backends.insert(0, ("compiled", _ckernels))
    else:
        print("compiled extension not built; timing the fallback only", file=sys.stderr)

    kernels = {
        "d1": lambda ks: d1_weights(ks, args.t, cfg.N),
        "general-d2": lambda ks: general_weights(ks, args.t, cfg),
    }
    rows = []
    saved = _backend.kernels
    try:
        for L in (int(v) for v in args.windows.split(",")):
            ks = np.arange(-L, L + 1) + math.floor(args.t)
            for kname, fn in kernels.items():
                ref = None
                for bname, mod in backends:
                    _backend.kernels = mod
                    sec, vals = best_time(lambda: fn(ks), args.repeat)
                    if ref is None:
                        ref = vals
                    dev = float(np.max(np.abs(vals - ref)))
                    rows.append([kname, bname, L, ks.size, f"{sec:.6f}", f"{ks.size / sec:.0f}", f"{dev:.3g}"])
    finally:
        _backend.kernels = saved

    fh = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["kernel", "backend", "L", "count", "seconds", "coeffs_per_s", "max_dev"])
    w.writerows(rows)
    if fh is not sys.stdout:
        fh.close()


if __name__ == "__main__":
    main()
