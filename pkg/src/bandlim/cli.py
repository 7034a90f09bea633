"""Command-line front end.

Subcommands ``coeffs``, ``sweep``, ``seams`` and ``interp`` write CSV with a
header row and 17 significant digits.  Settings come from flags, optionally on
top of a ``--config`` file holding ``key = value`` lines (keys are the long
flag names without dashes).

Exit codes: 0 success, 2 usage error, 3 integrity failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import math
import re
import sys
from dataclasses import dataclass, field

import numpy as np

from .coeffs import QuadratureSpec, general_weights
from .grid import BandConfig, DomainError
from .interp import truncation_sweep
from .kernels import Method, classical_weights, d1_weights
from .signals import make_linear_growth, make_sinc_combo, make_tone
from .splice import IntegrityError, build_splice, seam_residuals

EXIT_USAGE = 2
EXIT_INTEGRITY = 3
SEAM_TOL = 1e-9
DECAY_POWER = 2.49

_PI_RE = re.compile(r"^([+-]?[0-9.]*(?:[eE][+-]?\d+)?)\s*\*?\s*pi\s*(?:/\s*([0-9.]+))?$")


class UsageError(Exception):
    pass


def parse_radians(text) -> float:
    """``2.6``, ``pi/2``, ``5pi/6``, ``5*pi/6`` or ``0.95pi``."""
    s = str(text).strip().lower().replace(" ", "")
    try:
        return float(s)
    except ValueError:
        pass
    mt = _PI_RE.match(s)
    if not mt:
        raise UsageError(f"cannot parse angle {text!r}")
    num = mt.group(1)
    scale = 1.0 if num in ("", "+") else -1.0 if num == "-" else float(num)
    den = float(mt.group(2)) if mt.group(2) else 1.0
    return scale * math.pi / den


def _int_list(text):
    try:
        return [int(v) for v in str(text).split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}") from None


def _float_list(text):
    try:
        return [float(v) for v in str(text).split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of numbers, got {text!r}") from None


def make_signal(name: str, omega: float):
    name = name.strip()
    if name == "sinc-combo":
        return make_sinc_combo(omega)
    if name == "linear-growth":
        return make_linear_growth(omega)
    if name.startswith("tone:"):
        parts = name.split(":")
        if len(parts) != 3:
            raise UsageError("tone signal syntax is tone:OMEGA0:P")
        return make_tone(parse_radians(parts[1]), int(parts[2]))
    raise UsageError(f"unknown signal {name!r}")


DEFAULTS = {
    "omega": "5pi/6",
    "alpha": "1",
    "d": None,
    "N": None,
    "t": "-1.71",
    "L": "50,100,500",
    "method": "classical,d1,general",
    "signal": "sinc-combo",
    "out": "-",
    "panels": "8",
    "nodes": "16",
    "tau_points": "100",
    "perturb": "0",
}


@dataclass
class RunConfig:
    band: BandConfig
    t: list[float]
    L: list[int]
    methods: list[Method]
    signal: str
    out: str
    quad: QuadratureSpec
    tau_points: int = 100
    perturb: float = 0.0
    extra_q_pi: bool = False
    raw: dict = field(default_factory=dict)


def read_config_file(path) -> dict:
    values = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected 'key = value'")
            key, value = (p.strip() for p in line.split("=", 1))
            key = key.lstrip("-").replace("-", "_")
            if key not in DEFAULTS and key != "extra_q_pi":
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = value
    return values


def resolve(args: argparse.Namespace) -> RunConfig:
    merged = dict(DEFAULTS)
    if args.config:
        merged.update(read_config_file(args.config))
    for key in DEFAULTS:
        v = getattr(args, key, None)
        if v is not None:
            merged[key] = v
    try:
        omega = parse_radians(merged["omega"])
        alpha = float(merged["alpha"])
        d = int(merged["d"]) if merged["d"] is not None else None
        N = int(merged["N"]) if merged["N"] is not None else None
        band = BandConfig.resolve(omega, alpha, d=d, N=N)
        methods = [Method.parse(m) for m in str(merged["method"]).split(",") if m.strip()]
        quad = QuadratureSpec(panels=int(merged["panels"]), nodes_per_panel=int(merged["nodes"]))
        extra = getattr(args, "extra_q_pi", False) or str(merged.get("extra_q_pi", "")).lower() in ("1", "true", "yes")
        cfg = RunConfig(
            band=band,
            t=_float_list(merged["t"]),
            L=_int_list(merged["L"]),
            methods=methods,
            signal=str(merged["signal"]),
            out=str(merged["out"]),
            quad=quad,
            tau_points=int(merged["tau_points"]),
            perturb=float(merged["perturb"]),
            extra_q_pi=extra,
            raw=merged,
        )
    except (ValueError, DomainError) as exc:
        raise UsageError(str(exc)) from None
    if not cfg.t or not cfg.L or not cfg.methods:
        raise UsageError("t, L and method must be non-empty")
    if min(cfg.L) < 1:
        raise UsageError("L values must be >= 1")
    return cfg


def _fmt(v) -> str:
    if isinstance(v, (complex, np.complexfloating)):
        return f"{v.real:.17g}{v.imag:+.17g}j"
    if isinstance(v, (float, np.floating)):
        return f"{v:.17g}"
    return str(v)


def _write(cfg: RunConfig, header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(v) for v in row])
    text = buf.getvalue()
    if cfg.out == "-":
        sys.stdout.write(text)
    else:
        with open(cfg.out, "w", newline="") as fh:
            fh.write(text)


def cmd_coeffs(cfg: RunConfig) -> int:
    """Weights of all three methods, their differences and decay diagnostics."""
    t = cfg.t[0]
    L = max(cfg.L)
    center = math.floor(t)
    ks = np.arange(center - L, center + L + 1)
    a0 = classical_weights(ks, t)
    a1 = d1_weights(ks, t, cfg.band.N)
    a2 = general_weights(ks, t, cfg.band, cfg.quad, extra_q_pi=cfg.extra_q_pi)
    absk = np.abs(ks).astype(float) ** DECAY_POWER
    rows = zip(ks.tolist(), a0, a1, a2, a0 - a2, a0 - a1, a1 - a2,
               np.log(absk * np.abs(a1) + 1), np.log(absk * np.abs(a2) + 1))
    _write(cfg, ["k", "a_classical", "a_d1", "a_general", "D_tilde", "D_bar", "D", "L_k", "M_k"], rows)
    return 0


def cmd_sweep(cfg: RunConfig) -> int:
    signal = make_signal(cfg.signal, cfg.band.omega)
    rows = truncation_sweep(signal, cfg.t[0], cfg.L, cfg.methods, cfg.band, cfg.quad)
    _write(cfg, ["method", "t", "L", "reconstructed", "truth", "abs_error"],
           ((r.method, r.t, r.L, r.reconstructed, r.truth, r.abs_error) for r in rows))
    return 0


def cmd_interp(cfg: RunConfig) -> int:
    signal = make_signal(cfg.signal, cfg.band.omega)
    out = []
    for t in cfg.t:
        for r in truncation_sweep(signal, t, cfg.L, cfg.methods, cfg.band, cfg.quad):
            out.append((r.t, r.method, r.L, r.reconstructed, r.truth, r.abs_error))
    _write(cfg, ["t", "method", "L", "reconstructed", "truth", "abs_error"], out)
    return 0


def seam_table(band: BandConfig, tau_points: int, perturb: float = 0.0, extra_q_pi: bool = False):
    """Rows ``(tau, t_reduced, g, d, index, scaled, unscaled)`` over ``tau = i / tau_points``."""
    N = band.N
    rows = []
    for i in range(tau_points):
        tau = i / tau_points
        sp = build_splice(N + tau, band.d, N, extra_q_pi=extra_q_pi)
        if perturb:
            qc = sp.q_coeffs.copy()
            qc[-1] += perturb
            sp = type(sp)(sp.t_reduced, sp.g, sp.d, sp.p_coeffs, qc, sp.extra_q_pi)
        scaled = seam_residuals(sp)
        raw = seam_residuals(sp, scaled=False)
        for j, (a, b) in enumerate(zip(scaled, raw)):
            rows.append((tau, sp.t_reduced, sp.g, band.d, j, a, b))
    return rows


def cmd_seams(cfg: RunConfig) -> int:
    rows = seam_table(cfg.band, cfg.tau_points, cfg.perturb, cfg.extra_q_pi)
    _write(cfg, ["tau", "t_reduced", "g", "d", "index", "residual", "residual_omega"], rows)
    worst = max(r[5] for r in rows)
    if worst >= SEAM_TOL:
        print(f"seam residual {worst:.3g} exceeds {SEAM_TOL:g}", file=sys.stderr)
        return EXIT_INTEGRITY
    return 0


COMMANDS = {"coeffs": cmd_coeffs, "sweep": cmd_sweep, "seams": cmd_seams, "interp": cmd_interp}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="file of 'key = value' lines; flags override it")
    common.add_argument("--omega", help="band edge in radians, e.g. 2.6 or 5pi/6 (default 5pi/6)")
    common.add_argument("--alpha", help="growth exponent (default 1)")
    common.add_argument("--d", help="smoothness order (default: smallest integer > alpha + 1/2)")
    common.add_argument("--N", help="even grid parameter (default: smallest admissible)")
    common.add_argument("--t", help="evaluation time(s), comma separated (default -1.71)")
    common.add_argument("--L", help="window half-widths, comma separated (default 50,100,500)")
    common.add_argument("--method", help="comma list of classical,d1,general")
    common.add_argument("--signal", help="sinc-combo | linear-growth | tone:OMEGA0:P")
    common.add_argument("--out", help="output CSV path, '-' for stdout")
    common.add_argument("--panels", help="minimum quadrature panels (default 8)")
    common.add_argument("--nodes", help="Gauss-Legendre nodes per panel (default 16)")
    common.add_argument("--tau-points", dest="tau_points", help="seams: tau grid size (default 100)")
    common.add_argument("--perturb", help="seams: add this to the top Q coefficient (negative control)")
    common.add_argument("--extra-q-pi", dest="extra_q_pi", action="store_true",
                        help="also impose Q'(pi) = 0 on the splice")
    parser = argparse.ArgumentParser(prog="bandlim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("coeffs", parents=[common], help="coefficient table with diagnostics")
    sub.add_parser("sweep", parents=[common], help="truncation error over L and methods")
    sub.add_parser("seams", parents=[common], help="splice constraint residuals over tau")
    sub.add_parser("interp", parents=[common], help="reconstruct a signal at given times")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve(args)
        return COMMANDS[args.command](cfg)
    except (UsageError, DomainError) as exc:
        parser.print_usage(sys.stderr)
        print(f"bandlim: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IntegrityError as exc:
        print(f"bandlim: integrity failure: {exc}", file=sys.stderr)
        return EXIT_INTEGRITY


if __name__ == "__main__":
    sys.exit(main())
