"""Command-line front end.

    rwbounds alpha    --dist FILE
    rwbounds excess   --dist FILE [--cap C]
    rwbounds bounds   --dist FILE --d D [--x X ...]
    rwbounds simulate {max,min,martingale} --dist FILE [--d D] [--x X ...]
    rwbounds embed    --dist FILE --scheme {dubins,ay,ay-minus,day}
    rwbounds report   --dist FILE [--d D] [--x X ...]

``--preset NAME`` may replace ``--dist`` for any shipped example, and a bare
file name such as ``gaussian_1_1.json`` that is not found on disk resolves to
the shipped preset of that name.
Exit status: 0 success, 2 bad input, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass, field, is_dataclass
from pathlib import Path
from typing import Sequence, TextIO

import numpy as np

from . import presets
from .adjustment import adjustment_coefficient
from .bounds import bm_parameters, report as bounds_report
from .distributions import Distribution, FiniteSupport, load_spec
from .embedding import SCHEMES, AtomicDistribution, embed_many
from .errors import InvalidParameter, NumericalError, ValidationError
from .excess import excess_constants
from .montecarlo import (
    DEFAULT_EPS,
    estimate_expected_max,
    estimate_min_tail,
    martingale_check,
    stopped_martingale_check,
)
from .streams import DEFAULT_SEED

BAND = 3.0
FORMATS = ("csv", "json", "text")


@dataclass
class RunConfig:
    subcommand: str
    dist_path: str | None = None
    preset: str | None = None
    mode: str | None = None  # simulate: max | min | martingale
    d: float = 1.0
    xs: list[float] = field(default_factory=list)
    n: int = 100_000
    seed: int = DEFAULT_SEED
    eps: float = DEFAULT_EPS
    cap: float | None = None
    cap_policy: str = "d"
    scheme: str = "day"
    steps: int = 10
    output: str | None = None


def fmt(value) -> str:
    """12 significant digits, always recognizably a float."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    text = f"{float(value):.12g}"
    if text.lstrip("-").isdigit():
        text += ".0"
    return text


def _jsonable(obj):
    if is_dataclass(obj):
        return _jsonable(asdict(obj))
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.generic):
        return obj.item()
    return obj


def emit(payload, fmt_name: str, out: TextIO) -> None:
    """Write ``payload`` as CSV, JSON or aligned text.

    CSV and text expect ``{"header": [...], "rows": [[...], ...]}``; JSON
    writes ``payload["json"]`` when present, else the table as records.
    """
    if fmt_name == "json":
        obj = payload.get("json")
        if obj is None:
            obj = [dict(zip(payload["header"], r)) for r in payload["rows"]]
        json.dump(_jsonable(obj), out, indent=2, sort_keys=False)
        out.write("\n")
        return
    header = payload["header"]
    rows = [[fmt(v) if not isinstance(v, str) else v for v in r] for r in payload["rows"]]
    if fmt_name == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        out.write(buf.getvalue())
        return
    widths = [max(len(str(c)) for c in col) for col in zip(header, *rows)]
    for r in [header, *rows]:
        out.write("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")


# ----------------------------------------------------------------------------
# subcommands; each returns a payload for emit()


def _dist(cfg: RunConfig) -> Distribution:
    if cfg.preset:
        return presets.load(cfg.preset)
    if not cfg.dist_path:
        raise InvalidParameter("one of --dist or --preset is required")
    path = Path(cfg.dist_path)
    # a bare file name that is not on disk falls back to the shipped presets
    if not path.exists() and path.parent == Path(".") and path.suffix == ".json":
        if path.stem in presets.names():
            return presets.load(path.stem)
    return load_spec(path)


def _in_band(est, se, lower, upper) -> bool:
    return lower - BAND * se <= est <= upper + BAND * se


def cmd_alpha(cfg: RunConfig, dist: Distribution) -> dict:
    res = adjustment_coefficient(dist)
    rows = [
        ["alpha", res.alpha],
        ["riskiness", res.riskiness],
        ["gaussian_rate", res.gaussian_rate],
        ["method", res.solver.method],
        ["iterations", res.solver.iterations],
        ["residual", res.solver.residual],
    ]
    return {"header": ["quantity", "value"], "rows": rows, "json": res,
            "default": "text", "text": [f"{k}={fmt(v) if not isinstance(v, str) else v}"
                                        for k, v in rows]}


def cmd_excess(cfg: RunConfig, dist: Distribution) -> dict:
    alpha = adjustment_coefficient(dist).alpha
    exc = excess_constants(dist, alpha, cfg.cap)
    rows = [
        ["d_plus", exc.d_plus, exc.argmax_plus, exc.finite_plus, exc.boundary_plus],
        ["d_minus", exc.d_minus, exc.argmax_minus, exc.finite_minus, exc.boundary_minus],
        ["d_zero", exc.d_zero, None, exc.finite_plus and exc.finite_minus, None],
    ]
    return {"header": ["quantity", "value", "argmax", "finite", "boundary"],
            "rows": rows, "json": {"alpha": alpha, **asdict(exc)}, "default": "json"}


def cmd_bounds(cfg: RunConfig, dist: Distribution) -> dict:
    rep = bounds_report(dist, cfg.d, sorted(cfg.xs), cfg.cap_policy)
    rows = [["emax", rep.d, rep.emax_lower, rep.emax_exact, rep.emax_upper],
            ["bm_emax", rep.d, None, rep.bm_reference["emax"], None]]
    for (x, lo, up), (_, bm) in zip(rep.min_tail, rep.bm_reference["tail"]):
        rows.append(["min_tail", x, lo, None, up])
        rows.append(["bm_min_tail", x, None, bm, None])
    return {"header": ["quantity", "d_or_x", "lower", "exact_or_estimate", "upper"],
            "rows": rows, "json": rep.to_dict(), "default": "csv"}


def _sim_header():
    return ["quantity", "param", "estimate", "stderr", "lower_bound", "upper_bound",
            "in_band"]


def cmd_simulate(cfg: RunConfig, dist: Distribution) -> dict:
    adj = adjustment_coefficient(dist)
    rows = []
    if cfg.mode == "max":
        rep = bounds_report(dist, cfg.d, (), cfg.cap_policy, adj)
        est = estimate_expected_max(dist, cfg.d, cfg.n, cfg.seed)
        rows.append(["expected_max", cfg.d, est.mean, est.stderr, rep.emax_lower,
                     rep.emax_upper, _in_band(est.mean, est.stderr, rep.emax_lower,
                                              rep.emax_upper)])
    elif cfg.mode == "min":
        xs = sorted(cfg.xs) or [0.5, 1.0, 2.0]
        rep = bounds_report(dist, cfg.d, xs, cfg.cap_policy, adj)
        ests = estimate_min_tail(dist, xs, cfg.n, cfg.seed, cfg.eps, adj.alpha)
        for (x, lo, up), est in zip(rep.min_tail, ests):
            rows.append(["min_tail", x, est.mean, est.stderr, lo, up,
                         _in_band(est.mean, est.stderr, lo, up)])
        if ests:
            rows.append(["censored_fraction", cfg.eps, ests[0].censored_fraction,
                         None, None, None, None])
    elif cfg.mode == "martingale":
        est = martingale_check(dist, adj.alpha, cfg.steps, cfg.n, cfg.seed)
        rows.append(["martingale", cfg.steps, est.mean, est.stderr, 1.0, 1.0,
                     _in_band(est.mean, est.stderr, 1.0, 1.0)])
        est = stopped_martingale_check(dist, cfg.d, cfg.n, cfg.seed, adj.alpha)
        rows.append(["stopped_martingale", cfg.d, est.mean, est.stderr, 1.0, 1.0,
                     _in_band(est.mean, est.stderr, 1.0, 1.0)])
    else:
        raise InvalidParameter(f"unknown simulate mode {cfg.mode!r}")
    return {"header": _sim_header(), "rows": rows, "default": "csv"}


def cmd_embed(cfg: RunConfig, dist: Distribution) -> dict:
    if not isinstance(dist, FiniteSupport):
        raise InvalidParameter("embed needs a finite_support or two_point law")
    F = AtomicDistribution.from_distribution(dist)
    batch = embed_many(F, cfg.scheme, cfg.n, cfg.seed)
    freq = batch.frequencies(len(F.xs))
    rows = []
    for x, p, f in zip(F.xs, F.ps, freq):
        se = math.sqrt(p * (1 - p) / cfg.n)
        rows.append(["frequency", x, p, f, se, abs(f - p) <= 4 * se])
    qt = batch.quadratic_time
    se = float(qt.std(ddof=1)) / math.sqrt(cfg.n)
    slack = max(BAND * se, 1e-12 * F.variance)
    rows.append(["wald_time", None, F.variance, qt.mean(), se,
                 abs(qt.mean() - F.variance) <= slack])
    sv = batch.stopped_value
    se = float(sv.std(ddof=1)) / math.sqrt(cfg.n)
    rows.append(["mean", None, F.mean, sv.mean(), se,
                 abs(sv.mean() - F.mean) <= max(BAND * se, 1e-12)])
    rows.append(["mean_exits", None, None, batch.n_exits.mean(), None, None])
    return {"header": ["quantity", "atom", "target", "empirical", "stderr", "in_band"],
            "rows": rows, "default": "csv"}


def cmd_report(cfg: RunConfig, dist: Distribution) -> dict:
    """alpha -> excess -> bounds -> simulation, with a PASS/FAIL per check."""
    adj = adjustment_coefficient(dist)
    xs = sorted(cfg.xs) or [0.5, 1.0, 2.0]
    rep = bounds_report(dist, cfg.d, xs, cfg.cap_policy, adj)
    free = rep.excess_unrestricted
    mu, sigma = bm_parameters(dist, adj.alpha)
    rows = [
        ["alpha", None, adj.alpha, None, None, None, None, ""],
        ["riskiness", None, adj.riskiness, None, None, None, None, ""],
        ["gaussian_rate", None, adj.gaussian_rate, None, None, None, None, ""],
        ["d_plus", cfg.d, rep.excess.d_plus, None, None, None, None, ""],
        ["d_minus", cfg.d, rep.excess.d_minus, None, None, None, None, ""],
        ["d_zero", cfg.d, rep.excess.d_zero, None, None, None, None, ""],
        ["d_zero_unrestricted", None, free.d_zero, None, None, None, None, ""],
        ["bm_sigma", None, sigma, None, None, None, None, ""],
    ]

    def check(name, param, est, se, lo, up):
        band = BAND * se
        ok = lo - band <= est <= up + band
        rows.append([name, param, est, se, lo, up, band, "PASS" if ok else "FAIL"])

    est = estimate_expected_max(dist, cfg.d, cfg.n, cfg.seed)
    check("expected_max", cfg.d, est.mean, est.stderr, rep.emax_lower, rep.emax_upper)
    if rep.emax_exact is not None:
        check("expected_max_exact", cfg.d, est.mean, est.stderr, rep.emax_exact,
              rep.emax_exact)
    ests = estimate_min_tail(dist, xs, cfg.n, cfg.seed, cfg.eps, adj.alpha)
    for (x, lo, up), e in zip(rep.min_tail, ests):
        check("min_tail", x, e.mean, e.stderr, lo, up)
    est = stopped_martingale_check(dist, cfg.d, cfg.n, cfg.seed, adj.alpha)
    check("stopped_martingale", cfg.d, est.mean, est.stderr, 1.0, 1.0)
    header = ["check", "param", "estimate", "stderr", "lower", "upper", "band", "status"]
    return {"header": header, "rows": rows, "default": "text",
            "json": {"bounds": rep.to_dict(),
                     "checks": [dict(zip(header, r)) for r in rows]}}


COMMANDS = {
    "alpha": cmd_alpha,
    "excess": cmd_excess,
    "bounds": cmd_bounds,
    "simulate": cmd_simulate,
    "embed": cmd_embed,
    "report": cmd_report,
}


def run(cfg: RunConfig, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        dist = _dist(cfg)
        payload = COMMANDS[cfg.subcommand](cfg, dist)
    except (ValidationError, OSError, ValueError) as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2
    except NumericalError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 3
    fmt_name = cfg.output or payload.get("default", "csv")
    if fmt_name == "text" and "text" in payload:
        out.write("\n".join(payload["text"]) + "\n")
    else:
        emit(payload, fmt_name, out)
    return 0


def _seed(text: str) -> int:
    return int(text, 0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rwbounds", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--dist", dest="dist_path", help="distribution spec JSON file")
        src.add_argument("--preset", choices=presets.names())
        p.add_argument("--format", dest="output", choices=FORMATS)

    def sim_flags(p, n_default):
        p.add_argument("--d", type=float, default=1.0)
        p.add_argument("--x", dest="xs", type=float, action="append", default=[])
        p.add_argument("--n", type=int, default=n_default)
        p.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
        p.add_argument("--eps", type=float, default=DEFAULT_EPS)
        p.add_argument("--cap-policy", choices=("d", "none"), default="d")

    common(sub.add_parser("alpha", help="adjustment coefficient"))
    p = sub.add_parser("excess", help="excess constants d+, d-, d0")
    common(p)
    p.add_argument("--cap", type=float)
    p = sub.add_parser("bounds", help="bounds on E[M_d] and on the minimum tail")
    common(p)
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--x", dest="xs", type=float, action="append", default=[])
    p.add_argument("--cap-policy", choices=("d", "none"), default="d")
    p = sub.add_parser("simulate", help="Monte Carlo estimates against the bounds")
    p.add_argument("mode", choices=("max", "min", "martingale"))
    common(p)
    sim_flags(p, 100_000)
    p.add_argument("--steps", type=int, default=10, help="walk length for martingale")
    p = sub.add_parser("embed", help="Skorokhod embedding of a finite-support law")
    common(p)
    p.add_argument("--scheme", choices=SCHEMES, default="day")
    p.add_argument("--n", type=int, default=100_000)
    p.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    p = sub.add_parser("report", help="end-to-end run with PASS/FAIL checks")
    common(p)
    sim_flags(p, 100_000)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**{k: v for k, v in vars(args).items()
                       if k in RunConfig.__dataclass_fields__})
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
