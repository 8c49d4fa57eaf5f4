"""Command-line front end: zeros, census, audit, sweep, figure-data.

Exit codes: 0 success, 1 usage, 2 inconsistency flagged, 3 precondition
violation, 4 accuracy failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .config import DEFAULT_ZERO_GUARD
from .errors import (AccuracyError, ConfigError, DomainError,
                     InconsistencyError, OnPathZeroError, ResolutionError,
                     UsageError, ZetalineError)
from .littlewood import (AuditRectangle, LittlewoodReport, audit)
from .report import ReportEnvelope, RunConfig, fmt, write_csv
from .special_functions import riemann_siegel_theta
from .zero_census import FullCensus, count_on_line, full_census

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INCONSISTENT = 2
EXIT_PRECONDITION = 3
EXIT_ACCURACY = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", metavar="PATH", help="key-value config file")
    p.add_argument("--threads", type=int, metavar="N",
                   help="worker threads (default: machine parallelism)")
    p.add_argument("--abs-tol", type=float, metavar="X",
                   help="target absolute accuracy of the evaluators")
    p.add_argument("--out", metavar="PATH", required=True, help="output file")


def build_parser() -> _Parser:
    parser = _Parser(prog="zetaline",
                     description="Critical-line zero census and rectangle "
                                 "audits for the completed zeta function.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zeros", help="locate critical-line zeros up to t-max")
    p.add_argument("--t-max", type=float, required=True)
    p.add_argument("--step", type=float, help="scan step (default density-aware)")
    _common_flags(p)

    p = sub.add_parser("census", help="three-way zero count at height T")
    p.add_argument("--T", type=float, required=True)
    _common_flags(p)

    p = sub.add_parser("audit", help="rectangle audit at (alpha, T)")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--T", type=float, required=True)
    _common_flags(p)

    p = sub.add_parser("sweep", help="audits over alpha x T with trend table")
    p.add_argument("--alpha", required=True, help="comma-separated list")
    p.add_argument("--T", required=True, help="comma-separated list")
    p.add_argument("--plot", metavar="PATH", help="also render residual trend")
    _common_flags(p)

    p = sub.add_parser("figure-data", help="plottable series as CSV")
    p.add_argument("kind", choices=["z-trace", "s-staircase", "residuals"])
    p.add_argument("--t-min", type=float, default=0.0)
    p.add_argument("--t-max", type=float)
    p.add_argument("--step", type=float, default=0.05)
    p.add_argument("--from-sweep", metavar="PATH",
                   help="sweep CSV to extract residual curves from")
    p.add_argument("--plot", metavar="PATH", help="also render the figure")
    _common_flags(p)
    return parser


def _run_config(args) -> RunConfig:
    overrides = {"threads": getattr(args, "threads", None),
                 "abs_tol": getattr(args, "abs_tol", None)}
    return RunConfig.from_sources(config_path=args.config, overrides=overrides)


def _parse_list(raw: str, what: str) -> list[float]:
    try:
        vals = [float(x) for x in raw.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad {what} list: {raw!r}")
    if not vals:
        raise UsageError(f"{what} list is empty")
    return vals


def cmd_zeros(args) -> int:
    rc = _run_config(args)
    n0, records = count_on_line(
        args.t_max, rc.eval_config(), zero_tol=rc.zero_tol,
        residual_tol=rc.residual_tol, step=args.step,
        threads=rc.effective_threads())
    rows = [(i + 1, r.ordinate, r.bracket_lo, r.bracket_hi, r.residual)
            for i, r in enumerate(records)]
    write_csv(args.out, ["index", "gamma", "bracket_lo", "bracket_hi",
                         "residual"], rows)
    print(f"zeros: {n0} zeros below t={args.t_max:g} -> {args.out}")
    return EXIT_OK


def _census_payload(fc: FullCensus) -> dict:
    r = fc.report
    return {
        "T": r.T, "n0": r.n0, "n_strip": r.n_argument_principle,
        "n_mangoldt": r.n_mangoldt_real, "s_of_T": r.s_of_T, "ratio": r.ratio,
        "theorem_bound_product": abs(r.ratio - 1.0) * r.T * math.log(r.T),
    }


def cmd_census(args) -> int:
    rc = _run_config(args)
    fc = full_census(args.T, rc.eval_config(), zero_tol=rc.zero_tol,
                     threads=rc.effective_threads())
    env = ReportEnvelope(command="census", config=rc.echo_dict(),
                         payload=_census_payload(fc), flags=fc.report.flags)
    env.write(args.out)
    print(f"census: T={args.T:g} n0={fc.report.n0} "
          f"n_strip={fc.report.n_argument_principle} "
          f"ratio={fc.report.ratio:g} -> {args.out}")
    return EXIT_INCONSISTENT if fc.report.flags else EXIT_OK


def _report_payload(rep: LittlewoodReport) -> dict:
    payload = dataclasses.asdict(rep)
    payload["rectangle"] = {"alpha": rep.rectangle.alpha, "T": rep.rectangle.T}
    return payload


def _audit_once(alpha: float, T: float, rc: RunConfig,
                census: FullCensus | None = None) -> LittlewoodReport:
    rect = AuditRectangle(alpha=alpha, T=T)
    return audit(rect, rc.eval_config(), census=census,
                 quadrature_tol=rc.quadrature_tol,
                 identity_tol=rc.identity_tol, vertical_tol=rc.vertical_tol,
                 asymptotic_tol=rc.asymptotic_tol,
                 threads=rc.effective_threads())


def cmd_audit(args) -> int:
    rc = _run_config(args)
    rep = _audit_once(args.alpha, args.T, rc)
    env = ReportEnvelope(command="audit", config=rc.echo_dict(),
                         payload=_report_payload(rep), flags=rep.flags)
    env.write(args.out)
    verdict = "PASS" if all(rep.checks.values()) else "FAIL"
    detail = " ".join(f"{k}={'ok' if v else 'FAIL'}"
                      for k, v in rep.checks.items())
    print(f"audit alpha={args.alpha:g} T={args.T:g}: {verdict} ({detail}) "
          f"residual_identity={rep.residual_identity:.3e} -> {args.out}")
    if not all(rep.checks.values()):
        return EXIT_ACCURACY
    return EXIT_INCONSISTENT if rep.flags else EXIT_OK


SWEEP_COLUMNS = [
    "alpha", "T", "lhs", "rhs_vertical", "rhs_horizontal", "rhs_total",
    "arg_xi_integral", "asymptotic_rhs", "n0", "n_strip",
    "residual_identity", "residual_asymptotic", "residual_theorem", "error",
]


def cmd_sweep(args) -> int:
    rc = _run_config(args)
    alphas = _parse_list(args.alpha, "alpha")
    for a in alphas:
        if not (0.0 < a < 0.5):
            raise DomainError(f"alpha must lie in (0, 1/2), got {a!r}")
    t_values = sorted(set(_parse_list(args.T, "T")))
    if any(t <= 0.0 for t in t_values):
        raise DomainError("T values must be positive")

    censuses: dict[float, FullCensus | Exception] = {}
    for T in t_values:
        try:
            censuses[T] = full_census(T, rc.eval_config(), zero_tol=rc.zero_tol,
                                      threads=rc.effective_threads())
        except ZetalineError as exc:
            censuses[T] = exc

    rows = []
    ok_cells = 0
    resid_by_alpha: dict[float, list[tuple[float, float]]] = {}
    for alpha in alphas:
        for T in t_values:
            fc = censuses[T]
            if isinstance(fc, Exception):
                rows.append([alpha, T] + [""] * 11
                            + [f"census: {fc}"])
                continue
            try:
                rep = _audit_once(alpha, T, rc, census=fc)
            except ZetalineError as exc:
                rows.append([alpha, T] + [""] * 11 + [str(exc)])
                continue
            ok_cells += 1
            rows.append([
                alpha, T, rep.lhs_sum_distances, rep.rhs_vertical,
                rep.rhs_horizontal, rep.rhs_total, rep.arg_xi_integral,
                rep.asymptotic_rhs, fc.report.n0,
                fc.report.n_argument_principle, rep.residual_identity,
                rep.residual_asymptotic, rep.residual_theorem, ""])
            resid_by_alpha.setdefault(alpha, []).append(
                (T, rep.residual_asymptotic))

    trailer = ["", "# trend: first differences of residual_asymptotic over T",
               "# alpha,T_from,T_to,d_residual_asymptotic"]
    for alpha in alphas:
        pts = sorted(resid_by_alpha.get(alpha, []))
        for (t0, r0), (t1, r1) in zip(pts, pts[1:]):
            trailer.append("# " + ",".join(
                fmt(v) for v in (alpha, t0, t1, r1 - r0)))
    write_csv(args.out, SWEEP_COLUMNS, rows, trailer_lines=trailer)
    print(f"sweep: {ok_cells}/{len(alphas) * len(t_values)} cells -> {args.out}")
    if args.plot and resid_by_alpha:
        from .figures import render_residuals
        triples = [(a, T, r) for a, pts in resid_by_alpha.items()
                   for T, r in pts]
        render_residuals(triples, args.plot)
        print(f"sweep: rendered {args.plot}")
    return EXIT_OK if ok_cells >= 1 else EXIT_PRECONDITION


def cmd_figure_data(args) -> int:
    rc = _run_config(args)
    cfg = rc.eval_config()
    if args.kind == "z-trace":
        if args.t_max is None:
            raise UsageError("z-trace requires --t-max")
        from .special_functions import _hardy_z_many
        n = max(1, round((args.t_max - args.t_min) / args.step))
        ts = args.t_min + (args.t_max - args.t_min) * np.arange(n + 1) / n
        vals, _ = _hardy_z_many(ts, cfg.sized_for(args.t_max))
        write_csv(args.out, ["t", "z_of_t"], zip(ts.tolist(), vals.tolist()))
        if args.plot:
            from .figures import render_z_trace
            render_z_trace(ts.tolist(), vals.tolist(), args.plot)
        print(f"figure-data z-trace: {len(ts)} rows -> {args.out}")
        return EXIT_OK

    if args.kind == "s-staircase":
        if args.t_max is None:
            raise UsageError("s-staircase requires --t-max")
        _, records = count_on_line(args.t_max, cfg, zero_tol=rc.zero_tol,
                                   threads=rc.effective_threads())
        gammas = [r.ordinate for r in records]
        n = max(1, round((args.t_max - args.t_min) / args.step))
        ts = args.t_min + (args.t_max - args.t_min) * np.arange(n + 1) / n
        rows = []
        for t in ts.tolist():
            if t <= 0.0:
                continue
            count = sum(1 for g in gammas if g < t)
            s_val = count - 1.0 - riemann_siegel_theta(t) / math.pi
            rows.append((t, s_val))
        write_csv(args.out, ["t", "s_of_t"], rows)
        if args.plot:
            from .figures import render_staircase
            render_staircase([r[0] for r in rows], [r[1] for r in rows],
                             args.plot)
        print(f"figure-data s-staircase: {len(rows)} rows -> {args.out}")
        return EXIT_OK

    # residuals: extracted from a sweep CSV
    if not args.from_sweep:
        raise UsageError("residuals requires --from-sweep SWEEP_CSV")
    triples = _read_sweep_residuals(args.from_sweep)
    if not triples:
        raise UsageError(f"no residual rows found in {args.from_sweep}")
    write_csv(args.out, ["alpha", "T", "residual_asymptotic"], triples)
    if args.plot:
        from .figures import render_residuals
        render_residuals(triples, args.plot)
    print(f"figure-data residuals: {len(triples)} rows -> {args.out}")
    return EXIT_OK


def _read_sweep_residuals(path: str) -> list[tuple[float, float, float]]:
    lines = Path(path).read_text().splitlines()
    if not lines:
        return []
    header = lines[0].split(",")
    try:
        ia = header.index("alpha")
        it = header.index("T")
        ir = header.index("residual_asymptotic")
    except ValueError:
        raise UsageError(f"{path} is not a sweep CSV")
    out = []
    for line in lines[1:]:
        if not line or line.startswith("#"):
            continue
        cells = line.split(",")
        if len(cells) <= ir or cells[ir] == "":
            continue
        out.append((float(cells[ia]), float(cells[it]), float(cells[ir])))
    return out


_COMMANDS = {
    "zeros": cmd_zeros,
    "census": cmd_census,
    "audit": cmd_audit,
    "sweep": cmd_sweep,
    "figure-data": cmd_figure_data,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error (usage): {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InconsistencyError as exc:
        print(f"error (inconsistency): {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (DomainError, OnPathZeroError, ResolutionError, ConfigError) as exc:
        print(f"error (precondition): {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except AccuracyError as exc:
        print(f"error (accuracy): {exc}", file=sys.stderr)
        return EXIT_ACCURACY
    except OSError as exc:
        print(f"error (io): {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
