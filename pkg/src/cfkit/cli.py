"""Command-line interface.

Subcommands: distance, score, simulate, pain-eval, sweep, export-figures.
Plain output prints numbers with six decimals; CSV and JSON carry full
precision.  Data goes to stdout or --out; errors go to stderr as one JSON
line; the process exits nonzero on failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from contextlib import nullcontext

import numpy as np

from . import figures
from .cfn import CognitiveFuzzyNumber
from .distance import (
    CHEBYSHEV,
    DistanceParams,
    cf_c,
    cf_h,
    cf_im,
    legacy_minkowski,
)
from .errors import CfkitError
from .pain import (
    DEFAULT_CONFUSION_THRESHOLD,
    assessment_from_dict,
    interpret,
    legacy_comparison_sweep,
    sensitivity_sweep,
    solve_programming1,
)
from .perturbation import DEFAULT_SEED, PerturbationConfig, lambda_trend, run_study
from .score import score

SEED_ENV = "CFKIT_SEED"


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{SEED_ENV} must be an integer, got {raw!r}") from exc


def _order(text: str):
    if text.strip().lower() in ("inf", "chebyshev", "cheb"):
        return CHEBYSHEV
    return int(text)


def _cfn(text: str) -> CognitiveFuzzyNumber:
    return CognitiveFuzzyNumber.parse(text)


def _open_out(path):
    return open(path, "w", newline="") if path else nullcontext(sys.stdout)


def _write_rows(path, header, rows) -> None:
    with _open_out(path) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([figures.csv_cell(x) for x in row])


# ---------------------------------------------------------------------------
# subcommand runners
# ---------------------------------------------------------------------------

def _run_distance(args) -> int:
    params = DistanceParams(p=args.p, lam=args.lam)

    def measure(f1, f2):
        if args.measure == "legacy":
            return legacy_minkowski(f1, f2, args.p)
        if args.measure == "im":
            return cf_im(f1, f2, args.p)
        if args.measure == "h":
            return cf_h(f1, f2)
        return cf_c(f1, f2, params)

    if args.batch:
        lines = []
        with open(args.batch, newline="") as fh:
            for row in csv.reader(fh):
                if not row:
                    continue
                u1, v1, j1, u2, v2, j2 = (float(x) for x in row)
                d = measure(CognitiveFuzzyNumber(u1, v1, j1), CognitiveFuzzyNumber(u2, v2, j2))
                lines.append(f"{d:.6f}")
        text = "\n".join(lines) + "\n"
    elif args.f1 is not None and args.f2 is not None:
        text = f"{measure(args.f1, args.f2):.6f}\n"
    else:
        raise ValueError("distance needs two CFN literals or --batch FILE")

    with _open_out(args.out) as fh:
        fh.write(text)
    return 0


def _run_score(args) -> int:
    if args.sweep:
        rows = []
        for lam in np.linspace(0.0, 1.0, 101):
            for p in range(1, 11):
                s = score(args.f, DistanceParams(p=p, lam=float(lam))).s
                rows.append((float(lam), p, s))
        _write_rows(args.out, ("lambda", "p", "s"), rows)
        return 0

    result = score(args.f, DistanceParams(p=args.p, lam=args.lam))
    if args.json:
        text = json.dumps(
            {"s": result.s, "d_to_worst": result.d_to_worst, "d_to_best": result.d_to_best}
        ) + "\n"
    else:
        text = (
            f"s={result.s:.6f} d_to_worst={result.d_to_worst:.6f} "
            f"d_to_best={result.d_to_best:.6f}\n"
        )
    with _open_out(args.out) as fh:
        fh.write(text)
    return 0


def _run_simulate(args) -> int:
    config = PerturbationConfig(
        base_pair=tuple(args.pair),
        trials=args.trials,
        seed=args.seed,
        p_values=tuple(args.p) if args.p else (1, 2, 3),
        lambda_values=tuple(args.lam) if args.lam else (0.0, 0.25, 0.5, 0.75, 1.0),
    )
    result = run_study(config)
    _write_rows(args.out, figures.STUDY_HEADER, figures.study_rows(result))
    return 0


def _run_pain_eval(args) -> int:
    if args.input:
        with open(args.input) as fh:
            assessment, params = assessment_from_dict(json.load(fh))
        u, v = assessment.sim_to_scale0, assessment.sim_to_scale10
        patient_pain = assessment.patient_pain
    else:
        if not (args.sweep or args.legacy_sweep):
            raise ValueError("pain-eval needs --input FILE.json (or --sweep/--legacy-sweep)")
        u, v = figures.DEMO_SIM_SCALE0, figures.DEMO_SIM_SCALE10
        patient_pain = figures.DEMO_PATIENT_PAIN
        params = DistanceParams(p=2, lam=0.5)

    if args.sweep:
        rows = [
            ("cfc",) + tuple(row)
            for row in sensitivity_sweep(
                u, v, patient_pain, p_list=range(1, 11), lambda_grid=np.linspace(0.0, 1.0, 21)
            )
        ]
        _write_rows(args.out, figures.PAIN_SWEEP_HEADER, rows)
        return 0
    if args.legacy_sweep:
        rows = [
            ("legacy", row.p, None, row.j_opt, row.s_opt, row.gap)
            for row in legacy_comparison_sweep(u, v, patient_pain, p_list=range(1, 11))
        ]
        _write_rows(args.out, figures.PAIN_SWEEP_HEADER, rows)
        return 0

    solution = solve_programming1(
        u, v, patient_pain, params, confusion_threshold=args.threshold
    )
    verdict = interpret(solution, args.threshold)
    payload = solution.to_dict()
    payload["recommendation"] = verdict.recommendation
    payload["final_pain_score"] = verdict.final_pain_score
    with _open_out(args.out) as fh:
        fh.write(json.dumps(payload, indent=2) + "\n")
    return 0


def _run_sweep(args) -> int:
    grid = np.linspace(0.0, 1.0, args.lambda_points)
    rows = []
    for p in args.p if args.p else (1,):
        for trend in lambda_trend((args.f1, args.f2), p, grid):
            rows.append((p,) + tuple(trend))
    _write_rows(args.out, ("p", "lambda", "d_m", "d_h", "d_c"), rows)
    return 0


def _run_export_figures(args) -> int:
    paths = figures.export_figure_datasets(args.out_dir, seed=args.seed)
    for path in paths:
        print(path)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cfkit",
        description="Cognitive fuzzy number distances, scores, simulations, and pain evaluation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    dist = sub.add_parser("distance", help="distance between two CFNs")
    dist.add_argument("--measure", choices=("legacy", "im", "h", "c"), required=True)
    dist.add_argument("--p", type=_order, default=2,
                      help="Minkowski order 1..64 or 'inf' (read by legacy/im/c)")
    dist.add_argument("--lambda", dest="lam", type=float, default=0.5,
                      help="balance parameter (read by measure c only)")
    dist.add_argument("--batch", help="CSV of rows u1,v1,j1,u2,v2,j2")
    dist.add_argument("--out")
    dist.add_argument("f1", nargs="?", type=_cfn, help="CFN literal like '0.8,0.4,0.32'")
    dist.add_argument("f2", nargs="?", type=_cfn)
    dist.set_defaults(func=_run_distance)

    sc = sub.add_parser("score", help="combined-distance score of a CFN")
    sc.add_argument("--p", type=_order, default=2)
    sc.add_argument("--lambda", dest="lam", type=float, default=0.5)
    sc.add_argument("--json", action="store_true", help="full-precision JSON output")
    sc.add_argument("--sweep", action="store_true",
                    help="CSV of scores over lambda 0..1 x p 1..10")
    sc.add_argument("--out")
    sc.add_argument("f", type=_cfn)
    sc.set_defaults(func=_run_score)

    sim = sub.add_parser("simulate", help="Monte-Carlo perturbation study of a pair")
    sim.add_argument("--pair", nargs=2, type=_cfn, required=True, metavar=("F1", "F2"))
    sim.add_argument("--trials", type=int, default=100)
    sim.add_argument("--seed", type=int, default=_default_seed())
    sim.add_argument("--p", action="append", type=_order,
                     help="repeatable; default 1 2 3")
    sim.add_argument("--lambda", dest="lam", action="append", type=float,
                     help="repeatable; default 0 0.25 0.5 0.75 1")
    sim.add_argument("--out")
    sim.set_defaults(func=_run_simulate)

    pain = sub.add_parser("pain-eval", help="solve a pain assessment")
    pain.add_argument("--input", help="assessment JSON file")
    pain.add_argument("--threshold", type=float, default=DEFAULT_CONFUSION_THRESHOLD)
    pain.add_argument("--sweep", action="store_true",
                      help="CSV over p 1..10 x lambda 0..1 (default assessment if no --input)")
    pain.add_argument("--legacy-sweep", action="store_true",
                      help="CSV over p 1..10 under the hesitancy-blind score")
    pain.add_argument("--out")
    pain.set_defaults(func=_run_pain_eval)

    sw = sub.add_parser("sweep", help="distance-versus-lambda trend of a pair")
    sw.add_argument("--p", action="append", type=_order, help="repeatable; default 1")
    sw.add_argument("--lambda-points", type=int, default=101)
    sw.add_argument("--out")
    sw.add_argument("f1", type=_cfn)
    sw.add_argument("f2", type=_cfn)
    sw.set_defaults(func=_run_sweep)

    exp = sub.add_parser("export-figures", help="write the bundled demo datasets")
    exp.add_argument("out_dir")
    exp.add_argument("--seed", type=int, default=_default_seed())
    exp.set_defaults(func=_run_export_figures)

    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except (CfkitError, ValueError, OSError) as exc:
        print(
            json.dumps({"error": type(exc).__name__, "message": str(exc)}),
            file=sys.stderr,
        )
        return 1


if __name__ == "__main__":
    sys.exit(main())
