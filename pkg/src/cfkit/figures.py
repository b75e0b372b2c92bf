"""Bundled demonstration datasets.

``export_figure_datasets`` writes six CSV files (fig2 .. fig8, skipping 6)
from fixed, documented default configurations around two bundled inputs:

* a reference CFN pair used by the distance and perturbation datasets, and
* a reference pain assessment (seven items summing to 29, face similarities
  0.4 and 0.7) used by the solver sweeps.

Given the same seed, the export is byte-identical between runs.
"""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

from .cfn import CognitiveFuzzyNumber
from .distance import DistanceParams
from .pain import legacy_comparison_sweep, sensitivity_sweep
from .perturbation import (
    DEFAULT_SEED,
    PerturbationConfig,
    StudyResult,
    lambda_trend,
    run_study,
)
from .score import score

DEMO_PAIR = (
    CognitiveFuzzyNumber(0.8, 0.4, 0.32),
    CognitiveFuzzyNumber(0.1, 0.9, 0.09),
)

DEMO_ITEMS = (4, 4, 4, 4, 4, 4, 5)  # sums to 29
DEMO_SIM_SCALE0 = 0.4
DEMO_SIM_SCALE10 = 0.7
DEMO_PATIENT_PAIN = sum(DEMO_ITEMS) / 70.0

FIGURE_FILES = ("fig2.csv", "fig3.csv", "fig4.csv", "fig5.csv", "fig7.csv", "fig8.csv")

STUDY_HEADER = (
    "trial", "epsilon", "p", "lambda",
    "d_m", "d_h", "d_c", "delta_d_m", "delta_d_h", "delta_d_c",
)

PAIN_SWEEP_HEADER = ("mode", "p", "lambda", "j_opt", "s_opt", "gap")


def csv_cell(x) -> str:
    if isinstance(x, float):
        return repr(x)
    return "" if x is None else str(x)


def study_rows(result: StudyResult) -> list[tuple]:
    """Flatten a perturbation study into (trial, p, lambda) CSV rows."""
    rows = []
    for record in result.records:
        for p in result.config.p_values:
            for lam in result.config.lambda_values:
                cell = record.cells[(p, lam)]
                rows.append((record.index, record.epsilon, p, lam) + tuple(cell))
    return rows


def fig2_rows(seed: int = DEFAULT_SEED) -> list[tuple]:
    config = PerturbationConfig(
        base_pair=DEMO_PAIR, trials=100, seed=seed, p_values=(1, 2, 3), lambda_values=(0.5,)
    )
    return study_rows(run_study(config))


def fig3_rows() -> list[tuple]:
    rows = []
    for p in (1, 2, 3):
        for trend in lambda_trend(DEMO_PAIR, p, np.linspace(0.0, 1.0, 101)):
            rows.append((p,) + tuple(trend))
    return rows


def fig4_rows(seed: int = DEFAULT_SEED) -> list[tuple]:
    config = PerturbationConfig(
        base_pair=DEMO_PAIR,
        trials=100,
        seed=seed,
        p_values=(1, 2, 3),
        lambda_values=(0.0, 0.25, 0.5, 0.75, 1.0),
    )
    return study_rows(run_study(config))


def fig5_rows() -> list[tuple]:
    f1, f2 = DEMO_PAIR
    rows = []
    for lam in np.linspace(0.0, 1.0, 101):
        for p in range(1, 11):
            params = DistanceParams(p=p, lam=float(lam))
            rows.append((float(lam), p, score(f1, params).s, score(f2, params).s))
    return rows


def fig7_rows() -> list[tuple]:
    rows = sensitivity_sweep(
        DEMO_SIM_SCALE0,
        DEMO_SIM_SCALE10,
        DEMO_PATIENT_PAIN,
        p_list=range(1, 11),
        lambda_grid=np.linspace(0.0, 1.0, 21),
    )
    return [("cfc",) + tuple(row) for row in rows]


def fig8_rows() -> list[tuple]:
    rows = legacy_comparison_sweep(
        DEMO_SIM_SCALE0, DEMO_SIM_SCALE10, DEMO_PATIENT_PAIN, p_list=range(1, 11)
    )
    return [("legacy", row.p, None, row.j_opt, row.s_opt, row.gap) for row in rows]


def write_csv(path, header, rows) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([csv_cell(x) for x in row])


def export_figure_datasets(out_dir, seed: int = DEFAULT_SEED) -> list[Path]:
    """Write all six datasets into ``out_dir`` and return the paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    datasets = {
        "fig2.csv": (STUDY_HEADER, fig2_rows(seed)),
        "fig3.csv": (("p", "lambda", "d_m", "d_h", "d_c"), fig3_rows()),
        "fig4.csv": (STUDY_HEADER, fig4_rows(seed)),
        "fig5.csv": (("lambda", "p", "s1", "s2"), fig5_rows()),
        "fig7.csv": (PAIN_SWEEP_HEADER, fig7_rows()),
        "fig8.csv": (PAIN_SWEEP_HEADER, fig8_rows()),
    }
    paths = []
    for name in FIGURE_FILES:
        header, rows = datasets[name]
        path = out / name
        write_csv(path, header, rows)
        paths.append(path)
    return paths
