"""Experiment-facing layer: counts CSV, bootstrap error bars, reports, curves.

Counts CSV schema (strict): header ``setting,outcome,count``; twelve data
rows covering every (setting, outcome) pair with setting in {x, y, z} and
outcome in {00, 01, 10, 11}; counts are non-negative integers.  Lines
starting with ``#`` are comments; row order is free.

Error bars are parametric bootstrap: each observed cell is resampled as
Poisson with mean equal to the observed count, the criteria are re-evaluated
per resample, and the error bar is the standard deviation over resamples.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import criteria
from .measure import (AXES, CountRecord, correlation, estimate_distribution,
                      simulate_counts, spawn_generator)
from .measure import joint_distribution as _joint_distribution
from .qmat import make_werner_like

OUTCOME_LABELS = ("00", "01", "10", "11")
CSV_HEADER = "setting,outcome,count"
CURVE_CSV_HEADER = "chi,scg_q2,scg_q1,lsc,bound_q2,bound_q1,bound_lsc"

DEFAULT_QS = (2.0, 1.0)
DEFAULT_BOOTSTRAP = 1000
BOOTSTRAP_STREAM = 3  # streams 0..2 are reserved for per-axis simulation


class CountsFormatError(ValueError):
    """The counts CSV violates the schema; the message carries the line number."""


@dataclass(frozen=True)
class ExperimentRecord:
    """One full experiment: a label and one CountRecord per axis (x, y, z)."""

    label: str
    records: tuple[CountRecord, CountRecord, CountRecord]

    def __post_init__(self):
        axes = tuple(rec.axis for rec in self.records)
        if axes != AXES:
            raise ValueError(f"records must cover axes x, y, z in order, got "
                             f"{[a.value for a in axes]}")
        for rec in self.records:
            if rec.total < 1:
                raise ValueError(f"axis {rec.axis.value} has zero total count")


def parse_counts_csv(text: str, label: str = "counts") -> ExperimentRecord:
    """Parse the strict 12-row counts CSV; errors cite the offending line."""
    seen: dict[tuple[str, str], tuple[int, int]] = {}
    header_found = False
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not header_found:
            if line != CSV_HEADER:
                raise CountsFormatError(
                    f"line {lineno}: expected header '{CSV_HEADER}', got '{line}'"
                )
            header_found = True
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) != 3:
            raise CountsFormatError(
                f"line {lineno}: expected 3 comma-separated fields, got {len(fields)}"
            )
        setting, outcome, count_text = fields
        if setting not in ("x", "y", "z"):
            raise CountsFormatError(
                f"line {lineno}: unknown setting '{setting}' (expected x, y or z)"
            )
        if outcome not in OUTCOME_LABELS:
            raise CountsFormatError(
                f"line {lineno}: unknown outcome '{outcome}' "
                f"(expected one of {', '.join(OUTCOME_LABELS)})"
            )
        try:
            count = int(count_text)
        except ValueError:
            count = -1
        if count < 0:
            raise CountsFormatError(
                f"line {lineno}: count '{count_text}' is not a non-negative integer"
            )
        key = (setting, outcome)
        if key in seen:
            raise CountsFormatError(
                f"line {lineno}: duplicate entry for ({setting}, {outcome}), "
                f"first seen at line {seen[key][0]}"
            )
        seen[key] = (lineno, count)
    if not header_found:
        raise CountsFormatError(f"empty input: expected header '{CSV_HEADER}'")
    missing = [f"({axis.value}, {out})" for axis in AXES for out in OUTCOME_LABELS
               if (axis.value, out) not in seen]
    if missing:
        raise CountsFormatError(f"missing rows: {', '.join(missing)}")

    records = []
    for axis in AXES:
        cells = np.array(
            [[seen[(axis.value, "00")][1], seen[(axis.value, "01")][1]],
             [seen[(axis.value, "10")][1], seen[(axis.value, "11")][1]]]
        )
        records.append(CountRecord(axis, cells))
    return ExperimentRecord(label, tuple(records))


def serialize_counts_csv(rec: ExperimentRecord) -> str:
    """Render the canonical counts CSV (axes x, y, z; outcomes in order)."""
    lines = [CSV_HEADER]
    for record in rec.records:
        for idx, outcome in enumerate(OUTCOME_LABELS):
            lines.append(f"{record.axis.value},{outcome},{record.counts[idx // 2, idx % 2]}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class EvaluationReport:
    """Criterion verdicts plus the probability tables they were computed from."""

    label: str
    criteria: tuple[criteria.CriterionReport, ...]
    probabilities: dict       # axis letter -> [p00, p01, p10, p11]
    totals: Optional[dict]    # axis letter -> total counts (None when analytic)
    seed: Optional[int]       # bootstrap seed (None when analytic)


def _criterion_key(report: criteria.CriterionReport) -> str:
    if report.criterion == criteria.LSC:
        return "lsc"
    return f"scg_q{report.q:g}"


def report_to_json(report: EvaluationReport, indent: int = 2) -> str:
    """Structured-text rendering with fixed field names."""
    doc = {
        "label": report.label,
        "criteria": [
            {
                "criterion": c.criterion,
                "q": c.q,
                "lhs": c.lhs,
                "bound": c.bound,
                "steerable": c.steerable,
                "error_bar": c.error_bar,
            }
            for c in report.criteria
        ],
        "probabilities": report.probabilities,
        "totals": report.totals,
        "bounds": {_criterion_key(c): c.bound for c in report.criteria},
        "seed": report.seed,
    }
    return json.dumps(doc, indent=indent)


def _criteria_from_joints(joints, qs: Sequence[float],
                          error_bars: Optional[dict] = None):
    reports = []
    for q in qs:
        bar = None if error_bars is None else error_bars.get(f"scg_q{q:g}")
        reports.append(criteria.verdict(
            criteria.SCG, criteria.scg_lhs(joints, q), criteria.scg_bound(q),
            q=q, error_bar=bar,
        ))
    lsc_lhs = criteria.lsc_value([correlation(jd) for jd in joints])
    bar = None if error_bars is None else error_bars.get("lsc")
    reports.append(criteria.verdict(criteria.LSC, lsc_lhs, criteria.LSC_BOUND,
                                    error_bar=bar))
    return tuple(reports)


def _bootstrap_error_bars(rec: ExperimentRecord, qs: Sequence[float],
                          resamples: int, seed: int) -> dict:
    """Std deviation of each criterion over Poisson resamples of the counts.

    All resamples are drawn in one pass from the (seed, BOOTSTRAP_STREAM)
    generator, so results depend only on (record, seed, resamples).
    """
    observed = np.stack([record.counts for record in rec.records]).astype(float)
    rng = spawn_generator(seed, BOOTSTRAP_STREAM)
    draws = rng.poisson(lam=observed, size=(resamples, 3, 2, 2)).astype(float)
    totals = draws.sum(axis=(2, 3))
    valid = np.all(totals >= 1, axis=1)  # degenerate resamples are dropped
    draws, totals = draws[valid], totals[valid]
    p = draws / totals[:, :, np.newaxis, np.newaxis]
    marginal = p.sum(axis=3)

    bars = {}
    for q in qs:
        samples = criteria.scg_lhs_cells(p, marginal, q)
        bars[f"scg_q{q:g}"] = float(np.std(samples, ddof=1))
    corr = p[:, :, 0, 0] - p[:, :, 0, 1] - p[:, :, 1, 0] + p[:, :, 1, 1]
    bars["lsc"] = float(np.std(np.linalg.norm(corr, axis=1), ddof=1))
    return bars


def evaluate_record(rec: ExperimentRecord, qs: Sequence[float] = DEFAULT_QS,
                    bootstrap: int = DEFAULT_BOOTSTRAP, seed: int = 0) -> EvaluationReport:
    """Estimate probabilities from counts and evaluate SCG (per q) and LSC."""
    for record in rec.records:
        if record.total < 1:
            raise ValueError(f"axis {record.axis.value} has zero total count")
    if bootstrap < 2:
        raise ValueError("bootstrap resample count must be at least 2")
    joints = tuple(estimate_distribution(record) for record in rec.records)
    error_bars = _bootstrap_error_bars(rec, qs, bootstrap, seed)
    reports = _criteria_from_joints(joints, qs, error_bars)
    return EvaluationReport(
        label=rec.label,
        criteria=reports,
        probabilities={jd.axis.value: [float(v) for v in jd.p.reshape(-1)]
                       for jd in joints},
        totals={record.axis.value: record.total for record in rec.records},
        seed=seed,
    )


def evaluate_state(theta: float, chi: float, qs: Sequence[float] = DEFAULT_QS,
                   label: Optional[str] = None) -> EvaluationReport:
    """Analytic evaluation of a Werner-like state; no error bars."""
    rho = make_werner_like(theta, chi)
    joints = tuple(_joint_distribution(rho, axis) for axis in AXES)
    if label is None:
        label = f"werner_like(theta={math.degrees(theta):g}deg, chi={chi:g})"
    return EvaluationReport(
        label=label,
        criteria=_criteria_from_joints(joints, qs),
        probabilities={jd.axis.value: [float(v) for v in jd.p.reshape(-1)]
                       for jd in joints},
        totals=None,
        seed=None,
    )


def simulate_record(theta: float, chi: float, shots: int, seed: int,
                    label: Optional[str] = None) -> ExperimentRecord:
    """Simulate one full experiment: Poisson counts for each axis.

    Axis k uses stream index k (x=0, y=1, z=2) under the master seed.
    """
    rho = make_werner_like(theta, chi)
    records = tuple(
        simulate_counts(_joint_distribution(rho, axis), shots, seed, stream=idx)
        for idx, axis in enumerate(AXES)
    )
    if label is None:
        label = (f"simulated werner_like(theta={math.degrees(theta):g}deg, "
                 f"chi={chi:g}, shots={shots}, seed={seed})")
    return ExperimentRecord(label, records)


def sweep_curve(theta: float, chi_steps: int,
                qs: Sequence[float] = DEFAULT_QS) -> np.ndarray:
    """Analytic criterion curves on a uniform chi grid.

    Columns: chi, SCG lhs for qs[0] and qs[1], LSC lhs, then the three
    bounds.  With the default qs this matches the curve CSV header.
    """
    if chi_steps < 2:
        raise ValueError("chi_steps must be at least 2")
    if len(qs) != 2:
        raise ValueError("sweep_curve expects exactly two entropic indices")
    rows = np.empty((chi_steps, 7))
    bounds = (criteria.scg_bound(qs[0]), criteria.scg_bound(qs[1]), criteria.LSC_BOUND)
    for row, chi in enumerate(np.linspace(0.0, 1.0, chi_steps)):
        joints = criteria.analytic_joints(theta, chi)
        rows[row] = (
            chi,
            criteria.scg_lhs(joints, qs[0]),
            criteria.scg_lhs(joints, qs[1]),
            criteria.lsc_value([correlation(jd) for jd in joints]),
            *bounds,
        )
    return rows


def curve_to_csv(rows: np.ndarray) -> str:
    lines = [CURVE_CSV_HEADER]
    for row in rows:
        lines.append(",".join(f"{value:.12g}" for value in row))
    return "\n".join(lines) + "\n"


# Reference measurements from a published coincidence-count experiment on the
# two Werner-like families, used to check the analytic predictions at desk
# scale.  Rows: chi -> (SCG q=2, SCG q->1, LSC).
REFERENCE_WERNER = (  # theta = 22.5 deg
    (0.00, 1.4993, 2.0787, 0.0608),
    (0.10, 1.4807, 2.0601, 0.1668),
    (0.34, 1.3279, 1.9038, 0.6028),
    (0.42, 1.2340, 1.8049, 0.7141),
    (0.50, 1.1255, 1.6875, 0.8729),
    (0.58, 0.9982, 1.5450, 1.0133),
    (0.66, 0.8471, 1.3683, 1.1582),
    (0.74, 0.6781, 1.1585, 1.2945),
    (0.90, 0.2883, 0.6009, 1.5728),
    (1.00, 0.0048, 0.0195, 1.6995),
)
REFERENCE_TILTED = (  # theta = 7.5 deg
    (0.00, 1.4993, 2.0787, 0.0608),
    (0.15, 1.4747, 2.0539, 0.1865),
    (0.30, 1.4179, 1.9953, 0.3727),
    (0.45, 1.3236, 1.8935, 0.5504),
    (0.55, 1.2484, 1.8096, 0.6772),
    (0.65, 1.1611, 1.7071, 0.7833),
    (0.75, 1.0664, 1.5912, 0.8931),
    (0.81, 0.9965, 1.5012, 0.9810),
    (0.89, 0.9054, 1.3775, 1.0786),
    (1.00, 0.7605, 1.1470, 1.2092),
)
REFERENCE_FAMILIES = (
    ("werner_22.5deg", math.radians(22.5), REFERENCE_WERNER),
    ("tilted_7.5deg", math.radians(7.5), REFERENCE_TILTED),
)


@dataclass(frozen=True)
class ComparisonRow:
    family: str
    chi: float
    criterion: str  # scg_q2 | scg_q1 | lsc
    analytic: float
    measured: float

    @property
    def deviation(self) -> float:
        return abs(self.analytic - self.measured)


@dataclass(frozen=True)
class TableComparison:
    rows: tuple[ComparisonRow, ...]

    @property
    def max_deviation(self) -> float:
        return max(row.deviation for row in self.rows)

    def count_within(self, tol: float) -> int:
        return sum(1 for row in self.rows if row.deviation <= tol)


def reproduce_tables() -> TableComparison:
    """Analytic predictions next to the reference measurements, row by row."""
    rows = []
    for family, theta, table in REFERENCE_FAMILIES:
        for chi, measured_q2, measured_q1, measured_lsc in table:
            joints = criteria.analytic_joints(theta, chi)
            analytic = (
                ("scg_q2", criteria.scg_lhs(joints, 2.0), measured_q2),
                ("scg_q1", criteria.scg_lhs(joints, 1.0), measured_q1),
                ("lsc", criteria.lsc_value([correlation(jd) for jd in joints]),
                 measured_lsc),
            )
            for name, value, measured in analytic:
                rows.append(ComparisonRow(family, chi, name, value, measured))
    return TableComparison(tuple(rows))


def comparison_to_text(cmp: TableComparison) -> str:
    lines = [f"{'family':<16} {'chi':>5} {'criterion':<9} "
             f"{'analytic':>10} {'measured':>10} {'deviation':>10}"]
    for row in cmp.rows:
        lines.append(f"{row.family:<16} {row.chi:>5.2f} {row.criterion:<9} "
                     f"{row.analytic:>10.4f} {row.measured:>10.4f} "
                     f"{row.deviation:>10.4f}")
    lines.append(f"entries: {len(cmp.rows)}  max deviation: {cmp.max_deviation:.4f}  "
                 f"within 0.01: {cmp.count_within(0.01)}")
    return "\n".join(lines) + "\n"
