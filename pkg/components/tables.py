"""CSV bodies for the run artifacts (header, rows)."""

from __future__ import annotations

import math

from core.clustering import GroupCluster, PredictionReport
from core.counters import CounterStereotype
from core.strategies import COLUMNS, StrategyLabel, StrategyTable
from core.validation import REPORT_COLUMNS, AccuracyReport, compare_models

MISSING = "—"

CLUSTER_HEADER = ("target", "warmth", "competence", "quadrant", "representative", "n_kept", "n_discarded")
STRATEGY_HEADER = ("strategy",) + COLUMNS
COUNTER_HEADER = ("target", "stereotype_representative", "x_but_y", "counter", "status")
PREDICTION_HEADER = ("target", "predicted", "observed", "match")
PROJECT_HEADER = ("word", "warmth", "competence")


def format_number(x) -> str:
    """6 significant digits; floats always carry a decimal point."""
    if x is None:
        return MISSING
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, int):
        return str(x)
    x = float(x)
    if math.isnan(x) or math.isinf(x):
        return str(x)
    s = format(x, ".6g")
    if s in ("0", "-0"):
        return "0.0"
    if "." not in s and "e" not in s:
        s += ".0"
    return s


def clusters_to_rows(clusters: list[GroupCluster]):
    rows = [
        [
            c.target,
            format_number(c.mean_point.warmth),
            format_number(c.mean_point.competence),
            c.quadrant.value,
            c.representative,
            c.n_kept,
            c.n_discarded,
        ]
        for c in sorted(clusters, key=lambda c: c.target)
    ]
    return CLUSTER_HEADER, rows


def strategy_table_to_rows(table: StrategyTable):
    percents = {col: table.percentages(col) for col in COLUMNS}
    rows = [
        [label.value] + [format_number(percents[col][label]) for col in COLUMNS]
        for label in StrategyLabel
    ]
    rows.append(["n"] + [table.n(col) for col in COLUMNS])
    return STRATEGY_HEADER, rows


def counters_to_rows(counters: list[CounterStereotype]):
    rows = [
        [c.target, c.stereotype_representative, c.x_but_y, c.counter, c.status.value]
        for c in sorted(counters, key=lambda c: c.target)
    ]
    return COUNTER_HEADER, rows


def predictions_to_rows(report: PredictionReport):
    rows = [
        [r.target, r.predicted.value, r.observed.value, format_number(r.match)]
        for r in report.rows
    ]
    return PREDICTION_HEADER, rows


def validation_to_rows(reports: list[AccuracyReport]):
    rows = [[format_number(row[col]) if col != "model" else row[col] for col in REPORT_COLUMNS]
            for row in compare_models(reports)]
    return REPORT_COLUMNS, rows


def projection_row(word: str, point) -> list[str]:
    if point is None:
        return [word, "", ""]
    return [word, format_number(point.warmth), format_number(point.competence)]
