"""Sign-agreement accuracy of the polar axes against a labeled lexicon."""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field

from core.embeddings import EmbeddingSpace
from core.errors import ValidationError
from core.lexicon import Dimension, Facet, LexiconEntry, Polarity
from core.polar import PolarSubspace, project_word

logger = logging.getLogger(__name__)

REPORT_COLUMNS = ("model", "warmth_accuracy", "competence_accuracy", "warmth_n", "competence_n", "skipped")


@dataclass(frozen=True)
class AccuracyReport:
    warmth_accuracy: float
    competence_accuracy: float
    warmth_n: int
    competence_n: int
    per_facet: dict[str, float] = field(default_factory=dict)
    facet_n: dict[str, int] = field(default_factory=dict)
    skipped: int = 0
    model: str = ""

    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "warmth_accuracy": self.warmth_accuracy,
            "competence_accuracy": self.competence_accuracy,
            "warmth_n": self.warmth_n,
            "competence_n": self.competence_n,
            "per_facet": dict(sorted(self.per_facet.items())),
            "facet_n": dict(sorted(self.facet_n.items())),
            "skipped": self.skipped,
        }


def predict_polarity(sub: PolarSubspace, space: EmbeddingSpace, entry: LexiconEntry) -> Polarity:
    """Positive iff the word's coordinate on the entry's dimension is > 0."""
    point = project_word(sub, space, entry.word)
    if point is None:
        raise ValidationError(f"{entry.word!r} has no vector")
    return Polarity.POSITIVE if point.coordinate(entry.dimension) > 0 else Polarity.NEGATIVE


def _percent(hits: int, total: int) -> float:
    return 100.0 * hits / total


def evaluate_lexicon(
    sub: PolarSubspace,
    space: EmbeddingSpace,
    entries: list[LexiconEntry] | tuple[LexiconEntry, ...],
    skipped: int = 0,
    model: str = "",
) -> AccuracyReport:
    """Per-dimension share of entries whose projected sign matches the label.

    ``entries`` should already be the validation split (no seeds, no OOV).
    """
    hits = {Dimension.WARMTH: 0, Dimension.COMPETENCE: 0}
    totals = {Dimension.WARMTH: 0, Dimension.COMPETENCE: 0}
    facet_hits: dict[Facet, int] = defaultdict(int)
    facet_totals: dict[Facet, int] = defaultdict(int)

    for entry in entries:
        correct = predict_polarity(sub, space, entry) is entry.polarity
        totals[entry.dimension] += 1
        facet_totals[entry.facet] += 1
        if correct:
            hits[entry.dimension] += 1
            facet_hits[entry.facet] += 1

    for dim, n in totals.items():
        if n == 0:
            raise ValidationError(f"no {dim.value} entries to evaluate")

    report = AccuracyReport(
        warmth_accuracy=_percent(hits[Dimension.WARMTH], totals[Dimension.WARMTH]),
        competence_accuracy=_percent(hits[Dimension.COMPETENCE], totals[Dimension.COMPETENCE]),
        warmth_n=totals[Dimension.WARMTH],
        competence_n=totals[Dimension.COMPETENCE],
        per_facet={f.value: _percent(facet_hits[f], n) for f, n in facet_totals.items()},
        facet_n={f.value: n for f, n in facet_totals.items()},
        skipped=skipped,
        model=model,
    )
    logger.info(
        "%s: warmth %.1f%% (n=%d), competence %.1f%% (n=%d)",
        model or "model", report.warmth_accuracy, report.warmth_n,
        report.competence_accuracy, report.competence_n,
    )
    return report


def compare_models(reports: list[AccuracyReport]) -> list[dict]:
    """One flat row per model, in the order given."""
    return [{col: r.to_dict()[col] for col in REPORT_COLUMNS} for r in reports]
