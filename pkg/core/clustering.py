"""
Per-group word clusters on the warmth/competence plane.

summarize_group runs: resolve -> demographic stoplist -> outlier filter
-> mean -> project -> classify, and picks the kept word closest to the
filtered mean as the group's representative.
"""

from __future__ import annotations

import csv
import logging
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from core.embeddings import EmbeddingSpace, mean_vector, normalize_token, resolve
from core.errors import ClusterError, ConfigError, VocabularyError
from core.polar import PolarPoint, PolarSubspace, Quadrant, classify_point, project

logger = logging.getLogger(__name__)

DEFAULT_THRESHOLD = 0.6
_ZERO_NORM = 1e-12


@dataclass(frozen=True)
class GroupCluster:
    target: str
    kept_words: tuple[str, ...]
    discarded_outliers: tuple[str, ...]
    discarded_demographic: tuple[str, ...]
    unresolved: tuple[str, ...]
    mean_vector: np.ndarray
    mean_point: PolarPoint
    quadrant: Quadrant
    representative: str

    @property
    def n_kept(self) -> int:
        return len(self.kept_words)

    @property
    def n_discarded(self) -> int:
        return len(self.discarded_outliers) + len(self.discarded_demographic)

    def kept_counts(self) -> dict[str, int]:
        return dict(sorted(Counter(self.kept_words).items()))


@dataclass(frozen=True)
class PredictionRow:
    target: str
    predicted: Quadrant
    observed: Quadrant

    @property
    def match(self) -> bool:
        return self.predicted is self.observed


@dataclass(frozen=True)
class PredictionReport:
    rows: tuple[PredictionRow, ...]
    missing: tuple[str, ...] = ()

    @property
    def matches(self) -> int:
        return sum(r.match for r in self.rows)

    @property
    def agreement(self) -> float | None:
        return 100.0 * self.matches / len(self.rows) if self.rows else None


def _cosine_distance(v: np.ndarray, m: np.ndarray) -> float:
    denom = float(np.linalg.norm(v)) * float(np.linalg.norm(m))
    if denom < _ZERO_NORM:
        return 1.0
    cos = float(np.clip(np.dot(v, m) / denom, -1.0, 1.0))
    return 1.0 - cos


# ── Filters ───────────────────────────────────────────────────────────────────

def apply_stoplist(words: list[str], stoplist: list[str] | set[str]) -> tuple[list[str], list[str]]:
    stop = {normalize_token(s) for s in stoplist}
    kept, removed = [], []
    for w in words:
        (removed if normalize_token(w) in stop else kept).append(w)
    return kept, removed


def filter_outliers(
    space: EmbeddingSpace,
    words: list[str],
    threshold: float = DEFAULT_THRESHOLD,
) -> tuple[list[str], list[str]]:
    """Drop words farther than ``threshold`` (cosine distance) from the mean.

    The mean is taken once over all resolvable occurrences. Words without a
    vector are left out of both lists.
    """
    try:
        mean, _ = mean_vector(space, words)
    except VocabularyError:
        raise ClusterError(f"none of {len(words)} word(s) has a vector") from None
    resolved = [w for w in words if resolve(space, w) is not None]
    if float(np.linalg.norm(mean)) < _ZERO_NORM:
        logger.warning("cluster mean has zero norm; keeping all %d word(s)", len(resolved))
        return resolved, []

    kept, discarded = [], []
    for w in resolved:
        dist = _cosine_distance(resolve(space, w), mean)
        (discarded if dist > threshold else kept).append(w)
    return kept, discarded


def _representative(space: EmbeddingSpace, words: list[str], mean: np.ndarray) -> str:
    # rounding keeps float noise from overriding the alphabetical tie-break
    ranked = sorted(
        {normalize_token(w) for w in words},
        key=lambda w: (round(_cosine_distance(resolve(space, w), mean), 12), w),
    )
    return ranked[0]


def summarize_group(
    space: EmbeddingSpace,
    sub: PolarSubspace,
    target: str,
    words: list[str],
    stoplist: list[str] | set[str] = (),
    threshold: float = DEFAULT_THRESHOLD,
) -> GroupCluster:
    unresolved = [w for w in words if resolve(space, w) is None]
    resolved = [w for w in words if resolve(space, w) is not None]
    candidates, demographic = apply_stoplist(resolved, stoplist)
    if not candidates:
        raise ClusterError(f"{target}: no word left after the stoplist ({len(words)} given)")

    kept, outliers = filter_outliers(space, candidates, threshold)
    if not kept:
        raise ClusterError(f"{target}: every word is an outlier at threshold {threshold}")

    mean, _ = mean_vector(space, kept)
    point = project(sub, mean)
    cluster = GroupCluster(
        target=target,
        kept_words=tuple(sorted(normalize_token(w) for w in kept)),
        discarded_outliers=tuple(sorted(normalize_token(w) for w in outliers)),
        discarded_demographic=tuple(sorted(normalize_token(w) for w in demographic)),
        unresolved=tuple(sorted(normalize_token(w) for w in unresolved)),
        mean_vector=mean,
        mean_point=point,
        quadrant=classify_point(point).quadrant,
        representative=_representative(space, kept, mean),
    )
    logger.debug(
        "%s: %s (%.3f, %.3f) rep=%s kept=%d outliers=%d demographic=%d unresolved=%d",
        target, cluster.quadrant.value, point.warmth, point.competence, cluster.representative,
        cluster.n_kept, len(outliers), len(demographic), len(unresolved),
    )
    return cluster


def rank_kept_words(space: EmbeddingSpace, cluster: GroupCluster) -> list[tuple[str, int, float]]:
    """(word, frequency, distance to mean), closest first."""
    rows = [
        (word, count, _cosine_distance(resolve(space, word), cluster.mean_vector))
        for word, count in cluster.kept_counts().items()
    ]
    return sorted(rows, key=lambda r: (round(r[2], 12), r[0]))


# ── Survey predictions ────────────────────────────────────────────────────────

def load_predictions(path: str | Path) -> dict[str, Quadrant]:
    """CSV with columns target,quadrant (quadrant as HC-HW etc.)."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8-sig")
    except OSError as e:
        raise ConfigError(f"cannot read predictions {path}: {e}") from e
    out = {}
    for line_no, row in enumerate(csv.DictReader(text.splitlines()), start=2):
        target = normalize_token(row.get("target") or "")
        if not target:
            continue
        try:
            out[target] = Quadrant(str(row.get("quadrant") or "").strip().upper())
        except ValueError:
            raise ConfigError(f"{path}:{line_no}: unknown quadrant {row.get('quadrant')!r}") from None
    return out


def compare_predictions(clusters: list[GroupCluster], predicted: dict[str, Quadrant]) -> PredictionReport:
    observed = {c.target: c.quadrant for c in clusters}
    rows = tuple(
        PredictionRow(target=t, predicted=predicted[t], observed=observed[t])
        for t in sorted(predicted) if t in observed
    )
    missing = tuple(sorted(t for t in predicted if t not in observed))
    report = PredictionReport(rows=rows, missing=missing)
    if rows:
        logger.info("%d of %d predicted groups land in their quadrant", report.matches, len(rows))
    return report
