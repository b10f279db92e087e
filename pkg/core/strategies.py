"""
Anti-stereotype strategy labels and their tabulation.

A pair is a direct antonym when the resource says so; otherwise the label
comes from comparing the signs of the two projected points.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum

from core.antonymy import AntonymResource, antonym_set, is_antonym_match
from core.clustering import GroupCluster
from core.embeddings import EmbeddingSpace
from core.errors import ClusterError, VocabularyError
from core.lexicon import Dimension
from core.polar import PolarPoint, PolarSubspace, Quadrant, classify_point, project_word

logger = logging.getLogger(__name__)


class StrategyLabel(Enum):
    DIRECT_ANTONYM = "direct_antonym"
    OPPOSITE_QUADRANT = "opposite_quadrant"
    FLIP_WARMTH = "flip_warmth"
    FLIP_COMPETENCE = "flip_competence"
    SAME_QUADRANT = "same_quadrant"


COMP_SALIENT = "comp_salient"
WARMTH_SALIENT = "warmth_salient"
COLUMNS = ("overall",) + tuple(q.value for q in Quadrant) + (COMP_SALIENT, WARMTH_SALIENT)


@dataclass(frozen=True)
class ClassifiedPair:
    target: str
    stereotype: str
    antistereotype: str
    label: StrategyLabel
    stereo_point: PolarPoint
    anti_point: PolarPoint


@dataclass(frozen=True)
class GroupStrategy:
    target: str
    stereotype_representative: str
    antonym: str
    antistereotype_representative: str
    label: StrategyLabel
    stereo_point: PolarPoint
    anti_point: PolarPoint


@dataclass
class StrategyTable:
    counts: dict[str, dict[StrategyLabel, int]] = field(
        default_factory=lambda: {c: {lab: 0 for lab in StrategyLabel} for c in COLUMNS}
    )
    excluded: int = 0

    def n(self, column: str) -> int:
        return sum(self.counts[column].values())

    def percentages(self, column: str) -> dict[StrategyLabel, float | None]:
        total = self.n(column)
        return {
            lab: (100.0 * k / total if total else None)
            for lab, k in self.counts[column].items()
        }

    def add(self, label: StrategyLabel, stereo_point: PolarPoint) -> None:
        cls = classify_point(stereo_point)
        salience = COMP_SALIENT if cls.salient is Dimension.COMPETENCE else WARMTH_SALIENT
        for column in ("overall", cls.quadrant.value, salience):
            self.counts[column][label] += 1

    def to_dict(self) -> dict:
        return {
            "excluded": self.excluded,
            "columns": {
                col: {
                    "n": self.n(col),
                    "counts": {lab.value: k for lab, k in self.counts[col].items()},
                    "percent": {lab.value: p for lab, p in self.percentages(col).items()},
                }
                for col in COLUMNS
            },
        }


def quadrant_relation(stereo: PolarPoint, anti: PolarPoint) -> StrategyLabel:
    warmth_flips = (stereo.warmth > 0) != (anti.warmth > 0)
    competence_flips = (stereo.competence > 0) != (anti.competence > 0)
    if warmth_flips and competence_flips:
        return StrategyLabel.OPPOSITE_QUADRANT
    if warmth_flips:
        return StrategyLabel.FLIP_WARMTH
    if competence_flips:
        return StrategyLabel.FLIP_COMPETENCE
    return StrategyLabel.SAME_QUADRANT


def classify_pair(
    res: AntonymResource,
    space: EmbeddingSpace,
    sub: PolarSubspace,
    stereotype: str,
    antistereotype: str,
    target: str = "",
) -> ClassifiedPair:
    """Direct antonym first, then the quadrant relation of the two words."""
    stereo_point = project_word(sub, space, stereotype)
    anti_point = project_word(sub, space, antistereotype)
    if stereo_point is None or anti_point is None:
        missing = stereotype if stereo_point is None else antistereotype
        raise VocabularyError(f"{missing!r} has no vector")
    if is_antonym_match(res, stereotype, antistereotype):
        label = StrategyLabel.DIRECT_ANTONYM
    else:
        label = quadrant_relation(stereo_point, anti_point)
    return ClassifiedPair(target, stereotype, antistereotype, label, stereo_point, anti_point)


def pairwise_table(pairs: list[ClassifiedPair], excluded: int = 0) -> StrategyTable:
    """Columns keyed by the stereotype word's quadrant and salient dimension."""
    table = StrategyTable(excluded=excluded)
    for pair in pairs:
        table.add(pair.label, pair.stereo_point)
    return table


def classify_groups(
    res: AntonymResource,
    cluster_pairs: list[tuple[GroupCluster, GroupCluster | None]],
) -> list[GroupStrategy]:
    """One label per group from its two representatives and mean points."""
    rows = []
    for stereo, anti in cluster_pairs:
        if anti is None:
            raise ClusterError(f"{stereo.target}: no anti-stereotype cluster")
        antonyms = sorted(antonym_set(res, stereo.representative))
        if is_antonym_match(res, stereo.representative, anti.representative):
            label = StrategyLabel.DIRECT_ANTONYM
        else:
            label = quadrant_relation(stereo.mean_point, anti.mean_point)
        rows.append(GroupStrategy(
            target=stereo.target,
            stereotype_representative=stereo.representative,
            antonym=antonyms[0] if antonyms else "",
            antistereotype_representative=anti.representative,
            label=label,
            stereo_point=stereo.mean_point,
            anti_point=anti.mean_point,
        ))
    return rows


def group_level_table(
    res: AntonymResource,
    cluster_pairs: list[tuple[GroupCluster, GroupCluster | None]],
) -> StrategyTable:
    table = StrategyTable()
    for row in classify_groups(res, cluster_pairs):
        table.add(row.label, row.stereo_point)
    return table
