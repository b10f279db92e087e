"""
"X and not-Y" counter-stereotypes for ambivalent clusters.

X is the cluster's most positive word on its high axis, Y its most
negative word on the other axis. The counter keeps X and swaps Y for an
antonym.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

from core.antonymy import AntonymResource, antonym_set
from core.clustering import GroupCluster
from core.embeddings import EmbeddingSpace
from core.errors import CounterError
from core.lexicon import Dimension
from core.polar import PolarPoint, PolarSubspace, Quadrant, project_word

logger = logging.getLogger(__name__)


class CounterStatus(Enum):
    OK = "ok"
    UNCHECKED_ANTONYM = "unchecked_antonym"
    NOT_AMBIVALENT = "not_ambivalent"
    NO_ANTONYM = "no_antonym"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class Selection:
    target: str
    representative: str
    x_word: str
    y_word: str
    ambivalent: bool
    positive_axis: Dimension
    deficient_axis: Dimension

    @property
    def degenerate(self) -> bool:
        return self.x_word == self.y_word


@dataclass(frozen=True)
class CounterStereotype:
    target: str
    stereotype_representative: str
    x_word: str
    y_word: str
    x_but_y: str
    counter: str
    neg_antonym: str
    ambivalent: bool
    status: CounterStatus


def _other(dim: Dimension) -> Dimension:
    return Dimension.COMPETENCE if dim is Dimension.WARMTH else Dimension.WARMTH


def select_x_but_y(sub: PolarSubspace, space: EmbeddingSpace, cluster: GroupCluster) -> Selection:
    words = sorted(set(cluster.kept_words))
    if not words:
        raise CounterError(f"{cluster.target}: cluster has no kept words")
    points: dict[str, PolarPoint] = {}
    for w in words:
        p = project_word(sub, space, w)
        if p is not None:
            points[w] = p
    if not points:
        raise CounterError(f"{cluster.target}: no kept word has a vector")

    if cluster.quadrant is Quadrant.LC_HW:
        positive = Dimension.WARMTH
    elif cluster.quadrant is Quadrant.HC_LW:
        positive = Dimension.COMPETENCE
    else:
        mean = cluster.mean_point
        positive = Dimension.COMPETENCE if mean.competence > mean.warmth else Dimension.WARMTH
    deficient = _other(positive)

    x_word = min(points, key=lambda w: (-round(points[w].coordinate(positive), 12), w))
    y_word = min(points, key=lambda w: (round(points[w].coordinate(deficient), 12), w))
    return Selection(
        target=cluster.target,
        representative=cluster.representative,
        x_word=x_word,
        y_word=y_word,
        ambivalent=cluster.quadrant.ambivalent,
        positive_axis=positive,
        deficient_axis=deficient,
    )


def _pick_antonym(
    res: AntonymResource,
    selection: Selection,
    sub: PolarSubspace | None,
    space: EmbeddingSpace | None,
) -> tuple[str, bool]:
    candidates = sorted(a for a in antonym_set(res, selection.y_word) if a != selection.y_word)
    if not candidates:
        return "", False
    if sub is not None and space is not None:
        for cand in candidates:
            p = project_word(sub, space, cand)
            if p is not None and p.coordinate(selection.deficient_axis) > 0:
                return cand, True
    logger.warning(
        "%s: no antonym of %r is positive on %s; using %r",
        selection.target, selection.y_word, selection.deficient_axis.value, candidates[0],
    )
    return candidates[0], False


def generate_counter(
    res: AntonymResource,
    selection: Selection,
    sub: PolarSubspace | None = None,
    space: EmbeddingSpace | None = None,
) -> CounterStereotype:
    """Render "X and <antonym of Y>".

    Without ``sub`` and ``space`` the positivity check is skipped and the
    first antonym alphabetically is used.
    """
    if selection.degenerate:
        logger.warning("%s: one word fills both roles (%r)", selection.target, selection.x_word)
        return CounterStereotype(
            target=selection.target,
            stereotype_representative=selection.representative,
            x_word=selection.x_word,
            y_word=selection.y_word,
            x_but_y="",
            counter="",
            neg_antonym="",
            ambivalent=selection.ambivalent,
            status=CounterStatus.DEGENERATE,
        )

    antonym, checked = _pick_antonym(res, selection, sub, space)
    if not antonym:
        status = CounterStatus.NO_ANTONYM
    elif not selection.ambivalent:
        status = CounterStatus.NOT_AMBIVALENT
    elif not checked:
        status = CounterStatus.UNCHECKED_ANTONYM
    else:
        status = CounterStatus.OK
    if not selection.ambivalent:
        logger.warning(
            "%s is not ambivalent; a counter-stereotype may not be needed, a direct antonym may fit better",
            selection.target,
        )

    return CounterStereotype(
        target=selection.target,
        stereotype_representative=selection.representative,
        x_word=selection.x_word,
        y_word=selection.y_word,
        x_but_y=f"{selection.x_word} but {selection.y_word}",
        counter=f"{selection.x_word} and {antonym}" if antonym else "",
        neg_antonym=antonym,
        ambivalent=selection.ambivalent,
        status=status,
    )
