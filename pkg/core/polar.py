"""
Warmth-competence polar subspace.

The two directions are differences of seed-set means:
  dir1 = mean(warm_pos) - mean(warm_neg)
  dir2 = mean(comp_pos) - mean(comp_neg)

A vector v is mapped to the coordinates E minimising ||dir^T E - v||,
i.e. E = (dir dir^T)^-1 dir v. With d == 2 this is the plain inverse of
dir^T.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple

import numpy as np

from core.embeddings import EmbeddingSpace, mean_vector, resolve
from core.errors import SubspaceError, VocabularyError
from core.lexicon import Dimension, SeedSets

logger = logging.getLogger(__name__)

GRAM_EPS = 1e-12
_ZERO_DIRECTION = 1e-12


class Quadrant(Enum):
    HC_HW = "HC-HW"
    LC_HW = "LC-HW"
    LC_LW = "LC-LW"
    HC_LW = "HC-LW"

    @property
    def high_warmth(self) -> bool:
        return self in (Quadrant.HC_HW, Quadrant.LC_HW)

    @property
    def high_competence(self) -> bool:
        return self in (Quadrant.HC_HW, Quadrant.HC_LW)

    @property
    def ambivalent(self) -> bool:
        return self in (Quadrant.LC_HW, Quadrant.HC_LW)

    @classmethod
    def from_signs(cls, high_warmth: bool, high_competence: bool) -> "Quadrant":
        if high_competence:
            return cls.HC_HW if high_warmth else cls.HC_LW
        return cls.LC_HW if high_warmth else cls.LC_LW


@dataclass(frozen=True)
class PolarPoint:
    warmth: float
    competence: float

    def __post_init__(self):
        if not (math.isfinite(self.warmth) and math.isfinite(self.competence)):
            raise SubspaceError(f"non-finite polar point ({self.warmth}, {self.competence})")

    def coordinate(self, dimension: Dimension) -> float:
        return self.warmth if dimension is Dimension.WARMTH else self.competence


class PointClass(NamedTuple):
    quadrant: Quadrant
    salient: Dimension
    tie: bool


@dataclass(frozen=True)
class PolarSubspace:
    dir1: np.ndarray
    dir2: np.ndarray
    gram_inverse: np.ndarray
    oov_seeds: dict[str, tuple[str, ...]] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return int(self.dir1.shape[0])

    @property
    def dir(self) -> np.ndarray:
        return np.vstack([self.dir1, self.dir2])

    @classmethod
    def from_directions(cls, dir1, dir2, oov_seeds=None) -> "PolarSubspace":
        d1 = np.array(dir1, dtype=np.float64)
        d2 = np.array(dir2, dtype=np.float64)
        if d1.shape != d2.shape or d1.ndim != 1:
            raise SubspaceError(f"direction shapes differ: {d1.shape} vs {d2.shape}")
        for name, d in (("warmth", d1), ("competence", d2)):
            if float(np.linalg.norm(d)) < _ZERO_DIRECTION:
                raise SubspaceError(f"{name} direction is zero (positive and negative seed means coincide)")
        stacked = np.vstack([d1, d2])
        gram = stacked @ stacked.T
        det = float(np.linalg.det(gram))
        if abs(det) <= GRAM_EPS:
            raise SubspaceError(f"warmth and competence directions are parallel (|G| = {det:.3e})")
        inv = np.linalg.inv(gram)
        for arr in (d1, d2, inv):
            arr.setflags(write=False)
        return cls(dir1=d1, dir2=d2, gram_inverse=inv, oov_seeds=dict(oov_seeds or {}))


def build_axes(space: EmbeddingSpace, seeds: SeedSets, normalize_axes: bool = False) -> PolarSubspace:
    """Difference-of-means directions from the four seed cells.

    Means are not renormalized before differencing. ``normalize_axes``
    rescales the two finished directions to unit length.
    """
    means = {}
    oov = {}
    for name, words in seeds.cells().items():
        try:
            mean, missing = mean_vector(space, list(words))
        except VocabularyError:
            raise SubspaceError(f"no seed word of {name} has a vector ({len(words)} listed)") from None
        if missing:
            logger.warning("%s: %d seed word(s) without vectors: %s", name, len(missing), ", ".join(missing[:10]))
            oov[name] = tuple(missing)
        means[name] = mean

    dir1 = means["warm_pos"] - means["warm_neg"]
    dir2 = means["comp_pos"] - means["comp_neg"]
    if normalize_axes:
        n1, n2 = float(np.linalg.norm(dir1)), float(np.linalg.norm(dir2))
        if n1 >= _ZERO_DIRECTION:
            dir1 = dir1 / n1
        if n2 >= _ZERO_DIRECTION:
            dir2 = dir2 / n2
    return PolarSubspace.from_directions(dir1, dir2, oov_seeds=oov)


def project(sub: PolarSubspace, v) -> PolarPoint:
    vec = np.asarray(v, dtype=np.float64)
    if vec.shape != (sub.dim,):
        raise SubspaceError(f"vector has shape {vec.shape}, subspace expects ({sub.dim},)")
    coords = sub.gram_inverse @ (sub.dir @ vec)
    # + 0.0 folds negative zero
    return PolarPoint(warmth=float(coords[0]) + 0.0, competence=float(coords[1]) + 0.0)


def project_word(sub: PolarSubspace, space: EmbeddingSpace, word: str) -> PolarPoint | None:
    vec = resolve(space, word)
    if vec is None:
        return None
    return project(sub, vec)


def classify_point(p: PolarPoint) -> PointClass:
    """Quadrant by sign (zero counts as low) and the more salient dimension."""
    quadrant = Quadrant.from_signs(p.warmth > 0, p.competence > 0)
    w, c = abs(p.warmth), abs(p.competence)
    if c > w:
        return PointClass(quadrant, Dimension.COMPETENCE, False)
    return PointClass(quadrant, Dimension.WARMTH, w == c)
