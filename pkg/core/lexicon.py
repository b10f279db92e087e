"""
Warmth/competence lexicons: parsing, seed sets and the validation split.

CSV schema (one file for both tiers):
  word,dimension,facet,polarity,tier
  friendly,warmth,sociability,+1,seed
"""

from __future__ import annotations

import csv
import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from core.embeddings import EmbeddingSpace, normalize_token
from core.errors import LexiconError

logger = logging.getLogger(__name__)

HEADER = ("word", "dimension", "facet", "polarity", "tier")


class Dimension(Enum):
    WARMTH = "warmth"
    COMPETENCE = "competence"


class Facet(Enum):
    SOCIABILITY = "sociability"
    MORALITY = "morality"
    AGENCY = "agency"
    ABILITY = "ability"

    @property
    def dimension(self) -> Dimension:
        if self in (Facet.SOCIABILITY, Facet.MORALITY):
            return Dimension.WARMTH
        return Dimension.COMPETENCE


class Polarity(Enum):
    POSITIVE = "+1"
    NEGATIVE = "-1"

    def flipped(self) -> "Polarity":
        return Polarity.NEGATIVE if self is Polarity.POSITIVE else Polarity.POSITIVE


class Tier(Enum):
    SEED = "seed"
    EXTENDED = "extended"


_POLARITY_ALIASES = {
    "+1": Polarity.POSITIVE, "1": Polarity.POSITIVE, "pos": Polarity.POSITIVE, "positive": Polarity.POSITIVE,
    "-1": Polarity.NEGATIVE, "neg": Polarity.NEGATIVE, "negative": Polarity.NEGATIVE,
}


@dataclass(frozen=True)
class LexiconEntry:
    word: str
    dimension: Dimension
    facet: Facet
    polarity: Polarity
    tier: Tier


@dataclass(frozen=True)
class SeedSets:
    warm_pos: tuple[str, ...]
    warm_neg: tuple[str, ...]
    comp_pos: tuple[str, ...]
    comp_neg: tuple[str, ...]

    def cells(self) -> dict[str, tuple[str, ...]]:
        return {
            "warm_pos": self.warm_pos,
            "warm_neg": self.warm_neg,
            "comp_pos": self.comp_pos,
            "comp_neg": self.comp_neg,
        }

    def all_words(self) -> set[str]:
        return set(self.warm_pos) | set(self.warm_neg) | set(self.comp_pos) | set(self.comp_neg)


@dataclass(frozen=True)
class ValidationSet:
    entries: tuple[LexiconEntry, ...]
    removed_seed: int
    removed_oov: int

    @property
    def skipped(self) -> int:
        return self.removed_seed + self.removed_oov


# ── Parsing ───────────────────────────────────────────────────────────────────

def _enum_value(enum_cls, raw: str, line_no: int, field: str):
    value = str(raw or "").strip().lower()
    try:
        return enum_cls(value)
    except ValueError:
        raise LexiconError(f"line {line_no}: unknown {field} {raw!r}") from None


def _parse_row(row: dict, line_no: int) -> LexiconEntry:
    word = normalize_token(row.get("word", ""))
    if not word:
        raise LexiconError(f"line {line_no}: empty word")
    dimension = _enum_value(Dimension, row.get("dimension"), line_no, "dimension")
    facet = _enum_value(Facet, row.get("facet"), line_no, "facet")
    tier = _enum_value(Tier, row.get("tier"), line_no, "tier")
    polarity = _POLARITY_ALIASES.get(str(row.get("polarity") or "").strip().lower())
    if polarity is None:
        raise LexiconError(f"line {line_no}: unknown polarity {row.get('polarity')!r}")
    if facet.dimension is not dimension:
        raise LexiconError(f"line {line_no}: facet {facet.value} does not belong to {dimension.value}")
    return LexiconEntry(word=word, dimension=dimension, facet=facet, polarity=polarity, tier=tier)


def _collapse(rows: list[LexiconEntry]) -> list[LexiconEntry]:
    """Majority vote over rows sharing (word, dimension, tier); ties dropped."""
    groups: dict[tuple, list[LexiconEntry]] = defaultdict(list)
    for entry in rows:
        groups[(entry.word, entry.dimension, entry.tier)].append(entry)

    out = []
    for key, members in groups.items():
        if len(members) == 1:
            out.append(members[0])
            continue
        votes = Counter(m.polarity for m in members)
        pos, neg = votes[Polarity.POSITIVE], votes[Polarity.NEGATIVE]
        if pos == neg:
            logger.warning("dropping %r (%s): polarity tie %d/%d", key[0], key[1].value, pos, neg)
            continue
        winner = Polarity.POSITIVE if pos > neg else Polarity.NEGATIVE
        first = next(m for m in members if m.polarity is winner)
        out.append(first)
    _warn_tier_conflicts(out)
    return out


def _warn_tier_conflicts(entries: list[LexiconEntry]) -> None:
    by_key: dict[tuple, dict[Tier, Polarity]] = defaultdict(dict)
    for e in entries:
        by_key[(e.word, e.dimension)][e.tier] = e.polarity
    for (word, dimension), tiers in by_key.items():
        if len(set(tiers.values())) > 1:
            logger.warning(
                "%r (%s): seed and extended rows disagree on polarity; both kept",
                word, dimension.value,
            )


def parse_lexicon(path: str | Path) -> list[LexiconEntry]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8-sig")
    except OSError as e:
        raise LexiconError(f"cannot read lexicon {path}: {e}") from e
    if not text.strip():
        raise LexiconError(f"{path} is empty")

    reader = csv.DictReader(text.splitlines())
    fields = [str(f or "").strip().lower() for f in (reader.fieldnames or [])]
    missing = [h for h in HEADER if h not in fields]
    if missing:
        raise LexiconError(f"{path}: missing header column(s) {', '.join(missing)}")
    reader.fieldnames = fields

    rows = []
    for line_no, row in enumerate(reader, start=2):
        if not any(str(v or "").strip() for v in row.values()):
            continue
        rows.append(_parse_row(row, line_no))
    if not rows:
        raise LexiconError(f"{path} has a header but no entries")
    return _collapse(rows)


def serialize_lexicon(entries: list[LexiconEntry], path: str | Path) -> None:
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(HEADER)
        for e in entries:
            writer.writerow([e.word, e.dimension.value, e.facet.value, e.polarity.value, e.tier.value])


# ── Seed sets ─────────────────────────────────────────────────────────────────

def build_seed_sets(entries: list[LexiconEntry]) -> SeedSets:
    """Pool the seed-tier words of both facets into the four polar cells."""
    cells: dict[tuple[Dimension, Polarity], list[str]] = {
        (Dimension.WARMTH, Polarity.POSITIVE): [],
        (Dimension.WARMTH, Polarity.NEGATIVE): [],
        (Dimension.COMPETENCE, Polarity.POSITIVE): [],
        (Dimension.COMPETENCE, Polarity.NEGATIVE): [],
    }
    for e in entries:
        if e.tier is not Tier.SEED:
            continue
        cell = cells[(e.dimension, e.polarity)]
        if e.word not in cell:
            cell.append(e.word)

    for (dim, pol), words in cells.items():
        if not words:
            sign = "positive" if pol is Polarity.POSITIVE else "negative"
            raise LexiconError(f"empty {dim.value} seed cell ({sign})")

    seeds = SeedSets(
        warm_pos=tuple(cells[(Dimension.WARMTH, Polarity.POSITIVE)]),
        warm_neg=tuple(cells[(Dimension.WARMTH, Polarity.NEGATIVE)]),
        comp_pos=tuple(cells[(Dimension.COMPETENCE, Polarity.POSITIVE)]),
        comp_neg=tuple(cells[(Dimension.COMPETENCE, Polarity.NEGATIVE)]),
    )
    seen: dict[str, str] = {}
    for name, words in seeds.cells().items():
        for w in words:
            if w in seen:
                raise LexiconError(f"seed word {w!r} appears in both {seen[w]} and {name}")
            seen[w] = name
    return seeds


def seed_counts(seeds: SeedSets) -> tuple[int, int, int, int]:
    return len(seeds.warm_pos), len(seeds.warm_neg), len(seeds.comp_pos), len(seeds.comp_neg)


def validation_set(
    entries: list[LexiconEntry],
    seeds: SeedSets,
    space: EmbeddingSpace,
    vocabulary: set[str] | None = None,
) -> ValidationSet:
    """Extended-tier entries minus seed words and words without vectors.

    ``vocabulary`` narrows the availability check further, e.g. to the
    vocabulary shared by several models.
    """
    seed_words = seeds.all_words()
    kept = []
    removed_seed = removed_oov = 0
    for e in entries:
        if e.tier is not Tier.EXTENDED:
            continue
        if e.word in seed_words:
            removed_seed += 1
            continue
        if e.word not in space.index or (vocabulary is not None and e.word not in vocabulary):
            removed_oov += 1
            continue
        kept.append(e)
    logger.info("validation set: %d kept, %d seed overlap, %d without vectors", len(kept), removed_seed, removed_oov)
    return ValidationSet(entries=tuple(kept), removed_seed=removed_seed, removed_oov=removed_oov)
