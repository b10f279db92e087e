"""
Load, normalize and serve pretrained word vectors.

Supports:
  - word2vec text format: header line "V d", then "token x1 ... xd"
  - GloVe text format: no header, detected from the shape of the first line

Every stored vector is unit length. Tokens are case-folded (NFC + lower)
and the first occurrence of a duplicate wins.

Public API:
  load_embeddings(path, limit=None, bad_line_budget=0.001) -> EmbeddingSpace
  lookup(space, token) -> np.ndarray | None
  phrase_vector(space, phrase) -> np.ndarray | None
  resolve(space, term) -> np.ndarray | None
  mean_vector(space, tokens) -> (np.ndarray, unresolved)
  shared_vocabulary(spaces) -> set[str]
"""

from __future__ import annotations

import logging
import math
import re
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from core.errors import EmbeddingFormatError, VocabularyError

logger = logging.getLogger(__name__)

NORM_TOLERANCE = 1e-6
_ZERO_NORM = 1e-12
_PHRASE_SPLIT = re.compile(r"[\s\-]+")


@dataclass(frozen=True)
class LoadStats:
    entries: int = 0
    bad_lines: int = 0
    zero_norm: int = 0
    duplicates: int = 0
    has_header: bool = False


@dataclass(frozen=True)
class EmbeddingSpace:
    """Immutable vocabulary of unit vectors.

    ``matrix`` rows line up with ``tokens``; ``index`` maps token -> row.
    """

    dim: int
    tokens: tuple[str, ...]
    matrix: np.ndarray
    index: dict[str, int]
    source_tag: str = ""
    stats: LoadStats = field(default_factory=LoadStats)

    def __len__(self) -> int:
        return len(self.tokens)

    def __contains__(self, token: object) -> bool:
        return isinstance(token, str) and normalize_token(token) in self.index

    @classmethod
    def from_vectors(cls, vectors: dict[str, list[float]] | dict[str, np.ndarray], source_tag: str = "") -> "EmbeddingSpace":
        """Build a space from an in-memory mapping (used by tests and tools)."""
        tokens: list[str] = []
        rows: list[np.ndarray] = []
        index: dict[str, int] = {}
        dim = None
        zero = 0
        for raw_token, raw_vec in vectors.items():
            token = normalize_token(raw_token)
            vec = np.asarray(raw_vec, dtype=np.float64)
            if dim is None:
                dim = vec.shape[0]
            if vec.shape != (dim,):
                raise EmbeddingFormatError(f"vector for {token!r} has length {vec.shape[0]}, expected {dim}")
            if token in index:
                continue
            norm = float(np.linalg.norm(vec))
            if norm < _ZERO_NORM:
                zero += 1
                continue
            index[token] = len(tokens)
            tokens.append(token)
            rows.append(vec / norm)
        if dim is None:
            raise EmbeddingFormatError("no vectors given")
        matrix = np.vstack(rows) if rows else np.zeros((0, dim))
        matrix.setflags(write=False)
        stats = LoadStats(entries=len(tokens), zero_norm=zero)
        return cls(dim=dim, tokens=tuple(tokens), matrix=matrix, index=index, source_tag=source_tag, stats=stats)


def normalize_token(token: str) -> str:
    return unicodedata.normalize("NFC", str(token)).strip().lower()


# ══════════════════════════════════════════════════════════════════════════════
#  LOADING
# ══════════════════════════════════════════════════════════════════════════════

def _parse_header(first_line: str) -> tuple[int, int] | None:
    parts = first_line.split()
    if len(parts) != 2:
        return None
    try:
        vocab, dim = int(parts[0]), int(parts[1])
    except ValueError:
        return None
    if vocab <= 0 or dim <= 0:
        return None
    return vocab, dim


def _parse_line(line: str, dim: int | None) -> tuple[str, np.ndarray] | None:
    parts = line.rstrip("\n").split()
    if len(parts) < 2:
        return None
    token, values = parts[0], parts[1:]
    if dim is not None and len(values) != dim:
        return None
    try:
        vec = np.asarray([float(v) for v in values], dtype=np.float64)
    except ValueError:
        return None
    if not np.all(np.isfinite(vec)):
        return None
    return token, vec


def load_embeddings(
    path: str | Path,
    limit: int | None = None,
    bad_line_budget: float = 0.001,
    source_tag: str = "",
) -> EmbeddingSpace:
    """Read a word2vec/GloVe text file into a unit-normalized space.

    Malformed lines are skipped and counted; loading fails only when their
    number exceeds ``ceil(bad_line_budget * lines)``.
    """
    path = Path(path)
    if limit is not None and limit <= 0:
        raise EmbeddingFormatError(f"limit must be positive, got {limit}")
    try:
        handle = path.open("r", encoding="utf-8", errors="strict")
    except OSError as e:
        raise EmbeddingFormatError(f"cannot read embeddings {path}: {e}") from e

    tokens: list[str] = []
    rows: list[np.ndarray] = []
    index: dict[str, int] = {}
    bad = zero = dupes = lines_seen = 0
    dim: int | None = None
    has_header = False

    with handle:
        try:
            first = handle.readline()
        except UnicodeDecodeError as e:
            raise EmbeddingFormatError(f"{path} is not UTF-8 text: {e}") from e
        if not first.strip():
            raise EmbeddingFormatError(f"{path} is empty")

        header = _parse_header(first)
        pending = []
        if header is not None:
            has_header = True
            dim = header[1]
        else:
            pending.append(first)

        def _lines():
            yield from pending
            yield from handle

        try:
            for line in _lines():
                if limit is not None and len(tokens) >= limit:
                    break
                if not line.strip():
                    continue
                lines_seen += 1
                parsed = _parse_line(line, dim)
                if parsed is None:
                    bad += 1
                    logger.debug("skipping malformed line %d in %s", lines_seen, path)
                    continue
                raw_token, vec = parsed
                if dim is None:
                    dim = vec.shape[0]
                token = normalize_token(raw_token)
                if token in index:
                    dupes += 1
                    continue
                norm = float(np.linalg.norm(vec))
                if norm < _ZERO_NORM:
                    zero += 1
                    logger.warning("zero-norm vector for %r skipped", token)
                    continue
                index[token] = len(tokens)
                tokens.append(token)
                rows.append(vec / norm)
        except UnicodeDecodeError as e:
            raise EmbeddingFormatError(f"{path} is not UTF-8 text: {e}") from e

    allowed = math.ceil(bad_line_budget * max(lines_seen, 1))
    if bad > allowed:
        raise EmbeddingFormatError(
            f"{path}: {bad} malformed lines exceed the budget of {allowed} "
            f"({bad_line_budget:.4%} of {lines_seen})"
        )
    if bad:
        logger.warning("%s: skipped %d malformed line(s)", path, bad)
    if not tokens or dim is None:
        raise EmbeddingFormatError(f"{path}: no usable vectors")

    matrix = np.vstack(rows)
    matrix.setflags(write=False)
    stats = LoadStats(entries=len(tokens), bad_lines=bad, zero_norm=zero, duplicates=dupes, has_header=has_header)
    logger.info("loaded %d vectors (d=%d) from %s", len(tokens), dim, path)
    return EmbeddingSpace(
        dim=dim,
        tokens=tuple(tokens),
        matrix=matrix,
        index=index,
        source_tag=source_tag or path.stem,
        stats=stats,
    )


# ══════════════════════════════════════════════════════════════════════════════
#  LOOKUPS
# ══════════════════════════════════════════════════════════════════════════════

def lookup(space: EmbeddingSpace, token: str) -> np.ndarray | None:
    row = space.index.get(normalize_token(token))
    if row is None:
        return None
    return space.matrix[row]


def phrase_vector(space: EmbeddingSpace, phrase: str) -> np.ndarray | None:
    """Unit-normalized average of the in-vocabulary tokens of ``phrase``.

    A phrase with exactly one resolvable token returns that token's stored
    vector unchanged.
    """
    parts = [p for p in _PHRASE_SPLIT.split(normalize_token(phrase)) if p]
    found = [v for v in (lookup(space, p) for p in parts) if v is not None]
    if not found:
        return None
    if len(found) == 1:
        return found[0]
    avg = np.mean(np.vstack(found), axis=0)
    norm = float(np.linalg.norm(avg))
    if norm < _ZERO_NORM:
        return None
    return avg / norm


def resolve(space: EmbeddingSpace, term: str) -> np.ndarray | None:
    vec = lookup(space, term)
    if vec is not None:
        return vec
    if _PHRASE_SPLIT.search(normalize_token(term)):
        return phrase_vector(space, term)
    return None


def mean_vector(space: EmbeddingSpace, tokens: list[str]) -> tuple[np.ndarray, list[str]]:
    """Frequency-weighted mean of the resolvable tokens (not renormalized).

    Vectors are summed in token order, so the result does not depend on the
    order of ``tokens``.
    """
    resolved: list[tuple[str, np.ndarray]] = []
    unresolved: list[str] = []
    for tok in tokens:
        vec = resolve(space, tok)
        if vec is None:
            unresolved.append(tok)
        else:
            resolved.append((normalize_token(tok), vec))
    if not resolved:
        raise VocabularyError(f"none of {len(tokens)} token(s) resolvable: {sorted(set(tokens))[:5]}")
    resolved.sort(key=lambda item: item[0])
    mean = np.mean(np.vstack([v for _, v in resolved]), axis=0)
    return mean, unresolved


def shared_vocabulary(spaces: list[EmbeddingSpace]) -> set[str]:
    if not spaces:
        return set()
    vocab = set(spaces[0].index)
    for space in spaces[1:]:
        vocab &= set(space.index)
    return vocab
