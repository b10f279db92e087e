"""
Antonym retrieval with synonym expansion and lemma matching.

Resources are static TSV files (see scripts/build_wordnet_resources.py):
  antonyms.tsv   word<TAB>a1,a2,...
  synonyms.tsv   word<TAB>s1,s2,...
  lemmas.tsv     word<TAB>lemma
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path

from core.embeddings import normalize_token
from core.errors import ResourceError

logger = logging.getLogger(__name__)

VOWELS = frozenset("aeiou")
_SIBILANT_ES = re.compile(r"(?:ss|x|zz|ch|sh)es$")
_NO_UNDOUBLE = frozenset("lsz")


@dataclass(frozen=True)
class AntonymResource:
    antonyms: dict[str, frozenset[str]]
    synonyms: dict[str, frozenset[str]] = field(default_factory=dict)
    lemma_table: dict[str, str] | None = None
    dropped_self: tuple[str, ...] = ()

    @classmethod
    def empty(cls) -> "AntonymResource":
        return cls(antonyms={})


# ── Loading ───────────────────────────────────────────────────────────────────

def _read_rows(path: Path, kind: str):
    try:
        text = path.read_text(encoding="utf-8-sig")
    except OSError as e:
        raise ResourceError(f"cannot read {kind} file {path}: {e}") from e
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if "\t" not in line:
            logger.warning("%s:%d: no tab separator, row skipped", path.name, line_no)
            continue
        key, _, value = line.partition("\t")
        key = normalize_token(key)
        if key:
            yield line_no, key, value


def _read_lists(path: Path, kind: str, drop_self: bool) -> tuple[dict[str, frozenset[str]], list[str]]:
    merged: dict[str, set[str]] = {}
    dropped = []
    for line_no, key, value in _read_rows(path, kind):
        words = {normalize_token(w) for w in value.split(",")}
        words.discard("")
        if drop_self and key in words:
            logger.warning("%s:%d: %r listed as its own antonym, dropped", path.name, line_no, key)
            dropped.append(key)
            words.discard(key)
        if words:
            merged.setdefault(key, set()).update(words)
    return {k: frozenset(v) for k, v in sorted(merged.items())}, dropped


def load_resources(
    antonym_path: str | Path,
    synonym_path: str | Path | None = None,
    lemma_path: str | Path | None = None,
) -> AntonymResource:
    antonyms, dropped = _read_lists(Path(antonym_path), "antonym", drop_self=True)
    synonyms: dict[str, frozenset[str]] = {}
    if synonym_path is not None:
        synonyms, _ = _read_lists(Path(synonym_path), "synonym", drop_self=False)

    lemma_table = None
    if lemma_path is not None:
        lemma_table = {}
        for _, key, value in _read_rows(Path(lemma_path), "lemma"):
            target = normalize_token(value)
            if target:
                lemma_table.setdefault(key, target)

    logger.info(
        "antonym resource: %d antonym rows, %d synonym rows, %s lemmas",
        len(antonyms), len(synonyms), "no" if lemma_table is None else len(lemma_table),
    )
    return AntonymResource(antonyms=antonyms, synonyms=synonyms, lemma_table=lemma_table, dropped_self=tuple(dropped))


# ── Queries ───────────────────────────────────────────────────────────────────

def antonym_set(res: AntonymResource, word: str) -> set[str]:
    """Antonyms of ``word`` plus the antonyms of each of its synonyms."""
    key = normalize_token(word)
    out = set(res.antonyms.get(key, ()))
    for syn in res.synonyms.get(key, ()):
        out |= res.antonyms.get(syn, frozenset())
    out.discard(key)
    return out


def _is_cvc(stem: str) -> bool:
    if len(stem) < 3:
        return False
    a, b, c = stem[-3], stem[-2], stem[-1]
    return a not in VOWELS and b in VOWELS and c not in VOWELS and c not in "wxy"


def _strip_verbal(res: AntonymResource, word: str, suffix: str) -> str | None:
    stem = word[: -len(suffix)]
    if len(stem) < 3 or not any(ch in VOWELS for ch in stem):
        return None
    if stem.endswith(("bl", "iz")):
        return stem + "e"
    if _known(res, stem + "e") and not _known(res, stem):
        return stem + "e"
    if len(stem) >= 2 and stem[-1] == stem[-2] and stem[-1] not in VOWELS and stem[-1] not in _NO_UNDOUBLE:
        return stem[:-1]
    if len(stem) <= 3 and _is_cvc(stem):
        return stem + "e"
    return stem


def _known(res: AntonymResource, word: str) -> bool:
    table = res.lemma_table or {}
    return word in table or word in table.values()


def lemma(res: AntonymResource, word: str) -> str:
    """Lemma from the table when listed, else ordered suffix rules."""
    w = normalize_token(word)
    if res.lemma_table is not None and w in res.lemma_table:
        return res.lemma_table[w]

    if w.endswith("ies") and len(w) > 4:
        return w[:-3] + "y"
    if _SIBILANT_ES.search(w) and len(w) > 4:
        if res.lemma_table is not None and _known(res, w[:-1]):
            return w[:-1]
        return w[:-2]
    if w.endswith("s") and len(w) > 3 and not w.endswith(("ss", "us", "is")):
        return w[:-1]
    if w.endswith("eed"):
        return w
    for suffix in ("ing", "ed"):
        if w.endswith(suffix):
            stripped = _strip_verbal(res, w, suffix)
            if stripped is not None:
                return stripped
    return w


def is_antonym_match(res: AntonymResource, stereotype: str, antistereotype: str) -> bool:
    targets = {lemma(res, a) for a in antonym_set(res, stereotype)}
    return lemma(res, antistereotype) in targets
