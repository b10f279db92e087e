"""
StereoSet-style corpus ingestion.

Two input shapes are accepted:
  - StereoSet JSON: {"data": {"intrasentence": [record, ...], ...}} where a
    record has id, target, bias_type, a context with the token BLANK and
    three labeled candidate sentences.
  - Normalized JSON lines, one pair per line:
    {"target": ..., "domain": ..., "stereotype": ..., "antistereotype": ...}

Only the intra-sentence section is read.
"""

from __future__ import annotations

import json
import logging
import re
import string
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import NamedTuple

from core.embeddings import normalize_token
from core.errors import CorpusError, FillWordError

logger = logging.getLogger(__name__)

BLANK = "BLANK"
STEREOTYPE = "stereotype"
ANTI_STEREOTYPE = "anti-stereotype"
UNRELATED = "unrelated"

_TERMINAL = ".!?"
_EDGE_PUNCT = string.punctuation + "‘’“”"
_INTERNAL_TERMINAL = re.compile(r"[.!?]\s")


class Domain(Enum):
    GENDER = "gender"
    RACE = "race"
    PROFESSION = "profession"
    RELIGION = "religion"


@dataclass(frozen=True)
class WordPair:
    stereotype: str
    antistereotype: str
    annotator_id: str | None = None

    def __post_init__(self):
        s, a = normalize_token(self.stereotype), normalize_token(self.antistereotype)
        if not s or not a:
            raise CorpusError(f"empty word in pair ({self.stereotype!r}, {self.antistereotype!r})")
        object.__setattr__(self, "stereotype", s)
        object.__setattr__(self, "antistereotype", a)


@dataclass(frozen=True)
class TargetGroup:
    name: str
    domain: Domain
    pairs: tuple[WordPair, ...]

    def words(self, side: str = "stereotype") -> list[str]:
        if side == "anti":
            return [p.antistereotype for p in self.pairs]
        return [p.stereotype for p in self.pairs]


@dataclass(frozen=True)
class RawRecord:
    record_id: str
    target: str
    domain: Domain
    context: str
    sentences: dict[str, str] = field(default_factory=dict)


class ParsedCorpus(NamedTuple):
    records: list[RawRecord]
    skipped_no_blank: int
    skipped_malformed: int


@dataclass(frozen=True)
class IngestReport:
    records: int = 0
    skipped_no_blank: int = 0
    skipped_malformed: int = 0
    failed_extraction: int = 0
    excluded_targets: tuple[str, ...] = ()
    groups: int = 0
    pairs: int = 0

    @property
    def mean_pairs(self) -> float:
        return self.pairs / self.groups if self.groups else 0.0

    def to_dict(self) -> dict:
        return {
            "records": self.records,
            "skipped_no_blank": self.skipped_no_blank,
            "skipped_malformed": self.skipped_malformed,
            "failed_extraction": self.failed_extraction,
            "excluded_targets": list(self.excluded_targets),
            "groups": self.groups,
            "pairs": self.pairs,
            "mean_pairs": self.mean_pairs,
        }


# ══════════════════════════════════════════════════════════════════════════════
#  STEREOSET JSON
# ══════════════════════════════════════════════════════════════════════════════

def _intrasentence_section(payload) -> list | None:
    if isinstance(payload, list):
        return payload
    if not isinstance(payload, dict):
        return None
    data = payload.get("data", payload)
    if not isinstance(data, dict):
        return None
    section = data.get("intrasentence")
    return section if isinstance(section, list) else None


def _sentence_label(sentence: dict) -> str | None:
    label = sentence.get("gold_label")
    if isinstance(label, str):
        return label.strip().lower()
    return None


def _parse_records(section: list) -> ParsedCorpus:
    records = []
    no_blank = malformed = 0
    for i, raw in enumerate(section):
        if not isinstance(raw, dict):
            malformed += 1
            continue
        context = str(raw.get("context") or "")
        if BLANK not in context:
            no_blank += 1
            logger.debug("record %s has no %s in its context", raw.get("id", i), BLANK)
            continue
        try:
            domain = Domain(str(raw.get("bias_type", "")).strip().lower())
        except ValueError:
            malformed += 1
            logger.warning("record %s: unknown bias type %r", raw.get("id", i), raw.get("bias_type"))
            continue
        target = normalize_token(raw.get("target", ""))
        if not target:
            malformed += 1
            continue
        sentences = {}
        for cand in raw.get("sentences") or []:
            if not isinstance(cand, dict):
                continue
            label = _sentence_label(cand)
            if label and label not in sentences:
                sentences[label] = str(cand.get("sentence") or "")
        records.append(RawRecord(
            record_id=str(raw.get("id", i)),
            target=target,
            domain=domain,
            context=context,
            sentences=sentences,
        ))
    return ParsedCorpus(records, no_blank, malformed)


def parse_stereoset(path: str | Path) -> ParsedCorpus:
    path = Path(path)
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise CorpusError(f"cannot read corpus {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise CorpusError(f"{path} is not valid JSON: {e}") from e
    section = _intrasentence_section(payload)
    if section is None:
        logger.info("%s has no intra-sentence section; nothing to ingest", path)
        return ParsedCorpus([], 0, 0)
    parsed = _parse_records(section)
    if parsed.skipped_no_blank:
        logger.warning("%s: %d record(s) without %s skipped", path, parsed.skipped_no_blank, BLANK)
    return parsed


# ── Fill-word alignment ───────────────────────────────────────────────────────

def _same_token(a: str, b: str, final: bool) -> bool:
    if a.casefold() == b.casefold():
        return True
    return final and a.rstrip(_TERMINAL).casefold() == b.rstrip(_TERMINAL).casefold()


def extract_fill_word(context: str, sentence: str) -> str:
    """Words of ``sentence`` that stand where ``context`` has BLANK.

    Prefix and suffix tokens around BLANK must match the sentence up to case
    and a differing sentence-final punctuation mark.
    """
    ctx = context.split()
    blank_at = [i for i, tok in enumerate(ctx) if BLANK in tok]
    if len(blank_at) != 1:
        raise FillWordError(f"context must contain exactly one {BLANK}, found {len(blank_at)}")
    i = blank_at[0]
    lead, _, trail = ctx[i].partition(BLANK)
    prefix, suffix = ctx[:i], ctx[i + 1:]

    sent = sentence.split()
    if len(sent) < len(prefix) + len(suffix):
        raise FillWordError(f"sentence shorter than its context: {sentence!r}")
    for k, tok in enumerate(prefix):
        if not _same_token(tok, sent[k], final=False):
            raise FillWordError(f"prefix does not align at {tok!r}: {sentence!r}")
    tail = sent[len(sent) - len(suffix):] if suffix else []
    for k, tok in enumerate(suffix):
        if not _same_token(tok, tail[k], final=k == len(suffix) - 1):
            raise FillWordError(f"suffix does not align at {tok!r}: {sentence!r}")

    span = " ".join(sent[len(prefix): len(sent) - len(suffix)])
    if lead and span.lower().startswith(lead.lower()):
        span = span[len(lead):]
    if trail and span.lower().endswith(trail.lower()):
        span = span[: -len(trail)]
    span = span.strip().strip(_EDGE_PUNCT).strip()
    if not span:
        raise FillWordError(f"empty fill span: {sentence!r}")
    if _INTERNAL_TERMINAL.search(span):
        raise FillWordError(f"fill span crosses a sentence boundary: {span!r}")
    return span.lower()


# ── Grouping ──────────────────────────────────────────────────────────────────

def assemble_groups(
    records: list[RawRecord],
    people_filter: list[str] | set[str] = (),
) -> tuple[list[TargetGroup], IngestReport]:
    """One group per retained target, pairs ordered by record id."""
    excluded_names = {normalize_token(n) for n in people_filter}
    by_target: dict[str, list[RawRecord]] = defaultdict(list)
    excluded = set()
    for rec in records:
        if rec.target in excluded_names:
            excluded.add(rec.target)
            continue
        by_target[rec.target].append(rec)

    groups = []
    failed = 0
    for target in sorted(by_target):
        recs = sorted(by_target[target], key=lambda r: r.record_id)
        pairs = []
        for rec in recs:
            try:
                stereo = extract_fill_word(rec.context, rec.sentences.get(STEREOTYPE, ""))
                anti = extract_fill_word(rec.context, rec.sentences.get(ANTI_STEREOTYPE, ""))
            except FillWordError as e:
                failed += 1
                logger.debug("record %s (%s): %s", rec.record_id, target, e)
                continue
            pairs.append(WordPair(stereo, anti, annotator_id=rec.record_id))
        if pairs:
            groups.append(TargetGroup(name=target, domain=recs[0].domain, pairs=tuple(pairs)))

    if failed:
        logger.warning("%d record(s) failed fill-word alignment", failed)
    report = IngestReport(
        records=len(records),
        failed_extraction=failed,
        excluded_targets=tuple(sorted(excluded)),
        groups=len(groups),
        pairs=sum(len(g.pairs) for g in groups),
    )
    logger.info("assembled %d groups, %.1f pairs per group", report.groups, report.mean_pairs)
    return groups, report


# ══════════════════════════════════════════════════════════════════════════════
#  NORMALIZED JSONL
# ══════════════════════════════════════════════════════════════════════════════

def _parse_pair_line(obj, line_no: int) -> tuple[str, Domain, WordPair]:
    if not isinstance(obj, dict):
        raise CorpusError(f"line {line_no}: expected an object")
    missing = [k for k in ("target", "domain", "stereotype", "antistereotype") if k not in obj]
    if missing:
        raise CorpusError(f"line {line_no}: missing field(s) {', '.join(missing)}")
    try:
        domain = Domain(str(obj["domain"]).strip().lower())
    except ValueError:
        raise CorpusError(f"line {line_no}: unknown domain {obj['domain']!r}") from None
    target = normalize_token(obj["target"])
    if not target:
        raise CorpusError(f"line {line_no}: empty target")
    annotator = obj.get("annotator_id")
    pair = WordPair(str(obj["stereotype"]), str(obj["antistereotype"]),
                    annotator_id=None if annotator is None else str(annotator))
    return target, domain, pair


def _load_jsonl(text: str, people_filter) -> tuple[list[TargetGroup], IngestReport]:
    excluded_names = {normalize_token(n) for n in people_filter}
    pairs: dict[str, list[WordPair]] = defaultdict(list)
    domains: dict[str, Domain] = {}
    excluded = set()
    lines = 0
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        lines += 1
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as e:
            raise CorpusError(f"line {line_no}: invalid JSON: {e}") from e
        target, domain, pair = _parse_pair_line(obj, line_no)
        if target in excluded_names:
            excluded.add(target)
            continue
        domains.setdefault(target, domain)
        pairs[target].append(pair)

    groups = [TargetGroup(name=t, domain=domains[t], pairs=tuple(pairs[t])) for t in sorted(pairs)]
    report = IngestReport(
        records=lines,
        excluded_targets=tuple(sorted(excluded)),
        groups=len(groups),
        pairs=sum(len(g.pairs) for g in groups),
    )
    return groups, report


def _is_stereoset_payload(text: str) -> bool:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError:
        return False
    if isinstance(payload, dict):
        return "stereotype" not in payload
    return isinstance(payload, list)


def load_corpus(
    path: str | Path,
    people_filter: list[str] | set[str] = (),
) -> tuple[list[TargetGroup], IngestReport]:
    """Read either corpus shape and return the retained target groups."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise CorpusError(f"cannot read corpus {path}: {e}") from e
    if not text.strip():
        raise CorpusError(f"{path} is empty")

    if _is_stereoset_payload(text):
        parsed = parse_stereoset(path)
        groups, report = assemble_groups(parsed.records, people_filter)
        report = IngestReport(
            records=report.records,
            skipped_no_blank=parsed.skipped_no_blank,
            skipped_malformed=parsed.skipped_malformed,
            failed_extraction=report.failed_extraction,
            excluded_targets=report.excluded_targets,
            groups=report.groups,
            pairs=report.pairs,
        )
    else:
        groups, report = _load_jsonl(text, people_filter)
    if report.excluded_targets:
        logger.info("excluded targets: %s", ", ".join(report.excluded_targets))
    return groups, report


def write_corpus(groups: list[TargetGroup], path: str | Path) -> int:
    """Write the normalized JSONL; returns the number of pairs written."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    n = 0
    with path.open("w", encoding="utf-8", newline="\n") as f:
        for group in groups:
            for pair in group.pairs:
                row = {
                    "target": group.name,
                    "domain": group.domain.value,
                    "stereotype": pair.stereotype,
                    "antistereotype": pair.antistereotype,
                }
                if pair.annotator_id is not None:
                    row["annotator_id"] = pair.annotator_id
                f.write(json.dumps(row, ensure_ascii=False) + "\n")
                n += 1
    return n
