"""Run configuration shared by the CLI and the pipeline."""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field
from enum import Enum
from pathlib import Path

from core.errors import ConfigError

CONFIG_DIR = Path(__file__).resolve().parent.parent / "config"
DEFAULT_STOPLIST = CONFIG_DIR / "stoplist.txt"
DEFAULT_EXCLUSIONS = CONFIG_DIR / "exclusions.txt"
DEFAULT_PREDICTIONS = CONFIG_DIR / "predicted_quadrants.csv"

OUTPUT_FORMATS = frozenset({"csv", "json", "svg"})
SIDES = ("stereotype", "anti")


class Subcommand(str, Enum):
    VALIDATE = "validate"
    PROJECT = "project"
    CLUSTER = "cluster"
    STRATEGIES = "strategies"
    COUNTER = "counter"
    INGEST = "ingest"


_REQUIRED = {
    Subcommand.VALIDATE: ("embeddings_paths", "lexicon_path"),
    Subcommand.PROJECT: ("embeddings_paths", "lexicon_path"),
    Subcommand.CLUSTER: ("embeddings_paths", "lexicon_path", "corpus_path"),
    Subcommand.STRATEGIES: ("embeddings_paths", "lexicon_path", "corpus_path", "antonym_path"),
    Subcommand.COUNTER: ("embeddings_paths", "lexicon_path", "corpus_path", "antonym_path"),
    Subcommand.INGEST: ("corpus_path",),
}

_FLAG_NAMES = {
    "embeddings_paths": "--embeddings",
    "lexicon_path": "--lexicon",
    "corpus_path": "--corpus",
    "antonym_path": "--antonyms",
}


@dataclass(frozen=True)
class RunConfig:
    embeddings_paths: tuple[Path, ...] = ()
    lexicon_path: Path | None = None
    corpus_path: Path | None = None
    antonym_path: Path | None = None
    synonym_path: Path | None = None
    lemma_path: Path | None = None
    stoplist_path: Path | None = DEFAULT_STOPLIST
    exclusion_path: Path | None = DEFAULT_EXCLUSIONS
    predictions_path: Path | None = None
    outlier_threshold: float = 0.6
    normalize_axes: bool = False
    output_dir: Path = Path("output")
    formats: frozenset[str] = field(default_factory=lambda: OUTPUT_FORMATS)
    side: str = "stereotype"
    shared_vocab: bool = False
    limit: int | None = None
    bad_line_budget: float = 0.001

    @property
    def embeddings_path(self) -> Path | None:
        return self.embeddings_paths[0] if self.embeddings_paths else None

    def input_paths(self) -> dict[str, Path]:
        """Every configured input file, keyed by role (for checksums)."""
        out = {f"embeddings[{i}]": p for i, p in enumerate(self.embeddings_paths)}
        for name in ("lexicon_path", "corpus_path", "antonym_path", "synonym_path",
                     "lemma_path", "stoplist_path", "exclusion_path", "predictions_path"):
            value = getattr(self, name)
            if value is not None:
                out[name.removesuffix("_path")] = value
        return out

    def validate(self, subcommand: Subcommand | str) -> "RunConfig":
        sub = Subcommand(subcommand)
        for name in _REQUIRED[sub]:
            if not getattr(self, name):
                raise ConfigError(f"{sub.value} needs {_FLAG_NAMES[name]}")
        for role, path in self.input_paths().items():
            if not Path(path).is_file():
                raise ConfigError(f"{role} file not found: {path}")
        if not (0.0 < self.outlier_threshold <= 2.0):
            raise ConfigError(f"outlier threshold must be in (0, 2], got {self.outlier_threshold}")
        unknown = set(self.formats) - OUTPUT_FORMATS
        if unknown:
            raise ConfigError(f"unknown output format(s): {', '.join(sorted(unknown))}")
        if self.side not in SIDES:
            raise ConfigError(f"side must be one of {', '.join(SIDES)}, got {self.side!r}")
        if self.limit is not None and self.limit <= 0:
            raise ConfigError(f"limit must be positive, got {self.limit}")
        if not (0.0 <= self.bad_line_budget < 1.0):
            raise ConfigError(f"bad-line budget must be in [0, 1), got {self.bad_line_budget}")
        return self

    def to_dict(self) -> dict:
        raw = asdict(self)
        out = {}
        for key, value in raw.items():
            if key == "output_dir":
                continue
            if isinstance(value, Path):
                value = value.as_posix()
            elif isinstance(value, (tuple, list)):
                value = [v.as_posix() if isinstance(v, Path) else v for v in value]
            elif isinstance(value, (set, frozenset)):
                value = sorted(value)
            out[key] = value
        return out

    def config_hash(self) -> str:
        """sha256 of the canonical settings; the output directory is not part of it."""
        canonical = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def read_word_list(path: str | Path | None) -> list[str]:
    """One lowercase entry per line; blank lines and '#' comments ignored."""
    if path is None:
        return []
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8-sig")
    except OSError as e:
        raise ConfigError(f"cannot read word list {path}: {e}") from e
    words = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip().lower()
        if line and line not in words:
            words.append(line)
    return words
