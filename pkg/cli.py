"""Command-line entry point: python cli.py <subcommand> [options]."""

from __future__ import annotations

import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

import typer

from core import __version__
from core.config import DEFAULT_EXCLUSIONS, DEFAULT_STOPLIST, OUTPUT_FORMATS, RunConfig, Subcommand
from core.errors import ConfigError, ScmError
from core.pipeline import run

app = typer.Typer(add_completion=False, no_args_is_help=True, help="Warmth/competence analysis of stereotype data.")

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def _configure_logging(verbose: int) -> None:
    level = logging.WARNING if verbose <= 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


def _fail(exc: ScmError, code: int) -> None:
    typer.echo(json.dumps({"error": type(exc).__name__, "message": str(exc)}), err=True)
    raise typer.Exit(code)


def _execute(subcommand: Subcommand, config: RunConfig) -> None:
    try:
        counts = run(subcommand, config)
    except ConfigError as e:
        _fail(e, 2)
    except ScmError as e:
        _fail(e, 1)
    else:
        logging.getLogger("cli").info("%s done: %s", subcommand.value, json.dumps(counts, sort_keys=True))


def _version(value: bool) -> None:
    if value:
        typer.echo(__version__)
        raise typer.Exit()


@app.callback()
def main(
    verbose: int = typer.Option(0, "--verbose", "-v", count=True, help="-v for INFO, -vv for DEBUG."),
    version: bool = typer.Option(False, "--version", callback=_version, is_eager=True, help="Print the version."),
):
    _configure_logging(verbose)


# ── Shared options ────────────────────────────────────────────────────────────

EMBEDDINGS = typer.Option(None, "--embeddings", envvar="SCM_EMBEDDINGS", help="word2vec/GloVe text file.")
LEXICON = typer.Option(None, "--lexicon", envvar="SCM_LEXICON", help="Lexicon CSV (seed and extended tiers).")
CORPUS = typer.Option(None, "--corpus", envvar="SCM_CORPUS", help="StereoSet JSON or normalized JSONL.")
ANTONYMS = typer.Option(None, "--antonyms", envvar="SCM_ANTONYMS", help="Antonym TSV.")
SYNONYMS = typer.Option(None, "--synonyms", envvar="SCM_SYNONYMS", help="Synonym TSV.")
LEMMAS = typer.Option(None, "--lemmas", envvar="SCM_LEMMAS", help="Lemma TSV.")
STOPLIST = typer.Option(DEFAULT_STOPLIST, "--stoplist", help="Demographic stoplist, one word per line.")
EXCLUSIONS = typer.Option(DEFAULT_EXCLUSIONS, "--exclusions", help="Targets that are not groups of people.")
THRESHOLD = typer.Option(0.6, "--threshold", help="Outlier cosine-distance threshold, in (0, 2].")
NORMALIZE = typer.Option(False, "--normalize-axes", help="Rescale both directions to unit length.")
OUTPUT_DIR = typer.Option(Path("output"), "--output-dir", "-o", envvar="SCM_OUTPUT_DIR", help="Artifact directory.")
LIMIT = typer.Option(None, "--limit", help="Read only the first N vectors.")
BAD_LINES = typer.Option(0.001, "--bad-line-budget", help="Tolerated share of malformed embedding lines.")
FORMATS = typer.Option(sorted(OUTPUT_FORMATS), "--format", help="Output formats (repeatable): csv, json, svg.")


def _single(path: Optional[Path]) -> tuple[Path, ...]:
    return (path,) if path is not None else ()


# ── Subcommands ───────────────────────────────────────────────────────────────

@app.command()
def validate(
    embeddings: Optional[List[Path]] = EMBEDDINGS,
    lexicon: Optional[Path] = LEXICON,
    shared_vocab: bool = typer.Option(False, "--shared-vocab", help="Evaluate only words every model knows."),
    normalize_axes: bool = NORMALIZE,
    output_dir: Path = OUTPUT_DIR,
    limit: Optional[int] = LIMIT,
    bad_line_budget: float = BAD_LINES,
    formats: List[str] = FORMATS,
):
    """Accuracy of the projected signs against the extended lexicon."""
    config = RunConfig(
        embeddings_paths=tuple(embeddings or ()),
        lexicon_path=lexicon,
        shared_vocab=shared_vocab,
        normalize_axes=normalize_axes,
        output_dir=output_dir,
        limit=limit,
        bad_line_budget=bad_line_budget,
        formats=frozenset(formats),
        stoplist_path=None,
        exclusion_path=None,
    )
    _execute(Subcommand.VALIDATE, config)


@app.command()
def project(
    embeddings: Optional[Path] = EMBEDDINGS,
    lexicon: Optional[Path] = LEXICON,
    normalize_axes: bool = NORMALIZE,
    output_dir: Path = OUTPUT_DIR,
    limit: Optional[int] = LIMIT,
    bad_line_budget: float = BAD_LINES,
):
    """Project words read from stdin (one per line); CSV on stdout."""
    config = RunConfig(
        embeddings_paths=_single(embeddings),
        lexicon_path=lexicon,
        normalize_axes=normalize_axes,
        output_dir=output_dir,
        limit=limit,
        bad_line_budget=bad_line_budget,
        stoplist_path=None,
        exclusion_path=None,
    )
    _execute(Subcommand.PROJECT, config)


@app.command()
def cluster(
    embeddings: Optional[Path] = EMBEDDINGS,
    lexicon: Optional[Path] = LEXICON,
    corpus: Optional[Path] = CORPUS,
    stoplist: Optional[Path] = STOPLIST,
    exclusions: Optional[Path] = EXCLUSIONS,
    threshold: float = THRESHOLD,
    side: str = typer.Option("stereotype", "--side", help="Cluster the stereotype or the anti side."),
    predictions: Optional[Path] = typer.Option(None, "--predictions", help="CSV of target,quadrant to compare."),
    normalize_axes: bool = NORMALIZE,
    output_dir: Path = OUTPUT_DIR,
    limit: Optional[int] = LIMIT,
    bad_line_budget: float = BAD_LINES,
    formats: List[str] = FORMATS,
):
    """Per-group mean point, quadrant and representative word."""
    config = RunConfig(
        embeddings_paths=_single(embeddings),
        lexicon_path=lexicon,
        corpus_path=corpus,
        stoplist_path=stoplist,
        exclusion_path=exclusions,
        outlier_threshold=threshold,
        side=side,
        predictions_path=predictions,
        normalize_axes=normalize_axes,
        output_dir=output_dir,
        limit=limit,
        bad_line_budget=bad_line_budget,
        formats=frozenset(formats),
    )
    _execute(Subcommand.CLUSTER, config)


@app.command()
def strategies(
    embeddings: Optional[Path] = EMBEDDINGS,
    lexicon: Optional[Path] = LEXICON,
    corpus: Optional[Path] = CORPUS,
    antonyms: Optional[Path] = ANTONYMS,
    synonyms: Optional[Path] = SYNONYMS,
    lemmas: Optional[Path] = LEMMAS,
    stoplist: Optional[Path] = STOPLIST,
    exclusions: Optional[Path] = EXCLUSIONS,
    threshold: float = THRESHOLD,
    normalize_axes: bool = NORMALIZE,
    output_dir: Path = OUTPUT_DIR,
    limit: Optional[int] = LIMIT,
    bad_line_budget: float = BAD_LINES,
    formats: List[str] = FORMATS,
):
    """Strategy tables for pairs and for group means."""
    config = RunConfig(
        embeddings_paths=_single(embeddings),
        lexicon_path=lexicon,
        corpus_path=corpus,
        antonym_path=antonyms,
        synonym_path=synonyms,
        lemma_path=lemmas,
        stoplist_path=stoplist,
        exclusion_path=exclusions,
        outlier_threshold=threshold,
        normalize_axes=normalize_axes,
        output_dir=output_dir,
        limit=limit,
        bad_line_budget=bad_line_budget,
        formats=frozenset(formats),
    )
    _execute(Subcommand.STRATEGIES, config)


@app.command()
def counter(
    embeddings: Optional[Path] = EMBEDDINGS,
    lexicon: Optional[Path] = LEXICON,
    corpus: Optional[Path] = CORPUS,
    antonyms: Optional[Path] = ANTONYMS,
    synonyms: Optional[Path] = SYNONYMS,
    lemmas: Optional[Path] = LEMMAS,
    stoplist: Optional[Path] = STOPLIST,
    exclusions: Optional[Path] = EXCLUSIONS,
    threshold: float = THRESHOLD,
    normalize_axes: bool = NORMALIZE,
    output_dir: Path = OUTPUT_DIR,
    limit: Optional[int] = LIMIT,
    bad_line_budget: float = BAD_LINES,
):
    """Positive counter-stereotypes for each group cluster."""
    config = RunConfig(
        embeddings_paths=_single(embeddings),
        lexicon_path=lexicon,
        corpus_path=corpus,
        antonym_path=antonyms,
        synonym_path=synonyms,
        lemma_path=lemmas,
        stoplist_path=stoplist,
        exclusion_path=exclusions,
        outlier_threshold=threshold,
        normalize_axes=normalize_axes,
        output_dir=output_dir,
        limit=limit,
        bad_line_budget=bad_line_budget,
    )
    _execute(Subcommand.COUNTER, config)


@app.command()
def ingest(
    corpus: Optional[Path] = CORPUS,
    exclusions: Optional[Path] = EXCLUSIONS,
    output_dir: Path = OUTPUT_DIR,
):
    """Normalize a StereoSet file into corpus.jsonl."""
    config = RunConfig(
        corpus_path=corpus,
        exclusion_path=exclusions,
        stoplist_path=None,
        output_dir=output_dir,
    )
    _execute(Subcommand.INGEST, config)


if __name__ == "__main__":
    app()
