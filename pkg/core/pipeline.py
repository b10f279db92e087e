"""
Batch pipeline behind the CLI subcommands.

Each run_* function reads its inputs from a validated RunConfig, writes its
artifacts into ``config.output_dir`` and returns the counts recorded in the
run manifest.
"""

from __future__ import annotations

import csv
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, TextIO

from components.plots import scatter_svg
from components.tables import (
    PROJECT_HEADER,
    clusters_to_rows,
    counters_to_rows,
    predictions_to_rows,
    projection_row,
    strategy_table_to_rows,
    validation_to_rows,
)
from core.antonymy import AntonymResource, load_resources
from core.clustering import (
    GroupCluster,
    compare_predictions,
    load_predictions,
    rank_kept_words,
    summarize_group,
)
from core.config import RunConfig, Subcommand, read_word_list
from core.counters import generate_counter, select_x_but_y
from core.embeddings import EmbeddingSpace, load_embeddings, shared_vocabulary
from core.errors import ClusterError, CounterError, VocabularyError
from core.lexicon import LexiconEntry, SeedSets, build_seed_sets, parse_lexicon, seed_counts, validation_set
from core.polar import PolarSubspace, build_axes, project_word
from core.stereoset import TargetGroup, load_corpus, write_corpus
from core.strategies import classify_groups, classify_pair, group_level_table, pairwise_table
from core.validation import evaluate_lexicon
from storage import store

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Axes:
    space: EmbeddingSpace
    entries: list[LexiconEntry]
    seeds: SeedSets
    sub: PolarSubspace


def _load_space(config: RunConfig, path: Path) -> EmbeddingSpace:
    return load_embeddings(path, limit=config.limit, bad_line_budget=config.bad_line_budget)


def _load_axes(config: RunConfig) -> Axes:
    entries = parse_lexicon(config.lexicon_path)
    seeds = build_seed_sets(entries)
    space = _load_space(config, config.embeddings_path)
    sub = build_axes(space, seeds, normalize_axes=config.normalize_axes)
    return Axes(space, entries, seeds, sub)


def _load_groups(config: RunConfig) -> tuple[list[TargetGroup], dict]:
    groups, report = load_corpus(config.corpus_path, read_word_list(config.exclusion_path))
    return groups, report.to_dict()


def _load_antonyms(config: RunConfig) -> AntonymResource:
    return load_resources(config.antonym_path, config.synonym_path, config.lemma_path)


def _summarize_all(
    axes: Axes,
    groups: list[TargetGroup],
    side: str,
    stoplist: list[str],
    threshold: float,
) -> tuple[list[GroupCluster], list[str]]:
    clusters, failed = [], []
    for group in groups:
        try:
            clusters.append(
                summarize_group(axes.space, axes.sub, group.name, group.words(side), stoplist, threshold)
            )
        except ClusterError as e:
            logger.warning("%s (%s side) skipped: %s", group.name, side, e)
            failed.append(group.name)
    return clusters, failed


def _points(clusters: list[GroupCluster]) -> list[tuple[str, float, float]]:
    return [(c.target, c.mean_point.warmth, c.mean_point.competence) for c in clusters]


# ══════════════════════════════════════════════════════════════════════════════
#  SUBCOMMANDS
# ══════════════════════════════════════════════════════════════════════════════

def run_validate(config: RunConfig) -> tuple[dict, list[str]]:
    entries = parse_lexicon(config.lexicon_path)
    seeds = build_seed_sets(entries)
    spaces = [_load_space(config, p) for p in config.embeddings_paths]
    vocabulary = shared_vocabulary(spaces) if config.shared_vocab else None

    reports = []
    for space in spaces:
        sub = build_axes(space, seeds, normalize_axes=config.normalize_axes)
        vs = validation_set(entries, seeds, space, vocabulary)
        reports.append(evaluate_lexicon(sub, space, vs.entries, skipped=vs.skipped, model=space.source_tag))

    out = config.output_dir
    written = []
    if "json" in config.formats:
        store.write_json(out / store.VALIDATION_JSON, {"models": [r.to_dict() for r in reports]})
        written.append(store.VALIDATION_JSON)
    if "csv" in config.formats:
        header, rows = validation_to_rows(reports)
        store.write_csv(out / store.VALIDATION_CSV, header, rows)
        written.append(store.VALIDATION_CSV)
    counts = {
        "models": len(reports),
        "lexicon_entries": len(entries),
        "seeds": list(seed_counts(seeds)),
        "shared_vocabulary": None if vocabulary is None else len(vocabulary),
    }
    return counts, written


def run_project(config: RunConfig, words: Iterable[str], out: TextIO) -> tuple[dict, list[str]]:
    axes = _load_axes(config)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(PROJECT_HEADER)
    n = oov = 0
    for raw in words:
        word = raw.strip()
        if not word:
            continue
        point = project_word(axes.sub, axes.space, word)
        n += 1
        if point is None:
            oov += 1
            logger.warning("%r has no vector", word)
        writer.writerow(projection_row(word, point))
    return {"words": n, "unresolved": oov}, []


def run_cluster(config: RunConfig) -> tuple[dict, list[str]]:
    axes = _load_axes(config)
    groups, ingest = _load_groups(config)
    stoplist = read_word_list(config.stoplist_path)
    clusters, failed = _summarize_all(axes, groups, config.side, stoplist, config.outlier_threshold)
    if not clusters:
        raise ClusterError("no target group produced a cluster")

    out = config.output_dir
    written = []
    if "csv" in config.formats:
        header, rows = clusters_to_rows(clusters)
        store.write_csv(out / store.CLUSTERS_CSV, header, rows)
        written.append(store.CLUSTERS_CSV)
    if "json" in config.formats:
        domains = {g.name: g.domain.value for g in groups}
        payload = {
            "side": config.side,
            "threshold": config.outlier_threshold,
            "failed_groups": failed,
            "groups": [
                {
                    "target": c.target,
                    "domain": domains.get(c.target),
                    "warmth": c.mean_point.warmth,
                    "competence": c.mean_point.competence,
                    "quadrant": c.quadrant.value,
                    "representative": c.representative,
                    "kept": [
                        {"word": w, "count": k, "distance": d}
                        for w, k, d in rank_kept_words(axes.space, c)
                    ],
                    "discarded_outliers": list(c.discarded_outliers),
                    "discarded_demographic": list(c.discarded_demographic),
                    "unresolved": list(c.unresolved),
                }
                for c in clusters
            ],
        }
        store.write_json(out / store.CLUSTERS_JSON, payload)
        written.append(store.CLUSTERS_JSON)
    if "svg" in config.formats:
        scatter_svg(_points(clusters), out / store.CLUSTERS_SVG)
        written.append(store.CLUSTERS_SVG)

    counts = {"groups": len(groups), "clusters": len(clusters), "failed_groups": len(failed), "ingest": ingest}
    if config.predictions_path is not None:
        report = compare_predictions(clusters, load_predictions(config.predictions_path))
        header, rows = predictions_to_rows(report)
        store.write_csv(out / store.PREDICTIONS_CSV, header, rows)
        written.append(store.PREDICTIONS_CSV)
        counts["predictions"] = {"compared": len(report.rows), "matches": report.matches, "missing": len(report.missing)}
    return counts, written


def run_strategies(config: RunConfig) -> tuple[dict, list[str]]:
    axes = _load_axes(config)
    res = _load_antonyms(config)
    groups, ingest = _load_groups(config)

    classified, excluded = [], 0
    for group in groups:
        for pair in group.pairs:
            try:
                classified.append(
                    classify_pair(res, axes.space, axes.sub, pair.stereotype, pair.antistereotype, target=group.name)
                )
            except VocabularyError as e:
                excluded += 1
                logger.info("%s: pair excluded: %s", group.name, e)
    pair_table = pairwise_table(classified, excluded=excluded)

    stoplist = read_word_list(config.stoplist_path)
    stereo, _ = _summarize_all(axes, groups, "stereotype", stoplist, config.outlier_threshold)
    anti, _ = _summarize_all(axes, groups, "anti", stoplist, config.outlier_threshold)
    anti_by_target = {c.target: c for c in anti}
    cluster_pairs = [(c, anti_by_target[c.target]) for c in stereo if c.target in anti_by_target]
    skipped_groups = sorted({g.name for g in groups} - {c.target for c, _ in cluster_pairs})
    group_rows = classify_groups(res, cluster_pairs)
    group_table = group_level_table(res, cluster_pairs)

    out = config.output_dir
    written = []
    if "csv" in config.formats:
        header, rows = strategy_table_to_rows(pair_table)
        store.write_csv(out / store.STRATEGIES_CSV, header, rows)
        header, rows = strategy_table_to_rows(group_table)
        store.write_csv(out / store.STRATEGIES_GROUPS_CSV, header, rows)
        written += [store.STRATEGIES_CSV, store.STRATEGIES_GROUPS_CSV]
    if "json" in config.formats:
        payload = {
            "pairwise": pair_table.to_dict(),
            "group_level": group_table.to_dict(),
            "skipped_groups": skipped_groups,
            "pairs": [
                {"target": p.target, "stereotype": p.stereotype, "antistereotype": p.antistereotype,
                 "label": p.label.value}
                for p in classified
            ],
            "groups": [
                {"target": r.target, "stereotype": r.stereotype_representative, "antonym": r.antonym,
                 "antistereotype": r.antistereotype_representative, "label": r.label.value}
                for r in group_rows
            ],
        }
        store.write_json(out / store.STRATEGIES_JSON, payload)
        written.append(store.STRATEGIES_JSON)
    counts = {
        "groups": len(groups),
        "pairs": len(classified),
        "excluded_pairs": excluded,
        "group_level": len(group_rows),
        "ingest": ingest,
    }
    return counts, written


def run_counter(config: RunConfig) -> tuple[dict, list[str]]:
    axes = _load_axes(config)
    res = _load_antonyms(config)
    groups, ingest = _load_groups(config)
    clusters, failed = _summarize_all(
        axes, groups, "stereotype", read_word_list(config.stoplist_path), config.outlier_threshold
    )

    counters = []
    for cluster in clusters:
        try:
            selection = select_x_but_y(axes.sub, axes.space, cluster)
        except CounterError as e:
            logger.warning("%s: %s", cluster.target, e)
            failed.append(cluster.target)
            continue
        counters.append(generate_counter(res, selection, axes.sub, axes.space))

    header, rows = counters_to_rows(counters)
    store.write_csv(config.output_dir / store.COUNTERS_CSV, header, rows)
    statuses: dict[str, int] = {}
    for c in counters:
        statuses[c.status.value] = statuses.get(c.status.value, 0) + 1
    counts = {
        "groups": len(groups),
        "counters": len(counters),
        "failed_groups": len(failed),
        "status": dict(sorted(statuses.items())),
        "ingest": ingest,
    }
    return counts, [store.COUNTERS_CSV]


def run_ingest(config: RunConfig) -> tuple[dict, list[str]]:
    groups, ingest = _load_groups(config)
    pairs = write_corpus(groups, config.output_dir / store.CORPUS_JSONL)
    logger.info("wrote %d pairs for %d groups", pairs, len(groups))
    return {"ingest": ingest}, [store.CORPUS_JSONL]


def run(
    subcommand: Subcommand | str,
    config: RunConfig,
    stdin: TextIO | None = None,
    stdout: TextIO | None = None,
) -> dict:
    """Validate ``config``, run one subcommand and write its manifest entry."""
    sub = Subcommand(subcommand)
    config.validate(sub)
    config.output_dir.mkdir(parents=True, exist_ok=True)

    if sub is Subcommand.VALIDATE:
        counts, written = run_validate(config)
    elif sub is Subcommand.PROJECT:
        counts, written = run_project(config, stdin if stdin is not None else sys.stdin,
                                      stdout if stdout is not None else sys.stdout)
    elif sub is Subcommand.CLUSTER:
        counts, written = run_cluster(config)
    elif sub is Subcommand.STRATEGIES:
        counts, written = run_strategies(config)
    elif sub is Subcommand.COUNTER:
        counts, written = run_counter(config)
    else:
        counts, written = run_ingest(config)

    store.save_manifest(config.output_dir, sub.value, config, counts, written)
    return counts
