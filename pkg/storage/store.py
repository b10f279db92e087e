"""Local artifact persistence with a per-directory run manifest."""

import csv
import hashlib
import io
import json
from pathlib import Path

from core import __version__

MANIFEST_NAME = "manifest.json"
VALIDATION_JSON = "validation.json"
VALIDATION_CSV = "validation.csv"
CLUSTERS_CSV = "clusters.csv"
CLUSTERS_JSON = "clusters.json"
CLUSTERS_SVG = "clusters.svg"
PREDICTIONS_CSV = "predictions.csv"
STRATEGIES_CSV = "strategies.csv"
STRATEGIES_GROUPS_CSV = "strategies_groups.csv"
STRATEGIES_JSON = "strategies.json"
COUNTERS_CSV = "counters.csv"
CORPUS_JSONL = "corpus.jsonl"


def _read(path):
    try:
        return Path(path).read_bytes()
    except FileNotFoundError:
        return None


def _write(path, data):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(data)
    return path


def write_csv(path, header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return _write(path, buf.getvalue().encode("utf-8"))


def write_json(path, payload):
    text = json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False, default=str)
    return _write(path, (text + "\n").encode("utf-8"))


def file_checksum(path):
    digest = hashlib.sha256()
    with Path(path).open("rb") as f:
        for chunk in iter(lambda: f.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def load_manifest(output_dir):
    data = _read(Path(output_dir) / MANIFEST_NAME)
    if data is None:
        return {}
    try:
        parsed = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError):
        return {}
    return parsed if isinstance(parsed, dict) else {}


def save_manifest(output_dir, subcommand, config, counts, outputs=()):
    """Record one run under ``runs[subcommand]``; earlier runs of other subcommands stay."""
    output_dir = Path(output_dir)
    manifest = load_manifest(output_dir)
    runs = manifest.get("runs", {})
    runs[subcommand] = {
        "config_hash": config.config_hash(),
        "config": config.to_dict(),
        "inputs": {role: file_checksum(p) for role, p in sorted(config.input_paths().items())},
        "outputs": {
            name: file_checksum(output_dir / name)
            for name in sorted(outputs)
            if (output_dir / name).is_file()
        },
        "counts": counts,
    }
    manifest = {"tool": "scm-analysis", "version": __version__, "runs": runs}
    write_json(output_dir / MANIFEST_NAME, manifest)
    return manifest


def load_table(output_dir, name):
    data = _read(Path(output_dir) / name)
    if data is None:
        return []
    return list(csv.DictReader(io.StringIO(data.decode("utf-8"))))


def load_json(output_dir, name):
    data = _read(Path(output_dir) / name)
    if not data:
        return None
    try:
        return json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError):
        return None
