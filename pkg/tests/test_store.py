import hashlib
import json
from pathlib import Path

import pytest

from core import __version__
from core.config import RunConfig, Subcommand, read_word_list
from core.errors import ConfigError
from storage import store
from tests.conftest import CORPUS, EMBEDDINGS, LEXICON


def _config(tmp_path, **overrides):
    values = dict(
        embeddings_paths=(EMBEDDINGS,),
        lexicon_path=LEXICON,
        corpus_path=CORPUS,
        output_dir=tmp_path,
    )
    values.update(overrides)
    return RunConfig(**values)


def test_write_csv_uses_lf(tmp_path):
    path = store.write_csv(tmp_path / "t.csv", ("a", "b"), [["x", 1], ["y, z", 2]])
    assert path.read_bytes() == b'a,b\nx,1\n"y, z",2\n'


def test_write_json_is_canonical(tmp_path):
    path = store.write_json(tmp_path / "sub" / "t.json", {"b": 1, "a": [1, 2]})
    assert path.read_text(encoding="utf-8") == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'


def test_file_checksum(tmp_path):
    path = tmp_path / "x.bin"
    path.write_bytes(b"warmth")
    assert store.file_checksum(path) == hashlib.sha256(b"warmth").hexdigest()


def test_manifest_keeps_one_entry_per_subcommand(tmp_path):
    config = _config(tmp_path)
    store.write_csv(tmp_path / store.CLUSTERS_CSV, ("target",), [["nurse"]])
    store.save_manifest(tmp_path, "cluster", config, {"groups": 1}, [store.CLUSTERS_CSV, "absent.csv"])
    store.save_manifest(tmp_path, "validate", config, {"models": 1})
    store.save_manifest(tmp_path, "cluster", config, {"groups": 2}, [store.CLUSTERS_CSV])

    manifest = store.load_manifest(tmp_path)
    assert manifest["tool"] == "scm-analysis"
    assert manifest["version"] == __version__
    assert sorted(manifest["runs"]) == ["cluster", "validate"]
    run = manifest["runs"]["cluster"]
    assert run["counts"] == {"groups": 2}
    assert run["config_hash"] == config.config_hash()
    assert run["inputs"]["embeddings[0]"] == store.file_checksum(EMBEDDINGS)
    assert list(run["outputs"]) == [store.CLUSTERS_CSV]
    assert "timestamp" not in json.dumps(manifest)


def test_identical_runs_give_identical_manifests(tmp_path):
    for name in ("one", "two"):
        store.save_manifest(tmp_path / name, "validate", _config(tmp_path / name), {"models": 1})
    one = (tmp_path / "one" / store.MANIFEST_NAME).read_bytes()
    two = (tmp_path / "two" / store.MANIFEST_NAME).read_bytes()
    assert one == two


def test_read_back_helpers(tmp_path):
    assert store.load_manifest(tmp_path) == {}
    assert store.load_table(tmp_path, "missing.csv") == []
    assert store.load_json(tmp_path, "missing.json") is None
    store.write_csv(tmp_path / "t.csv", ("word", "n"), [["kind", 2]])
    assert store.load_table(tmp_path, "t.csv") == [{"word": "kind", "n": "2"}]
    (tmp_path / "broken.json").write_text("{", encoding="utf-8")
    assert store.load_json(tmp_path, "broken.json") is None


# ── RunConfig ─────────────────────────────────────────────────────────────────

def test_config_hash_ignores_the_output_directory(tmp_path):
    assert _config(tmp_path / "a").config_hash() == _config(tmp_path / "b").config_hash()
    assert _config(tmp_path).config_hash() != _config(tmp_path, outlier_threshold=0.5).config_hash()


def test_config_to_dict_is_json_ready(tmp_path):
    data = _config(tmp_path).to_dict()
    assert "output_dir" not in data
    assert data["embeddings_paths"] == [Path(EMBEDDINGS).as_posix()]
    assert data["formats"] == ["csv", "json", "svg"]
    json.dumps(data)


@pytest.mark.parametrize(
    "subcommand, overrides, message",
    [
        (Subcommand.CLUSTER, {"corpus_path": None}, "--corpus"),
        (Subcommand.STRATEGIES, {}, "--antonyms"),
        (Subcommand.VALIDATE, {"embeddings_paths": ()}, "--embeddings"),
        (Subcommand.CLUSTER, {"lexicon_path": Path("nope.csv")}, "not found"),
        (Subcommand.CLUSTER, {"outlier_threshold": 0.0}, "threshold"),
        (Subcommand.CLUSTER, {"outlier_threshold": 2.5}, "threshold"),
        (Subcommand.CLUSTER, {"side": "both"}, "side"),
        (Subcommand.CLUSTER, {"formats": frozenset({"png"})}, "png"),
        (Subcommand.CLUSTER, {"limit": 0}, "limit"),
        (Subcommand.CLUSTER, {"bad_line_budget": 1.0}, "budget"),
    ],
)
def test_config_validation(tmp_path, subcommand, overrides, message):
    with pytest.raises(ConfigError, match=message):
        _config(tmp_path, **overrides).validate(subcommand)


def test_ingest_needs_only_a_corpus(tmp_path):
    config = RunConfig(corpus_path=CORPUS, output_dir=tmp_path)
    assert config.validate("ingest") is config


def test_read_word_list(tmp_path):
    path = tmp_path / "words.txt"
    path.write_text("# header\nBlack\nwhite  # inline\n\nblack\n", encoding="utf-8")
    assert read_word_list(path) == ["black", "white"]
    assert read_word_list(None) == []
    with pytest.raises(ConfigError):
        read_word_list(tmp_path / "missing.txt")
