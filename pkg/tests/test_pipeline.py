import io
import json

import pytest

from core import pipeline
from core.config import RunConfig, Subcommand
from storage import store
from tests.conftest import CORPUS, EMBEDDINGS, LEXICON


def _cluster(tmp_path, **overrides) -> dict:
    config = RunConfig(
        embeddings_paths=(EMBEDDINGS,),
        lexicon_path=LEXICON,
        corpus_path=CORPUS,
        output_dir=tmp_path,
        formats=frozenset({"json"}),
        **overrides,
    )
    pipeline.run(Subcommand.CLUSTER, config)
    payload = json.loads((tmp_path / store.CLUSTERS_JSON).read_text(encoding="utf-8"))
    return {g["target"]: g for g in payload["groups"]}


def test_default_stoplist_removes_demographic_words(tmp_path):
    groups = _cluster(tmp_path)
    assert groups["african"]["discarded_demographic"] == ["black"]


@pytest.mark.parametrize("stoplist", ["file", None])
def test_custom_or_missing_stoplist_keeps_demographic_words(tmp_path, stoplist):
    path = None
    if stoplist == "file":
        path = tmp_path / "stoplist.txt"
        path.write_text("# nothing listed\n", encoding="utf-8")
    groups = _cluster(tmp_path / "out", stoplist_path=path)
    african = groups["african"]
    assert african["discarded_demographic"] == []
    assert african["discarded_outliers"] == ["black"]


def test_project_writes_to_the_given_stream(tmp_path):
    config = RunConfig(embeddings_paths=(EMBEDDINGS,), lexicon_path=LEXICON, output_dir=tmp_path)
    out = io.StringIO()
    counts = pipeline.run("project", config, stdin=io.StringIO("friendly\n"), stdout=out)
    assert counts == {"words": 1, "unresolved": 0}
    word, warmth, competence = out.getvalue().splitlines()[1].split(",")
    assert word == "friendly"
    assert float(warmth) == pytest.approx(0.5)
    assert float(competence) == pytest.approx(0.0, abs=1e-9)
