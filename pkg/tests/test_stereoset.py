import json

import pytest

from core.config import DEFAULT_EXCLUSIONS, read_word_list
from core.errors import CorpusError, FillWordError
from core.stereoset import (
    Domain,
    WordPair,
    extract_fill_word,
    load_corpus,
    parse_stereoset,
    write_corpus,
)
from tests.conftest import CORPUS, STEREOSET


@pytest.mark.parametrize(
    "context, sentence, expected",
    [
        ("Women are known for being overly BLANK.", "Women are known for being overly emotional.", "emotional"),
        ("The BLANK woman walked in.", "The Assertive woman walked in.", "assertive"),
        ("The musician was BLANK.", "The musician was very creative.", "very creative"),
        ("People from Norway are BLANK.", "People from Norway are cold!", "cold"),
        ("BLANK people are everywhere.", "Rich people are everywhere!", "rich"),
        ("the musician was BLANK.", "The musician was shy.", "shy"),
        ("The BLANK, quiet boy sat.", "The shy, quiet boy sat.", "shy"),
        ("The team was BLANK.", "The team was \"disorganized\".", "disorganized"),
    ],
)
def test_extract_fill_word(context, sentence, expected):
    assert extract_fill_word(context, sentence) == expected


@pytest.mark.parametrize(
    "context, sentence",
    [
        ("The musician was BLANK.", "A musician was shy."),
        ("The musician was BLANK.", "The musician was ."),
        ("The musician was BLANK.", "The musician was creative. He played guitar."),
        ("The musician was nice.", "The musician was nice."),
        ("BLANK and BLANK.", "Loud and proud."),
        ("The BLANK woman walked in.", "The woman."),
    ],
)
def test_extract_fill_word_failures(context, sentence):
    with pytest.raises(FillWordError):
        extract_fill_word(context, sentence)


def test_parse_reads_only_the_intrasentence_section():
    parsed = parse_stereoset(STEREOSET)
    assert [r.record_id for r in parsed.records] == ["a2", "a1", "n1", "n2", "m1"]
    assert parsed.skipped_no_blank == 1
    assert parsed.skipped_malformed == 0
    assert parsed.records[0].sentences["anti-stereotype"] == "The Assertive woman walked in."


def test_load_stereoset_groups_and_exclusions():
    groups, report = load_corpus(STEREOSET, read_word_list(DEFAULT_EXCLUSIONS))
    assert [g.name for g in groups] == ["norwegian", "women"]
    women = groups[1]
    assert women.domain is Domain.GENDER
    assert [(p.stereotype, p.antistereotype) for p in women.pairs] == [
        ("emotional", "rational"),
        ("gentle", "assertive"),
    ]
    assert [p.annotator_id for p in women.pairs] == ["a1", "a2"]
    assert groups[0].words("anti") == ["dark-haired"]

    assert report.records == 5
    assert report.skipped_no_blank == 1
    assert report.failed_extraction == 1
    assert report.excluded_targets == ("norway",)
    assert (report.groups, report.pairs) == (2, 3)
    assert report.mean_pairs == 1.5


def test_file_without_intrasentence_section(tmp_path):
    path = tmp_path / "inter.json"
    path.write_text(json.dumps({"data": {"intersentence": []}}), encoding="utf-8")
    groups, report = load_corpus(path)
    assert groups == []
    assert report.groups == 0


def test_jsonl_corpus(groups):
    assert sorted(groups) == ["african", "engineer", "grandfather", "manager", "mommy", "nurse"]
    assert groups["nurse"].domain is Domain.PROFESSION
    assert groups["grandfather"].words() == ["old", "old", "kind", "feeble"]
    assert groups["manager"].words("anti") == ["meek", "messy", "submissive", "short"]


def test_jsonl_exclusions_are_case_insensitive():
    loaded, report = load_corpus(CORPUS, ["Nurse", "MANAGER"])
    assert [g.name for g in loaded] == ["african", "engineer", "grandfather", "mommy"]
    assert report.excluded_targets == ("manager", "nurse")


@pytest.mark.parametrize(
    "line, message",
    [
        ('{"target": "x", "domain": "gender", "stereotype": "a"}', "antistereotype"),
        ('{"target": "x", "domain": "age", "stereotype": "a", "antistereotype": "b"}', "domain"),
        ("not json", "invalid JSON"),
    ],
)
def test_bad_jsonl_line_is_fatal(tmp_path, line, message):
    path = tmp_path / "corpus.jsonl"
    good = '{"target": "x", "domain": "gender", "stereotype": "a", "antistereotype": "b"}'
    path.write_text(good + "\n" + line + "\n", encoding="utf-8")
    with pytest.raises(CorpusError, match=message):
        load_corpus(path)


def test_empty_corpus_is_fatal(tmp_path):
    path = tmp_path / "corpus.jsonl"
    path.write_text("", encoding="utf-8")
    with pytest.raises(CorpusError):
        load_corpus(path)


def test_write_corpus_round_trips(tmp_path):
    groups, _ = load_corpus(STEREOSET, ["norway"])
    path = tmp_path / "out" / "corpus.jsonl"
    assert write_corpus(groups, path) == 3
    first = json.loads(path.read_text(encoding="utf-8").splitlines()[0])
    assert first == {
        "target": "norwegian",
        "domain": "race",
        "stereotype": "blond",
        "antistereotype": "dark-haired",
        "annotator_id": "n2",
    }
    reloaded, _ = load_corpus(path)
    assert reloaded == groups


def test_word_pair_normalizes_and_rejects_empty_words():
    pair = WordPair(" Kind ", "MEAN")
    assert (pair.stereotype, pair.antistereotype) == ("kind", "mean")
    with pytest.raises(CorpusError):
        WordPair("kind", "  ")
