import random

import pytest

from core.embeddings import load_embeddings
from core.errors import ValidationError
from core.lexicon import Dimension, Facet, LexiconEntry, Polarity, Tier, build_seed_sets, parse_lexicon, validation_set
from core.polar import build_axes
from core.validation import REPORT_COLUMNS, compare_models, evaluate_lexicon, predict_polarity
from tests.conftest import TOY_EMBEDDINGS, TOY_LEXICON


@pytest.fixture
def split(entries, seeds, space):
    return validation_set(entries, seeds, space)


def _flip(entry):
    return LexiconEntry(entry.word, entry.dimension, entry.facet, entry.polarity.flipped(), entry.tier)


def test_fixture_lexicon_is_perfectly_separated(sub, space, split):
    report = evaluate_lexicon(sub, space, split.entries, skipped=split.skipped, model="fixture")
    assert report.warmth_accuracy == 100.0
    assert report.competence_accuracy == 100.0
    assert (report.warmth_n, report.competence_n) == (6, 6)
    assert report.skipped == 3
    assert report.per_facet == {"sociability": 100.0, "morality": 100.0, "ability": 100.0, "agency": 100.0}
    assert report.facet_n == {"sociability": 4, "morality": 2, "ability": 3, "agency": 3}


def test_flipping_labels_mirrors_accuracy(sub, space, split):
    entries = list(split.entries)
    entries[0] = _flip(entries[0])
    base = evaluate_lexicon(sub, space, entries)
    flipped = evaluate_lexicon(sub, space, [_flip(e) for e in entries])
    assert flipped.warmth_accuracy == pytest.approx(100.0 - base.warmth_accuracy)
    assert flipped.competence_accuracy == pytest.approx(100.0 - base.competence_accuracy)


def test_order_does_not_matter(sub, space, split):
    shuffled = list(split.entries)
    random.Random(5).shuffle(shuffled)
    assert evaluate_lexicon(sub, space, shuffled) == evaluate_lexicon(sub, space, split.entries)


def test_zero_coordinate_predicts_negative():
    toy = load_embeddings(TOY_EMBEDDINGS)
    sub = build_axes(toy, build_seed_sets(parse_lexicon(TOY_LEXICON)))
    entry = LexiconEntry("tepid", Dimension.WARMTH, Facet.SOCIABILITY, Polarity.POSITIVE, Tier.EXTENDED)
    assert predict_polarity(sub, toy, entry) is Polarity.NEGATIVE


def test_unknown_word_is_an_error(sub, space):
    entry = LexiconEntry("benevolent", Dimension.WARMTH, Facet.MORALITY, Polarity.POSITIVE, Tier.EXTENDED)
    with pytest.raises(ValidationError):
        predict_polarity(sub, space, entry)


def test_missing_dimension_is_an_error(sub, space, split):
    warmth_only = [e for e in split.entries if e.dimension is Dimension.WARMTH]
    with pytest.raises(ValidationError, match="competence"):
        evaluate_lexicon(sub, space, warmth_only)


def test_compare_models_gives_one_row_per_model(sub, space, split):
    a = evaluate_lexicon(sub, space, split.entries, skipped=3, model="a")
    b = evaluate_lexicon(sub, space, split.entries, skipped=3, model="b")
    rows = compare_models([a, b])
    assert [r["model"] for r in rows] == ["a", "b"]
    assert tuple(rows[0]) == REPORT_COLUMNS
    assert rows[1]["warmth_n"] == 6
