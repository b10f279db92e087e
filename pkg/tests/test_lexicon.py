import pytest

from core.embeddings import EmbeddingSpace
from core.errors import LexiconError
from core.lexicon import (
    Dimension,
    Facet,
    Polarity,
    Tier,
    build_seed_sets,
    parse_lexicon,
    seed_counts,
    serialize_lexicon,
    validation_set,
)

HEADER = "word,dimension,facet,polarity,tier\n"


def _lexicon(tmp_path, body):
    path = tmp_path / "lexicon.csv"
    path.write_text(HEADER + body, encoding="utf-8")
    return path


def test_fixture_parses_and_drops_the_tied_word(entries):
    assert len(entries) == 23
    assert "fickle" not in {e.word for e in entries}


def test_polarity_aliases(entries):
    by_word = {(e.word, e.tier): e for e in entries}
    assert by_word[("loving", Tier.EXTENDED)].polarity is Polarity.POSITIVE
    assert by_word[("harsh", Tier.EXTENDED)].polarity is Polarity.NEGATIVE


def test_same_word_in_both_tiers_is_kept_twice(entries):
    tiers = sorted(e.tier.value for e in entries if e.word == "friendly")
    assert tiers == ["extended", "seed"]


def test_majority_vote_collapses_duplicates(tmp_path):
    path = _lexicon(
        tmp_path,
        "brave,competence,agency,+1,extended\n"
        "brave,competence,agency,-1,extended\n"
        "brave,competence,agency,+1,extended\n",
    )
    (entry,) = parse_lexicon(path)
    assert entry.polarity is Polarity.POSITIVE


def test_tier_polarity_conflict_is_flagged(tmp_path, caplog):
    path = _lexicon(
        tmp_path,
        "proud,warmth,morality,+1,seed\n"
        "proud,warmth,morality,-1,extended\n"
        "kind,warmth,morality,+1,seed\n"
        "kind,warmth,morality,+1,extended\n",
    )
    with caplog.at_level("WARNING"):
        entries = parse_lexicon(path)
    assert len(entries) == 4
    assert "'proud' (warmth): seed and extended rows disagree" in caplog.text
    assert "'kind'" not in caplog.text


def test_facet_must_belong_to_dimension(tmp_path):
    path = _lexicon(tmp_path, "brave,warmth,agency,+1,extended\n")
    with pytest.raises(LexiconError, match="line 2"):
        parse_lexicon(path)


@pytest.mark.parametrize(
    "row",
    [
        "brave,competence,agency,maybe,extended\n",
        "brave,competence,agency,+1,core\n",
        "brave,niceness,agency,+1,extended\n",
        ",competence,agency,+1,extended\n",
    ],
)
def test_bad_rows_are_fatal(tmp_path, row):
    with pytest.raises(LexiconError):
        parse_lexicon(_lexicon(tmp_path, row))


def test_missing_header_column(tmp_path):
    path = tmp_path / "lexicon.csv"
    path.write_text("word,dimension,polarity,tier\nbrave,competence,+1,seed\n", encoding="utf-8")
    with pytest.raises(LexiconError, match="facet"):
        parse_lexicon(path)


def test_header_only_is_fatal(tmp_path):
    with pytest.raises(LexiconError):
        parse_lexicon(_lexicon(tmp_path, ""))


def test_facet_dimensions():
    assert Facet.SOCIABILITY.dimension is Dimension.WARMTH
    assert Facet.MORALITY.dimension is Dimension.WARMTH
    assert Facet.AGENCY.dimension is Dimension.COMPETENCE
    assert Facet.ABILITY.dimension is Dimension.COMPETENCE


def test_seed_sets_pool_both_facets_in_file_order(seeds):
    assert seeds.warm_pos == ("friendly", "trustworthy")
    assert seeds.warm_neg == ("cold", "dishonest")
    assert seeds.comp_pos == ("confident", "smart")
    assert seeds.comp_neg == ("lazy", "stupid")
    assert seed_counts(seeds) == (2, 2, 2, 2)


def test_empty_seed_cell_is_fatal(tmp_path):
    path = _lexicon(
        tmp_path,
        "kind,warmth,sociability,+1,seed\n"
        "cold,warmth,sociability,-1,seed\n"
        "smart,competence,ability,+1,seed\n",
    )
    with pytest.raises(LexiconError, match="competence"):
        build_seed_sets(parse_lexicon(path))


def test_seed_word_in_two_cells_is_fatal(tmp_path):
    path = _lexicon(
        tmp_path,
        "kind,warmth,sociability,+1,seed\n"
        "cold,warmth,sociability,-1,seed\n"
        "kind,competence,ability,+1,seed\n"
        "lazy,competence,agency,-1,seed\n",
    )
    with pytest.raises(LexiconError, match="kind"):
        build_seed_sets(parse_lexicon(path))


def test_validation_set_removes_seeds_and_missing_words(entries, seeds, space):
    vs = validation_set(entries, seeds, space)
    assert len(vs.entries) == 12
    assert vs.removed_seed == 1
    assert vs.removed_oov == 2
    assert vs.skipped == 3
    assert all(e.tier is Tier.EXTENDED for e in vs.entries)


def test_validation_set_honours_a_narrower_vocabulary(entries, seeds, space):
    vocabulary = set(space.index) - {"kind", "messy"}
    vs = validation_set(entries, seeds, space, vocabulary)
    assert len(vs.entries) == 10
    assert vs.removed_oov == 4


def test_validation_set_with_empty_space(entries, seeds):
    tiny = EmbeddingSpace.from_vectors({"friendly": [1.0, 0.0]})
    vs = validation_set(entries, seeds, tiny)
    assert vs.entries == ()
    assert vs.removed_oov == 14


def test_serialize_then_parse_is_identity(entries, tmp_path):
    path = tmp_path / "out.csv"
    serialize_lexicon(entries, path)
    assert parse_lexicon(path) == entries
    assert path.read_text(encoding="utf-8").splitlines()[0] == HEADER.strip()
