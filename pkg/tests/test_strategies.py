import numpy as np
import pytest

from core.clustering import summarize_group
from core.config import DEFAULT_STOPLIST, read_word_list
from core.errors import ClusterError, VocabularyError
from core.polar import PolarPoint
from core.strategies import (
    COLUMNS,
    StrategyLabel,
    StrategyTable,
    classify_groups,
    classify_pair,
    group_level_table,
    pairwise_table,
    quadrant_relation,
)

L = StrategyLabel


@pytest.fixture(scope="module")
def classified(resources, space, sub, groups):
    return [
        classify_pair(resources, space, sub, p.stereotype, p.antistereotype, target=name)
        for name, g in sorted(groups.items())
        for p in g.pairs
    ]


@pytest.fixture(scope="module")
def cluster_pairs(space, sub, groups):
    stoplist = read_word_list(DEFAULT_STOPLIST)
    out = []
    for name, g in sorted(groups.items()):
        stereo = summarize_group(space, sub, name, g.words("stereotype"), stoplist)
        anti = summarize_group(space, sub, name, g.words("anti"), stoplist)
        out.append((stereo, anti))
    return out


@pytest.mark.parametrize(
    "stereo, anti, label",
    [
        ((1, 1), (-1, -1), L.OPPOSITE_QUADRANT),
        ((1, -1), (-1, -1), L.FLIP_WARMTH),
        ((-1, 1), (-1, -1), L.FLIP_COMPETENCE),
        ((1, 1), (2, 3), L.SAME_QUADRANT),
        ((0, 0), (-1, -1), L.SAME_QUADRANT),
        ((0, 0), (1, 0), L.FLIP_WARMTH),
    ],
)
def test_quadrant_relation(stereo, anti, label):
    assert quadrant_relation(PolarPoint(*stereo), PolarPoint(*anti)) is label


def test_geometric_labels_partition_the_plane():
    rng = np.random.default_rng(11)
    expected = {
        (True, True): L.OPPOSITE_QUADRANT,
        (True, False): L.FLIP_WARMTH,
        (False, True): L.FLIP_COMPETENCE,
        (False, False): L.SAME_QUADRANT,
    }
    for s, a in zip(rng.normal(size=(10_000, 2)), rng.normal(size=(10_000, 2))):
        sp, ap = PolarPoint(*s), PolarPoint(*a)
        label = quadrant_relation(sp, ap)
        assert label is expected[((s[0] > 0) != (a[0] > 0), (s[1] > 0) != (a[1] > 0))]
        assert quadrant_relation(ap, sp) is label
        assert quadrant_relation(PolarPoint(-s[0], s[1]), PolarPoint(-a[0], a[1])) is label
        assert quadrant_relation(PolarPoint(s[0], -s[1]), PolarPoint(a[0], -a[1])) is label


def test_direct_antonym_takes_priority(resources, space, sub):
    assert classify_pair(resources, space, sub, "old", "young").label is L.DIRECT_ANTONYM
    assert classify_pair(resources, space, sub, "feeble", "strong").label is L.DIRECT_ANTONYM


def test_geometric_fallback(resources, space, sub):
    assert classify_pair(resources, space, sub, "old", "energetic").label is L.FLIP_COMPETENCE
    assert classify_pair(resources, space, sub, "caring", "harsh").label is L.OPPOSITE_QUADRANT
    assert classify_pair(resources, space, sub, "tall", "short").label is L.SAME_QUADRANT


def test_pair_without_vector_is_an_error(resources, space, sub):
    with pytest.raises(VocabularyError, match="wizened"):
        classify_pair(resources, space, sub, "old", "wizened")


def test_pairwise_table(classified):
    table = pairwise_table(classified, excluded=2)
    assert table.n("overall") == 24
    assert [table.n(c) for c in COLUMNS] == [24, 4, 9, 4, 7, 11, 13]
    assert table.counts["overall"] == {
        L.DIRECT_ANTONYM: 9,
        L.OPPOSITE_QUADRANT: 5,
        L.FLIP_WARMTH: 5,
        L.FLIP_COMPETENCE: 4,
        L.SAME_QUADRANT: 1,
    }
    assert table.percentages("overall")[L.DIRECT_ANTONYM] == pytest.approx(37.5)
    assert table.percentages("LC-LW")[L.DIRECT_ANTONYM] == pytest.approx(75.0)
    assert table.excluded == 2


@pytest.mark.parametrize("column", COLUMNS)
def test_columns_sum_to_one_hundred(classified, column):
    table = pairwise_table(classified)
    assert sum(table.percentages(column).values()) == pytest.approx(100.0)


def test_empty_column_has_no_percentages():
    table = StrategyTable()
    assert set(table.percentages("HC-HW").values()) == {None}
    assert table.to_dict()["columns"]["overall"]["n"] == 0


def test_group_level_labels(resources, cluster_pairs):
    rows = {r.target: r for r in classify_groups(resources, cluster_pairs)}
    assert {t: r.label for t, r in rows.items()} == {
        "african": L.DIRECT_ANTONYM,
        "engineer": L.FLIP_WARMTH,
        "grandfather": L.FLIP_COMPETENCE,
        "manager": L.FLIP_COMPETENCE,
        "mommy": L.OPPOSITE_QUADRANT,
        "nurse": L.DIRECT_ANTONYM,
    }
    assert (rows["african"].stereotype_representative, rows["african"].antonym) == ("poor", "rich")
    assert rows["african"].antistereotype_representative == "rich"
    assert rows["grandfather"].antonym == "new"
    assert rows["mommy"].antonym == ""


def test_group_level_table(resources, cluster_pairs):
    table = group_level_table(resources, cluster_pairs)
    assert [table.n(c) for c in COLUMNS] == [6, 1, 2, 1, 2, 3, 3]
    assert table.percentages("overall")[L.DIRECT_ANTONYM] == pytest.approx(100 / 3)
    assert table.percentages("HC-LW") == {
        L.DIRECT_ANTONYM: 0.0,
        L.OPPOSITE_QUADRANT: 0.0,
        L.FLIP_WARMTH: 50.0,
        L.FLIP_COMPETENCE: 50.0,
        L.SAME_QUADRANT: 0.0,
    }


def test_group_without_anti_cluster(resources, cluster_pairs):
    stereo, _ = cluster_pairs[0]
    with pytest.raises(ClusterError):
        classify_groups(resources, [(stereo, None)])
