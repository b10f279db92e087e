from pathlib import Path

import pytest

from core.antonymy import load_resources
from core.embeddings import load_embeddings
from core.lexicon import build_seed_sets, parse_lexicon
from core.polar import build_axes
from core.stereoset import load_corpus

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = FIXTURES / "golden"

EMBEDDINGS = FIXTURES / "embeddings.txt"
LEXICON = FIXTURES / "lexicon.csv"
CORPUS = FIXTURES / "corpus.jsonl"
ANTONYMS = FIXTURES / "antonyms.tsv"
SYNONYMS = FIXTURES / "synonyms.tsv"
LEMMAS = FIXTURES / "lemmas.tsv"
STEREOSET = FIXTURES / "stereoset_sample.json"
TOY_EMBEDDINGS = FIXTURES / "toy_embeddings.txt"
TOY_LEXICON = FIXTURES / "toy_lexicon.csv"


@pytest.fixture(scope="session")
def space():
    return load_embeddings(EMBEDDINGS)


@pytest.fixture(scope="session")
def entries():
    return parse_lexicon(LEXICON)


@pytest.fixture(scope="session")
def seeds(entries):
    return build_seed_sets(entries)


@pytest.fixture(scope="session")
def sub(space, seeds):
    return build_axes(space, seeds)


@pytest.fixture(scope="session")
def resources():
    return load_resources(ANTONYMS, SYNONYMS, LEMMAS)


@pytest.fixture(scope="session")
def groups():
    loaded, _ = load_corpus(CORPUS)
    return {g.name: g for g in loaded}
