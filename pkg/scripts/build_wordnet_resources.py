"""
Build the antonym / synonym / lemma TSVs from WordNet.

    python -m nltk.downloader wordnet
    python scripts/build_wordnet_resources.py --words words.txt --out resources/

``words.txt`` lists the vocabulary to cover (e.g. every fill word of the
ingested corpus, one per line). The pipeline itself never touches WordNet;
it only reads the files written here, so runs stay offline and repeatable.
"""

from __future__ import annotations

import logging
from pathlib import Path

import typer
from nltk.corpus import wordnet as wn
from nltk.stem import WordNetLemmatizer

logger = logging.getLogger("build_wordnet_resources")

app = typer.Typer(add_completion=False)


def _name(lemma) -> str:
    return lemma.name().replace("_", " ").lower()


def synonyms_of(word: str) -> set[str]:
    out = set()
    for synset in wn.synsets(word):
        for lemma in synset.lemmas():
            name = _name(lemma)
            if name != word:
                out.add(name)
    return out


def antonyms_of(word: str) -> set[str]:
    out = set()
    for synset in wn.synsets(word):
        for lemma in synset.lemmas():
            if _name(lemma) != word:
                continue
            for ant in lemma.antonyms():
                name = _name(ant)
                if name != word:
                    out.add(name)
    return out


def lemma_of(lemmatizer: WordNetLemmatizer, word: str) -> str:
    # adjectives first: most fill words are traits
    for pos in ("a", "v", "n"):
        base = lemmatizer.lemmatize(word, pos=pos)
        if base != word:
            return base
    return word


def _write(path: Path, rows: dict[str, str]) -> int:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as f:
        for key in sorted(rows):
            f.write(f"{key}\t{rows[key]}\n")
    return len(rows)


@app.command()
def main(
    words: Path = typer.Option(..., "--words", help="Vocabulary file, one word per line."),
    out: Path = typer.Option(Path("resources"), "--out", help="Directory for the three TSVs."),
):
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    vocab = sorted({w.strip().lower() for w in words.read_text(encoding="utf-8").splitlines() if w.strip()})
    lemmatizer = WordNetLemmatizer()

    antonyms, synonyms, lemmas = {}, {}, {}
    for word in vocab:
        ants = antonyms_of(word)
        syns = synonyms_of(word)
        if ants:
            antonyms[word] = ",".join(sorted(ants))
        if syns:
            synonyms[word] = ",".join(sorted(syns))
        # synonyms' antonyms are looked up at run time, so they need rows too
        for syn in syns:
            if syn not in antonyms:
                syn_ants = antonyms_of(syn)
                if syn_ants:
                    antonyms[syn] = ",".join(sorted(syn_ants))
        base = lemma_of(lemmatizer, word)
        if base != word:
            lemmas[word] = base

    logger.info("antonyms: %d rows", _write(out / "antonyms.tsv", antonyms))
    logger.info("synonyms: %d rows", _write(out / "synonyms.tsv", synonyms))
    logger.info("lemmas: %d rows", _write(out / "lemmas.tsv", lemmas))


if __name__ == "__main__":
    app()
