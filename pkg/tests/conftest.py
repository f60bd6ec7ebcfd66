import json
from pathlib import Path

import pytest

from pidginsent import (
    Lexicon,
    LexiconEntry,
    MergePolicy,
    load_reference_lexicon,
    merge,
    parse_lexicon_file,
)

FIXTURES = Path(__file__).parent / "fixtures"

# The seven published example tweets with their expected compounds at the
# default thresholds. The "after" column is reproduced by the synthesized
# augmentation fixture (the published 300-token file is not redistributable
# in this sandbox; see tests/fixtures/pidgin_augmentation.txt).
TABLE1 = [
    # (id, before, after, label_before, label_after, gold)
    ("t1", -0.1154, 0.7964, "negative", "positive", "positive"),
    ("t2", 0.0000, 0.5080, "neutral", "positive", "positive"),
    ("t3", 0.0000, 0.6209, "neutral", "positive", "positive"),
    ("t4", 0.0000, 0.5106, "neutral", "positive", "positive"),
    ("t5", 0.0000, -0.6908, "neutral", "negative", "negative"),
    ("t6", 0.2960, 0.5423, "positive", "positive", "positive"),
    ("t7", 0.3400, -0.2500, "positive", "negative", "negative"),
]


@pytest.fixture(scope="session")
def english_lexicon():
    return load_reference_lexicon()


@pytest.fixture(scope="session")
def augmentation_lexicon():
    return parse_lexicon_file(FIXTURES / "pidgin_augmentation.txt", name="pidgin")


@pytest.fixture(scope="session")
def augmented_lexicon(english_lexicon, augmentation_lexicon):
    return merge(english_lexicon, augmentation_lexicon, MergePolicy("override"))


@pytest.fixture(scope="session")
def table1_corpus_path():
    return FIXTURES / "table1_corpus.csv"


@pytest.fixture(scope="session")
def table1_texts(table1_corpus_path):
    from pidginsent import load_corpus

    return {doc.id: doc.text for doc in load_corpus(table1_corpus_path)}


@pytest.fixture(scope="session")
def oracle_rows():
    return json.load(open(FIXTURES / "english_oracle.json", encoding="utf-8"))


@pytest.fixture()
def tiny_lexicon():
    return Lexicon(
        [
            LexiconEntry("good", 1.9),
            LexiconEntry("bad", -2.5),
            LexiconEntry("na beg", -1.5),
            LexiconEntry("beg", -0.5),
        ],
        name="tiny",
    )
