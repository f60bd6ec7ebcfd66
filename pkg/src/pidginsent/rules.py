"""Context-rule word lists and scoring constants.

These are the empirically derived heuristics of the standard rule-based
social-media sentiment method: negation cues, degree modifiers (boosters
and dampeners), and fixed-valence idioms. The numeric scalars live in
:class:`pidginsent.engine.EngineConfig` so the compatibility contract is
testable; the word lists below are part of the rule set itself.
"""

from __future__ import annotations

NEGATE = frozenset(
    [
        "aint", "arent", "cannot", "cant", "couldnt", "darent", "didnt",
        "doesnt", "ain't", "aren't", "can't", "couldn't", "daren't",
        "didn't", "doesn't", "dont", "hadnt", "hasnt", "havent", "isnt",
        "mightnt", "mustnt", "neither", "don't", "hadn't", "hasn't",
        "haven't", "isn't", "mightn't", "mustn't", "neednt", "needn't",
        "never", "none", "nope", "nor", "not", "nothing", "nowhere",
        "oughtnt", "shant", "shouldnt", "uhuh", "wasnt", "werent",
        "oughtn't", "shan't", "shouldn't", "uh-uh", "wasn't", "weren't",
        "without", "wont", "wouldnt", "won't", "wouldn't", "rarely",
        "seldom", "despite",
    ]
)

_INCREASERS = [
    "absolutely", "amazingly", "awfully", "completely", "considerably",
    "decidedly", "deeply", "effing", "enormously", "entirely",
    "especially", "exceptionally", "extremely", "fabulously", "flipping",
    "flippin", "fricking", "frickin", "frigging", "friggin", "fully",
    "fucking", "greatly", "hella", "highly", "hugely", "incredibly",
    "intensely", "majorly", "more", "most", "particularly", "purely",
    "quite", "really", "remarkably", "so", "substantially", "thoroughly",
    "totally", "tremendously", "uber", "unbelievably", "unusually",
    "utterly", "very",
]

_DECREASERS = [
    "almost", "barely", "hardly", "just enough", "kind of", "kinda",
    "kindof", "kind-of", "less", "little", "marginally", "occasionally",
    "partly", "scarcely", "slightly", "somewhat", "sort of", "sorta",
    "sortof", "sort-of",
]

# word -> +1.0 (intensifies) or -1.0 (dampens); scaled by the config's
# booster_increment at scoring time.
BOOSTER_SIGNS: dict[str, float] = {w: 1.0 for w in _INCREASERS}
BOOSTER_SIGNS.update({w: -1.0 for w in _DECREASERS})

# Multi-word constructs with fixed valences that override the component
# words' scores when seen in a window around a lexicon hit.
SPECIAL_CASE_IDIOMS: dict[str, float] = {
    "the shit": 3.0,
    "the bomb": 3.0,
    "bad ass": 1.5,
    "yeah right": -2.0,
    "cut the mustard": 2.0,
    "kiss of death": -1.5,
    "hand to mouth": -2.0,
}

# "never so X" / "never this X" flips negation into amplification; the
# factor depends on how far back "never" sits.
NEVER_SO_DISTANCE_2 = 1.5
NEVER_SO_DISTANCE_3 = 1.25


def is_negation(word: str, include_contractions: bool = True) -> bool:
    """True when the (lowercased) word signals negation."""
    word = word.lower()
    if word in NEGATE:
        return True
    return include_contractions and "n't" in word
