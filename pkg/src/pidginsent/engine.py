"""Rule-based sentiment scoring over an immutable lexicon.

Tokenizes social-media text (emoticons preserved), looks tokens and
multi-word phrases up in a valence lexicon, applies context heuristics
(negation, degree modifiers, ALL-CAPS emphasis, contrastive "but",
punctuation emphasis) and produces negative/neutral/positive proportions
plus a normalized compound score on [-1, +1].

Scoring is a pure function of (text, lexicon, config): no interior state,
safe to call concurrently.
"""

from __future__ import annotations

import math
import re
import string
from dataclasses import dataclass

from .lexicon import Lexicon
from .rules import (
    BOOSTER_SIGNS,
    NEVER_SO_DISTANCE_2,
    NEVER_SO_DISTANCE_3,
    SPECIAL_CASE_IDIOMS,
    is_negation,
)

_PUNCTUATION = string.punctuation
_ELONGATION_RE = re.compile(r"(\w)\1{3,}")


@dataclass(frozen=True)
class EngineConfig:
    """Scoring constants; defaults match the reference rule set."""

    alpha: float = 15.0
    booster_increment: float = 0.293
    caps_scalar: float = 0.733
    negation_scalar: float = -0.74
    exclamation_unit: float = 0.292
    question_unit: float = 0.18
    question_cap: float = 0.96
    but_before_weight: float = 0.5
    but_after_weight: float = 1.5
    booster_distance_decay: tuple[float, float, float] = (1.0, 0.95, 0.9)
    max_ngram: int = 3
    normalize_elongation: bool = False

    def __post_init__(self):
        positive = {
            "alpha": self.alpha,
            "booster_increment": self.booster_increment,
            "caps_scalar": self.caps_scalar,
            "exclamation_unit": self.exclamation_unit,
            "question_unit": self.question_unit,
            "question_cap": self.question_cap,
            "but_before_weight": self.but_before_weight,
            "but_after_weight": self.but_after_weight,
        }
        for key, value in positive.items():
            if value <= 0:
                raise ValueError(f"{key} must be positive, got {value}")
        if self.negation_scalar >= 0:
            raise ValueError("negation_scalar must be negative")
        if len(self.booster_distance_decay) != 3 or any(
            d <= 0 for d in self.booster_distance_decay
        ):
            raise ValueError("booster_distance_decay needs 3 positive factors")
        if not 1 <= self.max_ngram <= 3:
            raise ValueError("max_ngram must be in [1, 3]")


DEFAULT_CONFIG = EngineConfig()


@dataclass(frozen=True)
class SentimentScores:
    """Proportions of negative/neutral/positive content plus compound."""

    negative: float
    neutral: float
    positive: float
    compound: float

    def as_dict(self) -> dict[str, float]:
        """Rounded presentation form (proportions 3 d.p., compound 4 d.p.)."""
        return {
            "negative": round(self.negative, 3),
            "neutral": round(self.neutral, 3),
            "positive": round(self.positive, 3),
            "compound": round(self.compound, 4),
        }


EMPTY_SCORES = SentimentScores(0.0, 0.0, 0.0, 0.0)


@dataclass(frozen=True)
class TokenizedDocument:
    original: str
    tokens: tuple[str, ...]
    is_cap_differential: bool


def _collapse_elongation(token: str) -> str:
    return _ELONGATION_RE.sub(lambda m: m.group(1) * 3, token)


def _cap_differential(tokens) -> bool:
    """Some, but not all, alphabetic tokens are ALL-CAPS."""
    alpha = [t for t in tokens if any(c.isalpha() for c in t)]
    if not alpha:
        return False
    caps = sum(1 for t in alpha if t.isupper())
    return 0 < caps < len(alpha)


def tokenize(text: str, cfg: EngineConfig = DEFAULT_CONFIG, lexicon: Lexicon | None = None) -> TokenizedDocument:
    """Whitespace-split and strip outer punctuation from word tokens.

    Tokens whose punctuation-bearing form is itself a lexicon entry
    (emoticons such as ``:)``) are kept intact, as are tokens that are
    nothing but punctuation.
    """
    tokens = []
    for raw in text.split():
        if cfg.normalize_elongation:
            raw = _collapse_elongation(raw)
        if len(raw) > 1 and not (lexicon is not None and raw.lower() in lexicon.valence_map()):
            stripped = raw.strip(_PUNCTUATION)
            if stripped:
                raw = stripped
        tokens.append(raw)
    return TokenizedDocument(text, tuple(tokens), _cap_differential(tokens))


def match_ngrams(tokens, index: int, lexicon: Lexicon, cfg: EngineConfig = DEFAULT_CONFIG):
    """Longest-match lookup of the n-gram starting at ``index``.

    Returns ``(matched lexicon token, span length)``; ``(None, 1)`` when
    nothing matches. Spans longer than 1 only occur for multi-word lexicon
    entries, and the caller is expected to consume the whole span so the
    constituent words are not scored again.
    """
    vmap = lexicon.valence_map()
    first = tokens[index].lower()
    if first in lexicon.phrase_first_words:
        limit = min(cfg.max_ngram, lexicon.max_phrase_len, len(tokens) - index)
        for n in range(limit, 1, -1):
            phrase = " ".join(t.lower() for t in tokens[index : index + n])
            if phrase in vmap:
                return phrase, n
    if first in vmap:
        return first, 1
    return None, 1


def _booster_scalar(word: str, valence: float, is_cap_diff: bool, cfg: EngineConfig) -> float:
    """Degree-modifier contribution of a context word, sign-aligned."""
    sign = BOOSTER_SIGNS.get(word.lower())
    if sign is None:
        return 0.0
    scalar = sign * cfg.booster_increment
    if valence < 0:
        scalar = -scalar
    if word.isupper() and is_cap_diff:
        scalar += cfg.caps_scalar if valence > 0 else -cfg.caps_scalar
    return scalar


def _negation_adjust(valence, lower_tokens, distance, index, cfg):
    """Negation and the "never so/this" amplification at one context slot."""
    if distance == 0:
        if is_negation(lower_tokens[index - 1]):
            valence *= cfg.negation_scalar
    elif distance == 1:
        if lower_tokens[index - 2] == "never" and lower_tokens[index - 1] in ("so", "this"):
            valence *= NEVER_SO_DISTANCE_2
        elif is_negation(lower_tokens[index - 2]):
            valence *= cfg.negation_scalar
    elif distance == 2:
        if (
            lower_tokens[index - 3] == "never"
            and lower_tokens[index - 2] in ("so", "this")
        ) or lower_tokens[index - 1] in ("so", "this"):
            valence *= NEVER_SO_DISTANCE_3
        elif is_negation(lower_tokens[index - 3]):
            valence *= cfg.negation_scalar
    return valence


def _idioms_adjust(valence, lower_tokens, index, cfg):
    """Fixed-valence idioms in a window around the hit, plus bigram dampeners."""
    n = len(lower_tokens)
    one_zero = f"{lower_tokens[index - 1]} {lower_tokens[index]}"
    two_one_zero = f"{lower_tokens[index - 2]} {one_zero}"
    two_one = f"{lower_tokens[index - 2]} {lower_tokens[index - 1]}"
    three_two_one = f"{lower_tokens[index - 3]} {two_one}"
    three_two = f"{lower_tokens[index - 3]} {lower_tokens[index - 2]}"
    for seq in (one_zero, two_one_zero, two_one, three_two_one, three_two):
        if seq in SPECIAL_CASE_IDIOMS:
            valence = SPECIAL_CASE_IDIOMS[seq]
            break
    if n - 1 > index:
        zero_one = f"{lower_tokens[index]} {lower_tokens[index + 1]}"
        if zero_one in SPECIAL_CASE_IDIOMS:
            valence = SPECIAL_CASE_IDIOMS[zero_one]
    if n - 1 > index + 1:
        zero_one_two = f"{lower_tokens[index]} {lower_tokens[index + 1]} {lower_tokens[index + 2]}"
        if zero_one_two in SPECIAL_CASE_IDIOMS:
            valence = SPECIAL_CASE_IDIOMS[zero_one_two]
    if three_two in BOOSTER_SIGNS or two_one in BOOSTER_SIGNS:
        valence -= cfg.booster_increment
    return valence


def _least_adjust(valence, lower_tokens, index, vmap, cfg):
    """A trailing "least" dampens, unless it is "at least" / "very least"."""
    if index > 0 and lower_tokens[index - 1] == "least" and "least" not in vmap:
        if index > 1 and lower_tokens[index - 2] in ("at", "very"):
            return valence
        valence *= cfg.negation_scalar
    return valence


def _context_adjust(valence, doc, index, lexicon, cfg):
    """All context heuristics for a lexicon hit at token ``index``."""
    tokens = doc.tokens
    lower = [t.lower() for t in tokens]
    vmap = lexicon.valence_map()
    if tokens[index].isupper() and doc.is_cap_differential:
        valence += cfg.caps_scalar if valence > 0 else -cfg.caps_scalar
    for distance in range(3):
        prev = index - (distance + 1)
        if index <= distance or lower[prev] in vmap:
            continue
        scalar = _booster_scalar(tokens[prev], valence, doc.is_cap_differential, cfg)
        if scalar != 0.0:
            scalar *= cfg.booster_distance_decay[distance]
        valence += scalar
        valence = _negation_adjust(valence, lower, distance, index, cfg)
        if distance == 2:
            valence = _idioms_adjust(valence, lower, index, cfg)
    return _least_adjust(valence, lower, index, vmap, cfg)


def token_valence(doc: TokenizedDocument, index: int, lexicon: Lexicon, cfg: EngineConfig = DEFAULT_CONFIG) -> float:
    """Context-adjusted valence of the token at ``index``; 0 for misses.

    Degree-modifier words never score on their own, even when a lexicon
    entry shares their spelling: they act on neighbours instead.
    """
    tokens = doc.tokens
    if not 0 <= index < len(tokens):
        raise IndexError(f"token index {index} out of range")
    lower = tokens[index].lower()
    if lower in BOOSTER_SIGNS:
        return 0.0
    if (
        lower == "kind"
        and index + 1 < len(tokens)
        and tokens[index + 1].lower() == "of"
    ):
        return 0.0
    base = lexicon.valence_map().get(lower)
    if base is None:
        return 0.0
    return _context_adjust(base, doc, index, lexicon, cfg)


def but_clause_reweight(valences, tokens, cfg: EngineConfig = DEFAULT_CONFIG):
    """Down-weight valences before the first "but", up-weight those after."""
    lower = [t.lower() for t in tokens]
    if "but" not in lower:
        return list(valences)
    but_index = lower.index("but")
    return [
        v * cfg.but_before_weight
        if i < but_index
        else (v * cfg.but_after_weight if i > but_index else v)
        for i, v in enumerate(valences)
    ]


def punctuation_amplifier(text: str, cfg: EngineConfig = DEFAULT_CONFIG) -> float:
    """Emphasis from exclamation points (up to 4) and question marks."""
    ep = min(text.count("!"), 4) * cfg.exclamation_unit
    qm_count = text.count("?")
    if qm_count <= 1:
        qm = 0.0
    elif qm_count <= 3:
        qm = qm_count * cfg.question_unit
    else:
        qm = cfg.question_cap
    return ep + qm


def normalize_compound(s: float, cfg: EngineConfig = DEFAULT_CONFIG) -> float:
    """Map an unbounded valence sum onto [-1, +1] via s/sqrt(s^2 + alpha)."""
    norm = s / math.sqrt(s * s + cfg.alpha)
    return max(-1.0, min(1.0, norm))


def _positional_valences(doc, lexicon, cfg):
    """(token position, raw valence) pairs; phrase spans score once."""
    tokens = doc.tokens
    n = len(tokens)
    scored = []
    i = 0
    while i < n:
        lower = tokens[i].lower()
        if lower in lexicon.phrase_first_words and lower not in BOOSTER_SIGNS:
            match, span = match_ngrams(tokens, i, lexicon, cfg)
            if span > 1:
                valence = _context_adjust(
                    lexicon.valence_map()[match], doc, i, lexicon, cfg
                )
                scored.append((i, valence))
                i += span
                continue
        scored.append((i, token_valence(doc, i, lexicon, cfg)))
        i += 1
    return scored


def polarity_scores(text: str, lexicon: Lexicon, cfg: EngineConfig = DEFAULT_CONFIG) -> SentimentScores:
    """Full scoring pipeline for one text; deterministic and stateless."""
    doc = tokenize(text, cfg, lexicon)
    if not doc.tokens:
        return EMPTY_SCORES
    scored = _positional_valences(doc, lexicon, cfg)

    lower = [t.lower() for t in doc.tokens]
    if "but" in lower:
        but_index = lower.index("but")
        scored = [
            (
                pos,
                v * cfg.but_before_weight
                if pos < but_index
                else (v * cfg.but_after_weight if pos > but_index else v),
            )
            for pos, v in scored
        ]
    valences = [v for _, v in scored]

    total = math.fsum(valences)
    amplifier = punctuation_amplifier(text, cfg)
    if total > 0:
        total += amplifier
    elif total < 0:
        total -= amplifier
    compound = normalize_compound(total, cfg)

    pos_pool = neg_pool = 0.0
    neu_pool = 0
    for v in valences:
        if v > 0:
            pos_pool += v + 1  # +1 keeps hits comparable to neutral counts
        elif v < 0:
            neg_pool += v - 1
        else:
            neu_pool += 1
    if pos_pool > abs(neg_pool):
        pos_pool += amplifier
    elif pos_pool < abs(neg_pool):
        neg_pool -= amplifier
    pool_total = pos_pool + abs(neg_pool) + neu_pool
    if pool_total == 0:
        return EMPTY_SCORES
    return SentimentScores(
        negative=abs(neg_pool / pool_total),
        neutral=neu_pool / pool_total,
        positive=pos_pool / pool_total,
        compound=compound,
    )
