"""Sentiment lexicon handling: parsing, merging, derivation and serialization.

A lexicon file is UTF-8, LF-terminated, tab-separated::

    token<TAB>mean<TAB>stddev<TAB>[r1, r2, ...]

The stddev and raw-ratings columns may be absent (2- or 3-column form),
which is common for augmentation files that only carry a valence.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

VALENCE_MIN = -4.0
VALENCE_MAX = 4.0

REFERENCE_LEXICON = "english_lexicon.txt"


class LexiconError(ValueError):
    """Malformed lexicon file, mapping file, or merge conflict."""


@dataclass(frozen=True)
class LexiconEntry:
    """One sentiment token: surface form, mean valence, rating dispersion."""

    token: str
    valence: float
    dispersion: float = 0.0
    raw_ratings: tuple[float, ...] = ()

    def __post_init__(self):
        if not self.token or self.token != self.token.lower():
            raise LexiconError(f"token must be non-empty lowercase: {self.token!r}")
        if "\t" in self.token or "\n" in self.token:
            raise LexiconError(f"token may not contain tabs/newlines: {self.token!r}")
        if not VALENCE_MIN <= self.valence <= VALENCE_MAX:
            raise LexiconError(
                f"valence {self.valence} for {self.token!r} outside "
                f"[{VALENCE_MIN}, {VALENCE_MAX}]"
            )
        if self.dispersion < 0:
            raise LexiconError(f"dispersion must be non-negative: {self.dispersion}")
        object.__setattr__(self, "raw_ratings", tuple(self.raw_ratings))

    def mean_mismatch(self) -> bool:
        """True when the stored valence disagrees with the raw-rating mean."""
        if not self.raw_ratings:
            return False
        return abs(self.valence - sum(self.raw_ratings) / len(self.raw_ratings)) > 1e-6


class Lexicon:
    """Immutable token -> LexiconEntry map with case-insensitive lookup."""

    def __init__(self, entries=(), name: str = ""):
        self.name = name
        self._entries: dict[str, LexiconEntry] = {}
        for entry in entries:
            if entry.token in self._entries:
                raise LexiconError(f"duplicate token {entry.token!r}")
            self._entries[entry.token] = entry
        self._vmap = {t: e.valence for t, e in self._entries.items()}
        # Multi-word entries participate in the engine's n-gram matching.
        self._phrase_first_words: set[str] = set()
        self._max_phrase_len = 1
        for token in self._entries:
            if " " in token:
                words = token.split(" ")
                self._phrase_first_words.add(words[0])
                self._max_phrase_len = max(self._max_phrase_len, len(words))

    @property
    def entries(self) -> dict[str, LexiconEntry]:
        return dict(self._entries)

    @property
    def phrase_first_words(self) -> set[str]:
        return self._phrase_first_words

    @property
    def max_phrase_len(self) -> int:
        return self._max_phrase_len

    def __len__(self):
        return len(self._entries)

    def __contains__(self, token: str) -> bool:
        return token.lower() in self._entries

    def __iter__(self):
        return iter(self._entries.values())

    def __eq__(self, other):
        if not isinstance(other, Lexicon):
            return NotImplemented
        return self._entries == other._entries

    def get(self, token: str) -> LexiconEntry | None:
        return self._entries.get(token.lower())

    def valence(self, token: str, default: float = 0.0) -> float:
        entry = self._entries.get(token.lower())
        return entry.valence if entry is not None else default

    def valence_map(self) -> dict[str, float]:
        """Plain token -> valence dict, for tight scoring loops (do not mutate)."""
        return self._vmap

    def tokens(self) -> list[str]:
        return sorted(self._entries)


@dataclass(frozen=True)
class DerivationRecord:
    """A Pidgin token, its English source valences, and their mean."""

    pidgin_token: str
    sources: tuple[tuple[str, float], ...]
    derived_valence: float
    warnings: tuple[str, ...] = ()

    def display_valence(self) -> float:
        return round(self.derived_valence, 1)


@dataclass(frozen=True)
class MergePolicy:
    """Collision handling for lexicon merges."""

    mode: str = "override"

    MODES = ("override", "keep-base", "error-on-conflict")

    def __post_init__(self):
        if self.mode not in self.MODES:
            raise LexiconError(f"unknown merge policy {self.mode!r}")


def _parse_line(line: str, lineno: int) -> LexiconEntry:
    parts = line.split("\t")
    if len(parts) < 2 or len(parts) > 4:
        raise LexiconError(f"line {lineno}: expected 2-4 tab-separated columns")
    token = parts[0].strip().lower()
    if not token:
        raise LexiconError(f"line {lineno}: empty token")
    try:
        valence = float(parts[1])
    except ValueError:
        raise LexiconError(f"line {lineno}: bad valence {parts[1]!r}") from None
    if not VALENCE_MIN <= valence <= VALENCE_MAX:
        raise LexiconError(f"line {lineno}: valence {valence} outside [-4, 4]")
    dispersion = 0.0
    raw_ratings: tuple[float, ...] = ()
    if len(parts) >= 3 and parts[2].strip():
        try:
            dispersion = float(parts[2])
        except ValueError:
            raise LexiconError(f"line {lineno}: bad stddev {parts[2]!r}") from None
    if len(parts) == 4 and parts[3].strip():
        try:
            ratings = json.loads(parts[3])
            raw_ratings = tuple(float(r) for r in ratings)
        except (ValueError, TypeError):
            raise LexiconError(f"line {lineno}: bad ratings list {parts[3]!r}") from None
    return LexiconEntry(token, valence, dispersion, raw_ratings)


def parse_lexicon_file(path, name: str | None = None, on_duplicate: str = "error") -> Lexicon:
    """Parse a tab-separated lexicon file.

    ``on_duplicate`` is ``error`` (the default), ``first`` or ``last``; the
    tolerant modes exist because the published English lexicon distribution
    contains repeated tokens, with dict-style last-wins lookup semantics.
    """
    if on_duplicate not in ("error", "first", "last"):
        raise ValueError(f"bad on_duplicate mode {on_duplicate!r}")
    path = Path(path)
    entries: dict[str, LexiconEntry] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n").rstrip("\r")
            if not line:
                continue
            entry = _parse_line(line, lineno)
            if entry.token in entries:
                if on_duplicate == "error":
                    raise LexiconError(
                        f"line {lineno}: duplicate token {entry.token!r}"
                    )
                if on_duplicate == "first":
                    continue
            entries[entry.token] = entry
    return Lexicon(entries.values(), name=name if name is not None else path.stem)


def serialize_lexicon_file(lexicon: Lexicon, path) -> None:
    """Write a 4-column file, tokens sorted, floats at round-trip precision."""
    lines = []
    for token in lexicon.tokens():
        entry = lexicon.get(token)
        ratings = "[" + ", ".join(_fmt(r) for r in entry.raw_ratings) + "]"
        lines.append(f"{token}\t{_fmt(entry.valence)}\t{_fmt(entry.dispersion)}\t{ratings}")
    Path(path).write_text("".join(line + "\n" for line in lines), encoding="utf-8")


def _fmt(x: float) -> str:
    # repr() gives the shortest string that round-trips the float exactly;
    # drop a trailing ".0" for readability of integral ratings.
    s = repr(float(x))
    return s[:-2] if s.endswith(".0") else s


def derive_entry(pidgin_token: str, sources) -> DerivationRecord:
    """Average the valences of a token's English meanings.

    The mean is kept at full precision; rounding to one decimal is display
    only. Emits a sign-consistency warning when the sources disagree in
    sign, a known hazard of hand-built translation tables.
    """
    pidgin_token = pidgin_token.strip().lower()
    if not pidgin_token:
        raise LexiconError("empty pidgin token")
    sources = tuple((tok, float(v)) for tok, v in sources)
    if not sources:
        raise LexiconError(f"{pidgin_token!r}: no source valences")
    for tok, v in sources:
        if not VALENCE_MIN <= v <= VALENCE_MAX:
            raise LexiconError(f"{pidgin_token!r}: source {tok!r} valence {v} outside [-4, 4]")
    warnings = []
    if any(v > 0 for _, v in sources) and any(v < 0 for _, v in sources):
        detail = ", ".join(f"{tok}({v:+.1f})" for tok, v in sources)
        warnings.append(f"{pidgin_token}: sources disagree in sign: {detail}")
    derived = sum(v for _, v in sources) / len(sources)
    return DerivationRecord(pidgin_token, sources, derived, tuple(warnings))


def merge(base: Lexicon, augmentation: Lexicon, policy: MergePolicy = MergePolicy()) -> Lexicon:
    """Combine two lexicons; collisions resolve per the policy.

    ``override`` lets augmentation entries shadow same-spelling base entries,
    which is the point of Pidgin augmentation: words that kept their English
    spelling but shifted meaning must take the Pidgin valence.
    """
    merged = dict(base.entries)
    collisions = []
    for entry in augmentation:
        if entry.token in merged:
            collisions.append(entry.token)
            if policy.mode == "error-on-conflict":
                raise LexiconError(f"merge conflict on token {entry.token!r}")
            if policy.mode == "keep-base":
                continue
        merged[entry.token] = entry
    name = f"{base.name}+{augmentation.name}" if base.name or augmentation.name else ""
    result = Lexicon(merged.values(), name=name)
    result.collisions = collisions
    return result


def parse_mapping_file(path) -> list[tuple[str, list[str], float | None]]:
    """Read a derivation mapping: ``pidgin<TAB>eng1,eng2,...[<TAB>expected]``.

    The optional third column is a published 1-decimal average used to
    cross-check the computed mean (see :func:`derive_from_mapping`).
    """
    rows = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n").rstrip("\r")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) < 2:
                raise LexiconError(f"line {lineno}: expected pidgin<TAB>english,... ")
            pidgin = parts[0].strip().lower()
            english = [w.strip() for w in parts[1].split(",") if w.strip()]
            if not pidgin or not english:
                raise LexiconError(f"line {lineno}: empty pidgin token or source list")
            expected = None
            if len(parts) >= 3 and parts[2].strip():
                try:
                    expected = float(parts[2])
                except ValueError:
                    raise LexiconError(f"line {lineno}: bad expected value {parts[2]!r}") from None
            rows.append((pidgin, english, expected))
    return rows


@dataclass
class DerivationResult:
    records: list[DerivationRecord] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    unresolved: list[tuple[str, str]] = field(default_factory=list)  # (pidgin, english)

    def to_lexicon(self, name: str = "derived") -> Lexicon:
        entries = [
            LexiconEntry(rec.pidgin_token, rec.derived_valence) for rec in self.records
        ]
        return Lexicon(entries, name=name)


def derive_from_mapping(mapping_rows, source: Lexicon) -> DerivationResult:
    """Derive one entry per mapping row, looking valences up in ``source``.

    English tokens missing from the source lexicon are collected in
    ``unresolved`` rather than raising, so a whole file can be reported at
    once. When a row carries an expected 1-decimal average that disagrees
    with the computed mean, a discrepancy warning is emitted; the computed
    mean always wins.
    """
    result = DerivationResult()
    for pidgin, english, expected in mapping_rows:
        missing = [w for w in english if w not in source]
        if missing:
            result.unresolved.extend((pidgin, w) for w in missing)
            continue
        record = derive_entry(pidgin, [(w, source.valence(w)) for w in english])
        if expected is not None and abs(record.display_valence() - expected) > 1e-9:
            record = DerivationRecord(
                record.pidgin_token,
                record.sources,
                record.derived_valence,
                record.warnings
                + (
                    f"{pidgin}: computed average {record.derived_valence:.4f} "
                    f"(displays {record.display_valence():.1f}) disagrees with "
                    f"expected {expected:.1f}",
                ),
            )
        result.warnings.extend(record.warnings)
        result.records.append(record)
    return result


def reference_lexicon_path() -> Path:
    """Location of the bundled English social-media lexicon."""
    return Path(resources.files("pidginsent").joinpath("data", REFERENCE_LEXICON))


def load_reference_lexicon() -> Lexicon:
    return parse_lexicon_file(reference_lexicon_path(), name="english")
