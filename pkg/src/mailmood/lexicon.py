"""Word-affect lexicons: sense-level and word-level models, file I/O, lookup.

File format (tab-separated, UTF-8, LF line endings)::

    word<TAB>label<TAB>flag

with flag 0 or 1 and one line per (word, label) pair. Lines starting with
``#`` are comments. A word whose ten flags are all 0 is still an entry: it
was annotated and found associated with nothing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from mailmood.labels import CANONICAL_ORDER, AffectLabel, parse_label


class LexiconError(Exception):
    """Base error for lexicon I/O and validation."""


class LexiconParseError(LexiconError):
    def __init__(self, path, line_no: int, message: str):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = path
        self.line_no = line_no


class LexiconConflictError(LexiconError):
    """Duplicate (word, label) lines with contradictory flags."""


@dataclass(frozen=True)
class SenseKey:
    """A word paired with an opaque thesaurus-category identifier."""

    word: str
    sense_id: str

    def __post_init__(self):
        if not self.word or any(c.isspace() for c in self.word):
            raise ValueError(f"sense word must be non-empty without whitespace: {self.word!r}")
        object.__setattr__(self, "word", self.word.lower())


@dataclass
class SenseLexicon:
    """Affect associations at word-sense granularity, with vote provenance.

    ``provenance`` maps each sense to per-label (yes_votes, total_valid_votes)
    tallies from aggregation.
    """

    entries: dict[SenseKey, frozenset[AffectLabel]] = field(default_factory=dict)
    provenance: dict[SenseKey, dict[AffectLabel, tuple[int, int]]] = field(default_factory=dict)


@dataclass
class WordLexicon:
    """Word -> affect-label set. Immutable by convention after construction."""

    entries: dict[str, frozenset[AffectLabel]] = field(default_factory=dict)

    def lookup(self, token: str) -> frozenset[AffectLabel]:
        return self.entries.get(token.lower(), frozenset())

    def __contains__(self, token: str) -> bool:
        return token.lower() in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WordLexicon):
            return NotImplemented
        return self.entries == other.entries


def lookup(lexicon: WordLexicon, token: str) -> frozenset[AffectLabel]:
    """Label set for the lowercased token; empty set if absent."""
    return lexicon.lookup(token)


def collapse_senses(sl: SenseLexicon) -> WordLexicon:
    """Word-level lexicon as the union of label sets over each word's senses."""
    merged: dict[str, set[AffectLabel]] = {}
    for key, labels in sl.entries.items():
        merged.setdefault(key.word, set()).update(labels)
    return WordLexicon({word: frozenset(labels) for word, labels in merged.items()})


def load_word_lexicon(path) -> WordLexicon:
    """Load a word-level lexicon from the tab-separated flag format."""
    path = Path(path)
    seen: dict[tuple[str, AffectLabel], bool] = {}
    entries: dict[str, set[AffectLabel]] = {}
    with path.open(encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise LexiconParseError(path, line_no, f"expected 3 tab-separated fields, got {len(parts)}")
            word, label_text, flag_text = parts
            word = word.strip().lower()
            if not word:
                raise LexiconParseError(path, line_no, "empty word")
            try:
                label = parse_label(label_text)
            except ValueError as exc:
                raise LexiconParseError(path, line_no, str(exc)) from None
            if flag_text.strip() not in ("0", "1"):
                raise LexiconParseError(path, line_no, f"flag must be 0 or 1, got {flag_text!r}")
            flag = flag_text.strip() == "1"
            prior = seen.get((word, label))
            if prior is not None and prior != flag:
                raise LexiconConflictError(
                    f"{path}:{line_no}: conflicting flags for ({word}, {label.value})"
                )
            seen[(word, label)] = flag
            entries.setdefault(word, set())
            if flag:
                entries[word].add(label)
    return WordLexicon({w: frozenset(s) for w, s in entries.items()})


def save_word_lexicon(lex: WordLexicon, path) -> None:
    """Write the lexicon deterministically: words ascending, labels in canonical order."""
    path = Path(path)
    lines = ["# word\tlabel\tflag"]
    for word in sorted(lex.entries):
        labels = lex.entries[word]
        for label in CANONICAL_ORDER:
            flag = "1" if label in labels else "0"
            lines.append(f"{word}\t{label.value}\t{flag}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_palette(path) -> dict[AffectLabel, str]:
    """Load a `label<TAB>hexcolour` palette override file."""
    path = Path(path)
    palette: dict[AffectLabel, str] = {}
    with path.open(encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise LexiconParseError(path, line_no, "expected `label<TAB>hexcolour`")
            try:
                label = parse_label(parts[0])
            except ValueError as exc:
                raise LexiconParseError(path, line_no, str(exc)) from None
            palette[label] = parts[1].strip()
    return palette
