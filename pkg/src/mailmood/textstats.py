"""Tokenization and emotion/polarity statistics over documents and corpora."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from mailmood.labels import EMOTIONS, POLARITIES, AffectLabel
from mailmood.lexicon import WordLexicon

# ASCII fast path: runs of lowercase letters or apostrophes.
_ASCII_TOKEN_RE = re.compile(r"[a-z']+")


class EmptyProfileError(ValueError):
    """Raised when a comparison needs a profile with no affect tokens."""


@dataclass
class TokenStream:
    tokens: list[str]

    @property
    def total_tokens(self) -> int:
        return len(self.tokens)


def tokenize(text: str) -> TokenStream:
    """Split on non-alphabetic, non-apostrophe characters; lowercase; strip
    leading and trailing apostrophes; drop empty results."""
    lowered = text.lower()
    if lowered.isascii():
        runs = _ASCII_TOKEN_RE.findall(lowered)
    else:
        runs, current = [], []
        for ch in lowered:
            if ch == "'" or ch.isalpha():
                current.append(ch)
            elif current:
                runs.append("".join(current))
                current = []
        if current:
            runs.append("".join(current))
    tokens = []
    for run in runs:
        token = run.strip("'")
        if token:
            tokens.append(token)
    return TokenStream(tokens)


@dataclass
class AffectCounts:
    """Token-level occurrence counts per affect label."""

    per_label: dict[AffectLabel, int] = field(default_factory=lambda: {l: 0 for l in AffectLabel})
    total_tokens: int = 0

    @property
    def emotion_token_total(self) -> int:
        return sum(self.per_label[e] for e in EMOTIONS)

    @property
    def polarity_token_total(self) -> int:
        return sum(self.per_label[p] for p in POLARITIES)

    def __add__(self, other: "AffectCounts") -> "AffectCounts":
        merged = {l: self.per_label[l] + other.per_label[l] for l in AffectLabel}
        return AffectCounts(merged, self.total_tokens + other.total_tokens)


def count_affect(ts: TokenStream, lex: WordLexicon) -> AffectCounts:
    """Each token occurrence adds one to every label the lexicon associates
    with it; repeated tokens count repeatedly."""
    per_label = {l: 0 for l in AffectLabel}
    for token in ts.tokens:
        for label in lex.lookup(token):
            per_label[label] += 1
    return AffectCounts(per_label, ts.total_tokens)


@dataclass
class AffectProfile:
    counts: AffectCounts
    emotion_pct: dict[AffectLabel, float]
    polarity_pct: dict[AffectLabel, float]

    @property
    def emotion_empty(self) -> bool:
        return self.counts.emotion_token_total == 0

    @property
    def polarity_empty(self) -> bool:
        return self.counts.polarity_token_total == 0

    @property
    def empty(self) -> bool:
        return self.emotion_empty and self.polarity_empty


@dataclass
class DiffProfile:
    per_emotion_delta: dict[AffectLabel, float]


def profile(counts: AffectCounts) -> AffectProfile:
    """Percentage distributions; emotion and polarity axes are normalized
    independently. Zero denominators yield all-zero maps (``empty`` flags)."""
    emo_total = counts.emotion_token_total
    pol_total = counts.polarity_token_total
    emotion_pct = {
        e: (100.0 * counts.per_label[e] / emo_total if emo_total else 0.0) for e in EMOTIONS
    }
    polarity_pct = {
        p: (100.0 * counts.per_label[p] / pol_total if pol_total else 0.0) for p in POLARITIES
    }
    return AffectProfile(counts, emotion_pct, polarity_pct)


def diff(a: AffectProfile, b: AffectProfile) -> DiffProfile:
    """Signed per-emotion percentage gap, a minus b."""
    if a.emotion_empty or b.emotion_empty:
        raise EmptyProfileError("cannot diff a profile with no emotion tokens")
    return DiffProfile({e: a.emotion_pct[e] - b.emotion_pct[e] for e in EMOTIONS})


def corpus_profile(docs: Sequence[TokenStream], lex: WordLexicon) -> AffectProfile:
    """Profile of the whole corpus: counts summed over documents, then
    normalized. Equals the profile of the concatenation."""
    total = AffectCounts()
    for doc in docs:
        total = total + count_affect(doc, lex)
    return profile(total)
