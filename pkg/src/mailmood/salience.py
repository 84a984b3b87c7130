"""Relative salience of words across two corpora, and emotion-restricted
salience rankings for word clouds.

The salience of word w between corpora A and B is the difference of its
occurrence rates: f_A/N_A - f_B/N_B, where N counts all word tokens.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from mailmood.labels import AffectLabel
from mailmood.lexicon import WordLexicon
from mailmood.textstats import TokenStream


@dataclass
class CorpusStats:
    """All-token frequency table for one corpus."""

    term_freq: dict[str, int] = field(default_factory=dict)
    total_tokens: int = 0


@dataclass(frozen=True)
class SalienceEntry:
    word: str
    salience: float
    emotion: AffectLabel


def build_stats(docs: Sequence[TokenStream]) -> CorpusStats:
    stats = CorpusStats()
    for doc in docs:
        for token in doc.tokens:
            stats.term_freq[token] = stats.term_freq.get(token, 0) + 1
        stats.total_tokens += doc.total_tokens
    return stats


def relative_salience(word: str, a: CorpusStats, b: CorpusStats) -> float:
    """Occurrence-rate difference of ``word`` between the two corpora."""
    if a.total_tokens == 0 or b.total_tokens == 0:
        raise ValueError("relative salience is undefined over a zero-token corpus")
    return a.term_freq.get(word, 0) / a.total_tokens - b.term_freq.get(word, 0) / b.total_tokens


def salience_ranking(
    emotion: AffectLabel,
    a: CorpusStats,
    b: CorpusStats,
    lex: WordLexicon,
    top_n: int,
) -> list[SalienceEntry]:
    """Top lexicon words carrying ``emotion`` that are more characteristic of
    corpus A than B. Words with non-positive salience are excluded; ties
    break alphabetically."""
    if top_n < 1:
        raise ValueError("top_n must be >= 1")
    entries = []
    for word, labels in lex.entries.items():
        if emotion not in labels:
            continue
        value = relative_salience(word, a, b)
        if value > 0:
            entries.append(SalienceEntry(word, value, emotion))
    entries.sort(key=lambda e: (-e.salience, e.word))
    return entries[:top_n]
