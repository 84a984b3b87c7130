"""Emotion-word analytics for letters and mailboxes.

Builds binary word-affect lexicons from crowdsourced annotation records,
computes emotion/polarity distributions and relative-salience rankings over
corpora, ingests mbox-style mailboxes with roster-based gender tagging, and
renders the results as SVG figures, a CLI, and a local dashboard API.
"""

from mailmood.labels import AffectLabel, EMOTIONS, POLARITIES
from mailmood.lexicon import (
    SenseKey,
    SenseLexicon,
    WordLexicon,
    collapse_senses,
    load_word_lexicon,
    save_word_lexicon,
)
from mailmood.textstats import (
    AffectCounts,
    AffectProfile,
    DiffProfile,
    TokenStream,
    corpus_profile,
    count_affect,
    diff,
    profile,
    tokenize,
)
from mailmood.salience import CorpusStats, SalienceEntry, build_stats, relative_salience, salience_ranking

__all__ = [
    "AffectLabel",
    "EMOTIONS",
    "POLARITIES",
    "SenseKey",
    "SenseLexicon",
    "WordLexicon",
    "collapse_senses",
    "load_word_lexicon",
    "save_word_lexicon",
    "AffectCounts",
    "AffectProfile",
    "DiffProfile",
    "TokenStream",
    "corpus_profile",
    "count_affect",
    "diff",
    "profile",
    "tokenize",
    "CorpusStats",
    "SalienceEntry",
    "build_stats",
    "relative_salience",
    "salience_ranking",
]
