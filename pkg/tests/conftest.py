import pytest

from mailmood.labels import AffectLabel
from mailmood.lexicon import WordLexicon


@pytest.fixture
def tiny_lexicon() -> WordLexicon:
    return WordLexicon(
        {
            "loving": frozenset({AffectLabel.JOY, AffectLabel.POSITIVE}),
            "hell": frozenset({AffectLabel.FEAR, AffectLabel.NEGATIVE}),
            "quack": frozenset({AffectLabel.DISGUST, AffectLabel.NEGATIVE}),
            "shark": frozenset({AffectLabel.FEAR}),
            "plain": frozenset(),
        }
    )


def make_lexicon(mapping: dict[str, set[str]]) -> WordLexicon:
    return WordLexicon(
        {word: frozenset(AffectLabel(l) for l in labels) for word, labels in mapping.items()}
    )
