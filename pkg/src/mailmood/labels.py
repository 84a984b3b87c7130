"""The closed set of affect labels: eight basic emotions plus two polarities."""

from __future__ import annotations

from enum import Enum


class AffectLabel(str, Enum):
    ANGER = "anger"
    ANTICIPATION = "anticipation"
    DISGUST = "disgust"
    FEAR = "fear"
    JOY = "joy"
    SADNESS = "sadness"
    SURPRISE = "surprise"
    TRUST = "trust"
    POSITIVE = "positive"
    NEGATIVE = "negative"

    @property
    def is_emotion(self) -> bool:
        return self not in (AffectLabel.POSITIVE, AffectLabel.NEGATIVE)

    def __str__(self) -> str:
        return self.value


# Canonical ordering used for file output and JSON payloads.
CANONICAL_ORDER: tuple[AffectLabel, ...] = tuple(AffectLabel)
EMOTIONS: tuple[AffectLabel, ...] = tuple(l for l in AffectLabel if l.is_emotion)
POLARITIES: tuple[AffectLabel, ...] = (AffectLabel.POSITIVE, AffectLabel.NEGATIVE)

# Default figure palette; overridable via a `label<TAB>hexcolour` file.
DEFAULT_PALETTE: dict[AffectLabel, str] = {
    AffectLabel.JOY: "#FFD700",
    AffectLabel.TRUST: "#32CD32",
    AffectLabel.FEAR: "#006400",
    AffectLabel.SURPRISE: "#00BFFF",
    AffectLabel.SADNESS: "#1E3A8A",
    AffectLabel.DISGUST: "#800080",
    AffectLabel.ANGER: "#DC143C",
    AffectLabel.ANTICIPATION: "#FF8C00",
    AffectLabel.POSITIVE: "#2E8B57",
    AffectLabel.NEGATIVE: "#8B0000",
}


def parse_label(text: str) -> AffectLabel:
    """Parse a label name, raising ValueError with the offending text."""
    try:
        return AffectLabel(text.strip().lower())
    except ValueError:
        raise ValueError(f"unknown affect label: {text!r}") from None
