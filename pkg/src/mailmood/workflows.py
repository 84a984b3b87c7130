"""Mailbox analyses shared by the CLI and the dashboard service, so both
surfaces report bit-for-bit identical numbers."""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime
from typing import Sequence

from mailmood.labels import EMOTIONS, POLARITIES, AffectLabel
from mailmood.lexicon import WordLexicon
from mailmood.mailbox import Gender, GenderPairCorpora, MailMessage, Roster, apply_roster, length_filter
from mailmood.textstats import AffectProfile, corpus_profile, count_affect, profile, tokenize


@dataclass
class TimelinePoint:
    message_id: str
    timestamp: datetime
    polarity_pct: dict[AffectLabel, float]
    emotion_pct: dict[AffectLabel, float]
    empty: bool


@dataclass
class CorrespondentSummary:
    peer_address: str
    sent_count: int
    received_count: int
    polarity_pct: dict[AffectLabel, float]
    emotion_diff: dict[AffectLabel, float]


def message_profile(msg: MailMessage, lex: WordLexicon) -> AffectProfile:
    return profile(count_affect(tokenize(msg.body), lex))


def _safe_diff(a: AffectProfile, b: AffectProfile) -> dict[AffectLabel, float]:
    # Zero diff when either side has no emotion tokens: a missing baseline is
    # rendered as "no difference" rather than an error in mailbox views.
    if a.emotion_empty or b.emotion_empty:
        return {e: 0.0 for e in EMOTIONS}
    return {e: a.emotion_pct[e] - b.emotion_pct[e] for e in EMOTIONS}


class MailboxIndex:
    """Read-only per-correspondent view of one user's mailbox.

    Built once; all queries are pure functions of the snapshot.
    """

    def __init__(self, messages: Sequence[MailMessage], me: str, lex: WordLexicon):
        self.me = me.lower()
        self.lex = lex
        self.sent = [m for m in messages if m.sender == self.me]
        self._sent_to: dict[str, list[MailMessage]] = {}
        for msg in self.sent:
            for peer in msg.recipients:
                self._sent_to.setdefault(peer, []).append(msg)
        self._received_from: dict[str, int] = {}
        for msg in messages:
            if self.me in msg.recipients:
                self._received_from[msg.sender] = self._received_from.get(msg.sender, 0) + 1
        self._baseline = corpus_profile([tokenize(m.body) for m in self.sent], lex)

    @property
    def all_sender_addresses(self) -> list[str]:
        return sorted(self._sent_to)

    def correspondent(self, address: str) -> CorrespondentSummary | None:
        address = address.lower()
        sent = self._sent_to.get(address)
        if not sent:
            return None
        peer_profile = corpus_profile([tokenize(m.body) for m in sent], self.lex)
        return CorrespondentSummary(
            peer_address=address,
            sent_count=len(sent),
            received_count=self._received_from.get(address, 0),
            polarity_pct=dict(peer_profile.polarity_pct),
            emotion_diff=_safe_diff(peer_profile, self._baseline),
        )

    def summaries(self) -> list[CorrespondentSummary]:
        """One entry per correspondent with at least one sent email, sorted by
        sent count descending, address ascending."""
        entries = [self.correspondent(address) for address in self._sent_to]
        entries.sort(key=lambda s: (-s.sent_count, s.peer_address))
        return entries

    def timeline(self, address: str) -> list[TimelinePoint] | None:
        sent = self._sent_to.get(address.lower())
        if not sent:
            return None
        points = []
        for msg in sorted(sent, key=lambda m: (m.timestamp, m.message_id)):
            prof = message_profile(msg, self.lex)
            points.append(
                TimelinePoint(
                    message_id=msg.message_id,
                    timestamp=msg.timestamp,
                    polarity_pct=dict(prof.polarity_pct),
                    emotion_pct=dict(prof.emotion_pct),
                    empty=prof.empty,
                )
            )
        return points

    def anonymous_export(self, gender: str | None = None, age: int | None = None) -> dict:
        """Aggregate affect counts only: no addresses, ids, or text."""
        total = corpus_profile([tokenize(m.body) for m in self.sent], self.lex).counts
        payload = {
            "label_counts": {l.value: total.per_label[l] for l in AffectLabel},
            "total_tokens": total.total_tokens,
            "message_count": len(self.sent),
        }
        if gender is not None:
            payload["gender"] = gender
        if age is not None:
            payload["age"] = age
        return payload


@dataclass
class GenderPairAnalysis:
    corpora: GenderPairCorpora
    pair_profiles: dict[tuple[Gender, Gender], AffectProfile]
    sender_profiles: dict[Gender, AffectProfile]
    dropped: int


def gender_pair_analysis(
    messages: Sequence[MailMessage],
    roster: Roster,
    lex: WordLexicon,
    min_words: int = 50,
    max_words: int = 200,
) -> GenderPairAnalysis:
    """Length filter, roster grouping, and per-group affect profiles."""
    filtered = length_filter(messages, min_words, max_words)
    corpora = apply_roster(filtered, roster)
    kept = {id(m) for group in corpora.by_sender.values() for m in group}
    return GenderPairAnalysis(
        corpora=corpora,
        pair_profiles={
            pair: corpus_profile([tokenize(m.body) for m in group], lex)
            for pair, group in corpora.pairs.items()
        },
        sender_profiles={
            g: corpus_profile([tokenize(m.body) for m in group], lex)
            for g, group in corpora.by_sender.items()
        },
        dropped=len(filtered) - len(kept),
    )
