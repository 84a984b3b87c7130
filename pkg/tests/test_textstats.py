import pytest
from hypothesis import given
from hypothesis import strategies as st

from mailmood.labels import EMOTIONS, POLARITIES, AffectLabel
from mailmood.lexicon import WordLexicon
from mailmood.textstats import (
    AffectCounts,
    EmptyProfileError,
    TokenStream,
    corpus_profile,
    count_affect,
    diff,
    profile,
    tokenize,
)
from tests.conftest import make_lexicon


def reference_tokenize(text: str) -> list[str]:
    # Character-level reference: classify every character, group by the mask,
    # trim apostrophes. Independent of the production scanner/regex.
    from itertools import groupby

    mask = [(ch, ch.isalpha() or ch == "'") for ch in text.lower()]
    out = []
    for keep, group in groupby(mask, key=lambda item: item[1]):
        if not keep:
            continue
        token = "".join(ch for ch, _ in group).strip("'")
        if token:
            out.append(token)
    return out


class TestTokenize:
    def test_basic(self):
        ts = tokenize("I love you!")
        assert ts.tokens == ["i", "love", "you"]
        assert ts.total_tokens == 3

    def test_empty(self):
        assert tokenize("").tokens == []

    def test_apostrophes(self):
        assert tokenize("don't-stop don't").tokens == ["don't", "stop", "don't"]

    def test_digits_split(self):
        assert tokenize("abc123def").tokens == ["abc", "def"]

    def test_bare_apostrophes_dropped(self):
        assert tokenize("'' ' ''ok''").tokens == ["ok"]

    @given(st.text(max_size=200))
    def test_matches_character_level_reference(self, text):
        assert tokenize(text).tokens == reference_tokenize(text)


class TestCountAffect:
    def test_multiplicity(self, tiny_lexicon):
        counts = count_affect(TokenStream(["loving", "loving"]), tiny_lexicon)
        assert counts.per_label[AffectLabel.JOY] == 2
        assert counts.per_label[AffectLabel.POSITIVE] == 2
        assert counts.emotion_token_total == 2
        assert counts.polarity_token_total == 2

    def test_no_hits(self, tiny_lexicon):
        counts = count_affect(TokenStream(["xyzzy", "zzz"]), tiny_lexicon)
        assert all(v == 0 for v in counts.per_label.values())
        assert counts.total_tokens == 2

    def test_hand_worked_mixed_fixture(self):
        # 6 tokens: loving(joy+pos), hell(fear+neg), hell, the, a, shark(fear)
        lex = make_lexicon(
            {"loving": {"joy", "positive"}, "hell": {"fear", "negative"}, "shark": {"fear"}}
        )
        counts = count_affect(TokenStream(["loving", "hell", "hell", "the", "a", "shark"]), lex)
        assert counts.per_label[AffectLabel.JOY] == 1
        assert counts.per_label[AffectLabel.FEAR] == 3
        assert counts.per_label[AffectLabel.POSITIVE] == 1
        assert counts.per_label[AffectLabel.NEGATIVE] == 2
        assert counts.emotion_token_total == 4
        assert counts.polarity_token_total == 3
        assert counts.total_tokens == 6


class TestProfile:
    def test_emotion_percentages(self):
        counts = AffectCounts()
        counts.per_label[AffectLabel.JOY] = 3
        counts.per_label[AffectLabel.SADNESS] = 1
        prof = profile(counts)
        assert prof.emotion_pct[AffectLabel.JOY] == pytest.approx(75.0)
        assert prof.emotion_pct[AffectLabel.SADNESS] == pytest.approx(25.0)

    def test_polarity_percentages(self):
        counts = AffectCounts()
        counts.per_label[AffectLabel.POSITIVE] = 2
        counts.per_label[AffectLabel.NEGATIVE] = 6
        prof = profile(counts)
        assert prof.polarity_pct[AffectLabel.POSITIVE] == pytest.approx(25.0)
        assert prof.polarity_pct[AffectLabel.NEGATIVE] == pytest.approx(75.0)

    def test_all_zero_is_empty_flagged(self):
        prof = profile(AffectCounts())
        assert prof.empty and prof.emotion_empty and prof.polarity_empty
        assert all(v == 0.0 for v in prof.emotion_pct.values())


class TestDiff:
    def _profile(self, joy, sadness):
        counts = AffectCounts()
        counts.per_label[AffectLabel.JOY] = joy
        counts.per_label[AffectLabel.SADNESS] = sadness
        return profile(counts)

    def test_identity_is_zero(self):
        prof = self._profile(3, 1)
        delta = diff(prof, prof)
        assert all(v == 0.0 for v in delta.per_emotion_delta.values())

    def test_antisymmetry(self):
        a, b = self._profile(3, 1), self._profile(1, 3)
        d_ab = diff(a, b).per_emotion_delta
        d_ba = diff(b, a).per_emotion_delta
        for emotion in EMOTIONS:
            assert d_ab[emotion] == pytest.approx(-d_ba[emotion])

    def test_empty_profile_rejected(self):
        with pytest.raises(EmptyProfileError):
            diff(self._profile(1, 0), profile(AffectCounts()))

    def test_love_vs_hate_sign_pattern(self):
        lex = make_lexicon(
            {
                "loving": {"joy", "trust"},
                "smile": {"joy"},
                "hate": {"anger", "disgust"},
                "kill": {"fear", "sadness"},
            }
        )
        love = corpus_profile([TokenStream(["loving", "smile", "loving"])], lex)
        hate = corpus_profile([TokenStream(["hate", "kill", "hate"])], lex)
        delta = diff(love, hate).per_emotion_delta
        assert delta[AffectLabel.JOY] > 0
        assert delta[AffectLabel.TRUST] > 0
        assert delta[AffectLabel.FEAR] < 0
        assert delta[AffectLabel.SADNESS] < 0
        assert delta[AffectLabel.DISGUST] < 0
        assert delta[AffectLabel.ANGER] < 0


words = st.sampled_from(["loving", "hell", "quack", "shark", "plain", "the", "joyous"])
docs = st.lists(st.lists(words, max_size=20).map(TokenStream), max_size=8)


class TestCorpusProfile:
    @given(docs)
    def test_equals_profile_of_concatenation(self, tiny_lexicon_docs):
        lex = make_lexicon(
            {"loving": {"joy", "positive"}, "hell": {"fear", "negative"}, "quack": {"disgust"}}
        )
        concat = TokenStream([t for d in tiny_lexicon_docs for t in d.tokens])
        merged = corpus_profile(tiny_lexicon_docs, lex)
        direct = profile(count_affect(concat, lex))
        assert merged.counts.per_label == direct.counts.per_label
        for emotion in EMOTIONS:
            assert merged.emotion_pct[emotion] == pytest.approx(direct.emotion_pct[emotion], abs=1e-12)

    def test_single_doc(self, tiny_lexicon):
        doc = TokenStream(["loving", "hell"])
        merged = corpus_profile([doc], tiny_lexicon)
        direct = profile(count_affect(doc, tiny_lexicon))
        assert merged.counts.per_label == direct.counts.per_label


class TestInvariants:
    @given(docs)
    def test_percentages_sum_to_100(self, sample):
        lex = make_lexicon({"loving": {"joy", "positive"}, "hell": {"fear", "negative"}})
        prof = corpus_profile(sample, lex)
        if not prof.emotion_empty:
            assert sum(prof.emotion_pct.values()) == pytest.approx(100.0, abs=1e-9)
        if not prof.polarity_empty:
            assert sum(prof.polarity_pct.values()) == pytest.approx(100.0, abs=1e-9)

    @given(st.lists(words, min_size=1, max_size=30))
    def test_lexicon_monotonicity(self, tokens):
        base = make_lexicon({"loving": {"joy"}})
        bigger = make_lexicon({"loving": {"joy"}, "hell": {"fear", "negative"}})
        ts = TokenStream(tokens)
        counts_small = count_affect(ts, base)
        counts_big = count_affect(ts, bigger)
        for label in AffectLabel:
            assert counts_big.per_label[label] >= counts_small.per_label[label]

    @given(docs, docs)
    def test_diff_zero_sum(self, docs_a, docs_b):
        lex = make_lexicon({"loving": {"joy"}, "hell": {"fear"}, "quack": {"disgust"}})
        a = corpus_profile(docs_a, lex)
        b = corpus_profile(docs_b, lex)
        if a.emotion_empty or b.emotion_empty:
            return
        delta = diff(a, b).per_emotion_delta
        assert sum(delta.values()) == pytest.approx(0.0, abs=1e-9)
