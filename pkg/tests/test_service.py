import json

import pytest
from fastapi.testclient import TestClient

from mailmood.labels import EMOTIONS, AffectLabel
from mailmood.service import create_app
from mailmood.workflows import MailboxIndex
from tests.conftest import make_lexicon
from tests.test_mailbox import make_msg

LEX = make_lexicon(
    {
        "loving": {"joy", "positive"},
        "smile": {"joy"},
        "hate": {"anger", "negative"},
        "kill": {"fear", "sadness"},
    }
)

ME = "me@corp.com"


def fixture_messages():
    msgs = []
    for i in range(3):
        msgs.append(
            make_msg(ME, ["alice@corp.com"], mid=f"<a{i}>", words=0)
        )
        msgs[-1].body = f"loving you and your smile {i}"
        msgs[-1].body_word_count = 6
    msgs.append(make_msg(ME, ["bob@corp.com"], mid="<b0>"))
    msgs[-1].body = "hate this kill that"
    msgs.append(make_msg(ME, ["carol@corp.com"], mid="<c0>"))
    msgs[-1].body = "smile smile loving"
    # received-only peer: must not appear in the summary
    msgs.append(make_msg("dave@corp.com", [ME], mid="<d0>"))
    # received mail from alice
    msgs.append(make_msg("alice@corp.com", [ME], mid="<a-in>"))
    return msgs


@pytest.fixture
def client():
    app = create_app(fixture_messages(), ME, LEX)
    return TestClient(app)


class TestHealth:
    def test_ok(self, client):
        response = client.get("/api/health")
        assert response.status_code == 200
        assert response.json()["status"] == "ok"

    def test_503_before_index(self):
        app = create_app(fixture_messages(), ME, LEX)
        app.state.index = None
        with TestClient(app) as test_client:
            assert test_client.get("/api/mailbox/summary").status_code == 503


class TestSummary:
    def test_three_peers(self, client):
        entries = client.get("/api/mailbox/summary").json()
        assert [e["peer_address"] for e in entries] == [
            "alice@corp.com", "bob@corp.com", "carol@corp.com"
        ]
        assert entries[0]["sent_count"] == 3
        assert entries[0]["received_count"] == 1

    def test_received_only_peer_excluded(self, client):
        entries = client.get("/api/mailbox/summary").json()
        assert "dave@corp.com" not in {e["peer_address"] for e in entries}

    def test_matches_index_numbers_exactly(self, client):
        index = MailboxIndex(fixture_messages(), ME, LEX)
        entries = client.get("/api/mailbox/summary").json()
        for entry in entries:
            summary = index.correspondent(entry["peer_address"])
            assert entry["polarity_pct"] == {l.value: v for l, v in summary.polarity_pct.items()}
            assert entry["emotion_diff"] == {l.value: v for l, v in summary.emotion_diff.items()}


class TestCorrespondent:
    def test_unknown_404(self, client):
        assert client.get("/api/correspondent/nobody@corp.com").status_code == 404

    def test_schema_has_exactly_eight_emotions(self, client):
        payload = client.get("/api/correspondent/alice@corp.com").json()
        assert set(payload["emotion_diff"]) == {e.value for e in EMOTIONS}

    def test_only_correspondent_zero_diff(self):
        msgs = [make_msg(ME, ["solo@corp.com"], mid=f"<s{i}>") for i in range(2)]
        for m in msgs:
            m.body = "loving smile"
        app = create_app(msgs, ME, LEX)
        with TestClient(app) as test_client:
            payload = test_client.get("/api/correspondent/solo@corp.com").json()
        assert all(v == 0.0 for v in payload["emotion_diff"].values())

    def test_diff_against_all_sent_baseline(self, client):
        index = MailboxIndex(fixture_messages(), ME, LEX)
        payload = client.get("/api/correspondent/bob@corp.com").json()
        expected = index.correspondent("bob@corp.com")
        assert payload["emotion_diff"] == {l.value: v for l, v in expected.emotion_diff.items()}
        assert payload["emotion_diff"]["fear"] > 0  # bob gets the fearful mail


class TestTimeline:
    def test_one_point_per_sent_email(self, client):
        points = client.get("/api/correspondent/alice@corp.com/timeline").json()
        assert len(points) == 3

    def test_unknown_404(self, client):
        assert client.get("/api/correspondent/nobody@x.com/timeline").status_code == 404

    def test_ordering_matches_sort_oracle(self):
        from datetime import datetime, timezone

        msgs = []
        for i, day in enumerate([7, 3, 5]):
            msg = make_msg(ME, ["peer@corp.com"], mid=f"<t{i}>",
                           ts=datetime(2001, 5, day, tzinfo=timezone.utc))
            msg.body = "loving"
            msgs.append(msg)
        app = create_app(msgs, ME, LEX)
        with TestClient(app) as test_client:
            points = test_client.get("/api/correspondent/peer@corp.com/timeline").json()
        stamps = [p["timestamp"] for p in points]
        assert stamps == sorted(stamps)

    def test_empty_body_point_flagged_not_dropped(self):
        msgs = [make_msg(ME, ["peer@corp.com"], mid="<e0>", words=0)]
        msgs[0].body = ""
        msgs[0].body_word_count = 0
        app = create_app(msgs, ME, LEX)
        with TestClient(app) as test_client:
            points = test_client.get("/api/correspondent/peer@corp.com/timeline").json()
        assert len(points) == 1
        assert points[0]["empty"] is True


class TestAnonymousExport:
    def test_no_address_like_content(self, client):
        text = client.get("/api/export/anonymous").text
        assert "@" not in text
        assert "corp" not in text
        for msg in fixture_messages():
            assert msg.message_id not in text

    def test_counts_equal_mailbox_wide_affect_counts(self, client):
        from mailmood.textstats import corpus_profile, tokenize

        sent = [m for m in fixture_messages() if m.sender == ME]
        expected = corpus_profile([tokenize(m.body) for m in sent], LEX).counts
        payload = client.get("/api/export/anonymous").json()
        assert payload["label_counts"] == {l.value: expected.per_label[l] for l in AffectLabel}
        assert payload["total_tokens"] == expected.total_tokens

    def test_empty_mailbox_zero_counts(self):
        msgs = [make_msg("other@corp.com", ["x@corp.com"])]
        app = create_app(msgs, ME, LEX)
        with TestClient(app) as test_client:
            payload = test_client.get("/api/export/anonymous").json()
        assert all(v == 0 for v in payload["label_counts"].values())
        assert payload["message_count"] == 0

    def test_optional_gender_and_age(self):
        app = create_app(fixture_messages(), ME, LEX, gender="male", age=41)
        with TestClient(app) as test_client:
            payload = test_client.get("/api/export/anonymous").json()
        assert payload["gender"] == "male"
        assert payload["age"] == 41

    def test_schema_denylist(self, client):
        payload = client.get("/api/export/anonymous").json()
        allowed = {"label_counts", "total_tokens", "message_count", "gender", "age"}
        assert set(payload) <= allowed


class TestRequestOrderIndependence:
    def test_repeated_requests_identical(self, client):
        first = client.get("/api/mailbox/summary").json()
        client.get("/api/correspondent/alice@corp.com")
        client.get("/api/export/anonymous")
        second = client.get("/api/mailbox/summary").json()
        assert first == second
