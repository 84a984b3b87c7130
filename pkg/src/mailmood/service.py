"""Local HTTP/JSON dashboard over one user's mailbox.

The mailbox is indexed once at startup; every endpoint is a pure function of
that snapshot. The anonymous-export endpoint carries aggregate affect counts
only: no addresses, message ids, or body text.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

from fastapi import FastAPI, HTTPException
from fastapi.staticfiles import StaticFiles

from mailmood.labels import AffectLabel
from mailmood.lexicon import WordLexicon
from mailmood.mailbox import MailMessage
from mailmood.workflows import CorrespondentSummary, MailboxIndex, TimelinePoint


def _summary_json(summary: CorrespondentSummary) -> dict:
    return {
        "peer_address": summary.peer_address,
        "sent_count": summary.sent_count,
        "received_count": summary.received_count,
        "polarity_pct": {l.value: v for l, v in summary.polarity_pct.items()},
        "emotion_diff": {l.value: v for l, v in summary.emotion_diff.items()},
    }


def _point_json(point: TimelinePoint) -> dict:
    return {
        "message_id": point.message_id,
        "timestamp": point.timestamp.isoformat(),
        "polarity_pct": {l.value: v for l, v in point.polarity_pct.items()},
        "emotion_pct": {l.value: v for l, v in point.emotion_pct.items()},
        "empty": point.empty,
    }


def create_app(
    messages: Sequence[MailMessage],
    me: str,
    lex: WordLexicon,
    static_dir: str | Path | None = None,
    gender: str | None = None,
    age: int | None = None,
) -> FastAPI:
    app = FastAPI(title="mailmood dashboard", docs_url=None, redoc_url=None)
    app.state.index = MailboxIndex(messages, me, lex)
    app.state.gender = gender
    app.state.age = age

    def index() -> MailboxIndex:
        idx = app.state.index
        if idx is None:
            raise HTTPException(status_code=503, detail="mailbox index not built yet")
        return idx

    @app.get("/api/health")
    def health():
        return {"status": "ok", "indexed": app.state.index is not None}

    @app.get("/api/mailbox/summary")
    def mailbox_summary():
        return [_summary_json(s) for s in index().summaries()]

    @app.get("/api/correspondent/{address}")
    def correspondent(address: str):
        summary = index().correspondent(address)
        if summary is None:
            raise HTTPException(status_code=404, detail=f"unknown correspondent: {address}")
        return _summary_json(summary)

    @app.get("/api/correspondent/{address}/timeline")
    def timeline(address: str):
        points = index().timeline(address)
        if points is None:
            raise HTTPException(status_code=404, detail=f"unknown correspondent: {address}")
        return [_point_json(p) for p in points]

    @app.get("/api/export/anonymous")
    def export_anonymous():
        return index().anonymous_export(gender=app.state.gender, age=app.state.age)

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app
