"""Letter corpora and mailbox ingestion: mbox-style parsing, body-length
filtering, roster-based gender tagging, and gender-pair grouping.

Mailbox format: messages delimited by lines starting with ``From ``; headers
until the first blank line (folded continuation lines supported for To);
body after. Only Message-ID, From, To, and Date are interpreted. No MIME
decoding.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from datetime import datetime, timezone
from email.utils import getaddresses, parseaddr, parsedate_to_datetime
from enum import Enum
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from mailmood.textstats import tokenize

log = logging.getLogger(__name__)

EPOCH = datetime(1970, 1, 1, tzinfo=timezone.utc)


class MailboxError(Exception):
    """Unreadable mailbox, unreadable letters, or no parseable messages."""


class CorpusTag(str, Enum):
    LOVE = "love"
    HATE = "hate"
    SUICIDE = "suicide"
    OTHER = "other"


class Gender(str, Enum):
    FEMALE = "female"
    MALE = "male"
    UNTAGGED = "untagged"


@dataclass
class Letter:
    id: str
    corpus_tag: CorpusTag
    body: str


@dataclass
class MailMessage:
    message_id: str
    sender: str
    recipients: list[str]
    timestamp: datetime
    body: str
    body_word_count: int = field(default=-1)

    def __post_init__(self):
        if not self.sender:
            raise ValueError("sender must be non-empty")
        if not self.recipients:
            raise ValueError("recipients must be non-empty")
        if self.body_word_count < 0:
            self.body_word_count = tokenize(self.body).total_tokens


@dataclass
class GenderPairCorpora:
    """Messages grouped by (sender gender, recipient gender) and by sender
    gender alone; no untagged party appears anywhere."""

    pairs: dict[tuple[Gender, Gender], list[MailMessage]] = field(
        default_factory=lambda: {
            (s, r): []
            for s in (Gender.FEMALE, Gender.MALE)
            for r in (Gender.FEMALE, Gender.MALE)
        }
    )
    by_sender: dict[Gender, list[MailMessage]] = field(
        default_factory=lambda: {Gender.FEMALE: [], Gender.MALE: []}
    )


def load_letters(directory, tag: CorpusTag) -> list[Letter]:
    """One UTF-8 .txt file per letter; id is the filename stem."""
    directory = Path(directory)
    if not directory.is_dir():
        raise MailboxError(f"not a directory: {directory}")
    letters = []
    for path in sorted(directory.glob("*.txt")):
        try:
            body = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise MailboxError(f"unreadable letter file {path}: {exc}") from exc
        letters.append(Letter(id=path.stem, corpus_tag=tag, body=body))
    return letters


def _parse_message(block: list[str], index: int) -> MailMessage | None:
    # Unfold headers (continuation lines start with whitespace) until the
    # first blank line; everything after is the body.
    headers: dict[str, str] = {}
    body_start = None
    current_key = None
    for i, line in enumerate(block):
        if not line.strip():
            body_start = i + 1
            break
        if line[0] in " \t" and current_key:
            headers[current_key] += " " + line.strip()
            continue
        if ":" not in line:
            return None
        key, _, value = line.partition(":")
        current_key = key.strip().lower()
        headers[current_key] = value.strip()
    if body_start is None:
        return None

    sender = parseaddr(headers.get("from", ""))[1].lower()
    recipients = [addr.lower() for _, addr in getaddresses([headers.get("to", "")]) if addr]
    if not sender or not recipients:
        return None

    date_header = headers.get("date")
    timestamp = None
    if date_header:
        try:
            timestamp = parsedate_to_datetime(date_header)
        except (TypeError, ValueError):
            timestamp = None
    if timestamp is None:
        log.warning("message %d: missing or unparseable Date; using epoch", index)
        timestamp = EPOCH
    if timestamp.tzinfo is None:
        timestamp = timestamp.replace(tzinfo=timezone.utc)

    message_id = headers.get("message-id", "").strip() or f"<generated-{index}>"
    body = "\n".join(block[body_start:])
    return MailMessage(
        message_id=message_id,
        sender=sender,
        recipients=recipients,
        timestamp=timestamp,
        body=body,
    )


def parse_mailbox(path) -> list[MailMessage]:
    """Parse an mbox-style file; malformed messages are skipped with a
    warning. Raises if the file is unreadable or yields no messages."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8", errors="replace")
    except OSError as exc:
        raise MailboxError(f"unreadable mailbox {path}: {exc}") from exc

    blocks: list[list[str]] = []
    current: list[str] | None = None
    # Strip the final newline so it is not mistaken for a header/body blank
    # separator in a truncated last message.
    if text.endswith("\n"):
        text = text[:-1]
    for line in text.split("\n"):
        if line.startswith("From "):
            current = []
            blocks.append(current)
        elif current is not None:
            current.append(line)

    messages = []
    malformed = 0
    for index, block in enumerate(blocks):
        message = _parse_message(block, index)
        if message is None:
            malformed += 1
            log.warning("message %d: malformed, skipped", index)
        else:
            messages.append(message)
    if malformed:
        log.warning("skipped %d malformed message(s) in %s", malformed, path)
    if not messages:
        raise MailboxError(f"no parseable messages in {path}")
    return messages


def write_mailbox(messages: Iterable[MailMessage], path) -> None:
    """Canonical mbox writer; parse_mailbox round-trips its output."""
    lines = []
    for msg in messages:
        lines.append("From MAILER")
        lines.append(f"Message-ID: {msg.message_id}")
        lines.append(f"From: {msg.sender}")
        lines.append("To: " + ", ".join(msg.recipients))
        lines.append("Date: " + msg.timestamp.strftime("%a, %d %b %Y %H:%M:%S %z"))
        lines.append("")
        lines.append(msg.body.replace("\nFrom ", "\n>From "))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def length_filter(
    messages: Sequence[MailMessage],
    min_words: int = 50,
    max_words: int = 200,
) -> list[MailMessage]:
    """Keep messages whose body word count is within the inclusive bounds."""
    if min_words > max_words:
        raise ValueError("min_words must not exceed max_words")
    return [m for m in messages if min_words <= m.body_word_count <= max_words]


# --- gender tagging ---------------------------------------------------------

Roster = dict[str, tuple[str, Gender]]


def load_roster(path) -> Roster:
    """`address<TAB>name<TAB>gender` lines; addresses lowercased."""
    roster: Roster = {}
    with Path(path).open(encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise MailboxError(f"{path}:{line_no}: expected `address<TAB>name<TAB>gender`")
            try:
                gender = Gender(parts[2].strip().lower())
            except ValueError:
                raise MailboxError(f"{path}:{line_no}: unknown gender {parts[2]!r}") from None
            roster[parts[0].strip().lower()] = (parts[1].strip(), gender)
    return roster


def build_given_name_table(pairs: Iterable[tuple[str, Gender]]) -> dict[str, Gender]:
    """Given-name lookup table; names listed with conflicting genders become
    untagged (the name is not a clear indicator)."""
    table: dict[str, Gender] = {}
    for name, gender in pairs:
        key = name.lower()
        if key in table and table[key] != gender:
            table[key] = Gender.UNTAGGED
        else:
            table.setdefault(key, gender)
    return table


def gender_from_name(display_name: str, given_name_table: Mapping[str, Gender]) -> Gender:
    """Tag from the first token of the display name; anything unknown or
    ambiguous is untagged."""
    tokens = display_name.split()
    if not tokens:
        return Gender.UNTAGGED
    return given_name_table.get(tokens[0].lower(), Gender.UNTAGGED)


def _gender_of(address: str, roster: Roster) -> Gender:
    entry = roster.get(address.lower())
    return entry[1] if entry else Gender.UNTAGGED


def apply_roster(messages: Sequence[MailMessage], roster: Roster) -> GenderPairCorpora:
    """Group messages by gender pair and by sender gender.

    A message enters pair (g_sender, g_recipient) once per tagged recipient;
    it enters the by-sender corpus once iff the sender is tagged and at least
    one recipient is tagged. Untagged senders are dropped entirely.
    """
    corpora = GenderPairCorpora()
    for msg in messages:
        sender_gender = _gender_of(msg.sender, roster)
        if sender_gender is Gender.UNTAGGED:
            continue
        tagged_any = False
        for recipient in msg.recipients:
            recipient_gender = _gender_of(recipient, roster)
            if recipient_gender is Gender.UNTAGGED:
                continue
            tagged_any = True
            corpora.pairs[(sender_gender, recipient_gender)].append(msg)
        if tagged_any:
            corpora.by_sender[sender_gender].append(msg)
    return corpora
