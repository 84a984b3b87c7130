#!/usr/bin/env python3
"""Generate a self-contained demo dataset under demo_data/.

Produces everything the CLI needs end to end:
  - annotations.jsonl / thesaurus.tsv / freq.tsv  (lexicon-build inputs)
  - lexicon.txt                                   (a small hand-made lexicon)
  - love/ and hate/ letter corpora                (compare inputs)
  - demo.mbox + roster.tsv                        (mailbox / serve inputs)
"""

import argparse
import random
from pathlib import Path

from mailmood.annotations import (
    RawAnnotation,
    SenseKey,
    ThesaurusCategory,
    generate_questions,
    save_annotations,
)
from mailmood.labels import AffectLabel
from mailmood.lexicon import WordLexicon, save_word_lexicon
from mailmood.mailbox import MailMessage, write_mailbox
from datetime import datetime, timedelta, timezone

LEXICON = {
    "loving": {AffectLabel.JOY, AffectLabel.POSITIVE},
    "beautiful": {AffectLabel.JOY, AffectLabel.POSITIVE},
    "smile": {AffectLabel.JOY, AffectLabel.ANTICIPATION, AffectLabel.POSITIVE},
    "trust": {AffectLabel.TRUST, AffectLabel.POSITIVE},
    "hate": {AffectLabel.ANGER, AffectLabel.DISGUST, AffectLabel.NEGATIVE},
    "afraid": {AffectLabel.FEAR, AffectLabel.NEGATIVE},
    "sorrow": {AffectLabel.SADNESS, AffectLabel.NEGATIVE},
    "shock": {AffectLabel.SURPRISE},
    "chair": set(),
}

FILLER = "the a of and to you for with on it this that was were is are".split()

LOVE_SENTENCES = [
    "loving you always and your beautiful smile",
    "i trust you with all my heart",
    "what a beautiful morning to smile",
]
HATE_SENTENCES = [
    "i hate the sorrow you brought",
    "afraid of the shock and the hate",
    "nothing but sorrow and hate here",
]


def make_annotation_inputs(out: Path, rng: random.Random) -> None:
    words = sorted(LEXICON)
    thesaurus = [ThesaurusCategory(f"cat{i}", [w, f"{w}s"]) for i, w in enumerate(words)]
    thesaurus.append(ThesaurusCategory("misc", [f"filler{i}" for i in range(12)]))
    senses = [SenseKey(w, f"cat{i}") for i, w in enumerate(words)]
    questions = generate_questions(senses, thesaurus, base_seed=0)

    annotations = []
    for sense in senses:
        labels = LEXICON[sense.word]
        for j in range(5):
            careless = j == 4 and rng.random() < 0.10
            annotations.append(
                RawAnnotation(
                    annotator_id=f"worker{j}",
                    sense=sense,
                    q1_choice="wrong-answer" if careless else questions[sense].correct,
                    affect_answers={l: l in labels for l in AffectLabel},
                )
            )
    save_annotations(annotations, out / "annotations.jsonl")
    (out / "thesaurus.tsv").write_text(
        "".join(f"{c.category_id}\t{w}\n" for c in thesaurus for w in c.members)
    )
    (out / "freq.tsv").write_text("".join(f"{w}\t150000\n" for w in words))


def make_letters(out: Path, rng: random.Random) -> None:
    for name, sentences in (("love", LOVE_SENTENCES), ("hate", HATE_SENTENCES)):
        directory = out / name
        directory.mkdir(exist_ok=True)
        for i in range(12):
            body = " ".join(
                rng.choice(sentences) if k % 3 == 0 else " ".join(rng.choices(FILLER, k=6))
                for k in range(6)
            )
            (directory / f"letter{i:02d}.txt").write_text(body + "\n")


def make_mailbox(out: Path, rng: random.Random) -> None:
    people = {
        "ana@example.com": ("Ana Demo", "female"),
        "bea@example.com": ("Bea Demo", "female"),
        "carl@example.com": ("Carl Demo", "male"),
        "dan@example.com": ("Dan Demo", "male"),
    }
    addresses = list(people)
    start = datetime(2001, 5, 1, 9, 0, tzinfo=timezone.utc)
    vocab = list(LEXICON) + FILLER
    messages = []
    for i in range(120):
        sender = rng.choice(addresses)
        recipient = rng.choice([a for a in addresses if a != sender])
        body = " ".join(rng.choices(vocab, k=rng.randint(50, 200)))
        messages.append(
            MailMessage(
                message_id=f"<demo-{i}@example.com>",
                sender=sender,
                recipients=[recipient],
                timestamp=start + timedelta(hours=3 * i),
                body=body,
            )
        )
    write_mailbox(messages, out / "demo.mbox")
    (out / "roster.tsv").write_text(
        "".join(f"{a}\t{n}\t{g}\n" for a, (n, g) in people.items())
    )


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("demo_data"))
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    args.out.mkdir(parents=True, exist_ok=True)
    save_word_lexicon(
        WordLexicon({w: frozenset(ls) for w, ls in LEXICON.items()}), args.out / "lexicon.txt"
    )
    make_annotation_inputs(args.out, rng)
    make_letters(args.out, rng)
    make_mailbox(args.out, rng)
    print(f"demo data written to {args.out}/")


if __name__ == "__main__":
    main()
