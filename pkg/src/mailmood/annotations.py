"""Crowdsourced annotation pipeline: term selection, word-choice gold
questions, gold filtering, and majority voting into a sense lexicon.

Annotation records arrive as JSON lines, one object per record::

    {"annotator_id": "a1", "word": "shark", "sense_id": "fish",
     "q1_choice": "fish", "affect_answers": {"anger": false, ...}}

with all ten affect labels present in ``affect_answers``.
"""

from __future__ import annotations

import json
import random
import zlib
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from mailmood.labels import AffectLabel, parse_label
from mailmood.lexicon import SenseKey, SenseLexicon, WordLexicon, collapse_senses


class AnnotationError(Exception):
    """Raised for malformed or inconsistent annotation inputs."""


class UnsatisfiableQuestionError(AnnotationError):
    """The thesaurus cannot supply a valid near-synonym or distractor set."""


@dataclass
class ThesaurusCategory:
    category_id: str
    members: list[str]

    def __post_init__(self):
        if not self.members:
            raise ValueError(f"category {self.category_id!r} has no members")
        self.members = [m.lower() for m in self.members]
        if len(set(self.members)) != len(self.members):
            raise ValueError(f"category {self.category_id!r} has duplicate members")


@dataclass(frozen=True)
class ChoiceQuestion:
    """Word-choice gold question: pick the near-synonym of the target."""

    target: SenseKey
    correct: str
    distractors: tuple[str, str, str]

    @property
    def options(self) -> tuple[str, ...]:
        return (self.correct,) + self.distractors


@dataclass
class RawAnnotation:
    """One annotator's full response sheet for one term-sense."""

    annotator_id: str
    sense: SenseKey
    q1_choice: str
    affect_answers: dict[AffectLabel, bool]

    def __post_init__(self):
        if set(self.affect_answers) != set(AffectLabel):
            missing = sorted(l.value for l in set(AffectLabel) - set(self.affect_answers))
            raise AnnotationError(
                f"annotation for {self.sense} must answer all 10 labels; missing {missing}"
            )


@dataclass
class AggregationReport:
    total_annotations: int = 0
    discarded_q1: int = 0
    low_vote_senses: int = 0
    per_sense_agreement: dict[SenseKey, float] = field(default_factory=dict)
    full_agreement_fraction: float = 0.0
    four_of_five_fraction: float = 0.0


def select_terms(
    thesaurus: Sequence[ThesaurusCategory],
    freq: Mapping[str, int],
    threshold: int,
) -> list[SenseKey]:
    """Every (word, category) pair whose corpus frequency strictly exceeds
    the threshold, ordered by (category_id, word)."""
    if threshold < 0:
        raise ValueError("threshold must be >= 0")
    selected = [
        SenseKey(word, cat.category_id)
        for cat in thesaurus
        for word in cat.members
        if freq.get(word, 0) > threshold
    ]
    selected.sort(key=lambda k: (k.sense_id, k.word))
    return selected


def generate_question(
    sense: SenseKey,
    thesaurus: Sequence[ThesaurusCategory],
    rng_seed: int,
) -> ChoiceQuestion:
    """Build the gold question for a sense: near-synonym from the sense's own
    category, three distractors sampled uniformly from the rest of the
    thesaurus vocabulary. Deterministic for a given seed."""
    by_id = {cat.category_id: cat for cat in thesaurus}
    category = by_id.get(sense.sense_id)
    if category is None:
        raise AnnotationError(f"unknown thesaurus category: {sense.sense_id!r}")
    synonyms = [w for w in category.members if w != sense.word]
    if not synonyms:
        raise UnsatisfiableQuestionError(
            f"category {sense.sense_id!r} has no near-synonym for {sense.word!r}"
        )
    in_category = set(category.members)
    complement = sorted(
        {w for cat in thesaurus for w in cat.members if w not in in_category}
    )
    if len(complement) < 3:
        raise UnsatisfiableQuestionError(
            f"thesaurus has only {len(complement)} words outside category {sense.sense_id!r}; need 3"
        )
    rng = random.Random(rng_seed)
    correct = rng.choice(sorted(synonyms))
    distractors = tuple(rng.sample(complement, 3))
    return ChoiceQuestion(target=sense, correct=correct, distractors=distractors)


def filter_gold(
    annotations: Sequence[RawAnnotation],
    questions: Mapping[SenseKey, ChoiceQuestion],
) -> tuple[list[RawAnnotation], int]:
    """Keep annotations whose Q1 answer matches the gold near-synonym."""
    valid = []
    for ann in annotations:
        question = questions.get(ann.sense)
        if question is None:
            raise AnnotationError(f"annotation references unknown sense: {ann.sense}")
        if ann.q1_choice == question.correct:
            valid.append(ann)
    return valid, len(annotations) - len(valid)


def majority_vote(
    valid: Sequence[RawAnnotation],
    min_votes: int = 3,
) -> tuple[SenseLexicon, AggregationReport]:
    """Combine valid annotations per sense by strict-majority vote.

    A label is associated iff yes-votes > total/2; even-split ties resolve to
    not-associated. Senses with fewer than ``min_votes`` annotations are
    dropped and counted. Agreement fractions are computed over sense-label
    instances that have exactly five valid votes: unanimous (5-0 or 0-5) and
    four-of-five (4-1 or 1-4).
    """
    if min_votes < 1:
        raise ValueError("min_votes must be >= 1")
    by_sense: dict[SenseKey, list[RawAnnotation]] = {}
    for ann in valid:
        by_sense.setdefault(ann.sense, []).append(ann)

    lexicon = SenseLexicon()
    report = AggregationReport(total_annotations=len(valid))
    five_vote_instances = 0
    unanimous = 0
    four_of_five = 0
    for sense in sorted(by_sense, key=lambda k: (k.word, k.sense_id)):
        votes = by_sense[sense]
        total = len(votes)
        if total < min_votes:
            report.low_vote_senses += 1
            continue
        labels = set()
        tallies: dict[AffectLabel, tuple[int, int]] = {}
        majority_share_sum = 0.0
        for label in AffectLabel:
            yes = sum(1 for v in votes if v.affect_answers[label])
            tallies[label] = (yes, total)
            if yes * 2 > total:
                labels.add(label)
            majority_share_sum += max(yes, total - yes) / total
            if total == 5:
                five_vote_instances += 1
                if yes in (0, 5):
                    unanimous += 1
                elif yes in (1, 4):
                    four_of_five += 1
        lexicon.entries[sense] = frozenset(labels)
        lexicon.provenance[sense] = tallies
        report.per_sense_agreement[sense] = majority_share_sum / len(AffectLabel)
    if five_vote_instances:
        report.full_agreement_fraction = unanimous / five_vote_instances
        report.four_of_five_fraction = four_of_five / five_vote_instances
    return lexicon, report


def build_lexicon(
    annotations: Sequence[RawAnnotation],
    questions: Mapping[SenseKey, ChoiceQuestion],
    min_votes: int = 3,
) -> tuple[WordLexicon, AggregationReport]:
    """Full pipeline: gold filter, majority vote, sense-union collapse."""
    valid, discarded = filter_gold(annotations, questions)
    sense_lexicon, report = majority_vote(valid, min_votes=min_votes)
    report.total_annotations = len(annotations)
    report.discarded_q1 = discarded
    return collapse_senses(sense_lexicon), report


def question_seed(sense: SenseKey, base_seed: int = 0) -> int:
    """Stable per-sense RNG seed so independently generated question sets
    (e.g. a fixture writer and the pipeline) agree."""
    return zlib.crc32(f"{sense.word}|{sense.sense_id}".encode("utf-8")) ^ base_seed


def generate_questions(
    senses: Iterable[SenseKey],
    thesaurus: Sequence[ThesaurusCategory],
    base_seed: int = 0,
) -> dict[SenseKey, ChoiceQuestion]:
    return {
        sense: generate_question(sense, thesaurus, question_seed(sense, base_seed))
        for sense in senses
    }


# --- file formats -----------------------------------------------------------

def load_thesaurus(path) -> list[ThesaurusCategory]:
    """`category_id<TAB>word` lines, one word per line, grouped by category."""
    members: dict[str, list[str]] = {}
    with Path(path).open(encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise AnnotationError(f"{path}:{line_no}: expected `category_id<TAB>word`")
            members.setdefault(parts[0], []).append(parts[1].lower())
    return [ThesaurusCategory(cid, words) for cid, words in members.items()]


def load_frequencies(path) -> dict[str, int]:
    """`word<TAB>count` lines."""
    freq: dict[str, int] = {}
    with Path(path).open(encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise AnnotationError(f"{path}:{line_no}: expected `word<TAB>count`")
            try:
                freq[parts[0].lower()] = int(parts[1])
            except ValueError:
                raise AnnotationError(f"{path}:{line_no}: count is not an integer: {parts[1]!r}") from None
    return freq


def load_annotations(path) -> list[RawAnnotation]:
    """JSON-lines annotation records."""
    records = []
    with Path(path).open(encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise AnnotationError(f"{path}:{line_no}: invalid JSON: {exc}") from None
            try:
                answers = {parse_label(k): bool(v) for k, v in obj["affect_answers"].items()}
                records.append(
                    RawAnnotation(
                        annotator_id=str(obj["annotator_id"]),
                        sense=SenseKey(obj["word"], obj["sense_id"]),
                        q1_choice=str(obj["q1_choice"]).lower(),
                        affect_answers=answers,
                    )
                )
            except (KeyError, ValueError, AnnotationError) as exc:
                raise AnnotationError(f"{path}:{line_no}: {exc}") from None
    return records


def save_annotations(records: Iterable[RawAnnotation], path) -> None:
    with Path(path).open("w", encoding="utf-8") as fh:
        for ann in records:
            fh.write(
                json.dumps(
                    {
                        "annotator_id": ann.annotator_id,
                        "word": ann.sense.word,
                        "sense_id": ann.sense.sense_id,
                        "q1_choice": ann.q1_choice,
                        "affect_answers": {l.value: ann.affect_answers[l] for l in AffectLabel},
                    },
                    sort_keys=True,
                )
                + "\n"
            )
