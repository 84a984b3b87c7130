"""Command-line entry point: lexicon building, corpus comparison, mailbox
analysis, and the dashboard server.

Figure outputs are written as both SVG and JSON, with stable names of the
form ``<command>-<figure-kind>[-<qualifier>][-<emotion>].svg`` so golden
tests can diff them byte-for-byte.
"""

from __future__ import annotations

import json
import re
import socket
import sys
from dataclasses import dataclass

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path

import click

from mailmood import annotations as ann
from mailmood import figures
from mailmood.labels import DEFAULT_PALETTE, EMOTIONS, AffectLabel
from mailmood.lexicon import LexiconError, WordLexicon, load_palette, load_word_lexicon, save_word_lexicon
from mailmood.mailbox import (
    CorpusTag,
    Gender,
    MailboxError,
    load_letters,
    load_roster,
    parse_mailbox,
)
from mailmood.salience import build_stats, salience_ranking
from mailmood.textstats import EmptyProfileError, corpus_profile, diff, tokenize
from mailmood.workflows import MailboxIndex, gender_pair_analysis


@dataclass
class Config:
    lexicon_path: Path | None = None
    palette_path: Path | None = None
    output_dir: Path = Path("out")
    top_n: int = 40
    min_votes: int = 3
    min_words: int = 50
    max_words: int = 200
    n_gram_threshold: int = 120000

    def __post_init__(self):
        if self.min_words > self.max_words:
            raise click.UsageError("--min-words must not exceed --max-words")
        if self.top_n < 1:
            raise click.UsageError("--top-n must be >= 1")


def _load_config_file(path: Path | None) -> dict:
    if path is None:
        return {}
    with path.open("rb") as fh:
        return tomllib.load(fh)


def _resolve_config(ctx_params: dict, config_file: Path | None) -> Config:
    file_values = _load_config_file(config_file)
    def pick(flag_name, file_key, default):
        value = ctx_params.get(flag_name)
        if value is not None:
            return value
        return file_values.get(file_key, default)

    lexicon = pick("lexicon", "lexicon", None)
    palette = pick("palette", "palette", None)
    return Config(
        lexicon_path=Path(lexicon) if lexicon else None,
        palette_path=Path(palette) if palette else None,
        output_dir=Path(pick("out", "out", "out")),
        top_n=int(pick("top_n", "top_n", 40)),
        min_votes=int(pick("min_votes", "min_votes", 3)),
        min_words=int(pick("min_words", "min_words", 50)),
        max_words=int(pick("max_words", "max_words", 200)),
        n_gram_threshold=int(pick("threshold", "threshold", 120000)),
    )


def _load_lexicon(cfg: Config) -> WordLexicon:
    if cfg.lexicon_path is None:
        raise click.UsageError("no lexicon given: pass --lexicon or set MAILMOOD_LEXICON")
    try:
        return load_word_lexicon(cfg.lexicon_path)
    except (OSError, LexiconError) as exc:
        _fail(str(exc))


def _palette(cfg: Config) -> dict[AffectLabel, str]:
    if cfg.palette_path is None:
        return dict(DEFAULT_PALETTE)
    palette = dict(DEFAULT_PALETTE)
    palette.update(load_palette(cfg.palette_path))
    return palette


def _fail(message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(1)


def _slug(text: str) -> str:
    return re.sub(r"[^a-z0-9]+", "_", text.lower()).strip("_")


def _write_figure(out_dir: Path, stem: str, spec: figures.FigureSpec) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / f"{stem}.svg").write_text(figures.render_svg(spec), encoding="utf-8")
    (out_dir / f"{stem}.json").write_text(figures.export_json(spec), encoding="utf-8")


@click.group()
def main():
    """Emotion-word analytics for letters and mailboxes."""


_shared = [
    click.option("--lexicon", envvar="MAILMOOD_LEXICON", type=click.Path(path_type=Path), default=None),
    click.option("--palette", type=click.Path(exists=True, path_type=Path), default=None),
    click.option("--out", type=click.Path(path_type=Path), default=None),
    click.option("--top-n", type=int, default=None),
    click.option("--config", "config_file", type=click.Path(exists=True, path_type=Path), default=None),
]


def shared_options(fn):
    for option in reversed(_shared):
        fn = option(fn)
    return fn


@main.command("lexicon-build")
@click.argument("annotations_path", type=click.Path(exists=True, path_type=Path))
@click.argument("thesaurus_path", type=click.Path(exists=True, path_type=Path))
@click.argument("freq_path", type=click.Path(exists=True, path_type=Path))
@click.argument("out_path", type=click.Path(path_type=Path))
@click.option("--min-votes", type=int, default=None)
@click.option("--threshold", type=int, default=None)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--config", "config_file", type=click.Path(exists=True, path_type=Path), default=None)
def cmd_lexicon_build(annotations_path, thesaurus_path, freq_path, out_path, min_votes, threshold, seed, config_file):
    """Aggregate raw annotation records into a word-affect lexicon."""
    cfg = _resolve_config({"min_votes": min_votes, "threshold": threshold}, config_file)
    try:
        thesaurus = ann.load_thesaurus(thesaurus_path)
        freq = ann.load_frequencies(freq_path)
        records = ann.load_annotations(annotations_path)
    except ann.AnnotationError as exc:
        _fail(str(exc))
    if not records:
        _fail(f"no annotation records in {annotations_path}")

    selected = ann.select_terms(thesaurus, freq, cfg.n_gram_threshold)
    senses = set(selected) | {r.sense for r in records}
    try:
        questions = ann.generate_questions(senses, thesaurus, base_seed=seed)
        lexicon, report = ann.build_lexicon(records, questions, min_votes=cfg.min_votes)
        out_path.parent.mkdir(parents=True, exist_ok=True)
        save_word_lexicon(lexicon, out_path)
    except (ann.AnnotationError, LexiconError, OSError) as exc:
        _fail(str(exc))

    discard_pct = 100.0 * report.discarded_q1 / report.total_annotations
    click.echo(f"annotations: {report.total_annotations}")
    click.echo(f"discarded: {discard_pct:.1f}%")
    click.echo(f"unanimous (5/5): {100.0 * report.full_agreement_fraction:.1f}%")
    click.echo(f"four-of-five (4/5): {100.0 * report.four_of_five_fraction:.1f}%")
    if report.low_vote_senses:
        click.echo(f"senses below {cfg.min_votes} valid votes (excluded): {report.low_vote_senses}")
    click.echo(f"words: {len(lexicon.entries)} -> {out_path}")


def _compare_corpora(cfg: Config, name: str, docs_a, docs_b, emotion_filter, out_prefix: str):
    """Shared comparison body for compare and mailbox gender-pair analyses."""
    lex = _load_lexicon(cfg)
    palette = _palette(cfg)
    profile_a = corpus_profile(docs_a, lex)
    profile_b = corpus_profile(docs_b, lex)
    try:
        delta = diff(profile_a, profile_b)
    except EmptyProfileError as exc:
        _fail(str(exc))

    out = cfg.output_dir
    for tag, prof in (("a", profile_a), ("b", profile_b)):
        if not prof.polarity_empty:
            spec = figures.FigureSpec(
                figures.FigureKind.POLARITY_PIE,
                f"{name}: polarity ({tag.upper()})",
                {l.value: prof.polarity_pct[l] for l in prof.polarity_pct},
                palette,
            )
            _write_figure(out, f"{out_prefix}-polarity_pie-{tag}", spec)
        spec = figures.FigureSpec(
            figures.FigureKind.EMOTION_PIE,
            f"{name}: emotions ({tag.upper()})",
            {l.value: prof.emotion_pct[l] for l in prof.emotion_pct},
            palette,
        )
        _write_figure(out, f"{out_prefix}-emotion_pie-{tag}", spec)

    bar = figures.FigureSpec(
        figures.FigureKind.DIFF_BAR,
        f"{name}: emotion difference (A - B)",
        {l.value: v for l, v in delta.per_emotion_delta.items()},
        palette,
    )
    _write_figure(out, f"{out_prefix}-diff_bar", bar)

    stats_a = build_stats(docs_a)
    stats_b = build_stats(docs_b)
    emotions = [emotion_filter] if emotion_filter else list(EMOTIONS)
    for emotion in emotions:
        ranking = salience_ranking(emotion, stats_a, stats_b, lex, cfg.top_n)
        cloud = figures.FigureSpec(
            figures.FigureKind.WORD_CLOUD,
            f"{name}: salient {emotion.value} words (A - B)",
            {"entries": [
                {"word": e.word, "salience": e.salience, "emotion": e.emotion.value}
                for e in ranking
            ]},
            palette,
        )
        _write_figure(out, f"{out_prefix}-word_cloud-{emotion.value}", cloud)

    click.echo(f"{'emotion':<14}{'A %':>10}{'B %':>10}{'delta':>10}")
    for emotion in EMOTIONS:
        click.echo(
            f"{emotion.value:<14}{profile_a.emotion_pct[emotion]:>10.2f}"
            f"{profile_b.emotion_pct[emotion]:>10.2f}"
            f"{delta.per_emotion_delta[emotion]:>+10.2f}"
        )


@main.command("compare")
@click.argument("corpus_a_dir", type=click.Path(exists=True, file_okay=False, path_type=Path))
@click.argument("corpus_b_dir", type=click.Path(exists=True, file_okay=False, path_type=Path))
@click.option("--emotion", type=click.Choice([e.value for e in EMOTIONS]), default=None)
@shared_options
def cmd_compare(corpus_a_dir, corpus_b_dir, emotion, lexicon, palette, out, top_n, config_file):
    """Compare emotion-word usage between two letter corpora."""
    cfg = _resolve_config(
        {"lexicon": lexicon, "palette": palette, "out": out, "top_n": top_n}, config_file
    )
    try:
        letters_a = load_letters(corpus_a_dir, CorpusTag.OTHER)
        letters_b = load_letters(corpus_b_dir, CorpusTag.OTHER)
    except MailboxError as exc:
        _fail(str(exc))
    if not letters_a:
        _fail(f"empty corpus: {corpus_a_dir}")
    if not letters_b:
        _fail(f"empty corpus: {corpus_b_dir}")
    docs_a = [tokenize(l.body) for l in letters_a]
    docs_b = [tokenize(l.body) for l in letters_b]
    emotion_filter = AffectLabel(emotion) if emotion else None
    _compare_corpora(cfg, f"{corpus_a_dir.name} vs {corpus_b_dir.name}", docs_a, docs_b, emotion_filter, "compare")


@main.command("mailbox")
@click.argument("mbox_path", type=click.Path(exists=True, path_type=Path))
@click.argument("roster_path", type=click.Path(exists=True, path_type=Path))
@click.option("--person", "person_address", default=None, help="Analyze mail sent by this address instead of gender pairs.")
@click.option("--min-words", type=int, default=None)
@click.option("--max-words", type=int, default=None)
@shared_options
def cmd_mailbox(mbox_path, roster_path, person_address, min_words, max_words, lexicon, palette, out, top_n, config_file):
    """Analyze a mailbox: gender-pair comparisons or one person's sent mail."""
    cfg = _resolve_config(
        {
            "lexicon": lexicon,
            "palette": palette,
            "out": out,
            "top_n": top_n,
            "min_words": min_words,
            "max_words": max_words,
        },
        config_file,
    )
    try:
        messages = parse_mailbox(mbox_path)
        roster = load_roster(roster_path)
    except MailboxError as exc:
        _fail(str(exc))

    if person_address:
        _person_mode(cfg, messages, person_address)
    else:
        _gender_pairs_mode(cfg, messages, roster)


def _gender_pairs_mode(cfg: Config, messages, roster):
    lex = _load_lexicon(cfg)
    analysis = gender_pair_analysis(messages, roster, lex, cfg.min_words, cfg.max_words)
    if analysis.dropped:
        click.echo(f"warning: {analysis.dropped} message(s) dropped (untagged sender or recipients)", err=True)

    female, male = Gender.FEMALE, Gender.MALE
    comparisons = [
        ("by_female-vs-by_male", analysis.corpora.by_sender[female], analysis.corpora.by_sender[male]),
        ("female2female-vs-female2male", analysis.corpora.pairs[(female, female)], analysis.corpora.pairs[(female, male)]),
        ("male2female-vs-male2male", analysis.corpora.pairs[(male, female)], analysis.corpora.pairs[(male, male)]),
        ("male2male-vs-female2female", analysis.corpora.pairs[(male, male)], analysis.corpora.pairs[(female, female)]),
    ]
    for name, group_a, group_b in comparisons:
        if not group_a or not group_b:
            click.echo(f"warning: skipping {name}: empty group", err=True)
            continue
        docs_a = [tokenize(m.body) for m in group_a]
        docs_b = [tokenize(m.body) for m in group_b]
        click.echo(f"\n== {name} (A: {len(group_a)} mails, B: {len(group_b)} mails) ==")
        _compare_corpora(cfg, name, docs_a, docs_b, None, f"mailbox-{name}")


def _person_mode(cfg: Config, messages, person_address: str):
    lex = _load_lexicon(cfg)
    palette = _palette(cfg)
    index = MailboxIndex(messages, person_address, lex)
    if not index.sent:
        senders = sorted({m.sender for m in messages})
        _fail(
            f"no mail sent by {person_address}; known senders include: "
            + ", ".join(senders[:10])
        )

    out = cfg.output_dir
    out.mkdir(parents=True, exist_ok=True)
    summaries = index.summaries()
    (out / "mailbox-summary.json").write_text(
        json.dumps(
            [
                {
                    "peer_address": s.peer_address,
                    "sent_count": s.sent_count,
                    "received_count": s.received_count,
                    "polarity_pct": {l.value: v for l, v in s.polarity_pct.items()},
                    "emotion_diff": {l.value: v for l, v in s.emotion_diff.items()},
                }
                for s in summaries
            ],
            indent=2,
            sort_keys=True,
        ),
        encoding="utf-8",
    )

    for summary in summaries:
        slug = _slug(summary.peer_address)
        if abs(sum(summary.polarity_pct.values()) - 100.0) < 1e-6:
            pie = figures.FigureSpec(
                figures.FigureKind.POLARITY_PIE,
                f"mail to {summary.peer_address}: polarity",
                {l.value: v for l, v in summary.polarity_pct.items()},
                palette,
            )
            _write_figure(out, f"mailbox-polarity_pie-{slug}", pie)
        bar = figures.FigureSpec(
            figures.FigureKind.DIFF_BAR,
            f"mail to {summary.peer_address} minus all sent mail",
            {l.value: v for l, v in summary.emotion_diff.items()},
            palette,
        )
        _write_figure(out, f"mailbox-diff_bar-{slug}", bar)
        points = index.timeline(summary.peer_address)
        timeline = figures.FigureSpec(
            figures.FigureKind.TIMELINE,
            f"mail to {summary.peer_address} over time",
            {"points": [
                {
                    "timestamp": p.timestamp.isoformat(),
                    "positive": p.polarity_pct[AffectLabel.POSITIVE],
                    "negative": p.polarity_pct[AffectLabel.NEGATIVE],
                    "empty": p.empty,
                }
                for p in points
            ]},
            palette,
        )
        _write_figure(out, f"mailbox-timeline-{slug}", timeline)
    click.echo(f"{len(summaries)} correspondent(s) -> {out}")


@main.command("serve")
@click.argument("mbox_path", type=click.Path(exists=True, path_type=Path))
@click.argument("roster_path", type=click.Path(exists=True, path_type=Path))
@click.option("--me", "me_address", required=True)
@click.option("--port", type=int, default=8707, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--ui-dir", type=click.Path(path_type=Path), default=None)
@shared_options
def cmd_serve(mbox_path, roster_path, me_address, port, host, ui_dir, lexicon, palette, out, top_n, config_file):
    """Serve the dashboard API (and web UI, if built) over one mailbox."""
    import uvicorn

    from mailmood.service import create_app

    cfg = _resolve_config({"lexicon": lexicon, "palette": palette}, config_file)
    lex = _load_lexicon(cfg)
    try:
        messages = parse_mailbox(mbox_path)
        roster = load_roster(roster_path)
    except MailboxError as exc:
        _fail(str(exc))

    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.bind((host, port))
    except OSError:
        _fail(f"port {port} is already in use")
    finally:
        probe.close()

    entry = roster.get(me_address.lower())
    gender = entry[1].value if entry and entry[1] is not Gender.UNTAGGED else None
    if ui_dir is None:
        candidate = Path("frontend/dist")
        ui_dir = candidate if candidate.is_dir() else None
    app = create_app(messages, me_address, lex, static_dir=ui_dir, gender=gender)
    click.echo(f"serving http://{host}:{port} (mailbox: {len(messages)} messages)")
    uvicorn.run(app, host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
