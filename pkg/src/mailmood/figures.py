"""Figure rendering: polarity/emotion pies, emotion-difference bars,
relative-salience word clouds, and per-email timelines, as deterministic SVG
and as JSON payloads for the dashboard.

Payloads use plain JSON types with affect-label names as string keys:

- polarity_pie: ``{"positive": pct, "negative": pct}`` summing to 100
- emotion_pie: the eight emotion keys, percentages summing to 100
- diff_bar: the eight emotion keys, signed percentage deltas
- word_cloud: ``{"entries": [{"word", "salience", "emotion"}, ...]}``
- timeline: ``{"points": [{"timestamp", "positive", "negative", "empty"}, ...]}``
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from mailmood.labels import DEFAULT_PALETTE, EMOTIONS, POLARITIES, AffectLabel

PIE_TOLERANCE = 1e-6
MIN_FONT_PT = 12.0
MAX_FONT_PT = 48.0


class FigureValidationError(ValueError):
    def __init__(self, field_name: str, message: str):
        super().__init__(f"{field_name}: {message}")
        self.field_name = field_name


class FigureKind(str, Enum):
    POLARITY_PIE = "polarity_pie"
    EMOTION_PIE = "emotion_pie"
    DIFF_BAR = "diff_bar"
    WORD_CLOUD = "word_cloud"
    TIMELINE = "timeline"


@dataclass
class FigureSpec:
    kind: FigureKind
    title: str
    data: dict[str, Any]
    palette: dict[AffectLabel, str] = field(default_factory=lambda: dict(DEFAULT_PALETTE))

    def __post_init__(self):
        self.kind = FigureKind(self.kind)
        validate_payload(self.kind, self.data)


def _check_pie(data: dict, keys: tuple[AffectLabel, ...], axis: str) -> None:
    expected = {k.value for k in keys}
    if set(data) != expected:
        raise FigureValidationError("data", f"{axis} pie needs exactly keys {sorted(expected)}")
    for key, value in data.items():
        if not isinstance(value, (int, float)) or not 0 <= value <= 100:
            raise FigureValidationError(f"data.{key}", f"percentage out of [0, 100]: {value!r}")
    total = sum(data.values())
    if abs(total - 100.0) > PIE_TOLERANCE:
        raise FigureValidationError("data", f"{axis} percentages sum to {total!r}, not 100")


def validate_payload(kind: FigureKind, data: dict[str, Any]) -> None:
    if kind is FigureKind.POLARITY_PIE:
        _check_pie(data, POLARITIES, "polarity")
    elif kind is FigureKind.EMOTION_PIE:
        _check_pie(data, EMOTIONS, "emotion")
    elif kind is FigureKind.DIFF_BAR:
        expected = {e.value for e in EMOTIONS}
        if set(data) != expected:
            raise FigureValidationError("data", f"diff bar needs exactly keys {sorted(expected)}")
        for key, value in data.items():
            if not isinstance(value, (int, float)) or not math.isfinite(value):
                raise FigureValidationError(f"data.{key}", f"delta not finite: {value!r}")
    elif kind is FigureKind.WORD_CLOUD:
        entries = data.get("entries")
        if not isinstance(entries, list):
            raise FigureValidationError("data.entries", "word cloud needs an entries list")
        for i, entry in enumerate(entries):
            if not entry.get("word"):
                raise FigureValidationError(f"data.entries[{i}].word", "missing word")
            salience = entry.get("salience")
            if not isinstance(salience, (int, float)) or salience <= 0:
                raise FigureValidationError(
                    f"data.entries[{i}].salience", f"salience must be positive: {salience!r}"
                )
    elif kind is FigureKind.TIMELINE:
        points = data.get("points")
        if not isinstance(points, list):
            raise FigureValidationError("data.points", "timeline needs a points list")
        for i, point in enumerate(points):
            if "timestamp" not in point:
                raise FigureValidationError(f"data.points[{i}].timestamp", "missing timestamp")
            for axis in ("positive", "negative"):
                value = point.get(axis)
                if not isinstance(value, (int, float)) or not 0 <= value <= 100:
                    raise FigureValidationError(
                        f"data.points[{i}].{axis}", f"percentage out of [0, 100]: {value!r}"
                    )


def cloud_font_sizes(saliences: list[float]) -> list[float]:
    """Linear map from salience to font size; a singleton renders at max."""
    if not saliences:
        return []
    lo, hi = min(saliences), max(saliences)
    if hi == lo:
        return [MAX_FONT_PT] * len(saliences)
    span = MAX_FONT_PT - MIN_FONT_PT
    return [MIN_FONT_PT + span * (s - lo) / (hi - lo) for s in saliences]


# --- SVG --------------------------------------------------------------------

_WIDTH = 640


def _esc(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace('"', "&quot;")


def _svg_open(height: float) -> str:
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_WIDTH}" height="{height:.1f}" viewBox="0 0 {_WIDTH} {height:.1f}" '
        f'font-family="Helvetica, Arial, sans-serif">\n'
    )


def _wedge_path(cx: float, cy: float, r: float, start_frac: float, end_frac: float) -> str:
    # Fractions of the full turn, starting at 12 o'clock, clockwise.
    a0 = 2 * math.pi * start_frac - math.pi / 2
    a1 = 2 * math.pi * end_frac - math.pi / 2
    x0, y0 = cx + r * math.cos(a0), cy + r * math.sin(a0)
    x1, y1 = cx + r * math.cos(a1), cy + r * math.sin(a1)
    large = 1 if (end_frac - start_frac) > 0.5 else 0
    return (
        f"M {cx:.2f} {cy:.2f} L {x0:.4f} {y0:.4f} "
        f"A {r:.2f} {r:.2f} 0 {large} 1 {x1:.4f} {y1:.4f} Z"
    )


def _render_pie(spec: FigureSpec, labels: tuple[AffectLabel, ...]) -> str:
    height = 420.0
    cx, cy, r = 210.0, 220.0, 160.0
    parts = [_svg_open(height)]
    parts.append(f'<text x="12" y="24" font-size="16">{_esc(spec.title)}</text>\n')
    cursor = 0.0
    legend_y = 60.0
    for label in labels:
        pct = spec.data[label.value]
        colour = spec.palette[label]
        if pct > 0:
            frac = pct / 100.0
            if frac >= 1.0 - 1e-12:
                parts.append(f'<circle cx="{cx}" cy="{cy}" r="{r}" fill="{colour}"/>\n')
            else:
                path = _wedge_path(cx, cy, r, cursor, cursor + frac)
                parts.append(f'<path d="{path}" fill="{colour}" stroke="#ffffff" stroke-width="1"/>\n')
            cursor += frac
        parts.append(
            f'<rect x="430" y="{legend_y - 11:.1f}" width="14" height="14" fill="{colour}"/>\n'
            f'<text x="450" y="{legend_y:.1f}" font-size="13">{label.value}: {pct:.2f}%</text>\n'
        )
        legend_y += 22.0
    parts.append("</svg>\n")
    return "".join(parts)


def _render_diff_bar(spec: FigureSpec) -> str:
    height = 360.0
    baseline = 190.0
    max_abs = max(abs(spec.data[e.value]) for e in EMOTIONS)
    scale = 140.0 / max_abs if max_abs > 0 else 0.0
    bar_w, gap, x0 = 56.0, 18.0, 30.0
    parts = [_svg_open(height)]
    parts.append(f'<text x="12" y="24" font-size="16">{_esc(spec.title)}</text>\n')
    parts.append(f'<line x1="{x0}" y1="{baseline}" x2="{_WIDTH - 20}" y2="{baseline}" stroke="#444444"/>\n')
    for i, emotion in enumerate(EMOTIONS):
        delta = spec.data[emotion.value]
        x = x0 + i * (bar_w + gap)
        h = abs(delta) * scale
        y = baseline - h if delta >= 0 else baseline
        parts.append(
            f'<rect x="{x:.1f}" y="{y:.2f}" width="{bar_w}" height="{h:.2f}" '
            f'fill="{spec.palette[emotion]}"/>\n'
        )
        parts.append(
            f'<text x="{x + bar_w / 2:.1f}" y="345" font-size="11" text-anchor="middle">'
            f"{emotion.value}</text>\n"
        )
        label_y = y - 4 if delta >= 0 else baseline + h + 12
        parts.append(
            f'<text x="{x + bar_w / 2:.1f}" y="{label_y:.2f}" font-size="10" text-anchor="middle">'
            f"{delta:+.2f}</text>\n"
        )
    parts.append("</svg>\n")
    return "".join(parts)


def _render_word_cloud(spec: FigureSpec) -> str:
    entries = spec.data["entries"]
    sizes = cloud_font_sizes([e["salience"] for e in entries])
    # Greedy row layout: words in given order, wrapping at the figure width.
    rows: list[list[tuple[dict, float]]] = []
    row: list[tuple[dict, float]] = []
    x = 0.0
    for entry, size in zip(entries, sizes):
        # 0.6em per character is a workable monospaced-ish width estimate.
        w = 0.6 * size * len(entry["word"]) + 16.0
        if row and x + w > _WIDTH - 24:
            rows.append(row)
            row, x = [], 0.0
        row.append((entry, size))
        x += w
    if row:
        rows.append(row)
    y = 48.0
    parts = []
    body = []
    for row in rows:
        row_height = max(size for _, size in row) + 10.0
        y += row_height
        x = 16.0
        for entry, size in row:
            label = AffectLabel(entry["emotion"]) if entry.get("emotion") else None
            colour = spec.palette[label] if label else "#333333"
            body.append(
                f'<text x="{x:.1f}" y="{y:.1f}" font-size="{size:.2f}" fill="{colour}">'
                f'{_esc(entry["word"])}</text>\n'
            )
            x += 0.6 * size * len(entry["word"]) + 16.0
    height = y + 24.0
    parts.append(_svg_open(height))
    parts.append(f'<text x="12" y="24" font-size="16">{_esc(spec.title)}</text>\n')
    parts.extend(body)
    parts.append("</svg>\n")
    return "".join(parts)


def _render_timeline(spec: FigureSpec) -> str:
    points = spec.data["points"]
    height = 320.0
    plot_x0, plot_x1 = 50.0, _WIDTH - 30.0
    plot_y0, plot_y1 = 50.0, 270.0  # 100% .. 0%
    parts = [_svg_open(height)]
    parts.append(f'<text x="12" y="24" font-size="16">{_esc(spec.title)}</text>\n')
    parts.append(f'<line x1="{plot_x0}" y1="{plot_y1}" x2="{plot_x1}" y2="{plot_y1}" stroke="#444444"/>\n')
    parts.append(f'<line x1="{plot_x0}" y1="{plot_y0}" x2="{plot_x0}" y2="{plot_y1}" stroke="#444444"/>\n')
    n = len(points)
    step = (plot_x1 - plot_x0) / max(n - 1, 1)
    pos_colour = DEFAULT_PALETTE[AffectLabel.POSITIVE]
    neg_colour = DEFAULT_PALETTE[AffectLabel.NEGATIVE]
    for axis, colour in (("positive", pos_colour), ("negative", neg_colour)):
        coords = []
        for i, point in enumerate(points):
            x = plot_x0 + i * step if n > 1 else (plot_x0 + plot_x1) / 2
            y = plot_y1 - (plot_y1 - plot_y0) * point[axis] / 100.0
            coords.append((x, y, point))
        if len(coords) > 1:
            poly = " ".join(f"{x:.2f},{y:.2f}" for x, y, _ in coords)
            parts.append(f'<polyline points="{poly}" fill="none" stroke="{colour}" stroke-width="1.5"/>\n')
        for x, y, point in coords:
            fill = "none" if point.get("empty") else colour
            parts.append(
                f'<circle cx="{x:.2f}" cy="{y:.2f}" r="4" fill="{fill}" stroke="{colour}">'
                f"<title>{_esc(str(point['timestamp']))}: {point[axis]:.1f}% {axis}</title></circle>\n"
            )
    parts.append("</svg>\n")
    return "".join(parts)


def render_svg(spec: FigureSpec) -> str:
    """Well-formed SVG; byte-identical output for identical specs."""
    validate_payload(spec.kind, spec.data)
    if spec.kind is FigureKind.POLARITY_PIE:
        return _render_pie(spec, POLARITIES)
    if spec.kind is FigureKind.EMOTION_PIE:
        return _render_pie(spec, EMOTIONS)
    if spec.kind is FigureKind.DIFF_BAR:
        return _render_diff_bar(spec)
    if spec.kind is FigureKind.WORD_CLOUD:
        return _render_word_cloud(spec)
    return _render_timeline(spec)


def export_json(spec: FigureSpec) -> str:
    """Schema-stable JSON that round-trips through import_json."""
    payload = {
        "kind": spec.kind.value,
        "title": spec.title,
        "data": spec.data,
        "palette": {label.value: colour for label, colour in sorted(spec.palette.items())},
    }
    return json.dumps(payload, sort_keys=True)


def import_json(text: str) -> FigureSpec:
    payload = json.loads(text)
    palette = {AffectLabel(k): v for k, v in payload["palette"].items()}
    return FigureSpec(
        kind=FigureKind(payload["kind"]),
        title=payload["title"],
        data=payload["data"],
        palette=palette,
    )
