import {
  EMOTIONS,
  PALETTE,
  type CorrespondentSummary,
  type TimelinePoint,
} from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

function svgElement<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, value);
  }
  return el;
}

function tooltip(parent: SVGElement, text: string): void {
  const title = document.createElementNS(SVG_NS, "title");
  title.textContent = text;
  parent.appendChild(title);
}

/**
 * Overview: one clickable row per correspondent with a positive/negative
 * polarity bar. Percentages are used as widths verbatim; no recomputation.
 */
export function renderOverview(
  container: HTMLElement,
  summaries: CorrespondentSummary[],
  onSelect: (address: string) => void,
): void {
  container.replaceChildren();
  for (const summary of summaries) {
    const row = document.createElement("button");
    row.type = "button";
    row.className = "overview-row";
    row.dataset.address = summary.peer_address;
    row.addEventListener("click", () => onSelect(summary.peer_address));

    const label = document.createElement("span");
    label.className = "peer-label";
    label.textContent = `${summary.peer_address} (${summary.sent_count} sent)`;
    row.appendChild(label);

    const bar = document.createElement("span");
    bar.className = "polarity-bar";
    for (const polarity of ["positive", "negative"] as const) {
      const pct = summary.polarity_pct[polarity];
      const segment = document.createElement("span");
      segment.className = `polarity-${polarity}`;
      segment.dataset.value = String(pct);
      segment.style.width = `${pct}%`;
      segment.style.backgroundColor = PALETTE[polarity];
      segment.title = `${polarity}: ${pct.toFixed(1)}%`;
      bar.appendChild(segment);
    }
    row.appendChild(bar);
    container.appendChild(row);
  }
}

/**
 * Eight-bar emotion difference chart for one correspondent. Each bar carries
 * the API value verbatim in data-value and as a hover tooltip.
 */
export function renderDiffBars(
  container: HTMLElement,
  summary: CorrespondentSummary,
): void {
  const width = 480;
  const height = 200;
  const mid = height / 2;
  const barWidth = width / EMOTIONS.length;
  const maxAbs = Math.max(
    1e-12,
    ...EMOTIONS.map((e) => Math.abs(summary.emotion_diff[e])),
  );

  const svg = svgElement("svg", {
    viewBox: `0 0 ${width} ${height + 20}`,
    class: "diff-chart",
    role: "img",
  });
  svg.appendChild(
    svgElement("line", {
      x1: "0",
      y1: String(mid),
      x2: String(width),
      y2: String(mid),
      stroke: "#999",
    }),
  );
  EMOTIONS.forEach((emotion, i) => {
    const value = summary.emotion_diff[emotion];
    const scaled = (Math.abs(value) / maxAbs) * (mid - 10);
    const rect = svgElement("rect", {
      class: "diff-bar",
      "data-emotion": emotion,
      "data-value": String(value),
      x: String(i * barWidth + 4),
      y: String(value >= 0 ? mid - scaled : mid),
      width: String(barWidth - 8),
      height: String(scaled),
      fill: PALETTE[emotion],
    });
    tooltip(rect, `${emotion}: ${value.toFixed(2)}`);
    svg.appendChild(rect);

    const label = svgElement("text", {
      x: String(i * barWidth + barWidth / 2),
      y: String(height + 14),
      "text-anchor": "middle",
      "font-size": "10",
    });
    label.textContent = emotion;
    svg.appendChild(label);
  });
  container.replaceChildren(svg);
}

/**
 * Per-mail polarity timeline: positive and negative polylines with exactly
 * one marker per sent email. Empty-bodied mails get a hollow marker.
 */
export function renderTimeline(
  container: HTMLElement,
  points: TimelinePoint[],
): void {
  const width = 480;
  const height = 160;
  const svg = svgElement("svg", {
    viewBox: `0 0 ${width} ${height}`,
    class: "timeline-chart",
    role: "img",
  });

  const x = (i: number): number =>
    points.length <= 1 ? width / 2 : 10 + (i * (width - 20)) / (points.length - 1);
  const y = (pct: number): number => height - 10 - (pct / 100) * (height - 20);

  for (const polarity of ["positive", "negative"] as const) {
    if (points.length > 1) {
      const coords = points
        .map((p, i) => `${x(i)},${y(p.polarity_pct[polarity])}`)
        .join(" ");
      svg.appendChild(
        svgElement("polyline", {
          points: coords,
          fill: "none",
          stroke: PALETTE[polarity],
          class: `timeline-line-${polarity}`,
        }),
      );
    }
  }

  points.forEach((point, i) => {
    const marker = svgElement("circle", {
      class: "timeline-marker",
      "data-timestamp": point.timestamp,
      cx: String(x(i)),
      cy: String(y(point.polarity_pct.positive)),
      r: "4",
      stroke: PALETTE.positive,
      fill: point.empty ? "none" : PALETTE.positive,
    });
    tooltip(
      marker,
      point.empty
        ? `${point.timestamp}: no scorable words`
        : `${point.timestamp}: +${point.polarity_pct.positive.toFixed(1)}% / -${point.polarity_pct.negative.toFixed(1)}%`,
    );
    svg.appendChild(marker);
  });
  container.replaceChildren(svg);
}
