// Cumulative-sentiment timeline: one mark per corpus in order-key order,
// color-coded by polarity, hover shows the corpus label and exact value.

import { clear, svg } from "./dom.js";
import { Timeline } from "./types.js";

const WIDTH = 640;
const HEIGHT = 180;
const PAD = 28;

export function renderTimeline(
  container: Element,
  timeline: Timeline,
  labels: Map<string, string> = new Map(),
): void {
  clear(container);
  const root = svg("svg", {
    class: "timeline",
    viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
    width: String(WIDTH),
    height: String(HEIGHT),
  });
  container.appendChild(root);

  const points = timeline.points;
  const midY = HEIGHT / 2;
  root.appendChild(
    svg("line", {
      class: "zero-line",
      x1: String(PAD),
      y1: String(midY),
      x2: String(WIDTH - PAD),
      y2: String(midY),
    }),
  );

  if (points.length === 0) return;
  const span = WIDTH - 2 * PAD;
  const xFor = (i: number) =>
    points.length === 1 ? WIDTH / 2 : PAD + (i / (points.length - 1)) * span;
  // sentiment is bounded to [-1, 1], so the vertical scale is fixed
  const yFor = (sentiment: number) => midY - sentiment * (midY - PAD);

  const coords = points.map((p, i) => ({ x: xFor(i), y: yFor(p.sentiment), p }));
  if (coords.length > 1) {
    root.appendChild(
      svg("polyline", {
        class: "timeline-path",
        points: coords.map((c) => `${c.x},${c.y}`).join(" "),
      }),
    );
  }
  for (const { x, y, p } of coords) {
    const label = labels.get(p.corpus_id) ?? p.corpus_id;
    const mark = svg("circle", {
      class: `timeline-point polarity-${p.polarity}`,
      cx: String(x),
      cy: String(y),
      r: "7",
      "data-corpus": p.corpus_id,
    });
    mark.appendChild(svg("title", {}, `${label}: ${p.sentiment}`));
    root.appendChild(mark);
    root.appendChild(
      svg(
        "text",
        { class: "timeline-label", x: String(x), y: String(HEIGHT - 8), "text-anchor": "middle" },
        label,
      ),
    );
  }
}
