// Word shift chart: diverging horizontal bars ranked top-down, plus the
// cumulative-contribution subplot with its top-k cutoff line and the
// relative corpus-size bars. Every number shown is taken verbatim from the
// report payload; this view computes geometry only.

import { clear, el, svg } from "./dom.js";
import { ShiftReport } from "./types.js";

const WIDTH = 640;
const ROW_HEIGHT = 20;
const SUBPLOT_HEIGHT = 140;
const MARGIN = 36;

export function renderShift(container: Element, report: ShiftReport): void {
  clear(container);

  const header = el("div", { class: "shift-header" });
  header.appendChild(
    el(
      "span",
      { class: "shift-title" },
      `${report.measure} shift: ${report.ref_id} (reference) vs ${report.comp_id} (comparison)`,
    ),
  );
  header.appendChild(
    el("span", { class: "shift-total", title: "whole-corpus total" },
      ` total ${report.total_shift}`),
  );
  container.appendChild(header);

  const chartHeight = Math.max(1, report.items.length) * ROW_HEIGHT + 8;
  const height = chartHeight + SUBPLOT_HEIGHT + MARGIN;
  const root = svg("svg", {
    class: "shiftchart",
    viewBox: `0 0 ${WIDTH} ${height}`,
    width: String(WIDTH),
    height: String(height),
  });
  container.appendChild(root);

  const mid = WIDTH / 2;
  const halfSpan = WIDTH / 2 - 80;
  const maxAbs = report.items.reduce(
    (acc, item) => Math.max(acc, Math.abs(item.contribution)),
    0,
  );

  const bars = svg("g", { class: "bars" });
  root.appendChild(bars);
  bars.appendChild(
    svg("line", {
      class: "zero-line",
      x1: String(mid),
      y1: "0",
      x2: String(mid),
      y2: String(chartHeight),
    }),
  );

  report.items.forEach((item, i) => {
    const y = i * ROW_HEIGHT + 4;
    const length = maxAbs > 0 ? (Math.abs(item.contribution) / maxAbs) * halfSpan : 0;
    const rightward = item.direction === "toward_comparison";
    const bar = svg("rect", {
      class: `bar bar-${item.direction}`,
      x: String(rightward ? mid : mid - length),
      y: String(y),
      width: String(length),
      height: String(ROW_HEIGHT - 6),
      "data-term": item.term,
      "data-direction": item.direction,
    });
    bar.appendChild(
      svg(
        "title",
        {},
        `${item.term}: contribution ${item.contribution} ` +
          `(p_ref ${item.p_ref}, p_comp ${item.p_comp})`,
      ),
    );
    bars.appendChild(bar);
    bars.appendChild(
      svg(
        "text",
        {
          class: "bar-term",
          x: String(rightward ? mid - 6 : mid + 6),
          y: String(y + ROW_HEIGHT - 9),
          "text-anchor": rightward ? "end" : "start",
        },
        item.term,
      ),
    );
  });

  // cumulative subplot, bottom left: rank runs downward, value rightward
  const subTop = chartHeight + MARGIN / 2;
  const subWidth = WIDTH / 2 - 60;
  const sub = svg("g", {
    class: "cumulative",
    transform: `translate(40,${subTop})`,
  });
  root.appendChild(sub);
  sub.appendChild(
    svg("rect", {
      class: "subplot-frame",
      x: "0",
      y: "0",
      width: String(subWidth),
      height: String(SUBPLOT_HEIGHT),
    }),
  );
  const points = report.cumulative;
  if (points.length > 0) {
    const finalValue = points[points.length - 1].value;
    const xFor = (value: number) =>
      finalValue > 0 ? (value / finalValue) * (subWidth - 8) + 4 : 4;
    const yFor = (rank: number) =>
      ((rank - 1) / Math.max(1, points.length - 1)) * (SUBPLOT_HEIGHT - 8) + 4;
    const path = points
      .map((p, i) => `${i === 0 ? "M" : "L"}${xFor(p.value)},${yFor(p.rank)}`)
      .join(" ");
    const curve = svg("path", { class: "cumulative-curve", d: path });
    curve.appendChild(
      svg("title", {}, points.map((p) => `${p.rank}: ${p.value}`).join("\n")),
    );
    sub.appendChild(curve);

    const cutoffRank = Math.min(report.k, points.length);
    sub.appendChild(
      svg("line", {
        class: "cutoff-line",
        x1: "0",
        y1: String(yFor(cutoffRank)),
        x2: String(subWidth),
        y2: String(yFor(cutoffRank)),
      }),
    );
    sub.appendChild(
      svg(
        "text",
        { class: "cutoff-label", x: "4", y: String(yFor(cutoffRank) - 4) },
        `top ${report.k}`,
      ),
    );
  }
  sub.appendChild(
    svg(
      "text",
      { class: "subplot-caption", x: "0", y: String(SUBPLOT_HEIGHT + 14) },
      "cumulative |contribution| by rank",
    ),
  );

  // corpus-size bars, bottom right
  const sizes = svg("g", {
    class: "sizes",
    transform: `translate(${WIDTH / 2 + 40},${subTop})`,
  });
  root.appendChild(sizes);
  const sizeMax = Math.max(report.ref_size, report.comp_size, 1);
  const sizeSpan = WIDTH / 2 - 120;
  const rows: Array<[string, number, string]> = [
    [report.ref_id, report.ref_size, "size-ref"],
    [report.comp_id, report.comp_size, "size-comp"],
  ];
  rows.forEach(([label, size, cls], i) => {
    const y = i * 34;
    sizes.appendChild(
      svg("rect", {
        class: `size-bar ${cls}`,
        x: "0",
        y: String(y),
        width: String((size / sizeMax) * sizeSpan),
        height: "22",
      }),
    );
    sizes.appendChild(
      svg(
        "text",
        { class: "size-label", x: "4", y: String(y + 16) },
        `${label}: ${size}`,
      ),
    );
  });
  sizes.appendChild(
    svg(
      "text",
      { class: "subplot-caption", x: "0", y: String(2 * 34 + 14) },
      "corpus sizes (tokens)",
    ),
  );
}

export function renderShiftMessage(container: Element, message: string): void {
  clear(container);
  container.appendChild(el("div", { class: "shift-message" }, message));
}
