// Force-directed overview: corpora as draggable nodes annotated with their
// top sentiment words, edges listing the words two corpora share. Clicking
// nodes drives pair selection; layout is deterministic (see layout.ts).

import { clear, svg } from "./dom.js";
import { forceLayout, Point } from "./layout.js";
import { SelectionState } from "./selection.js";
import { WordCloudGraph } from "./types.js";

export const WIDTH = 640;
export const HEIGHT = 480;
const NODE_RADIUS = 26;
const DRAG_THRESHOLD = 4;

export function renderWordcloud(
  container: Element,
  graph: WordCloudGraph,
  selection: SelectionState,
  onNodeClick: (corpusId: string) => void,
): void {
  clear(container);
  const root = svg("svg", {
    class: "wordcloud",
    viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
    width: String(WIDTH),
    height: String(HEIGHT),
  });
  container.appendChild(root);

  const ids = graph.nodes.map((n) => n.corpus_id);
  const positions = forceLayout(
    ids,
    graph.edges.map((e) => [e.corpus_a, e.corpus_b]),
    WIDTH,
    HEIGHT,
  );

  const edgeLayer = svg("g", { class: "edges" });
  const nodeLayer = svg("g", { class: "nodes" });
  root.appendChild(edgeLayer);
  root.appendChild(nodeLayer);

  interface EdgeParts {
    a: string;
    b: string;
    line: SVGElement;
    label: SVGElement;
  }
  const edgeParts: EdgeParts[] = [];

  const pos = (id: string): Point => positions.get(id) ?? { x: WIDTH / 2, y: HEIGHT / 2 };

  for (const edge of graph.edges) {
    const pa = pos(edge.corpus_a);
    const pb = pos(edge.corpus_b);
    const line = svg("line", {
      class: "edge",
      x1: String(pa.x),
      y1: String(pa.y),
      x2: String(pb.x),
      y2: String(pb.y),
    });
    line.appendChild(svg("title", {}, edge.shared_terms.join(", ")));
    const label = svg(
      "text",
      {
        class: "edge-label",
        x: String((pa.x + pb.x) / 2),
        y: String((pa.y + pb.y) / 2),
      },
      edge.shared_terms.join(", "),
    );
    edgeLayer.appendChild(line);
    edgeLayer.appendChild(label);
    edgeParts.push({ a: edge.corpus_a, b: edge.corpus_b, line, label });
  }

  const updateEdges = (id: string) => {
    for (const part of edgeParts) {
      if (part.a !== id && part.b !== id) continue;
      const pa = pos(part.a);
      const pb = pos(part.b);
      part.line.setAttribute("x1", String(pa.x));
      part.line.setAttribute("y1", String(pa.y));
      part.line.setAttribute("x2", String(pb.x));
      part.line.setAttribute("y2", String(pb.y));
      part.label.setAttribute("x", String((pa.x + pb.x) / 2));
      part.label.setAttribute("y", String((pa.y + pb.y) / 2));
    }
  };

  for (const node of graph.nodes) {
    const p = pos(node.corpus_id);
    const role =
      selection.ref === node.corpus_id
        ? "ref"
        : selection.comp === node.corpus_id
          ? "comp"
          : "";
    const group = svg("g", {
      class: `node${role ? " selected-" + role : ""}`,
      "data-corpus": node.corpus_id,
      transform: `translate(${p.x},${p.y})`,
    });
    group.appendChild(svg("circle", { r: String(NODE_RADIUS) }));
    group.appendChild(svg("text", { class: "node-label", y: "4" }, node.label));
    const words = svg("text", {
      class: "node-words",
      y: String(NODE_RADIUS + 14),
    });
    node.top_words.forEach((word, i) => {
      const tspan = svg(
        "tspan",
        {
          class: `word-${word.polarity}`,
          x: "0",
          dy: i === 0 ? "0" : "12",
        },
        word.term,
      );
      tspan.appendChild(
        svg(
          "title",
          {},
          `count ${word.count}, aggregate ${word.aggregate_score}`,
        ),
      );
      words.appendChild(tspan);
    });
    group.appendChild(words);
    nodeLayer.appendChild(group);

    let dragging = false;
    let moved = 0;
    let startX = 0;
    let startY = 0;
    let origin: Point = p;

    const onMove = (event: Event) => {
      if (!dragging) return;
      const me = event as MouseEvent;
      const dx = me.clientX - startX;
      const dy = me.clientY - startY;
      moved = Math.max(moved, Math.abs(dx) + Math.abs(dy));
      const next = { x: origin.x + dx, y: origin.y + dy };
      positions.set(node.corpus_id, next);
      group.setAttribute("transform", `translate(${next.x},${next.y})`);
      updateEdges(node.corpus_id);
    };
    const onUp = () => {
      dragging = false;
      document.removeEventListener("pointermove", onMove);
      document.removeEventListener("pointerup", onUp);
    };
    group.addEventListener("pointerdown", (event) => {
      const me = event as MouseEvent;
      dragging = true;
      moved = 0;
      startX = me.clientX;
      startY = me.clientY;
      origin = pos(node.corpus_id);
      document.addEventListener("pointermove", onMove);
      document.addEventListener("pointerup", onUp);
    });
    group.addEventListener("click", () => {
      if (moved > DRAG_THRESHOLD) return; // a drag, not a selection
      onNodeClick(node.corpus_id);
    });
  }
}
