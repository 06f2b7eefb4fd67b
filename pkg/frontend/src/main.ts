// Application wiring: load the overview payloads, let node clicks pick a
// corpus pair, and keep the shift panel in sync with the selected pair and
// measure. All analytics come from the server; this file only routes data.

import {
  ApiError,
  fetchCorpora,
  fetchTimeline,
  fetchWordcloud,
  isAbort,
  ShiftClient,
} from "./api.js";
import { el, errorBanner } from "./dom.js";
import { clickNode, initialSelection, pairComplete, SelectionState } from "./selection.js";
import { renderShift, renderShiftMessage } from "./shiftchart.js";
import { renderTimeline } from "./timeline.js";
import { Measure, SchemaError, WordCloudGraph } from "./types.js";
import { renderWordcloud } from "./wordcloud.js";

const MEASURES: Measure[] = ["proportion", "entropy", "divergence"];

export class App {
  private base: string;
  private state: SelectionState = initialSelection();
  private shiftClient: ShiftClient;
  private graph: WordCloudGraph | null = null;
  private labels = new Map<string, string>();

  private cloudPanel: HTMLElement;
  private timelinePanel: HTMLElement;
  private shiftPanel: HTMLElement;
  private measureButtons = new Map<Measure, HTMLButtonElement>();

  constructor(root: Element, base = "") {
    this.base = base;
    this.shiftClient = new ShiftClient(base);

    const controls = el("div", { class: "controls" });
    for (const measure of MEASURES) {
      const button = el("button", { class: "measure-button", type: "button" }, measure);
      button.addEventListener("click", () => this.setMeasure(measure));
      controls.appendChild(button);
      this.measureButtons.set(measure, button);
    }
    const filterLabel = el("label", { class: "filter-toggle" });
    const filterBox = el("input", { type: "checkbox", checked: "" }) as HTMLInputElement;
    filterBox.addEventListener("change", () => {
      this.state = { ...this.state, filter: filterBox.checked };
      this.refreshShift();
    });
    filterLabel.appendChild(filterBox);
    filterLabel.appendChild(document.createTextNode(" sentiment words only"));
    controls.appendChild(filterLabel);

    this.cloudPanel = el("section", { class: "panel wordcloud-panel" });
    this.timelinePanel = el("section", { class: "panel timeline-panel" });
    this.shiftPanel = el("section", { class: "panel shift-panel" });

    root.appendChild(el("h1", {}, "comptext"));
    root.appendChild(controls);
    root.appendChild(this.cloudPanel);
    root.appendChild(this.shiftPanel);
    root.appendChild(this.timelinePanel);
    this.syncMeasureButtons();
    renderShiftMessage(this.shiftPanel, "click two corpora to compare them");
  }

  async load(): Promise<void> {
    try {
      const corpora = await fetchCorpora(this.base);
      this.labels = new Map(corpora.map((c) => [c.id, c.label]));
    } catch (err) {
      errorBanner(this.cloudPanel, describe(err));
      return;
    }
    try {
      this.graph = await fetchWordcloud(10, "frequency", this.base);
      this.renderCloud();
    } catch (err) {
      errorBanner(this.cloudPanel, describe(err));
    }
    try {
      const timeline = await fetchTimeline(this.base);
      renderTimeline(this.timelinePanel, timeline, this.labels);
    } catch (err) {
      errorBanner(this.timelinePanel, describe(err));
    }
  }

  get selection(): SelectionState {
    return this.state;
  }

  handleNodeClick(corpusId: string): void {
    this.state = clickNode(this.state, corpusId);
    this.renderCloud();
    this.refreshShift();
  }

  setMeasure(measure: Measure): void {
    this.state = { ...this.state, measure };
    this.syncMeasureButtons();
    this.refreshShift();
  }

  private syncMeasureButtons(): void {
    for (const [measure, button] of this.measureButtons) {
      button.classList.toggle("active", measure === this.state.measure);
    }
  }

  private renderCloud(): void {
    if (this.graph === null) return;
    renderWordcloud(this.cloudPanel, this.graph, this.state, (id) =>
      this.handleNodeClick(id),
    );
  }

  private refreshShift(): void {
    if (!pairComplete(this.state)) {
      renderShiftMessage(this.shiftPanel, "click two corpora to compare them");
      return;
    }
    void this.requestShift();
  }

  private async requestShift(): Promise<void> {
    const { ref, comp, measure, k, filter } = this.state;
    try {
      const report = await this.shiftClient.fetch({
        ref: ref as string,
        comp: comp as string,
        measure,
        k,
        filter,
      });
      renderShift(this.shiftPanel, report);
    } catch (err) {
      if (isAbort(err)) return; // superseded by a newer request
      if (err instanceof ApiError && err.status === 422) {
        renderShiftMessage(
          this.shiftPanel,
          `no common support: ${err.detail}`,
        );
        return;
      }
      errorBanner(this.shiftPanel, describe(err));
    }
  }
}

function describe(err: unknown): string {
  if (err instanceof SchemaError) return err.message;
  if (err instanceof ApiError) return err.message;
  return `request failed: ${String(err)}`;
}

export function boot(): void {
  const root = document.getElementById("app");
  if (root === null) throw new Error("missing #app element");
  const app = new App(root);
  void app.load();
}

declare global {
  interface Window {
    __COMPTEXT_NO_AUTOBOOT?: boolean;
  }
}

function autoboot(): void {
  if (window.__COMPTEXT_NO_AUTOBOOT) return;
  if (document.getElementById("app") !== null) boot();
}

if (typeof window !== "undefined") {
  if (document.readyState === "loading") {
    document.addEventListener("DOMContentLoaded", autoboot);
  } else {
    autoboot();
  }
}
