// Typed client for the read-only analysis API. The UI never computes
// analytics; everything it shows comes back from these calls.

import {
  asCorpusList,
  asShiftReport,
  asTimeline,
  asWordCloudGraph,
  CorpusSummary,
  Measure,
  Ranking,
  ShiftReport,
  Timeline,
  WordCloudGraph,
} from "./types.js";

export class ApiError extends Error {
  status: number;
  detail: string;

  constructor(status: number, detail: string) {
    super(`HTTP ${status}: ${detail}`);
    this.name = "ApiError";
    this.status = status;
    this.detail = detail;
  }
}

async function getJson(url: string, signal?: AbortSignal): Promise<unknown> {
  const response = await fetch(url, { signal });
  let body: unknown = null;
  try {
    body = await response.json();
  } catch {
    body = null;
  }
  if (!response.ok) {
    const detail =
      body && typeof body === "object" && "detail" in body
        ? String((body as { detail: unknown }).detail)
        : response.statusText;
    throw new ApiError(response.status, detail);
  }
  return body;
}

export async function fetchCorpora(base = ""): Promise<CorpusSummary[]> {
  return asCorpusList(await getJson(`${base}/api/corpora`));
}

export async function fetchWordcloud(
  m: number,
  ranking: Ranking,
  base = "",
): Promise<WordCloudGraph> {
  return asWordCloudGraph(
    await getJson(`${base}/api/wordcloud?m=${m}&ranking=${ranking}`),
  );
}

export async function fetchTimeline(base = ""): Promise<Timeline> {
  return asTimeline(await getJson(`${base}/api/timeline`));
}

export interface ShiftParams {
  ref: string;
  comp: string;
  measure: Measure;
  k: number;
  filter: boolean;
}

/** Issues shift requests, aborting any still-in-flight previous one so at
 * most one request is outstanding and stale responses never land. */
export class ShiftClient {
  private controller: AbortController | null = null;
  private base: string;

  constructor(base = "") {
    this.base = base;
  }

  async fetch(params: ShiftParams): Promise<ShiftReport> {
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;
    const url =
      `${this.base}/api/shift?ref=${encodeURIComponent(params.ref)}` +
      `&comp=${encodeURIComponent(params.comp)}` +
      `&measure=${params.measure}&k=${params.k}&filter=${params.filter}`;
    const report = asShiftReport(await getJson(url, controller.signal));
    if (this.controller === controller) {
      this.controller = null;
    }
    return report;
  }
}

export function isAbort(err: unknown): boolean {
  return err instanceof DOMException && err.name === "AbortError";
}
