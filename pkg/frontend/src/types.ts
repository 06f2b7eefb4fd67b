// Payload types mirroring docs/SCHEMAS.md, with runtime guards. The guards
// throw SchemaError so callers can show an error banner instead of rendering
// from a malformed payload.

export type Polarity = "positive" | "negative" | "neutral";
export type Direction = "toward_comparison" | "toward_reference";
export type Measure = "proportion" | "entropy" | "divergence";
export type Ranking = "frequency" | "aggregate";

export interface CorpusSummary {
  id: string;
  label: string;
  order_key: number;
  token_total: number;
  sentiment_token_total: number;
}

export interface ShiftItem {
  term: string;
  contribution: number;
  p_ref: number;
  p_comp: number;
  direction: Direction;
}

export interface CumulativePoint {
  rank: number;
  value: number;
}

export interface ShiftReport {
  measure: Measure;
  ref_id: string;
  comp_id: string;
  k: number;
  items: ShiftItem[];
  cumulative: CumulativePoint[];
  total_shift: number;
  ref_size: number;
  comp_size: number;
}

export interface TopWord {
  term: string;
  polarity: Polarity;
  aggregate_score: number;
  count: number;
}

export interface WordCloudNode {
  corpus_id: string;
  label: string;
  top_words: TopWord[];
}

export interface WordCloudEdge {
  corpus_a: string;
  corpus_b: string;
  shared_terms: string[];
}

export interface WordCloudGraph {
  nodes: WordCloudNode[];
  edges: WordCloudEdge[];
}

export interface TimelinePoint {
  corpus_id: string;
  order_key: number;
  sentiment: number;
  polarity: Polarity;
}

export interface Timeline {
  points: TimelinePoint[];
}

export class SchemaError extends Error {
  constructor(what: string) {
    super(`unexpected payload shape: ${what}`);
    this.name = "SchemaError";
  }
}

function isRecord(v: unknown): v is Record<string, unknown> {
  return typeof v === "object" && v !== null && !Array.isArray(v);
}

function str(v: Record<string, unknown>, key: string, where: string): string {
  if (typeof v[key] !== "string") throw new SchemaError(`${where}.${key}`);
  return v[key] as string;
}

function num(v: Record<string, unknown>, key: string, where: string): number {
  if (typeof v[key] !== "number") throw new SchemaError(`${where}.${key}`);
  return v[key] as number;
}

function arr(v: Record<string, unknown>, key: string, where: string): unknown[] {
  if (!Array.isArray(v[key])) throw new SchemaError(`${where}.${key}`);
  return v[key] as unknown[];
}

function oneOf<T extends string>(
  v: Record<string, unknown>,
  key: string,
  allowed: readonly T[],
  where: string,
): T {
  const value = str(v, key, where);
  if (!(allowed as readonly string[]).includes(value)) {
    throw new SchemaError(`${where}.${key} = ${value}`);
  }
  return value as T;
}

const POLARITIES = ["positive", "negative", "neutral"] as const;
const DIRECTIONS = ["toward_comparison", "toward_reference"] as const;
const MEASURES = ["proportion", "entropy", "divergence"] as const;

export function asCorpusList(v: unknown): CorpusSummary[] {
  if (!Array.isArray(v)) throw new SchemaError("corpora");
  return v.map((entry, i) => {
    if (!isRecord(entry)) throw new SchemaError(`corpora[${i}]`);
    const where = `corpora[${i}]`;
    return {
      id: str(entry, "id", where),
      label: str(entry, "label", where),
      order_key: num(entry, "order_key", where),
      token_total: num(entry, "token_total", where),
      sentiment_token_total: num(entry, "sentiment_token_total", where),
    };
  });
}

export function asShiftReport(v: unknown): ShiftReport {
  if (!isRecord(v)) throw new SchemaError("report");
  return {
    measure: oneOf(v, "measure", MEASURES, "report"),
    ref_id: str(v, "ref_id", "report"),
    comp_id: str(v, "comp_id", "report"),
    k: num(v, "k", "report"),
    items: arr(v, "items", "report").map((item, i) => {
      if (!isRecord(item)) throw new SchemaError(`items[${i}]`);
      const where = `items[${i}]`;
      return {
        term: str(item, "term", where),
        contribution: num(item, "contribution", where),
        p_ref: num(item, "p_ref", where),
        p_comp: num(item, "p_comp", where),
        direction: oneOf(item, "direction", DIRECTIONS, where),
      };
    }),
    cumulative: arr(v, "cumulative", "report").map((point, i) => {
      if (!isRecord(point)) throw new SchemaError(`cumulative[${i}]`);
      const where = `cumulative[${i}]`;
      return { rank: num(point, "rank", where), value: num(point, "value", where) };
    }),
    total_shift: num(v, "total_shift", "report"),
    ref_size: num(v, "ref_size", "report"),
    comp_size: num(v, "comp_size", "report"),
  };
}

export function asWordCloudGraph(v: unknown): WordCloudGraph {
  if (!isRecord(v)) throw new SchemaError("graph");
  return {
    nodes: arr(v, "nodes", "graph").map((node, i) => {
      if (!isRecord(node)) throw new SchemaError(`nodes[${i}]`);
      const where = `nodes[${i}]`;
      return {
        corpus_id: str(node, "corpus_id", where),
        label: str(node, "label", where),
        top_words: arr(node, "top_words", where).map((word, j) => {
          if (!isRecord(word)) throw new SchemaError(`${where}.top_words[${j}]`);
          const ww = `${where}.top_words[${j}]`;
          return {
            term: str(word, "term", ww),
            polarity: oneOf(word, "polarity", POLARITIES, ww),
            aggregate_score: num(word, "aggregate_score", ww),
            count: num(word, "count", ww),
          };
        }),
      };
    }),
    edges: arr(v, "edges", "graph").map((edge, i) => {
      if (!isRecord(edge)) throw new SchemaError(`edges[${i}]`);
      const where = `edges[${i}]`;
      const terms = arr(edge, "shared_terms", where).map((t, j) => {
        if (typeof t !== "string") throw new SchemaError(`${where}.shared_terms[${j}]`);
        return t;
      });
      return {
        corpus_a: str(edge, "corpus_a", where),
        corpus_b: str(edge, "corpus_b", where),
        shared_terms: terms,
      };
    }),
  };
}

export function asTimeline(v: unknown): Timeline {
  if (!isRecord(v)) throw new SchemaError("timeline");
  return {
    points: arr(v, "points", "timeline").map((point, i) => {
      if (!isRecord(point)) throw new SchemaError(`points[${i}]`);
      const where = `points[${i}]`;
      return {
        corpus_id: str(point, "corpus_id", where),
        order_key: num(point, "order_key", where),
        sentiment: num(point, "sentiment", where),
        polarity: oneOf(point, "polarity", POLARITIES, where),
      };
    }),
  };
}
