// Canned payloads for UI tests, shaped exactly like the server responses.

import { ShiftReport, Timeline, WordCloudGraph } from "../src/types.js";

export const GRAPH: WordCloudGraph = {
  nodes: [
    {
      corpus_id: "alpha",
      label: "President Alpha",
      top_words: [
        { term: "hope", polarity: "positive", aggregate_score: 1.0, count: 2 },
        { term: "crisis", polarity: "negative", aggregate_score: -0.75, count: 1 },
      ],
    },
    {
      corpus_id: "bravo",
      label: "President Bravo",
      top_words: [
        { term: "great", polarity: "positive", aggregate_score: 2.25, count: 3 },
        { term: "crisis", polarity: "negative", aggregate_score: -0.75, count: 1 },
      ],
    },
    {
      corpus_id: "charlie",
      label: "President Charlie",
      top_words: [
        { term: "decline", polarity: "negative", aggregate_score: -1.0, count: 2 },
      ],
    },
  ],
  edges: [{ corpus_a: "alpha", corpus_b: "bravo", shared_terms: ["crisis"] }],
};

export const REPORT: ShiftReport = {
  measure: "proportion",
  ref_id: "alpha",
  comp_id: "bravo",
  k: 2,
  items: [
    {
      term: "great",
      contribution: 0.30357142857142855,
      p_ref: 0.125,
      p_comp: 0.42857142857142855,
      direction: "toward_comparison",
    },
    {
      term: "hope",
      contribution: -0.25,
      p_ref: 0.25,
      p_comp: 0.0,
      direction: "toward_reference",
    },
  ],
  cumulative: [
    { rank: 1, value: 0.30357142857142855 },
    { rank: 2, value: 0.5535714285714286 },
    { rank: 3, value: 0.5714285714285714 },
  ],
  total_shift: 0.5714285714285714,
  ref_size: 8,
  comp_size: 7,
};

export const TIMELINE: Timeline = {
  points: [
    { corpus_id: "alpha", order_key: 1, sentiment: 0.28125, polarity: "positive" },
    { corpus_id: "bravo", order_key: 2, sentiment: 0.0, polarity: "neutral" },
    { corpus_id: "charlie", order_key: 3, sentiment: -0.1875, polarity: "negative" },
  ],
};

export const CORPORA = [
  {
    id: "alpha",
    label: "President Alpha",
    order_key: 1,
    token_total: 12,
    sentiment_token_total: 8,
  },
  {
    id: "bravo",
    label: "President Bravo",
    order_key: 2,
    token_total: 14,
    sentiment_token_total: 7,
  },
  {
    id: "charlie",
    label: "President Charlie",
    order_key: 3,
    token_total: 16,
    sentiment_token_total: 6,
  },
];
