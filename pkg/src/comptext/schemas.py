"""Response models: the JSON wire formats served by the HTTP API and written
by the CLI. Field names are frozen; see docs/SCHEMAS.md."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel

from .overview import TimelinePoint, WordCloudGraph
from .shifts import ShiftReport
from .workspace import WorkspaceCorpus

PolarityName = Literal["positive", "negative", "neutral"]
DirectionName = Literal["toward_comparison", "toward_reference"]
MeasureName = Literal["proportion", "entropy", "divergence"]


class CorpusSummary(BaseModel):
    id: str
    label: str
    order_key: int
    token_total: int
    sentiment_token_total: int

    @classmethod
    def from_workspace_corpus(cls, corpus: WorkspaceCorpus) -> "CorpusSummary":
        return cls(
            id=corpus.id,
            label=corpus.label,
            order_key=corpus.order_key,
            token_total=corpus.raw.total,
            sentiment_token_total=corpus.annotated.base.total,
        )


class ShiftItemOut(BaseModel):
    term: str
    contribution: float
    p_ref: float
    p_comp: float
    direction: DirectionName


class CumulativePointOut(BaseModel):
    rank: int
    value: float


class ShiftReportOut(BaseModel):
    measure: MeasureName
    ref_id: str
    comp_id: str
    k: int
    items: list[ShiftItemOut]
    cumulative: list[CumulativePointOut]
    total_shift: float
    ref_size: int
    comp_size: int

    @classmethod
    def from_report(cls, report: ShiftReport) -> "ShiftReportOut":
        return cls(
            measure=report.measure.value,
            ref_id=report.ref_id,
            comp_id=report.comp_id,
            k=report.k,
            items=[
                ShiftItemOut(
                    term=item.term,
                    contribution=item.contribution,
                    p_ref=item.p_ref,
                    p_comp=item.p_comp,
                    direction=item.direction.value,
                )
                for item in report.items
            ],
            cumulative=[
                CumulativePointOut(rank=rank, value=value)
                for rank, value in report.cumulative
            ],
            total_shift=report.total_shift,
            ref_size=report.ref_size,
            comp_size=report.comp_size,
        )


class TopWordOut(BaseModel):
    term: str
    polarity: PolarityName
    aggregate_score: float
    count: int


class WordCloudNodeOut(BaseModel):
    corpus_id: str
    label: str
    top_words: list[TopWordOut]


class WordCloudEdgeOut(BaseModel):
    corpus_a: str
    corpus_b: str
    shared_terms: list[str]


class WordCloudGraphOut(BaseModel):
    nodes: list[WordCloudNodeOut]
    edges: list[WordCloudEdgeOut]

    @classmethod
    def from_graph(cls, graph: WordCloudGraph) -> "WordCloudGraphOut":
        return cls(
            nodes=[
                WordCloudNodeOut(
                    corpus_id=node.corpus_id,
                    label=node.label,
                    top_words=[
                        TopWordOut(
                            term=w.term,
                            polarity=w.polarity.value,
                            aggregate_score=w.aggregate_score,
                            count=w.count,
                        )
                        for w in node.top_words
                    ],
                )
                for node in graph.nodes
            ],
            edges=[
                WordCloudEdgeOut(
                    corpus_a=edge.corpus_a,
                    corpus_b=edge.corpus_b,
                    shared_terms=list(edge.shared_terms),
                )
                for edge in graph.edges
            ],
        )


class TimelinePointOut(BaseModel):
    corpus_id: str
    order_key: int
    sentiment: float
    polarity: PolarityName


class TimelineOut(BaseModel):
    points: list[TimelinePointOut]

    @classmethod
    def from_points(cls, points: list[TimelinePoint]) -> "TimelineOut":
        return cls(
            points=[
                TimelinePointOut(
                    corpus_id=p.corpus_id,
                    order_key=p.order_key,
                    sentiment=p.sentiment,
                    polarity=p.polarity.value,
                )
                for p in points
            ]
        )


def to_json_text(model: BaseModel) -> str:
    """Canonical JSON for file output: 2-space indent, trailing newline.

    Uses the standard library encoder so floats keep their shortest
    round-trip representation; identical inputs yield identical bytes.
    """
    import json

    return json.dumps(model.model_dump(mode="json"), indent=2, ensure_ascii=False) + "\n"
