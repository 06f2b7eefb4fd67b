"""Multi-corpus overview structures: word-cloud graph and sentiment timeline.

The word-cloud graph has one node per corpus, each carrying its top
sentiment-carrying words, and an edge wherever two nodes' top-word sets
intersect. It is the view used to pick which pair of corpora to drill into
with shift reports. Layout is left to the client; only the structure is
computed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import DuplicateCorpusError, DuplicateOrderKeyError, EmptyWorkspaceError
from .sentiment import AnnotatedDistribution, Polarity, aggregate_sentiment, corpus_sentiment_total

DEFAULT_WORDS_PER_NODE = 10


class NodeRanking(str, Enum):
    FREQUENCY = "frequency"
    AGGREGATE = "aggregate"


@dataclass(frozen=True)
class AnnotatedCorpus:
    """A corpus's sentiment-filtered distribution plus display metadata."""

    corpus_id: str
    label: str
    order_key: int
    annotated: AnnotatedDistribution


@dataclass(frozen=True)
class TopWord:
    term: str
    polarity: Polarity
    aggregate_score: float
    count: int


@dataclass(frozen=True)
class WordCloudNode:
    corpus_id: str
    label: str
    top_words: tuple[TopWord, ...]


@dataclass(frozen=True)
class WordCloudEdge:
    """Unordered corpus pair whose top-word sets intersect; ``corpus_a`` is
    always the lexicographically smaller id."""

    corpus_a: str
    corpus_b: str
    shared_terms: tuple[str, ...]


@dataclass(frozen=True)
class WordCloudGraph:
    nodes: tuple[WordCloudNode, ...]
    edges: tuple[WordCloudEdge, ...]


@dataclass(frozen=True)
class TimelinePoint:
    corpus_id: str
    order_key: int
    sentiment: float

    @property
    def polarity(self) -> Polarity:
        if self.sentiment > 0:
            return Polarity.POSITIVE
        if self.sentiment < 0:
            return Polarity.NEGATIVE
        return Polarity.NEUTRAL


def _check_unique_ids(corpora: Sequence[AnnotatedCorpus]) -> None:
    seen: set[str] = set()
    for corpus in corpora:
        if corpus.corpus_id in seen:
            raise DuplicateCorpusError(corpus.corpus_id)
        seen.add(corpus.corpus_id)


def _top_words(corpus: AnnotatedCorpus, m: int, ranking: NodeRanking) -> tuple[TopWord, ...]:
    aggregates = aggregate_sentiment(corpus.annotated)
    words = [
        TopWord(
            term=term,
            polarity=corpus.annotated.tags[term].polarity,
            aggregate_score=aggregates[term],
            count=count,
        )
        for term, count in corpus.annotated.base.counts.items()
    ]
    if ranking is NodeRanking.FREQUENCY:
        words.sort(key=lambda w: (-w.count, w.term))
    else:
        words.sort(key=lambda w: (-abs(w.aggregate_score), w.term))
    return tuple(words[:m])


def build_wordcloud(
    corpora: Sequence[AnnotatedCorpus],
    m: int = DEFAULT_WORDS_PER_NODE,
    ranking: NodeRanking | str = NodeRanking.FREQUENCY,
) -> WordCloudGraph:
    """Nodes with their top-``m`` sentiment words; edges where tops overlap.

    ``ranking`` picks the top words by raw count (default) or by absolute
    aggregate sentiment (score x count). Corpora sharing no top words stay
    as isolated nodes.
    """
    ranking = NodeRanking(ranking)
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if not corpora:
        raise EmptyWorkspaceError("<no corpora>")
    _check_unique_ids(corpora)

    ordered = sorted(corpora, key=lambda c: c.corpus_id)
    nodes = tuple(
        WordCloudNode(
            corpus_id=c.corpus_id,
            label=c.label,
            top_words=_top_words(c, m, ranking),
        )
        for c in ordered
    )

    edges = []
    for i, node_a in enumerate(nodes):
        terms_a = {w.term for w in node_a.top_words}
        for node_b in nodes[i + 1 :]:
            shared = terms_a & {w.term for w in node_b.top_words}
            if shared:
                edges.append(
                    WordCloudEdge(
                        corpus_a=node_a.corpus_id,
                        corpus_b=node_b.corpus_id,
                        shared_terms=tuple(sorted(shared)),
                    )
                )
    return WordCloudGraph(nodes=nodes, edges=tuple(edges))


def build_timeline(corpora: Sequence[AnnotatedCorpus]) -> list[TimelinePoint]:
    """One cumulative-sentiment point per corpus, ascending by order key."""
    _check_unique_ids(corpora)
    by_key: dict[int, str] = {}
    for corpus in corpora:
        if corpus.order_key in by_key:
            raise DuplicateOrderKeyError(
                corpus.order_key,
                sorted((by_key[corpus.order_key], corpus.corpus_id)),
            )
        by_key[corpus.order_key] = corpus.corpus_id
    points = [
        TimelinePoint(
            corpus_id=corpus.corpus_id,
            order_key=corpus.order_key,
            sentiment=corpus_sentiment_total(corpus.annotated),
        )
        for corpus in corpora
    ]
    points.sort(key=lambda p: p.order_key)
    return points
