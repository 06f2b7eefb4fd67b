"""Corpus comparison over sentiment-carrying words.

Filter two or more text corpora down to their sentiment-carrying words and
quantify how they differ with proportion, Shannon-entropy, and
Kullback-Leibler-divergence word shifts. An overview word-cloud graph and a
cumulative-sentiment timeline help pick which pair of corpora to drill into.
"""

from .errors import (
    ComptextError,
    CorpusNotFoundError,
    DuplicateCorpusError,
    DuplicateDocumentError,
    DuplicateOrderKeyError,
    DuplicateTermError,
    EmptyDistributionError,
    EmptyWorkspaceError,
    LexiconError,
    LexiconParseError,
    ManifestError,
    NoCommonSupportError,
    ScoreRangeError,
    UnknownCorpusError,
)
from .ingest import (
    Corpus,
    Document,
    TokenDistribution,
    build_distribution,
    corpus_tokens,
    load_corpus,
    load_stopwords,
    tokenize,
)
from .overview import (
    AnnotatedCorpus,
    NodeRanking,
    TimelinePoint,
    TopWord,
    WordCloudEdge,
    WordCloudGraph,
    WordCloudNode,
    build_timeline,
    build_wordcloud,
)
from .sentiment import (
    AnnotatedDistribution,
    Polarity,
    SentimentLexicon,
    SentimentTag,
    aggregate_sentiment,
    annotate,
    corpus_sentiment_total,
    load_lexicon,
)
from .shifts import (
    Direction,
    Measure,
    ShiftItem,
    ShiftReport,
    build_report,
    divergence_shift_items,
    entropy_difference,
    entropy_shift_items,
    kl_divergence_common,
    proportion_shift_items,
    shannon_entropy,
)
from .workspace import WorkspaceCorpus, WorkspaceStore

__version__ = "0.1.0"

__all__ = [
    "AnnotatedCorpus",
    "AnnotatedDistribution",
    "ComptextError",
    "Corpus",
    "CorpusNotFoundError",
    "Direction",
    "Document",
    "DuplicateCorpusError",
    "DuplicateDocumentError",
    "DuplicateOrderKeyError",
    "DuplicateTermError",
    "EmptyDistributionError",
    "EmptyWorkspaceError",
    "LexiconError",
    "LexiconParseError",
    "ManifestError",
    "Measure",
    "NoCommonSupportError",
    "NodeRanking",
    "Polarity",
    "ScoreRangeError",
    "SentimentLexicon",
    "SentimentTag",
    "ShiftItem",
    "ShiftReport",
    "TimelinePoint",
    "TokenDistribution",
    "TopWord",
    "UnknownCorpusError",
    "WordCloudEdge",
    "WordCloudGraph",
    "WordCloudNode",
    "WorkspaceCorpus",
    "WorkspaceStore",
    "aggregate_sentiment",
    "annotate",
    "build_distribution",
    "build_report",
    "build_timeline",
    "build_wordcloud",
    "corpus_sentiment_total",
    "corpus_tokens",
    "divergence_shift_items",
    "entropy_difference",
    "entropy_shift_items",
    "kl_divergence_common",
    "load_corpus",
    "load_lexicon",
    "load_stopwords",
    "proportion_shift_items",
    "shannon_entropy",
    "tokenize",
    "__version__",
]
