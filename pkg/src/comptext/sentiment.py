"""Sentiment tagging of token distributions from a lexicon file.

Lexicon format: UTF-8, one ``term<TAB>score`` entry per line, scores in
[-1, +1] excluding 0 (a zero score would mean "not sentiment-carrying",
which is expressed by leaving the term out). Multi-word terms are
space-separated. ``#`` starts a comment line; the optional headers
``# name: ...`` and ``# version: ...`` fill the lexicon metadata.

The same file format serves as a per-corpus annotation import: scores from
an override file take precedence over the base lexicon, so externally
produced per-word sentiment can replace the shipped lexicon term by term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Mapping

from .errors import (
    CorpusNotFoundError,
    DuplicateTermError,
    LexiconParseError,
    ScoreRangeError,
)
from .ingest import TokenDistribution


class Polarity(str, Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"


@dataclass(frozen=True)
class SentimentLexicon:
    """Terms mapped to signed scores in [-1, +1], never exactly 0."""

    entries: Mapping[str, float]
    name: str = ""
    version: str = ""

    @property
    def phrases(self) -> frozenset[str]:
        """Multi-word entries; these drive phrase merging in the tokenizer."""
        return frozenset(t for t in self.entries if " " in t)

    def with_overrides(self, overrides: "SentimentLexicon") -> "SentimentLexicon":
        """New lexicon where override scores win over base scores."""
        merged = dict(self.entries)
        merged.update(overrides.entries)
        return SentimentLexicon(entries=merged, name=self.name, version=self.version)

    def negated(self) -> "SentimentLexicon":
        return SentimentLexicon(
            entries={t: -s for t, s in self.entries.items()},
            name=self.name,
            version=self.version,
        )


@dataclass(frozen=True)
class SentimentTag:
    term: str
    score: float

    @property
    def polarity(self) -> Polarity:
        return Polarity.POSITIVE if self.score > 0 else Polarity.NEGATIVE


@dataclass(frozen=True)
class AnnotatedDistribution:
    """A distribution restricted to lexicon terms, plus their tags.

    ``excluded_total`` counts the tokens dropped by the restriction, so
    ``base.total + excluded_total`` always equals the original total.
    """

    base: TokenDistribution
    tags: Mapping[str, SentimentTag]
    excluded_total: int


def load_lexicon(path: Path | str) -> SentimentLexicon:
    """Parse a lexicon file, rejecting malformed lines and duplicates."""
    path = Path(path)
    if not path.is_file():
        raise CorpusNotFoundError(path)
    entries: dict[str, float] = {}
    name = path.stem
    version = ""
    for line_no, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            header = stripped.lstrip("#").strip()
            if header.startswith("name:"):
                name = header[len("name:") :].strip()
            elif header.startswith("version:"):
                version = header[len("version:") :].strip()
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise LexiconParseError(path, line_no, "expected 'term<TAB>score'")
        term = parts[0].strip().lower()
        if not term:
            raise LexiconParseError(path, line_no, "empty term")
        try:
            score = float(parts[1])
        except ValueError:
            raise LexiconParseError(path, line_no, f"bad score {parts[1]!r}") from None
        if not math.isfinite(score) or not -1.0 <= score <= 1.0 or score == 0.0:
            raise ScoreRangeError(path, line_no, term, score)
        if term in entries:
            raise DuplicateTermError(path, line_no, term)
        entries[term] = score
    return SentimentLexicon(entries=entries, name=name, version=version)


def annotate(dist: TokenDistribution, lexicon: SentimentLexicon) -> AnnotatedDistribution:
    """Keep only sentiment-carrying terms, preserving their counts."""
    kept: dict[str, int] = {}
    tags: dict[str, SentimentTag] = {}
    for term, count in dist.counts.items():
        score = lexicon.entries.get(term)
        if score is not None:
            kept[term] = count
            tags[term] = SentimentTag(term=term, score=score)
    base = TokenDistribution(counts=kept, total=sum(kept.values()))
    return AnnotatedDistribution(
        base=base, tags=tags, excluded_total=dist.total - base.total
    )


def aggregate_sentiment(ann: AnnotatedDistribution) -> dict[str, float]:
    """Per-term score x count, the alternate ranking for the overview graph."""
    return {
        term: ann.tags[term].score * count for term, count in ann.base.counts.items()
    }


def corpus_sentiment_total(ann: AnnotatedDistribution) -> float:
    """Mean sentiment per sentiment-carrying token, in [-1, +1].

    Dividing by the sentiment token count (not the raw total) keeps the
    value comparable across corpora of different lengths.
    """
    weighted = math.fsum(
        ann.tags[term].score * count for term, count in ann.base.counts.items()
    )
    return weighted / max(1, ann.base.total)
