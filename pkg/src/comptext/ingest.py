"""Corpus loading, tokenization, and token frequency distributions.

A corpus lives in its own directory holding a ``corpus.json`` manifest::

    {
      "id": "alpha",
      "label": "President Alpha",
      "order_key": 1,
      "documents": [
        {"id": "alpha-2017", "file": "speech_2017.txt", "source": "..."}
      ]
    }

Document ``file`` paths are UTF-8 plain text, relative to the corpus
directory. An optional ``annotations`` field may name a per-corpus sentiment
override file (see :mod:`comptext.sentiment`).
"""

from __future__ import annotations

import json
import unicodedata
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import AbstractSet, Iterable, Mapping

from .errors import CorpusNotFoundError, DuplicateDocumentError, ManifestError

# Characters kept when they sit between two alphanumerics; every other
# punctuation character acts as a token separator.
_KEEP_INTRA_WORD = "'-"

# Typographic variants normalized to their ASCII keeper before the
# intra-word test.
_CHAR_ALIASES = str.maketrans({"’": "'", "‐": "-", "‑": "-"})


@dataclass(frozen=True)
class Document:
    """One text within a corpus. ``text`` may be empty."""

    id: str
    text: str
    source: str | None = None


@dataclass(frozen=True)
class Corpus:
    """An ordered collection of documents with a chronological order key."""

    id: str
    label: str
    order_key: int
    documents: tuple[Document, ...]


@dataclass(frozen=True)
class TokenDistribution:
    """Relative-frequency distribution over a vocabulary, raw counts kept.

    ``total`` is always the sum of ``counts``; terms with a zero count are
    never stored, so ``vocabulary`` is exactly the support.
    """

    counts: Mapping[str, int]
    total: int

    @classmethod
    def from_counts(cls, counts: Mapping[str, int]) -> "TokenDistribution":
        cleaned = {}
        for term, count in counts.items():
            if count < 0:
                raise ValueError(f"negative count for term '{term}'")
            if count > 0:
                cleaned[term] = int(count)
        return cls(counts=cleaned, total=sum(cleaned.values()))

    @property
    def vocabulary(self) -> frozenset[str]:
        return frozenset(self.counts)

    def count(self, term: str) -> int:
        return self.counts.get(term, 0)

    def frequency(self, term: str) -> float:
        """Relative frequency of ``term``; 0.0 for absent terms."""
        if self.total == 0:
            return 0.0
        return self.counts.get(term, 0) / self.total


def _normalize(text: str) -> str:
    """Lowercase and replace punctuation with spaces.

    Apostrophes and hyphens survive only between two alphanumerics.
    """
    text = text.lower().translate(_CHAR_ALIASES)
    out = []
    last = len(text) - 1
    for i, ch in enumerate(text):
        if ch in _KEEP_INTRA_WORD:
            intra = i > 0 and i < last and text[i - 1].isalnum() and text[i + 1].isalnum()
            out.append(ch if intra else " ")
        elif unicodedata.category(ch).startswith("P"):
            out.append(" ")
        else:
            out.append(ch)
    return "".join(out)


def tokenize(text: str, phrases: AbstractSet[str] = frozenset()) -> list[str]:
    """Split raw text into terms, merging known multi-word phrases.

    Phrases must be lowercase and space-separated. Merging is greedy
    longest-match, left to right, so with both "united states" and
    "united states of america" known, the longer phrase wins. Tokens
    containing no letter (bare numbers, stray symbols) are dropped.
    """
    words = [
        w
        for w in _normalize(text).split()
        if any(ch.isalpha() for ch in w)
    ]
    usable = {p for p in phrases if " " in p}
    if not usable:
        return words

    max_words = max(p.count(" ") for p in usable) + 1
    tokens: list[str] = []
    i = 0
    n = len(words)
    while i < n:
        for span in range(min(max_words, n - i), 1, -1):
            candidate = " ".join(words[i : i + span])
            if candidate in usable:
                tokens.append(candidate)
                i += span
                break
        else:
            tokens.append(words[i])
            i += 1
    return tokens


def build_distribution(
    tokens: Iterable[str], stopwords: AbstractSet[str] = frozenset()
) -> TokenDistribution:
    """Count tokens into a distribution, excluding stopwords first."""
    counts = Counter(t for t in tokens if t not in stopwords)
    return TokenDistribution(counts=dict(counts), total=sum(counts.values()))


def corpus_tokens(corpus: Corpus, phrases: AbstractSet[str] = frozenset()) -> list[str]:
    """All tokens of a corpus, documents concatenated in manifest order.

    Phrase merging never crosses a document boundary.
    """
    tokens: list[str] = []
    for doc in corpus.documents:
        tokens.extend(tokenize(doc.text, phrases))
    return tokens


def _require(manifest: Mapping, key: str, kind: type, path: Path):
    if key not in manifest:
        raise ManifestError(path, f"missing field '{key}'")
    value = manifest[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ManifestError(path, f"field '{key}' must be {kind.__name__}")
    return value


def load_corpus(path: Path | str) -> Corpus:
    """Load a corpus from its directory (or its ``corpus.json`` directly)."""
    path = Path(path)
    manifest_path = path if path.name == "corpus.json" else path / "corpus.json"
    corpus_dir = manifest_path.parent
    if not manifest_path.is_file():
        raise CorpusNotFoundError(manifest_path)
    try:
        manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ManifestError(manifest_path, f"invalid JSON ({exc})") from exc
    if not isinstance(manifest, dict):
        raise ManifestError(manifest_path, "top level must be an object")

    corpus_id = _require(manifest, "id", str, manifest_path)
    label = _require(manifest, "label", str, manifest_path)
    order_key = _require(manifest, "order_key", int, manifest_path)
    entries = _require(manifest, "documents", list, manifest_path)

    documents = []
    seen: set[str] = set()
    for entry in entries:
        if not isinstance(entry, dict):
            raise ManifestError(manifest_path, "document entries must be objects")
        doc_id = _require(entry, "id", str, manifest_path)
        file_name = _require(entry, "file", str, manifest_path)
        source = entry.get("source")
        if source is not None and not isinstance(source, str):
            raise ManifestError(manifest_path, "field 'source' must be str")
        if doc_id in seen:
            raise DuplicateDocumentError(doc_id, manifest_path)
        seen.add(doc_id)
        doc_path = corpus_dir / file_name
        if not doc_path.is_file():
            raise CorpusNotFoundError(doc_path)
        documents.append(
            Document(id=doc_id, text=doc_path.read_text(encoding="utf-8"), source=source)
        )
    return Corpus(
        id=corpus_id, label=label, order_key=order_key, documents=tuple(documents)
    )


def load_stopwords(path: Path | str) -> frozenset[str]:
    """Read a stopword file: one term per line, UTF-8, blanks ignored."""
    path = Path(path)
    if not path.is_file():
        raise CorpusNotFoundError(path)
    terms = set()
    for line in path.read_text(encoding="utf-8").splitlines():
        term = line.strip().lower()
        if term:
            terms.add(term)
    return frozenset(terms)
