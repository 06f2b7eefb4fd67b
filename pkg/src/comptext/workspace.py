"""Workspace loading: all corpora under one directory, analyzed once.

A workspace is a directory with one subdirectory per corpus (each holding a
``corpus.json`` manifest). Loading tokenizes every corpus with the lexicon's
multi-word phrases, applies the optional stopword list, and keeps both the
raw and the sentiment-filtered distribution per corpus. Stores are immutable
after construction and safe to share across threads.

``comptext ingest`` writes an index file (``comptext-index.json``) into the
workspace root; when present it fixes the corpus directory list, otherwise
the directory is scanned.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

from .errors import (
    CorpusNotFoundError,
    DuplicateCorpusError,
    EmptyWorkspaceError,
    ManifestError,
    UnknownCorpusError,
)
from .ingest import (
    Corpus,
    TokenDistribution,
    build_distribution,
    corpus_tokens,
    load_corpus,
    load_stopwords,
)
from .overview import AnnotatedCorpus
from .sentiment import AnnotatedDistribution, SentimentLexicon, annotate, load_lexicon

INDEX_FILE = "comptext-index.json"


@dataclass(frozen=True)
class WorkspaceCorpus:
    """One corpus with both its raw and sentiment-filtered distribution."""

    corpus: Corpus
    raw: TokenDistribution
    annotated: AnnotatedDistribution

    @property
    def id(self) -> str:
        return self.corpus.id

    @property
    def label(self) -> str:
        return self.corpus.label

    @property
    def order_key(self) -> int:
        return self.corpus.order_key

    def distribution(self, sentiment_filter: bool = True) -> TokenDistribution:
        return self.annotated.base if sentiment_filter else self.raw

    def as_annotated_corpus(self) -> AnnotatedCorpus:
        return AnnotatedCorpus(
            corpus_id=self.id,
            label=self.label,
            order_key=self.order_key,
            annotated=self.annotated,
        )


def discover_corpus_dirs(workspace_dir: Path | str) -> list[Path]:
    """Corpus directories under a workspace, from the index if one exists."""
    workspace_dir = Path(workspace_dir)
    if not workspace_dir.is_dir():
        raise CorpusNotFoundError(workspace_dir)
    index_path = workspace_dir / INDEX_FILE
    if index_path.is_file():
        index = _read_index(index_path)
        dirs = [workspace_dir / entry["dir"] for entry in index["corpora"]]
        for d in dirs:
            if not (d / "corpus.json").is_file():
                raise CorpusNotFoundError(d / "corpus.json")
        return dirs
    return sorted(p.parent for p in workspace_dir.glob("*/corpus.json"))


def _read_index(index_path: Path) -> dict:
    try:
        index = json.loads(index_path.read_text(encoding="utf-8"))
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ManifestError(index_path, f"invalid JSON ({exc})") from exc
    if not isinstance(index, dict) or not isinstance(index.get("corpora"), list):
        raise ManifestError(index_path, "expected an object with a 'corpora' list")
    return index


def write_index(workspace_dir: Path | str, corpora: list[tuple[Path, Corpus, int]]) -> Path:
    """Persist the ingestion result: directory, metadata, raw token total."""
    workspace_dir = Path(workspace_dir)
    entries = [
        {
            "id": corpus.id,
            "label": corpus.label,
            "order_key": corpus.order_key,
            "dir": str(corpus_dir.relative_to(workspace_dir)),
            "documents": len(corpus.documents),
            "token_total": token_total,
        }
        for corpus_dir, corpus, token_total in corpora
    ]
    entries.sort(key=lambda e: e["id"])
    index_path = workspace_dir / INDEX_FILE
    index_path.write_text(
        json.dumps({"version": 1, "corpora": entries}, indent=2, sort_keys=True) + "\n",
        encoding="utf-8",
    )
    return index_path


@dataclass(frozen=True)
class WorkspaceStore:
    """All corpora of a workspace, analyzed against one lexicon."""

    corpora: Mapping[str, WorkspaceCorpus]
    lexicon: SentimentLexicon
    loaded_at: float

    @classmethod
    def load(
        cls,
        workspace_dir: Path | str,
        lexicon_path: Path | str,
        stopwords_path: Path | str | None = None,
    ) -> "WorkspaceStore":
        workspace_dir = Path(workspace_dir)
        lexicon = load_lexicon(lexicon_path)
        stopwords = load_stopwords(stopwords_path) if stopwords_path else frozenset()
        phrases = lexicon.phrases

        corpora: dict[str, WorkspaceCorpus] = {}
        for corpus_dir in discover_corpus_dirs(workspace_dir):
            corpus = load_corpus(corpus_dir)
            if corpus.id in corpora:
                raise DuplicateCorpusError(corpus.id)
            corpus_lexicon = lexicon
            overrides_file = _annotation_file(corpus_dir)
            if overrides_file is not None:
                corpus_lexicon = lexicon.with_overrides(load_lexicon(overrides_file))
            raw = build_distribution(corpus_tokens(corpus, phrases), stopwords)
            corpora[corpus.id] = WorkspaceCorpus(
                corpus=corpus, raw=raw, annotated=annotate(raw, corpus_lexicon)
            )
        if not corpora:
            raise EmptyWorkspaceError(workspace_dir)
        return cls(corpora=corpora, lexicon=lexicon, loaded_at=time.time())

    def get(self, corpus_id: str) -> WorkspaceCorpus:
        try:
            return self.corpora[corpus_id]
        except KeyError:
            raise UnknownCorpusError(corpus_id) from None

    def by_order_key(self) -> list[WorkspaceCorpus]:
        return sorted(self.corpora.values(), key=lambda c: (c.order_key, c.id))

    def annotated_corpora(self) -> list[AnnotatedCorpus]:
        return [c.as_annotated_corpus() for c in self.by_order_key()]


def _annotation_file(corpus_dir: Path) -> Path | None:
    """Per-corpus sentiment override file named by the manifest, if any."""
    manifest = json.loads((corpus_dir / "corpus.json").read_text(encoding="utf-8"))
    name = manifest.get("annotations")
    if name is None:
        return None
    if not isinstance(name, str):
        raise ManifestError(corpus_dir / "corpus.json", "field 'annotations' must be str")
    path = corpus_dir / name
    if not path.is_file():
        raise CorpusNotFoundError(path)
    return path
