"""Exception types raised by the comptext library.

Every error names the offending entity (file, term, corpus id, ...) so CLI
and HTTP layers can surface precise messages without re-deriving context.
"""

from __future__ import annotations


class ComptextError(Exception):
    """Base class for all comptext errors."""


class CorpusNotFoundError(ComptextError):
    """A corpus manifest or a document file referenced by one is missing."""

    def __init__(self, path) -> None:
        super().__init__(f"missing file: {path}")
        self.path = path


class ManifestError(ComptextError):
    """A corpus manifest is malformed (bad JSON, wrong fields or types)."""

    def __init__(self, path, detail: str) -> None:
        super().__init__(f"malformed manifest {path}: {detail}")
        self.path = path
        self.detail = detail


class DuplicateDocumentError(ComptextError):
    """Two documents in one corpus manifest share an id."""

    def __init__(self, document_id: str, path) -> None:
        super().__init__(f"duplicate document id '{document_id}' in {path}")
        self.document_id = document_id
        self.path = path


class LexiconError(ComptextError):
    """Base class for sentiment lexicon file problems."""


class LexiconParseError(LexiconError):
    """A lexicon line is not `term<TAB>score`."""

    def __init__(self, path, line_no: int, detail: str) -> None:
        super().__init__(f"{path}:{line_no}: {detail}")
        self.path = path
        self.line_no = line_no


class ScoreRangeError(LexiconError):
    """A lexicon score falls outside [-1, +1] or is exactly 0."""

    def __init__(self, path, line_no: int, term: str, score: float) -> None:
        super().__init__(
            f"{path}:{line_no}: score {score!r} for '{term}' outside the "
            "allowed range [-1, +1] excluding 0"
        )
        self.path = path
        self.line_no = line_no
        self.term = term
        self.score = score


class DuplicateTermError(LexiconError):
    """The same term appears twice in one lexicon file."""

    def __init__(self, path, line_no: int, term: str) -> None:
        super().__init__(f"{path}:{line_no}: duplicate term '{term}'")
        self.path = path
        self.line_no = line_no
        self.term = term


class EmptyDistributionError(ComptextError):
    """An operation needing a nonempty distribution got a total of zero."""


class NoCommonSupportError(ComptextError):
    """Two distributions share no vocabulary, so divergence is undefined."""

    def __init__(self, ref_id: str = "reference", comp_id: str = "comparison") -> None:
        super().__init__(f"no common vocabulary between '{ref_id}' and '{comp_id}'")
        self.ref_id = ref_id
        self.comp_id = comp_id


class DuplicateCorpusError(ComptextError):
    """Two corpora in one workspace share an id."""

    def __init__(self, corpus_id: str) -> None:
        super().__init__(f"duplicate corpus id '{corpus_id}'")
        self.corpus_id = corpus_id


class DuplicateOrderKeyError(ComptextError):
    """Two corpora share an order key, so the timeline has no total order."""

    def __init__(self, order_key: int, corpus_ids) -> None:
        ids = ", ".join(f"'{c}'" for c in corpus_ids)
        super().__init__(f"order_key {order_key} shared by corpora {ids}")
        self.order_key = order_key
        self.corpus_ids = tuple(corpus_ids)


class UnknownCorpusError(ComptextError):
    """A corpus id is not present in the workspace."""

    def __init__(self, corpus_id: str) -> None:
        super().__init__(f"unknown corpus id '{corpus_id}'")
        self.corpus_id = corpus_id


class EmptyWorkspaceError(ComptextError):
    """A workspace directory contains no corpus manifests."""

    def __init__(self, path) -> None:
        super().__init__(f"no corpora found under {path}")
        self.path = path
