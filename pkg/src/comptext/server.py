"""Read-only HTTP service over a loaded workspace.

Endpoints (all GET, JSON):

* ``/api/corpora``   - corpus summaries, ascending by order key
* ``/api/wordcloud`` - overview graph; query: ``m``, ``ranking``
* ``/api/shift``     - shift report; query: ``ref``, ``comp``, ``measure``,
  ``k``, ``filter``
* ``/api/timeline``  - cumulative-sentiment timeline

The workspace is loaded once at startup and never mutated, so responses are
memoizable and concurrent requests always see consistent data. When a built
UI directory is supplied its static assets are served from ``/``.
"""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path

from fastapi import FastAPI, HTTPException, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .errors import EmptyDistributionError, NoCommonSupportError, UnknownCorpusError
from .overview import NodeRanking, build_timeline, build_wordcloud
from .schemas import (
    CorpusSummary,
    ShiftReportOut,
    TimelineOut,
    WordCloudGraphOut,
)
from .shifts import Measure, build_report
from .workspace import WorkspaceStore


def create_app(store: WorkspaceStore, ui_dir: Path | str | None = None) -> FastAPI:
    """Build the API app for one immutable workspace store."""
    # Fail at startup, not per request: a workspace whose order keys collide
    # cannot serve a timeline.
    build_timeline(store.annotated_corpora())

    app = FastAPI(title="comptext", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def _bad_query(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    @lru_cache(maxsize=None)
    def shift_payload(
        ref: str, comp: str, measure: Measure, k: int, sentiment_filter: bool
    ) -> ShiftReportOut:
        ref_corpus = store.get(ref)
        comp_corpus = store.get(comp)
        ref_dist = ref_corpus.distribution(sentiment_filter)
        comp_dist = comp_corpus.distribution(sentiment_filter)
        for corpus, dist in ((ref_corpus, ref_dist), (comp_corpus, comp_dist)):
            if dist.total == 0:
                raise EmptyDistributionError(
                    f"corpus '{corpus.id}' has no "
                    + ("sentiment-carrying " if sentiment_filter else "")
                    + "tokens"
                )
        report = build_report(
            measure, ref_dist, comp_dist, k=k, ref_id=ref, comp_id=comp
        )
        return ShiftReportOut.from_report(report)

    @app.get("/api/corpora", response_model=list[CorpusSummary])
    def corpora() -> list[CorpusSummary]:
        return [CorpusSummary.from_workspace_corpus(c) for c in store.by_order_key()]

    @app.get("/api/wordcloud", response_model=WordCloudGraphOut)
    def wordcloud(m: int = 10, ranking: str = "frequency") -> WordCloudGraphOut:
        if m < 1:
            raise HTTPException(status_code=400, detail=f"m must be >= 1, got {m}")
        try:
            node_ranking = NodeRanking(ranking)
        except ValueError:
            raise HTTPException(
                status_code=400, detail=f"unknown ranking '{ranking}'"
            ) from None
        graph = build_wordcloud(store.annotated_corpora(), m=m, ranking=node_ranking)
        return WordCloudGraphOut.from_graph(graph)

    @app.get("/api/shift", response_model=ShiftReportOut)
    def shift(
        ref: str,
        comp: str,
        measure: str = Query(...),
        k: int = 30,
        filter: bool = True,
    ) -> ShiftReportOut:
        try:
            parsed_measure = Measure(measure)
        except ValueError:
            raise HTTPException(
                status_code=400, detail=f"unknown measure '{measure}'"
            ) from None
        if k < 1:
            raise HTTPException(status_code=400, detail=f"k must be >= 1, got {k}")
        try:
            return shift_payload(ref, comp, parsed_measure, k, filter)
        except UnknownCorpusError as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from None
        except (NoCommonSupportError, EmptyDistributionError) as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from None

    @app.get("/api/timeline", response_model=TimelineOut)
    def timeline() -> TimelineOut:
        return TimelineOut.from_points(build_timeline(store.annotated_corpora()))

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
