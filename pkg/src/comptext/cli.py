"""Batch command line: ingest a workspace, emit reports, or run the server.

Every analysis command is a thin client of the library: it loads a
:class:`~comptext.workspace.WorkspaceStore`, calls the corresponding library
operation, and writes the same JSON payload the HTTP API serves. Identical
inputs produce byte-identical output files.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .errors import ComptextError, EmptyDistributionError, EmptyWorkspaceError
from .ingest import build_distribution, corpus_tokens, load_corpus
from .overview import build_timeline, build_wordcloud
from .schemas import ShiftReportOut, TimelineOut, WordCloudGraphOut, to_json_text
from .shifts import build_report
from .workspace import WorkspaceStore, write_index

WORKSPACE_ENV = "COMPTEXT_WORKSPACE"


def _add_workspace_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--workspace",
        type=Path,
        default=None,
        help=f"workspace directory (default: ${WORKSPACE_ENV})",
    )


def _add_store_args(parser: argparse.ArgumentParser) -> None:
    _add_workspace_arg(parser)
    parser.add_argument("--lexicon", type=Path, required=True, help="sentiment lexicon file")
    parser.add_argument("--stopwords", type=Path, default=None, help="stopword file, one term per line")


def _resolve_workspace(args: argparse.Namespace) -> Path:
    if args.workspace is not None:
        return args.workspace
    env = os.environ.get(WORKSPACE_ENV)
    if env:
        return Path(env)
    raise ComptextError(f"no workspace given: pass --workspace or set ${WORKSPACE_ENV}")


def _load_store(args: argparse.Namespace) -> WorkspaceStore:
    return WorkspaceStore.load(_resolve_workspace(args), args.lexicon, args.stopwords)


def _write_out(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def cmd_ingest(args: argparse.Namespace) -> int:
    workspace = _resolve_workspace(args)
    if not workspace.is_dir():
        raise ComptextError(f"workspace directory not found: {workspace}")
    manifest_paths = sorted(workspace.glob("*/corpus.json"))
    if not manifest_paths:
        raise EmptyWorkspaceError(workspace)

    loaded = []
    for manifest_path in manifest_paths:
        corpus = load_corpus(manifest_path.parent)
        total = build_distribution(corpus_tokens(corpus)).total
        loaded.append((manifest_path.parent, corpus, total))
    index_path = write_index(workspace, loaded)

    for _, corpus, total in sorted(loaded, key=lambda e: (e[1].order_key, e[1].id)):
        print(
            f"corpus {corpus.id} '{corpus.label}' order_key={corpus.order_key} "
            f"documents={len(corpus.documents)} tokens={total}"
        )
    print(f"ingested {len(loaded)} corpora; index written to {index_path}")
    return 0


def cmd_shift(args: argparse.Namespace) -> int:
    if args.ref == args.comp:
        raise ComptextError(
            f"--ref and --comp must name different corpora (both '{args.ref}')"
        )
    store = _load_store(args)
    sentiment_filter = not args.no_sentiment_filter
    ref_corpus = store.get(args.ref)
    comp_corpus = store.get(args.comp)
    for corpus in (ref_corpus, comp_corpus):
        if corpus.distribution(sentiment_filter).total == 0:
            raise EmptyDistributionError(
                f"corpus '{corpus.id}' has no "
                + ("sentiment-carrying " if sentiment_filter else "")
                + "tokens"
            )
    report = build_report(
        args.measure,
        ref_corpus.distribution(sentiment_filter),
        comp_corpus.distribution(sentiment_filter),
        k=args.top_k,
        ref_id=args.ref,
        comp_id=args.comp,
    )
    _write_out(args.out, to_json_text(ShiftReportOut.from_report(report)))
    print(f"wrote {args.measure} shift report ({args.ref} vs {args.comp}) to {args.out}")
    return 0


def cmd_wordcloud(args: argparse.Namespace) -> int:
    store = _load_store(args)
    graph = build_wordcloud(
        store.annotated_corpora(), m=args.words_per_node, ranking=args.ranking
    )
    _write_out(args.out, to_json_text(WordCloudGraphOut.from_graph(graph)))
    print(f"wrote word-cloud graph ({len(graph.nodes)} nodes, {len(graph.edges)} edges) to {args.out}")
    return 0


def cmd_timeline(args: argparse.Namespace) -> int:
    store = _load_store(args)
    points = build_timeline(store.annotated_corpora())
    _write_out(args.out, to_json_text(TimelineOut.from_points(points)))
    print(f"wrote timeline ({len(points)} points) to {args.out}")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .server import create_app

    store = _load_store(args)
    app = create_app(store, ui_dir=args.ui_dir)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="comptext",
        description="Compare text corpora on their sentiment-carrying words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="validate a workspace and write its index")
    _add_workspace_arg(p_ingest)
    p_ingest.set_defaults(func=cmd_ingest)

    p_shift = sub.add_parser("shift", help="write a word shift report for a corpus pair")
    _add_store_args(p_shift)
    p_shift.add_argument(
        "--measure",
        required=True,
        choices=["proportion", "entropy", "divergence"],
    )
    p_shift.add_argument("--ref", required=True, help="reference corpus id")
    p_shift.add_argument("--comp", required=True, help="comparison corpus id")
    p_shift.add_argument("--top-k", type=int, default=30, help="words kept in the report")
    p_shift.add_argument(
        "--no-sentiment-filter",
        action="store_true",
        help="compare raw distributions instead of sentiment-carrying words",
    )
    p_shift.add_argument("--out", type=Path, required=True, help="output JSON file")
    p_shift.set_defaults(func=cmd_shift)

    p_cloud = sub.add_parser("wordcloud", help="write the overview word-cloud graph")
    _add_store_args(p_cloud)
    p_cloud.add_argument("--words-per-node", type=int, default=10)
    p_cloud.add_argument("--ranking", choices=["frequency", "aggregate"], default="frequency")
    p_cloud.add_argument("--out", type=Path, required=True, help="output JSON file")
    p_cloud.set_defaults(func=cmd_wordcloud)

    p_timeline = sub.add_parser("timeline", help="write the cumulative-sentiment timeline")
    _add_store_args(p_timeline)
    p_timeline.add_argument("--out", type=Path, required=True, help="output JSON file")
    p_timeline.set_defaults(func=cmd_timeline)

    p_serve = sub.add_parser("serve", help="serve the HTTP API (and UI, if built)")
    _add_store_args(p_serve)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument(
        "--ui-dir", type=Path, default=None, help="directory of built UI assets to serve at /"
    )
    p_serve.set_defaults(func=cmd_serve)
    return parser


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ComptextError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
