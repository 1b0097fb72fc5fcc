"""Command-line front door: summarize, score, precompute, serve.

Exit codes: 0 on success, 1 on input errors (bad files, bad flags), 2 on
unexpected internal failures.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .errors import EmbFairError
from .group import group_score_table
from .individual import individual_score_table
from .pipeline import (
    load_attributes,
    load_embeddings,
    load_graph,
    load_manifest,
    precompute,
)
from .summary import summarize

__all__ = ["main", "entrypoint"]

ENV_ARTIFACTS = "EMBFAIR_ARTIFACTS"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; the contract wants 1
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="embfair", description=__doc__)
    parser.add_argument("--version", action="version", version=f"embfair {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("summarize", help="print a statistical summary of a graph")
    p.add_argument("graph", help="edge-list file")
    p.add_argument("--bins", type=int, default=20, help="degree histogram bin count")
    p.add_argument("--format", choices=("json", "table"), default="table")

    p = sub.add_parser("score", help="compute fairness scores for one configuration")
    p.add_argument("graph", help="edge-list file")
    p.add_argument("embeddings", help="embedding file")
    p.add_argument("--notion", choices=("individual", "group"), required=True)
    p.add_argument("--k", type=int, default=1, help="hop count (individual) or top-k (group)")
    p.add_argument("--attr", help="sensitive attribute name (group)")
    p.add_argument("--value", help="attribute value z (group)")
    p.add_argument("--attrs-file", help="attribute CSV (group)")
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("precompute", help="build the JSON artifact for a dataset manifest")
    p.add_argument("manifest", help="manifest JSON file")
    p.add_argument("--out-dir", default=".", help="artifact output directory")

    p = sub.add_parser("serve", help="serve precomputed artifacts over HTTP")
    p.add_argument(
        "--artifacts",
        default=os.environ.get(ENV_ARTIFACTS, "."),
        help=f"artifact directory (default: ${ENV_ARTIFACTS} or '.')",
    )
    p.add_argument("--listen", default="127.0.0.1:8000", help="host:port to bind")
    p.add_argument("--static", default=None, help="static UI directory to serve at /")
    return parser


def _cmd_summarize(args) -> int:
    g, _ = load_graph(args.graph)
    report = summarize(g, bin_count=args.bins)
    if args.format == "json":
        print(json.dumps(report.to_dict()))
        return 0
    print(f"nodes                  {report.n}")
    print(f"edges                  {report.m}")
    print(f"density                {report.density:.6g}")
    print(f"average degree         {report.average_degree:.6g}")
    print(f"clustering coefficient {report.clustering_coefficient:.6g}")
    print(f"triangles              {report.triangle_count}")
    print(f"connected components   {report.component_count}")
    print("degree distribution:")
    for lo, hi, count in report.degree_histogram:
        print(f"  [{lo:g}, {hi:g}] {count}")
    return 0


def _cmd_score(args) -> int:
    g, _ = load_graph(args.graph)
    y = load_embeddings(args.embeddings, g)
    if args.notion == "individual":
        table = individual_score_table(g, y, args.k)
        if args.format == "json":
            print(json.dumps({
                "notion": "individual",
                "k": args.k,
                "rows": [
                    {"id": g.node_ids[u], "raw": float(table.raw[u]),
                     "normalized": float(table.normalized[u])}
                    for u in range(g.n)
                ],
            }))
        else:
            print("id,raw,normalized")
            for u in range(g.n):
                print(f"{g.node_ids[u]},{table.raw[u]:.10g},{table.normalized[u]:.10g}")
        return 0

    if not args.attrs_file or not args.value:
        raise _UsageError("group notion requires --attrs-file and --value")
    attrs, _ = load_attributes(args.attrs_file, g, name=args.attr)
    table = group_score_table(g, y, attrs, args.k, args.value)
    if args.format == "json":
        print(json.dumps({
            "notion": "group",
            "k": args.k,
            "attribute": attrs.name,
            "value": table.value,
            "rows": [
                {"id": g.node_ids[u], "score": float(table.scores[u])} for u in range(g.n)
            ],
            "attribute_bias": table.bias_z,
            "network_bias": table.network_bias,
        }))
    else:
        print("id,score")
        for u in range(g.n):
            print(f"{g.node_ids[u]},{table.scores[u]:.10g}")
        print(f"# bias({table.value}) = {table.bias_z:.10g}")
        print(f"# network_bias = {table.network_bias:.10g}")
    return 0


def _cmd_precompute(args) -> int:
    manifest = load_manifest(args.manifest)
    _, path = precompute(manifest, args.out_dir)
    print(str(path))
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    host, _, port = args.listen.rpartition(":")
    if not host or not port.isdigit():
        raise _UsageError(f"--listen expects host:port, got {args.listen!r}")
    app = create_app(args.artifacts, static_dir=args.static)
    uvicorn.run(app, host=host, port=int(port), log_level="warning")
    return 0


_COMMANDS = {
    "summarize": _cmd_summarize,
    "score": _cmd_score,
    "precompute": _cmd_precompute,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except EmbFairError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0
    except Exception as exc:  # internal failure
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
