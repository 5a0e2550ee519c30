"""Command-line entry point: compress, query, evaluate, sweep, info.

Exit codes: 0 success, 1 usage error, 2 I/O or format error, 3 query
precondition error. Diagnostics go to stderr; machine-readable output
(CSV, query verdicts) goes to stdout or the named file.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from ._parallel import thread_count
from .fuzzy import FclParseError, parse_fcl
from .graph import GraphParseError, load_edge_list
from .harness import evaluate_model, reports_to_csv, sweep_k
from .oracle import ModelFormatError, build, load_file, query, query_directed, save_file

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_QUERY = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse defaults to exit code 2
        raise _UsageError(message)


def _parse_k_range(spec: str) -> list[int]:
    """'lo:hi[:step]' inclusive, or a single integer."""
    parts = spec.split(":")
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise _UsageError(f"bad k range {spec!r}") from None
    if len(values) == 1:
        ks = values
    elif len(values) in (2, 3):
        lo, hi = values[0], values[1]
        step = values[2] if len(values) == 3 else 1
        if step < 1 or hi < lo:
            raise _UsageError(f"bad k range {spec!r}")
        ks = list(range(lo, hi + 1, step))
    else:
        raise _UsageError(f"bad k range {spec!r}")
    if any(k < 1 for k in ks):
        raise _UsageError("k values must be >= 1")
    return ks


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="fuzzmap",
        description="Compress graphs into k-dimensional points with per-node "
        "radii and answer adjacency queries definitively or fuzzily.",
        epilog="FUZZMAP_THREADS caps internal parallelism (0 = auto).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compress", help="edge list -> FZG1 model file")
    p.add_argument("--input", required=True, help="edge-list file")
    p.add_argument("--output", required=True, help="model file to write")
    p.add_argument("--k", type=int, required=True, help="embedding dimensions")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--quantize", action=argparse.BooleanOptionalAction, default=True,
                   help="integer radii (default on)")
    p.add_argument("--directed", action="store_true")
    p.add_argument("--fcl", help="FCL file overriding the built-in fuzzy system")

    p = sub.add_parser("query", help="adjacency query against a model")
    p.add_argument("--model", required=True)
    p.add_argument("--u", type=int, required=True, help="external node id")
    p.add_argument("--v", type=int, required=True, help="external node id")

    p = sub.add_parser("evaluate", help="accuracy report for a model vs its graph")
    p.add_argument("--model", required=True)
    p.add_argument("--graph", required=True, help="edge-list file the model was built from")
    p.add_argument("--sample", type=int, default=1_000_000,
                   help="pairs to sample (0 = all pairs)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="CSV path (default stdout)")

    p = sub.add_parser("sweep", help="build + evaluate across a k range")
    p.add_argument("--input", required=True, help="edge-list file")
    p.add_argument("--k", required=True, help="k range lo:hi[:step]")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sample", type=int, default=1_000_000,
                   help="pairs to sample (0 = all pairs)")
    p.add_argument("--quantize", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--directed", action="store_true")
    p.add_argument("--out", help="CSV path (default stdout)")

    p = sub.add_parser("info", help="print model header fields")
    p.add_argument("model")

    return parser


def _write_text(path: Optional[str], text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)


def _cmd_compress(args: argparse.Namespace) -> int:
    if args.k < 1:
        raise _UsageError("--k must be >= 1")
    g = load_edge_list(args.input, directed=args.directed)
    system = None
    fcl_text = None
    if args.fcl:
        with open(args.fcl, "r", encoding="utf-8") as f:
            fcl_text = f.read()
        system = parse_fcl(fcl_text)
    cg = build(g, k=args.k, seed=args.seed, quantize=args.quantize,
               fuzzy=system, fcl_text=fcl_text)
    nbytes = save_file(cg, args.output)
    print(f"n={cg.n} k={cg.k} bytes={nbytes}")
    return EXIT_OK


def _cmd_query(args: argparse.Namespace) -> int:
    cg = load_file(args.model)
    try:
        u = cg.internal_id(args.u)
        v = cg.internal_id(args.v)
        answer = query_directed(cg, u, v) if cg.directed else query(cg, u, v)
    except ValueError as exc:
        print(f"fuzzmap: {exc}", file=sys.stderr)
        return EXIT_QUERY
    if answer.is_definite:
        print("yes" if answer.value == 1.0 else "no")
    else:
        print(f"fuzzy {answer.value:.4f}")
    return EXIT_OK


def _cmd_evaluate(args: argparse.Namespace) -> int:
    cg = load_file(args.model)
    g = load_edge_list(args.graph, directed=cg.directed)
    sample = None if args.sample == 0 else args.sample
    report = evaluate_model(cg, g, sample_size=sample, seed=args.seed)
    _write_text(args.out, reports_to_csv([report]))
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    ks = _parse_k_range(args.k)
    g = load_edge_list(args.input, directed=args.directed)
    sample = None if args.sample == 0 else args.sample
    reports = sweep_k(g, ks, quantize=args.quantize, seed=args.seed, sample_size=sample)
    _write_text(args.out, reports_to_csv(reports))
    return EXIT_OK


def _cmd_info(args: argparse.Namespace) -> int:
    cg = load_file(args.model)
    print("version=1")
    print(f"n={cg.n}")
    print(f"k={cg.k}")
    print(f"directed={'true' if cg.directed else 'false'}")
    print(f"quantized={'true' if cg.radii.quantized else 'false'}")
    print(f"fcl_bytes={len(cg.fcl_text.encode('utf-8'))}")
    print(f"file_bytes={os.path.getsize(args.model)}")
    return EXIT_OK


_COMMANDS = {
    "compress": _cmd_compress,
    "query": _cmd_query,
    "evaluate": _cmd_evaluate,
    "sweep": _cmd_sweep,
    "info": _cmd_info,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv and execute; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command in ("compress", "evaluate", "sweep"):
            thread_count()  # surface a bad FUZZMAP_THREADS as a usage error
            if getattr(args, "sample", 1) < 0:
                raise _UsageError("--sample must be >= 0")
    except _UsageError as exc:
        print(f"fuzzmap: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"fuzzmap: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # argparse -h/--help
        return int(exc.code or 0)

    try:
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"fuzzmap: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphParseError, FclParseError, ModelFormatError, OSError, ValueError) as exc:
        print(f"fuzzmap: {exc}", file=sys.stderr)
        return EXIT_IO


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
