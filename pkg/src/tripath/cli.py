"""Command line front end.

Exit codes: 0 success, 1 input or validation error, 2 unsupported pattern
without a fallback, 3 oracle limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import arclist, oracle
from .api import certify
from .certificate import Certificate
from .digraph import BlockPattern, Coloring, Digraph, PathEmbedding, validate_coloring, validate_embedding
from .errors import LimitExceeded, ParseError, TripathError, UnsupportedPattern
from .forest import final_spanning_inforest, final_spanning_outforest
from .peel import cross_edge_audit, peel

SCHEMA = 1

EXIT_OK, EXIT_INPUT, EXIT_UNSUPPORTED, EXIT_LIMIT = 0, 1, 2, 3

REPORT_FIELDS = {"schema", "source", "pattern", "result", "vertices", "colors", "num_colors",
                 "bound", "validated", "timing_ms", "method", "labels"}


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


def _pattern(text: str) -> BlockPattern:
    try:
        return BlockPattern.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _probability(text: str) -> float:
    p = float(text)
    if not 0.0 <= p <= 1.0:
        raise argparse.ArgumentTypeError("probability must lie in [0, 1]")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tripath", description="Certify three-block oriented paths in digraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p, multiple=False):
        src = p.add_mutually_exclusive_group(required=True)
        if multiple:
            src.add_argument("--input", nargs="+", metavar="FILE", help="arc-list files")
        else:
            src.add_argument("--input", metavar="FILE", help="arc-list file ('-' for stdin)")
        src.add_argument("--gen", choices=["random", "tournament", "tt"], help="generate the digraph")
        p.add_argument("--n", type=int, help="vertices for --gen")
        p.add_argument("--p", type=_probability, default=0.5, help="arc probability for --gen random")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("certify", help="return a path embedding or a bounded coloring")
    p.add_argument("--pattern", type=_pattern, required=True, metavar="K,L,R")
    add_source(p, multiple=True)
    p.add_argument("--json", action="store_true", help="one JSON report per line")
    p.add_argument("--fallback", choices=["oracle"], help="answer unsupported patterns by brute force")
    p.add_argument("--timing", action="store_true", help="include wall time in reports")
    p.add_argument("--jobs", type=int, default=1, help="process input files in parallel")

    p = sub.add_parser("forest", help="final spanning out-forest (or in-forest)")
    add_source(p)
    p.add_argument("--in", dest="inforest", action="store_true", help="build the in-forest")

    p = sub.add_parser("peel", help="layered decomposition by paths of a given length")
    p.add_argument("--length", type=int, required=True)
    add_source(p)

    p = sub.add_parser("oracle", help="exhaustive path search or chromatic number")
    p.add_argument("query", choices=["path", "chi"])
    p.add_argument("--pattern", type=_pattern, metavar="K,L,R")
    add_source(p)
    p.add_argument("--max-vertices", type=int, help="raise the oracle size limit")

    p = sub.add_parser("gen", help="print a generated digraph as an arc list")
    p.add_argument("kind", choices=["random", "tournament", "tt"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=_probability, default=0.5)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("verify", help="re-check a JSON certificate against its digraph")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--report", required=True, metavar="FILE", help="JSON report ('-' for stdin)")
    return parser


def generate(kind: str, n: int | None, p: float, seed: int) -> Digraph:
    if n is None or n < 1:
        raise CliError("--n must be a positive integer")
    if kind == "random":
        return oracle.gen_random(n, p, seed)
    if kind == "tournament":
        return oracle.gen_tournament(n, seed)
    return oracle.gen_transitive_tournament(n)


def load(path: str) -> tuple[Digraph, list[str] | None]:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror}") from None
    try:
        return arclist.parse(text)
    except (ParseError, ValueError) as exc:
        raise CliError(f"{path}: {exc}") from None


def _source(args) -> tuple[Digraph, list[str] | None]:
    if args.gen:
        return generate(args.gen, args.n, args.p, args.seed), None
    return load(args.input)


def report(cert: Certificate, D: Digraph, labels: list[str] | None, source: str,
           timing_ms: float | None) -> dict:
    out = {"schema": SCHEMA, "source": source, "pattern": list(cert.pattern.blocks),
           "result": cert.arm, "validated": cert.check(D), "method": cert.method,
           "timing_ms": timing_ms}
    if cert.is_path:
        out["vertices"] = list(cert.embedding.vertices)
    else:
        out["colors"] = {str(v): c for v, c in enumerate(cert.coloring.color)}
        out["num_colors"] = cert.coloring.num_colors
        out["bound"] = cert.bound
    if labels is not None:
        out["labels"] = labels
    return out


def _certify_one(job) -> tuple[int, str, dict | None]:
    """Worker: returns (exit code, diagnostic, report)."""
    source, pattern, fallback, timing, gen = job
    try:
        if gen is not None:
            D, labels = generate(*gen), None
        else:
            D, labels = load(source)
        start = time.perf_counter()
        cert = certify(D, pattern, fallback=fallback)
        elapsed = round((time.perf_counter() - start) * 1000, 3) if timing else None
    except CliError as exc:
        return exc.code, str(exc), None
    except UnsupportedPattern as exc:
        return EXIT_UNSUPPORTED, f"{source}: {exc} (use --fallback oracle)", None
    except LimitExceeded as exc:
        return EXIT_LIMIT, f"{source}: {exc}", None
    rep = report(cert, D, labels, source, elapsed)
    if not rep["validated"]:
        return EXIT_INPUT, f"{source}: certificate failed validation", None
    return EXIT_OK, "", rep


def _summary(rep: dict) -> str:
    pat = "P({},{},{})".format(*rep["pattern"])
    if rep["result"] == "path":
        body = f"path {' '.join(map(str, rep['vertices']))}"
    else:
        cap = "" if rep["bound"] is None else f" (bound {rep['bound']})"
        body = f"coloring with {rep['num_colors']} colors{cap}"
    return f"{rep['source']}: {pat} {body} [{rep['method']}]"


def cmd_certify(args, out) -> int:
    fallback = args.fallback == "oracle"
    if args.gen:
        jobs = [(f"gen:{args.gen}", args.pattern, fallback, args.timing,
                 (args.gen, args.n, args.p, args.seed))]
    else:
        jobs = [(path, args.pattern, fallback, args.timing, None) for path in args.input]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_certify_one, jobs))
    else:
        results = [_certify_one(job) for job in jobs]

    worst = EXIT_OK
    for code, message, rep in results:
        if rep is None:
            print(f"error: {message}", file=sys.stderr)
            worst = max(worst, code)
            continue
        out.write((json.dumps(rep, sort_keys=True) if args.json else _summary(rep)) + "\n")
    return worst


def cmd_forest(args, out) -> int:
    D, _ = _source(args)
    F = final_spanning_inforest(D) if args.inforest else final_spanning_outforest(D)
    deepest = F.deepest()
    doc = {"orientation": F.orientation.value, "depth": F.depth,
           "parent": {str(v): F.parent[v] for v in F.vertices},
           "level": {str(v): F.level[v] for v in F.vertices},
           "deepest_root_path": [] if deepest is None else F.root_path(deepest)}
    out.write(json.dumps(doc, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_peel(args, out) -> int:
    D, _ = _source(args)
    if args.length < 1:
        raise CliError("--length must be at least 1")
    dec = peel(D, args.length)
    doc = {"length": dec.length,
           "layers": [{"path": list(x.path), "halo": list(x.halo)} for x in dec.layers],
           "residual": list(dec.residual), "residual_depth": dec.residual_forest.depth,
           "audit": cross_edge_audit(dec)}
    out.write(json.dumps(doc, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    D, _ = _source(args)
    limits = oracle.DEFAULT_LIMITS
    if args.max_vertices:
        limits = oracle.OracleLimits(args.max_vertices, args.max_vertices)
    if args.query == "path":
        if args.pattern is None:
            raise CliError("oracle path needs --pattern")
        emb = oracle.contains_pattern(D, args.pattern, limits)
        doc = {"pattern": list(args.pattern.blocks),
               "vertices": None if emb is None else list(emb.vertices)}
    else:
        doc = {"chi": oracle.chromatic_number(D, limits)}
    out.write(json.dumps(doc, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_gen(args, out) -> int:
    out.write(arclist.format_arcs(generate(args.kind, args.n, args.p, args.seed)))
    return EXIT_OK


def check_report(rep: dict, D: Digraph) -> bool:
    """Independent re-validation of a JSON report against its digraph."""
    if not isinstance(rep, dict) or rep.get("schema") != SCHEMA or set(rep) - REPORT_FIELDS:
        return False
    p = BlockPattern(*rep["pattern"])
    if rep["result"] == "path":
        return validate_embedding(D, PathEmbedding(p, tuple(rep["vertices"])))
    colors = rep["colors"]
    if sorted(colors, key=int) != [str(v) for v in range(D.n)]:
        return False
    c = Coloring(tuple(colors[str(v)] for v in range(D.n)))
    if not validate_coloring(D, c) or c.num_colors != rep["num_colors"]:
        return False
    return rep["bound"] is None or c.num_colors <= rep["bound"]


def cmd_verify(args, out) -> int:
    D, _ = load(args.input)
    text = sys.stdin.read() if args.report == "-" else Path(args.report).read_text()
    lines = [line for line in text.splitlines() if line.strip()]
    try:
        reports = [json.loads(line) for line in lines]
    except json.JSONDecodeError as exc:
        raise CliError(f"{args.report}: not JSON lines: {exc}") from None
    ok = bool(reports)
    for rep in reports:
        try:
            good = check_report(rep, D)
        except (KeyError, TypeError, ValueError):
            good = False
        ok = ok and good
        out.write(f"{'valid' if good else 'INVALID'}\n")
    return EXIT_OK if ok else EXIT_INPUT


COMMANDS = {"certify": cmd_certify, "forest": cmd_forest, "peel": cmd_peel,
            "oracle": cmd_oracle, "gen": cmd_gen, "verify": cmd_verify}


def main(argv: list[str] | None = None, out=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    out = out or sys.stdout
    try:
        return COMMANDS[args.command](args, out)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (TripathError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
