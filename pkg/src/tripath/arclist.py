"""Plain-text arc-list format.

::

    # optional comments
    n m
    u v
    ...

Endpoints are normally 0-based integers. A file whose endpoints are not all
integers is read as labelled: labels get dense ids in order of first
appearance, and the label list is returned so reports can map ids back.
"""

from __future__ import annotations

from pathlib import Path

from .digraph import Digraph, build
from .errors import ParseError


def parse(text: str) -> tuple[Digraph, list[str] | None]:
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("missing header line 'n m'")
    lineno, header = rows[0]
    if len(header) != 2:
        raise ParseError(f"line {lineno}: header must be 'n m', got {' '.join(header)!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError(f"line {lineno}: header must hold two integers") from None
    if n < 0 or m < 0:
        raise ParseError(f"line {lineno}: negative count in header")
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} arcs but {len(body)} arc lines follow")
    for lineno, toks in body:
        if len(toks) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {' '.join(toks)!r}")

    tokens = [t for _, toks in body for t in toks]
    if all(_is_int(t) for t in tokens):
        return build(n, [(int(a), int(b)) for _, (a, b) in body]), None

    ids: dict[str, int] = {}
    for t in tokens:
        ids.setdefault(t, len(ids))
    if len(ids) > n:
        raise ParseError(f"{len(ids)} distinct labels but header declares {n} vertices")
    labels = list(ids) + [f"_{i}" for i in range(len(ids), n)]
    return build(n, [(ids[a], ids[b]) for _, (a, b) in body]), labels


def read(path: str | Path) -> tuple[Digraph, list[str] | None]:
    return parse(Path(path).read_text())


def format_arcs(D: Digraph) -> str:
    lines = [f"{D.n} {D.m}"]
    lines.extend(f"{u} {v}" for u, v in D.arc_list())
    return "\n".join(lines) + "\n"


def _is_int(tok: str) -> bool:
    try:
        int(tok)
    except ValueError:
        return False
    return True
