"""Exhaustive ground truth for small digraphs, plus seeded instance generators.

Everything here is brute force on purpose: it shares no code with the
certifiers beyond the digraph type and the validators, so it can be used to
check them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .digraph import BlockPattern, Digraph, PathEmbedding, build, validate_embedding
from .errors import LimitExceeded


@dataclass(frozen=True)
class OracleLimits:
    max_vertices_path: int = 14
    max_vertices_chi: int = 12

    def __post_init__(self):
        if self.max_vertices_path < 1 or self.max_vertices_chi < 1:
            raise ValueError("oracle limits must be positive")


DEFAULT_LIMITS = OracleLimits()


def contains_pattern(D: Digraph, p: BlockPattern,
                     limits: OracleLimits = DEFAULT_LIMITS) -> PathEmbedding | None:
    """Lexicographically least embedding of ``p`` in ``D``, or None."""
    if D.n > limits.max_vertices_path:
        raise LimitExceeded(f"path oracle limited to {limits.max_vertices_path} vertices, got {D.n}")
    order = p.order
    if order > D.n:
        return None
    forward = [p.forward(j) for j in range(p.length)]
    seq: list[int] = []
    used = [False] * D.n

    def extend() -> bool:
        if len(seq) == order:
            return True
        if seq:
            last = seq[-1]
            cands = D.out_adj[last] if forward[len(seq) - 1] else D.in_adj[last]
        else:
            cands = range(D.n)
        for v in sorted(cands):
            if used[v]:
                continue
            used[v] = True
            seq.append(v)
            if extend():
                return True
            seq.pop()
            used[v] = False
        return False

    if not extend():
        return None
    emb = PathEmbedding(p, tuple(seq))
    assert validate_embedding(D, emb)
    return emb


def longest_path_order(D: Digraph, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Number of vertices on a longest directed path."""
    if D.n > limits.max_vertices_path:
        raise LimitExceeded(f"path oracle limited to {limits.max_vertices_path} vertices, got {D.n}")
    best = 0
    used = [False] * D.n

    def walk(v: int, size: int) -> None:
        nonlocal best
        best = max(best, size)
        for w in D.out_adj[v]:
            if not used[w]:
                used[w] = True
                walk(w, size + 1)
                used[w] = False

    for v in range(D.n):
        used[v] = True
        walk(v, 1)
        used[v] = False
    return best


def _max_clique(nbrs: list[set[int]]) -> int:
    best = 0

    def grow(size: int, cands: set[int]) -> None:
        nonlocal best
        if not cands:
            best = max(best, size)
            return
        if size + len(cands) <= best:
            return
        for v in sorted(cands):
            grow(size + 1, cands & nbrs[v])
            cands = cands - {v}
            if size + len(cands) <= best:
                return

    grow(0, set(range(len(nbrs))))
    return best


def _try_color(nbrs: list[set[int]], order: list[int], k: int) -> list[int] | None:
    color = [0] * len(nbrs)

    def assign(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {color[u] for u in nbrs[v]}
        # New colors are opened one at a time, which removes color symmetry.
        for c in range(1, min(k, used + 1) + 1):
            if c not in taken:
                color[v] = c
                if assign(i + 1, max(used, c)):
                    return True
        color[v] = 0
        return False

    return color if assign(0, 0) else None


def optimal_coloring(D: Digraph, limits: OracleLimits = DEFAULT_LIMITS) -> list[int]:
    """A proper coloring of the underlying graph with exactly chi colors, 1-based."""
    if D.n > limits.max_vertices_chi:
        raise LimitExceeded(f"chromatic oracle limited to {limits.max_vertices_chi} vertices, got {D.n}")
    if D.n == 0:
        return []
    nbrs = [set(D.neighbors(v)) for v in range(D.n)]
    order = sorted(range(D.n), key=lambda v: (-len(nbrs[v]), v))
    k = max(1, _max_clique(nbrs))
    while True:
        found = _try_color(nbrs, order, k)
        if found is not None:
            return found
        k += 1


def chromatic_number(D: Digraph, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    return max(optimal_coloring(D, limits), default=0)


def gen_random(n: int, arc_probability: float, seed: int) -> Digraph:
    """Each unordered pair present with the given probability, oriented by a fair coin."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= arc_probability <= 1.0:
        raise ValueError("arc probability must lie in [0, 1]")
    rng = random.Random(seed)
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < arc_probability:
                arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return build(n, arcs)


def gen_tournament(n: int, seed: int) -> Digraph:
    return gen_random(n, 1.0, seed)


def gen_transitive_tournament(n: int) -> Digraph:
    if n < 1:
        raise ValueError("n must be at least 1")
    return build(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
