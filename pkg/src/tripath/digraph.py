"""Simple digraphs, three-block path patterns, and certificate validators.

Vertices are dense integers ``0..n-1``. A digraph here never has loops,
parallel arcs or 2-cycles; :func:`build` rejects all three.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DuplicateArc, LoopArc, TwoCycle, VertexOutOfRange


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: frozenset
    out_adj: tuple
    in_adj: tuple

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def adjacent(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs or (v, u) in self.arcs

    def neighbors(self, v: int) -> list[int]:
        """Underlying-graph neighbors of ``v``, ascending."""
        return sorted(self.out_adj[v] + self.in_adj[v])

    def arc_list(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


def build(n: int, arc_list: Iterable[Sequence[int]]) -> Digraph:
    """Validate an arc list and freeze it into a :class:`Digraph`.

    Raises the :class:`~tripath.errors.GraphError` subclass naming the first
    offending pair.
    """
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    arcs: set[tuple[int, int]] = set()
    for pair in arc_list:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"arc ({u}, {v}) has an endpoint outside [0, {n})", (u, v))
        if u == v:
            raise LoopArc(f"loop at vertex {u}", (u, v))
        if (u, v) in arcs:
            raise DuplicateArc(f"arc ({u}, {v}) listed twice", (u, v))
        if (v, u) in arcs:
            raise TwoCycle(f"arcs ({v}, {u}) and ({u}, {v}) form a 2-cycle", (u, v))
        arcs.add((u, v))
    out_adj: list[list[int]] = [[] for _ in range(n)]
    in_adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in sorted(arcs):
        out_adj[u].append(v)
        in_adj[v].append(u)
    return Digraph(
        n=n,
        arcs=frozenset(arcs),
        out_adj=tuple(tuple(a) for a in out_adj),
        in_adj=tuple(tuple(sorted(a)) for a in in_adj),
    )


def reverse(D: Digraph) -> Digraph:
    """The converse digraph: every arc flipped."""
    return Digraph(
        n=D.n,
        arcs=frozenset((v, u) for u, v in D.arcs),
        out_adj=D.in_adj,
        in_adj=D.out_adj,
    )


def induced(D: Digraph, S: Iterable[int]) -> tuple[Digraph, list[int]]:
    """Induced subdigraph on ``S`` plus the map from new to old indices.

    New indices follow the ascending order of ``S``.
    """
    keep = sorted(set(S))
    for v in keep:
        if not 0 <= v < D.n:
            raise VertexOutOfRange(f"vertex {v} outside [0, {D.n})", (v, v))
    index = {old: new for new, old in enumerate(keep)}
    arcs = [(index[u], index[v]) for u, v in D.arcs if u in index and v in index]
    return build(len(keep), arcs), keep


@dataclass(frozen=True)
class BlockPattern:
    """The oriented path P(k1, k2, k3): k1 forward, k2 backward, k3 forward arcs."""

    k1: int
    k2: int
    k3: int

    def __post_init__(self):
        for b in (self.k1, self.k2, self.k3):
            if not isinstance(b, int) or b < 1:
                raise ValueError(f"block lengths must be positive integers, got {self.blocks}")

    @property
    def blocks(self) -> tuple[int, int, int]:
        return (self.k1, self.k2, self.k3)

    @property
    def length(self) -> int:
        return self.k1 + self.k2 + self.k3

    @property
    def order(self) -> int:
        return self.length + 1

    def forward(self, j: int) -> bool:
        """Whether arc ``j`` (0-based, between positions j and j+1) points forward."""
        return j < self.k1 or j >= self.k1 + self.k2

    def reversed(self) -> BlockPattern:
        return BlockPattern(self.k3, self.k2, self.k1)

    @classmethod
    def parse(cls, text: str) -> BlockPattern:
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise ValueError(f"pattern must be three comma-separated block lengths, got {text!r}")
        return cls(*(int(p) for p in parts))

    def __str__(self) -> str:
        return f"P({self.k1},{self.k2},{self.k3})"


@dataclass(frozen=True)
class PathEmbedding:
    pattern: BlockPattern
    vertices: tuple

    def reversed(self) -> PathEmbedding:
        """The same path read backwards, an embedding of the reversed pattern in the converse."""
        return PathEmbedding(self.pattern.reversed(), tuple(reversed(self.vertices)))


@dataclass(frozen=True)
class Coloring:
    """Vertex colors ``color[v] >= 1``; ``num_colors`` is the largest color used."""

    color: tuple

    @property
    def num_colors(self) -> int:
        return max(self.color, default=0)


def validate_embedding(D: Digraph, emb: PathEmbedding) -> bool:
    p = emb.pattern
    seq = emb.vertices
    if len(seq) != p.order or len(set(seq)) != len(seq):
        return False
    if any(not (isinstance(v, int) and 0 <= v < D.n) for v in seq):
        return False
    for j in range(p.length):
        a, b = seq[j], seq[j + 1]
        if not (D.has_arc(a, b) if p.forward(j) else D.has_arc(b, a)):
            return False
    return True


def validate_coloring(D: Digraph, c: Coloring) -> bool:
    col = c.color
    if len(col) != D.n:
        return False
    if any(not isinstance(x, int) or x < 1 for x in col):
        return False
    return all(col[u] != col[v] for u, v in D.arcs)
