"""Final spanning out-forests and in-forests.

A spanning out-forest F of D is *final* when every arc (u, v) with
``level(u) >= level(v)`` is closed by a forest path from v down to u. Level
sets of a final forest are stable, so numbering vertices by level is a proper
coloring whose size is the forest depth, and the deepest root path is a
directed path of that many vertices.

In-forests are handled by duality: a final in-forest of D is a final
out-forest of the converse, with the same parent links.
"""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass, field
from typing import Iterable

from .digraph import Coloring, Digraph, reverse
from .errors import NotFinal


class Orientation(enum.Enum):
    OUT = "out"
    IN = "in"


@dataclass(frozen=True, eq=False)
class Forest:
    """Forest spanning ``D[vertices]`` (all of D unless built with ``within``).

    For ``OUT``, ``parent[v] = u`` means (u, v) is an arc; for ``IN`` it means
    (v, u) is an arc. Roots have parent ``None`` and level 1.
    """

    host: Digraph
    orientation: Orientation
    parent: dict = field(repr=False)
    level: dict = field(repr=False)

    @property
    def vertices(self) -> list[int]:
        return sorted(self.level)

    @property
    def depth(self) -> int:
        return max(self.level.values(), default=0)

    def __contains__(self, v) -> bool:
        return v in self.level

    def climb(self, v: int, count: int) -> list[int]:
        """``v`` followed by its ancestors, ``count`` vertices in all."""
        out = [v]
        while len(out) < count:
            v = self.parent[v]
            if v is None:
                raise ValueError("climbed past a root")
            out.append(v)
        return out

    def ancestor(self, v: int, distance: int) -> int:
        return self.climb(v, distance + 1)[-1]

    def is_ancestor(self, a: int, v: int) -> bool:
        """True when ``a`` lies on the root path of ``v`` (``a == v`` included)."""
        gap = self.level[v] - self.level[a]
        if gap < 0:
            return False
        for _ in range(gap):
            v = self.parent[v]
        return v == a

    def root_path(self, u: int) -> list[int]:
        """The directed path between ``u`` and its root, in arc direction.

        Out-forests read root to ``u``; in-forests read ``u`` to root.
        """
        chain = self.climb(u, self.level[u])
        return chain[::-1] if self.orientation is Orientation.OUT else chain

    def deepest(self) -> int | None:
        if not self.level:
            return None
        d = self.depth
        return min(v for v, lv in self.level.items() if lv == d)

    def level_sets(self) -> list[list[int]]:
        sets: list[list[int]] = [[] for _ in range(self.depth)]
        for v in self.vertices:
            sets[self.level[v] - 1].append(v)
        return sets

    def forest_arcs(self) -> set[tuple[int, int]]:
        """Forest links as arcs of the host digraph."""
        if self.orientation is Orientation.OUT:
            return {(p, v) for v, p in self.parent.items() if p is not None}
        return {(v, p) for v, p in self.parent.items() if p is not None}

    def converse(self) -> Forest:
        """The same links read as a forest of the converse digraph."""
        flipped = Orientation.IN if self.orientation is Orientation.OUT else Orientation.OUT
        return Forest(reverse(self.host), flipped, self.parent, self.level)


def _grow_outforest(out_adj, vertices: Iterable[int]) -> tuple[dict, dict]:
    members = set(vertices)
    parent: dict[int, int | None] = {v: None for v in sorted(members)}
    level = {v: 1 for v in parent}
    children: dict[int, list[int]] = {v: [] for v in parent}

    def is_ancestor(a, v):
        gap = level[v] - level[a]
        if gap < 0:
            return False
        for _ in range(gap):
            v = parent[v]
        return v == a

    # Every reattachment raises sum(level) by at least one, and levels never exceed |members|.
    heap = list(parent)
    queued = set(heap)
    while heap:
        u = heapq.heappop(heap)
        queued.discard(u)
        for v in out_adj[u]:
            if v not in members or level[u] < level[v] or is_ancestor(v, u):
                continue
            old = parent[v]
            if old is not None:
                children[old].remove(v)
            parent[v] = u
            children[u].append(v)
            shift = level[u] + 1 - level[v]
            stack = [v]
            while stack:
                x = stack.pop()
                level[x] += shift
                if x not in queued:
                    queued.add(x)
                    heapq.heappush(heap, x)
                stack.extend(children[x])
    return parent, level


def final_spanning_outforest(D: Digraph, within: Iterable[int] | None = None) -> Forest:
    verts = range(D.n) if within is None else within
    parent, level = _grow_outforest(D.out_adj, verts)
    return Forest(D, Orientation.OUT, parent, level)


def final_spanning_inforest(D: Digraph, within: Iterable[int] | None = None) -> Forest:
    verts = range(D.n) if within is None else within
    parent, level = _grow_outforest(D.in_adj, verts)
    return Forest(D, Orientation.IN, parent, level)


def is_final(D: Digraph, F: Forest) -> bool:
    """Check F is a well-formed spanning forest of ``D[F.vertices]`` and is final."""
    members = F.level
    if set(F.parent) != set(members):
        return False
    out_adj = D.out_adj if F.orientation is Orientation.OUT else D.in_adj
    for v, p in F.parent.items():
        if p is None:
            if members[v] != 1:
                return False
        elif p not in members or v not in out_adj[p] or members[v] != members[p] + 1:
            return False
    for u in members:
        for v in out_adj[u]:
            if v in members and members[u] >= members[v] and not F.is_ancestor(v, u):
                return False
    return True


def level_coloring(F: Forest) -> Coloring:
    if len(F.level) != F.host.n:
        raise ValueError("level_coloring needs a forest spanning the whole host")
    if not is_final(F.host, F):
        raise NotFinal("level sets of a non-final forest need not be stable")
    return Coloring(tuple(F.level[v] for v in range(F.host.n)))


def extract_path(D: Digraph, length: int, within: Iterable[int] | None = None):
    """A directed path with exactly ``length`` arcs, or ``None``.

    ``None`` means the final out-forest of D has depth at most ``length``, so
    its level coloring uses at most ``length`` colors.
    """
    path, _ = _extract(D, length, within)
    return path


def _extract(D: Digraph, length: int, within=None) -> tuple[list[int] | None, Forest]:
    if length < 1:
        raise ValueError("path length must be at least 1")
    F = final_spanning_outforest(D, within)
    if F.depth <= length:
        return None, F
    return F.root_path(F.deepest())[-(length + 1):], F
