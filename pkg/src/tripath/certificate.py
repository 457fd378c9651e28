"""Certificates and the oriented views the certifiers assemble paths in."""

from __future__ import annotations

from dataclasses import dataclass

from .classify import AnchorArc, Direction
from .digraph import (BlockPattern, Coloring, Digraph, PathEmbedding, reverse,
                      validate_coloring, validate_embedding)
from .errors import InternalConstructionError
from .peel import Decomposition


@dataclass(frozen=True)
class Certificate:
    """Either ``embedding`` (a validated path) or ``coloring`` within ``bound``."""

    pattern: BlockPattern
    embedding: PathEmbedding | None = None
    coloring: Coloring | None = None
    bound: int | None = None
    method: str = ""

    @property
    def is_path(self) -> bool:
        return self.embedding is not None

    @property
    def arm(self) -> str:
        return "path" if self.is_path else "coloring"

    def check(self, D: Digraph) -> bool:
        if self.is_path:
            return self.embedding.pattern == self.pattern and validate_embedding(D, self.embedding)
        c = self.coloring
        return (c is not None and validate_coloring(D, c)
                and (self.bound is None or c.num_colors <= self.bound))

    def reversed(self) -> Certificate:
        """Transfer a certificate for the converse digraph back to the original."""
        emb = self.embedding.reversed() if self.is_path else None
        return Certificate(self.pattern.reversed(), emb, self.coloring, self.bound, self.method)


def prefer_converse(D: Digraph, first: int, last: int) -> bool:
    """Whether to run a certifier on the converse digraph.

    Outer blocks are normalized so the first is not longer than the last. For
    equal outer blocks the lexicographically smaller arc list wins, so D and
    its converse are always certified through the same digraph.
    """
    if first != last:
        return first > last
    return sorted((v, u) for u, v in D.arcs) < D.arc_list()


class View:
    """The host digraph, or its converse, together with layers read in arc order.

    Paths are assembled in whichever orientation a construction is written
    for; :meth:`emit` validates them there and maps them back to the host.
    """

    def __init__(self, dec: Decomposition, anchors: dict, converse: bool = False):
        self.converse = converse
        self.graph = reverse(dec.host) if converse else dec.host
        order = dec.length + 1
        if converse:
            self.paths = [tuple(reversed(layer.path)) for layer in dec.layers]
            self.anchors = {v: sorted((a.mirrored(order) for a in arcs),
                                      key=lambda a: (a.layer, a.position, a.direction.value))
                            for v, arcs in anchors.items()}
        else:
            self.paths = [layer.path for layer in dec.layers]
            self.anchors = anchors

    def first_anchor(self, v: int, direction: Direction, lo: int, hi: int) -> AnchorArc | None:
        for a in self.anchors.get(v, ()):
            if a.direction is direction and lo <= a.position <= hi:
                return a
        return None

    def run(self, anchor: AnchorArc | None, count: int) -> list[int]:
        """``count`` consecutive layer vertices starting at the anchor's position."""
        if anchor is None:
            raise InternalConstructionError("construction needs an anchor the vertex does not have")
        path = self.paths[anchor.layer]
        seg = list(path[anchor.position - 1: anchor.position - 1 + count])
        if len(seg) != count:
            raise InternalConstructionError(
                f"layer {anchor.layer} too short from position {anchor.position} for {count} vertices")
        return seg

    def run_to(self, anchor: AnchorArc | None, count: int) -> list[int]:
        """``count`` consecutive layer vertices ending at the anchor's position."""
        if anchor is None:
            raise InternalConstructionError("construction needs an anchor the vertex does not have")
        if anchor.position < count:
            raise InternalConstructionError(
                f"layer {anchor.layer} too short before position {anchor.position} for {count} vertices")
        path = self.paths[anchor.layer]
        return list(path[anchor.position - count: anchor.position])

    def emit(self, pattern: BlockPattern, seq: list[int], tag: str) -> PathEmbedding:
        """Validate ``seq`` as ``pattern`` in this view and return it in host orientation."""
        emb = PathEmbedding(pattern, tuple(seq))
        if not validate_embedding(self.graph, emb):
            raise InternalConstructionError(f"{tag}: assembled {pattern} {list(seq)} is not valid")
        return emb.reversed() if self.converse else emb


def chain(F, v: int, count: int) -> list[int]:
    """The last ``count`` vertices of the out-forest root path ending at ``v``."""
    return F.climb(v, count)[::-1]


def compact(colors: list[int]) -> Coloring:
    """Renumber the colors in use to ``1..m`` preserving their order."""
    rank = {c: i for i, c in enumerate(sorted(set(colors)), start=1)}
    return Coloring(tuple(rank[c] for c in colors))


def require_coloring(D: Digraph, colors: list, bound: int, tag: str) -> Coloring:
    if any(c is None for c in colors):
        missing = [v for v, c in enumerate(colors) if c is None]
        raise InternalConstructionError(f"{tag}: vertices left uncolored: {missing[:10]}")
    coloring = compact(colors)
    if not validate_coloring(D, coloring):
        bad = [(u, v) for u, v in D.arc_list() if colors[u] == colors[v]]
        raise InternalConstructionError(f"{tag}: improper coloring, clashing arcs {bad[:10]}")
    if coloring.num_colors > bound:
        raise InternalConstructionError(f"{tag}: {coloring.num_colors} colors exceed bound {bound}")
    return coloring
