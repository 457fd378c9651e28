"""Neighbor classes of the peeled halos.

Each halo vertex is described by its *anchors*: every arc joining it to any
layer path, with the layer, the 1-based position along that path and the arc
direction. Classes are decided from anchors alone.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .errors import LengthMismatch
from .peel import Decomposition


class Direction(enum.Enum):
    INTO = "into"  # v -> v_j
    FROM = "from"  # v_j -> v


class AnchorArc(NamedTuple):
    layer: int
    position: int
    direction: Direction

    def mirrored(self, path_order: int) -> AnchorArc:
        """The same arc seen in the converse digraph with every layer path reversed."""
        flip = Direction.FROM if self.direction is Direction.INTO else Direction.INTO
        return AnchorArc(self.layer, path_order + 1 - self.position, flip)


class Mode(enum.Enum):
    TWO_WAY = "two-way"
    FOUR_WAY = "four-way"


@dataclass(frozen=True, eq=False)
class NeighborPartition:
    mode: Mode
    A: frozenset
    B: frozenset
    C: frozenset
    H: frozenset
    anchors: dict

    def classes(self) -> dict[str, list[int]]:
        out = {"A": sorted(self.A), "B": sorted(self.B)}
        if self.mode is Mode.FOUR_WAY:
            out.update(C=sorted(self.C), H=sorted(self.H))
        return out


def collect_anchors(dec: Decomposition) -> dict[int, list[AnchorArc]]:
    D = dec.host
    where = dec.position_index()
    anchors: dict[int, list[AnchorArc]] = {}
    for v in dec.halo_vertices:
        found = [AnchorArc(*where[w], Direction.INTO) for w in D.out_adj[v] if w in where]
        found += [AnchorArc(*where[w], Direction.FROM) for w in D.in_adj[v] if w in where]
        anchors[v] = sorted(found, key=lambda a: (a.layer, a.position, a.direction.value))
    return anchors


def classify_two(dec: Decomposition, k: int, l: int) -> NeighborPartition:
    """Split the halos into B (touches the tail of a layer) and A = N - B."""
    if dec.length != k + l - 2:
        raise LengthMismatch(f"decomposition peeled length {dec.length}, expected {k + l - 2}")
    anchors = collect_anchors(dec)
    A, B = set(), set()
    for v, arcs in anchors.items():
        in_b = any(
            (a.direction is Direction.FROM and a.position == k) or a.position >= k + 1
            for a in arcs
        )
        (B if in_b else A).add(v)
    return NeighborPartition(Mode.TWO_WAY, frozenset(A), frozenset(B),
                             frozenset(), frozenset(), anchors)


def classify_four(dec: Decomposition, k: int, r: int) -> NeighborPartition:
    """Priority classification H, then C, then B, then A."""
    if dec.length != k + r - 2:
        raise LengthMismatch(f"decomposition peeled length {dec.length}, expected {k + r - 2}")
    anchors = collect_anchors(dec)
    sets = {"A": set(), "B": set(), "C": set(), "H": set()}
    for v, arcs in anchors.items():
        sets[_four_way_class(arcs, k)].add(v)
    return NeighborPartition(Mode.FOUR_WAY, *(frozenset(sets[c]) for c in "ABCH"), anchors)


def _four_way_class(arcs, k: int) -> str:
    if any(a.direction is Direction.FROM and a.position >= k for a in arcs):
        return "H"
    if any(a.direction is Direction.INTO and a.position >= k + 1 for a in arcs):
        return "C"
    if any(a.direction is Direction.FROM and a.position <= k - 1 for a in arcs):
        return "B"
    return "A"
