"""Layered decomposition: strip exact-length directed paths with their neighborhoods."""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph
from .forest import Forest, _extract, is_final


@dataclass(frozen=True)
class Layer:
    path: tuple  # L+1 vertices of a directed path
    halo: tuple  # sorted neighbors of the path inside the digraph it was peeled from


@dataclass(frozen=True, eq=False)
class Decomposition:
    host: Digraph
    length: int
    layers: tuple
    residual: tuple
    residual_forest: Forest

    @property
    def halo_vertices(self) -> list[int]:
        return sorted(v for layer in self.layers for v in layer.halo)

    @property
    def path_vertices(self) -> list[int]:
        return sorted(v for layer in self.layers for v in layer.path)

    def position_index(self) -> dict[int, tuple[int, int]]:
        """Map each layer-path vertex to ``(layer, position)``, positions 1-based."""
        return {
            v: (i, j)
            for i, layer in enumerate(self.layers)
            for j, v in enumerate(layer.path, start=1)
        }


def peel(D: Digraph, length: int) -> Decomposition:
    if length < 1:
        raise ValueError("peel length must be at least 1")
    alive = set(range(D.n))
    layers = []
    while True:
        path, F = _extract(D, length, alive)
        if path is None:
            break
        on_path = set(path)
        halo = sorted({w for x in path for w in D.out_adj[x] + D.in_adj[x]
                       if w in alive and w not in on_path})
        alive -= on_path
        alive.difference_update(halo)
        layers.append(Layer(tuple(path), tuple(halo)))
    return Decomposition(D, length, tuple(layers), tuple(sorted(alive)), F)


def cross_edge_audit(dec: Decomposition) -> bool:
    """Recheck every structural invariant a certifier relies on."""
    D, L = dec.host, dec.length
    seen: set[int] = set()
    for layer in dec.layers:
        chunk = list(layer.path) + list(layer.halo)
        if seen.intersection(chunk) or len(set(chunk)) != len(chunk):
            return False
        seen.update(chunk)
    if seen.intersection(dec.residual) or len(seen) + len(dec.residual) != D.n:
        return False
    if len(set(dec.residual)) != len(dec.residual):
        return False

    owner: dict[int, int] = {}
    for i, layer in enumerate(dec.layers):
        if len(layer.path) != L + 1:
            return False
        if any(not D.has_arc(a, b) for a, b in zip(layer.path, layer.path[1:])):
            return False
        owner.update((v, i) for v in layer.path)
    for v in dec.residual:
        owner[v] = -1
    for i, layer in enumerate(dec.layers):
        for x in layer.path:
            for w in D.out_adj[x] + D.in_adj[x]:
                if w in owner and owner[w] != i:
                    return False

    # Halo i is exactly the neighborhood of P_i in what remained at step i.
    alive = set(range(D.n))
    for layer in dec.layers:
        on_path = set(layer.path)
        expect = {w for x in layer.path for w in D.out_adj[x] + D.in_adj[x]
                  if w in alive and w not in on_path}
        if expect != set(layer.halo):
            return False
        alive -= on_path | expect

    F = dec.residual_forest
    if set(F.level) != set(dec.residual) or F.depth > L or not is_final(D, F):
        return False
    return True
