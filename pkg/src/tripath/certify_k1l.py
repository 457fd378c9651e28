"""Certifier for paths whose middle block has a single arc.

For P(k,1,l) of order n = k+l+2 >= 7 it returns either an embedding of the
path or a proper coloring with at most 2n-4 colors. The coloring is the
palette layout of the contradiction argument; whenever one of the forbidden
configurations it relies on is present, the corresponding path is assembled
instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certificate import Certificate, View, chain, prefer_converse, require_coloring
from .classify import Direction, NeighborPartition, classify_two
from .digraph import BlockPattern, Digraph, reverse
from .errors import InternalConstructionError, UnsupportedPattern
from .forest import Forest, final_spanning_inforest, final_spanning_outforest
from .peel import Decomposition, cross_edge_audit, peel

METHOD = "middle-one"

INTO, FROM = Direction.INTO, Direction.FROM


def middle_one_bound(k: int, l: int) -> int:
    return 2 * (k + l)


def check_middle_one(k: int, l: int) -> None:
    if k < 2 or l < 2:
        raise UnsupportedPattern(f"P({k},1,{l}): outer blocks of length 1 are not handled")
    if k + l + 2 < 7:
        raise UnsupportedPattern(f"P({k},1,{l}) has order {k + l + 2} < 7")


@dataclass(frozen=True, eq=False)
class MidOneState:
    k: int
    l: int
    dec: Decomposition
    part: NeighborPartition
    F_A: Forest  # final out-forest of D[A]
    F_B: Forest  # final in-forest of D[B]
    A_top: frozenset  # levels >= k+1 of F_A
    B_top: frozenset  # levels >= l+1 of F_B
    A1: frozenset
    A2: frozenset
    B1: frozenset
    B2: frozenset
    R_top: frozenset  # level k+l-2 of the residual forest


def middle_one_state(D: Digraph, k: int, l: int) -> MidOneState:
    """Peel, classify and build forests for P(k,1,l) with ``k <= l``."""
    dec = peel(D, k + l - 2)
    if not cross_edge_audit(dec):
        raise InternalConstructionError("peeling produced an inconsistent decomposition")
    part = classify_two(dec, k, l)
    F_A = final_spanning_outforest(D, part.A)
    F_B = final_spanning_inforest(D, part.B)
    A_top = {v for v, lv in F_A.level.items() if lv >= k + 1}
    B_top = {v for v, lv in F_B.level.items() if lv >= l + 1}
    A1 = {v for v in A_top if (F_A.level[v] - k - 1) % 2 == 0}
    B1 = {v for v in B_top if (F_B.level[v] - l - 1) % 2 == 0}
    Rf = dec.residual_forest
    R_top = {v for v, lv in Rf.level.items() if lv == k + l - 2}
    return MidOneState(k, l, dec, part, F_A, F_B, frozenset(A_top), frozenset(B_top),
                       frozenset(A1), frozenset(A_top - A1), frozenset(B1),
                       frozenset(B_top - B1), frozenset(R_top))


def certify_middle_one(D: Digraph, k: int, l: int) -> Certificate:
    check_middle_one(k, l)
    if prefer_converse(D, k, l):
        return _certify(reverse(D), l, k).reversed()
    return _certify(D, k, l)


def _certify(D: Digraph, k: int, l: int) -> Certificate:
    pattern = BlockPattern(k, 1, l)
    st = middle_one_state(D, k, l)
    found = find_forbidden(D, st)
    if found is not None:
        return Certificate(pattern, embedding=found[0], method=f"{METHOD}:{found[1]}")
    bound = middle_one_bound(k, l)
    coloring = require_coloring(D, palette(D, st), bound, METHOD)
    return Certificate(pattern, coloring=coloring, bound=bound, method=METHOD)


def find_forbidden(D: Digraph, st: MidOneState):
    """Scan configurations C1..C9 in order.

    Returns ``(embedding, tag)`` for the first hit, or ``None`` when the
    palette layout is safe.
    """
    k, l = st.k, st.l
    pattern = BlockPattern(k, 1, l)
    fwd = View(st.dec, st.part.anchors)
    bwd = View(st.dec, st.part.anchors, converse=True)

    # C1/C2 on A; C3/C4 are the same scan on B through the converse.
    hit = _scan_side(fwd, pattern, sorted(st.A_top), st.F_A, k, l, "C1", "C2")
    if hit is None:
        hit = _scan_side(bwd, pattern.reversed(), sorted(st.B_top), st.F_B.converse(),
                         l, k, "C3", "C4")
    if hit is not None:
        return hit

    F_A, F_B, Rf = st.F_A, st.F_B, st.dec.residual_forest
    A_top, B_top, A1 = st.A_top, st.B_top, st.A1

    for v in sorted(A1):  # C5
        for u in D.in_adj[v]:
            if u in B_top:
                seq = chain(F_A, v, k + 1) + F_B.climb(u, l + 1)
                return fwd.emit(pattern, seq, "C5"), "C5"

    for v in sorted(A1):  # C6
        outs = sorted((F_B.level[u], u) for u in D.out_adj[v] if u in B_top)
        if len(outs) >= 2:
            u1, u2 = outs[0][1], outs[1][1]
            a = fwd.first_anchor(u2, FROM, k, k + l - 1)
            seq = fwd.run_to(a, k) + [u2, v] + F_B.climb(u1, l)
            return fwd.emit(pattern, seq, "C6"), "C6"

    R_top = sorted(st.R_top)
    for v in R_top:  # C7
        for u in D.in_adj[v]:
            if u in B_top:
                seq = chain(Rf, v, k + 1) + F_B.climb(u, l + 1)
                return fwd.emit(pattern, seq, "C7"), "C7"

    for v in R_top:  # C8
        for u in D.in_adj[v]:
            if u in A_top:
                a = fwd.first_anchor(u, INTO, 1, k)
                seq = chain(Rf, v, k + 1) + [u] + fwd.run(a, l)
                return fwd.emit(pattern, seq, "C8"), "C8"

    for v in R_top:  # C9
        outs = [u for u in D.out_adj[v] if u in B_top or u in A1]
        if len(outs) < 2:
            continue
        x, y = outs[0], outs[1]
        if x in B_top and y in B_top:
            if F_B.level[x] > F_B.level[y]:
                x, y = y, x
            a = fwd.first_anchor(y, FROM, k, k + l - 1)
            tag = "C9a"
            seq = fwd.run_to(a, k) + [y, v] + F_B.climb(x, l)
        elif x in A1 and y in A1:
            if F_A.level[x] > F_A.level[y]:
                x, y = y, x
            a = fwd.first_anchor(y, INTO, 1, k)
            tag = "C9b"
            seq = chain(F_A, x, k + 1) + [v, y] + fwd.run(a, l - 1)
        else:
            if x in B_top:
                x, y = y, x
            tag = "C9c"
            seq = chain(F_A, x, k + 1) + [v] + F_B.climb(y, l)
        return fwd.emit(pattern, seq, tag), tag
    return None


def _scan_side(view: View, pattern: BlockPattern, top: list[int], F: Forest,
               k: int, l: int, tag_anchor: str, tag_arc: str):
    """Anchor and stray-arc checks on the deep levels of one out-forest.

    ``top`` must hold every vertex of F at level >= k+1; F is an out-forest
    of ``view.graph``.
    """
    for v in top:
        a = view.first_anchor(v, FROM, 1, k - 1)
        if a is not None:
            seq = chain(F, v, k + 1) + view.run(a, l + 1)
            return view.emit(pattern, seq, tag_anchor), tag_anchor
    members = set(top)
    for x in top:
        for y in view.graph.out_adj[x]:
            if y not in members or F.parent[y] == x:
                continue
            if F.level[x] > F.level[y]:
                # y is an ancestor of x since F is final.
                tag = tag_arc + "a"
                a = view.first_anchor(x, INTO, 1, k)
                seq = chain(F, y, k + 1) + [x] + view.run(a, l)
            else:
                tag = tag_arc + "b"
                z = F.parent[y]
                a = view.first_anchor(z, INTO, 1, k)
                seq = chain(F, x, k) + [y, z] + view.run(a, l)
            return view.emit(pattern, seq, tag), tag
    return None


def palette(D: Digraph, st: MidOneState) -> list[int]:
    """Raw colors of the three-palette layout, before compaction.

    Palette 1 is ``1..k+l-1``; palette 2 holds ``l+2`` colors for B, A1 and
    the top residual level; palette 3 holds ``k-1`` colors for levels 2..k of
    the A forest.
    """
    k, l = st.k, st.l
    colors: list[int | None] = [None] * D.n
    for layer in st.dec.layers:
        for j, v in enumerate(layer.path, start=1):
            colors[v] = j
    Rf = st.dec.residual_forest
    for v, lv in Rf.level.items():
        if lv <= k + l - 3:
            colors[v] = lv

    p2 = k + l - 1
    pair = (p2 + l + 1, p2 + l + 2)
    p3 = p2 + l + 2
    for v, lv in st.F_B.level.items():
        colors[v] = p2 + lv if lv <= l else pair[0] if v in st.B1 else pair[1]
    for v, lv in st.F_A.level.items():
        if lv == 1:
            colors[v] = k + l - 2
        elif lv <= k:
            colors[v] = p3 + lv - 1
        elif v in st.A2:
            colors[v] = k + l - 1

    for v in sorted(st.A1):
        colors[v] = _avoid(D, v, pair, st.B_top, colors)
    guard = st.B_top | st.A1
    for v in sorted(st.R_top):
        colors[v] = _avoid(D, v, pair, guard, colors)
    return colors


def _avoid(D: Digraph, v: int, pair, guard, colors) -> int:
    taken = {colors[u] for u in D.neighbors(v) if u in guard}
    for c in pair:
        if c not in taken:
            return c
    raise InternalConstructionError(f"vertex {v} has neighbors of both shared colors")
