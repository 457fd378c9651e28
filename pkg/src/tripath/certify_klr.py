"""Certifier for general three-block paths P(k,l,r) with every block >= 2.

The halos of the peeled layers split into four classes. A and B are colored
in the host orientation, sharing the palette of the layers and residual;
H and C are the same problem seen through the converse digraph (H behaves
like A, C like B) and get fresh colors. Each class is colored by the levels
of a final forest: shallow levels one color each, deep levels in residue
bands. Every arc that would break this layout closes a P(k,l,r), which is
then returned instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certificate import Certificate, View, chain, prefer_converse, require_coloring
from .classify import Direction, NeighborPartition, classify_four
from .digraph import BlockPattern, Digraph, reverse
from .errors import InternalConstructionError, UnsupportedPattern
from .forest import Forest, final_spanning_inforest, final_spanning_outforest
from .peel import Decomposition, cross_edge_audit, peel

METHOD = "three-blocks"

INTO, FROM = Direction.INTO, Direction.FROM


def three_block_case(k: int, l: int, r: int) -> int:
    """Which of the three regimes applies once the outer blocks are ordered."""
    if k > r:
        k, r = r, k
    if l <= k:
        return 1
    if l <= r:
        return 2
    return 3


def bound(k: int, l: int, r: int) -> int:
    """Largest coloring the certifier may return for P(k,l,r)."""
    if 1 in (k, l, r):
        raise UnsupportedPattern(f"P({k},{l},{r}) has a block of length 1")
    if k > r:
        k, r = r, k
    n = k + l + r + 1
    case = three_block_case(k, l, r)
    if case == 1:
        return 2 * (n - 1) + r
    if case == 2:
        return 2 * (n - 1) + l + r - k
    return 2 * (n + l - 1) - k


@dataclass(frozen=True, eq=False)
class Side:
    """One half of the layout: an A-like and a B-like class in one orientation.

    Both forests are final out-forests of ``view.graph``. A-like vertices all
    have an arc into some layer at position <= k; B-like vertices all receive
    an arc from some layer at position <= k-1 (positions in view order).
    """

    view: View
    k: int
    l: int
    r: int
    F_A: Forest
    A_threshold: int
    A_modulus: int
    F_B: Forest
    B_threshold: int
    B_modulus: int

    @property
    def pattern(self) -> BlockPattern:
        return BlockPattern(self.k, self.l, self.r)

    def A_top(self) -> list[int]:
        return sorted(v for v, lv in self.F_A.level.items() if lv >= self.A_threshold)

    def B_top(self) -> list[int]:
        return sorted(v for v, lv in self.F_B.level.items() if lv >= self.B_threshold)

    def A_band(self, v: int) -> int:
        return (self.F_A.level[v] - self.A_threshold) % self.A_modulus

    def B_band(self, v: int) -> int:
        return (self.F_B.level[v] - self.B_threshold) % self.B_modulus

    def out_of_A(self, z: int) -> list[int]:
        """r layer vertices reached from A-like ``z`` by its anchor arc."""
        return self.view.run(self.view.first_anchor(z, INTO, 1, self.k), self.r)

    def out_of_B(self, z: int) -> list[int]:
        """The layer vertex pointing at B-like ``z`` and the r vertices after it."""
        return self.view.run(self.view.first_anchor(z, FROM, 1, self.k - 1), self.r + 1)


@dataclass(frozen=True, eq=False)
class GeneralState:
    k: int
    l: int
    r: int
    case: int
    dec: Decomposition
    part: NeighborPartition
    host_side: Side  # A and B, host orientation
    converse_side: Side  # H as A-like, C as B-like, converse orientation


def general_state(D: Digraph, k: int, l: int, r: int) -> GeneralState:
    """Peel, classify and configure both sides for P(k,l,r) with ``k <= r``."""
    dec = peel(D, k + r - 2)
    if not cross_edge_audit(dec):
        raise InternalConstructionError("peeling produced an inconsistent decomposition")
    part = classify_four(dec, k, r)
    host = Side(
        View(dec, part.anchors), k, l, r,
        F_A=final_spanning_outforest(D, part.A),
        # Deep enough that the A-like constructions against the residual fit.
        A_threshold=max(k, l) + 1, A_modulus=min(k, l) + 1,
        F_B=final_spanning_outforest(D, part.B),
        B_threshold=l, B_modulus=k + 1,
    )
    conv = Side(
        View(dec, part.anchors, converse=True), r, l, k,
        F_A=final_spanning_inforest(D, part.H).converse(),
        A_threshold=r + 1, A_modulus=l + 1,
        F_B=final_spanning_inforest(D, part.C).converse(),
        B_threshold=l, B_modulus=r + 1,
    )
    return GeneralState(k, l, r, three_block_case(k, l, r), dec, part, host, conv)


def certify_three_blocks(D: Digraph, k: int, l: int, r: int) -> Certificate:
    limit = bound(k, l, r)
    if prefer_converse(D, k, r):
        return _certify(reverse(D), r, l, k, limit).reversed()
    return _certify(D, k, l, r, limit)


def _certify(D: Digraph, k: int, l: int, r: int, limit: int) -> Certificate:
    pattern = BlockPattern(k, l, r)
    st = general_state(D, k, l, r)
    found = find_forbidden(st)
    if found is not None:
        return Certificate(pattern, embedding=found[0], method=f"{METHOD}:{found[1]}")
    coloring = require_coloring(D, palette(D, st), limit, METHOD)
    return Certificate(pattern, coloring=coloring, bound=limit, method=METHOD)


def find_forbidden(st: GeneralState):
    """Scan G1..G4 on the host side, then G1..G3 on the converse side (G5)."""
    hit = _scan_side(st.host_side, st.dec.residual_forest)
    if hit is not None:
        return hit
    hit = _scan_side(st.converse_side, None)
    if hit is not None:
        return hit[0], "G5/" + hit[1]
    return None


def _scan_side(s: Side, residual: Forest | None):
    view, pattern = s.view, s.pattern
    F_A, F_B = s.F_A, s.F_B
    A_top, B_top = s.A_top(), s.B_top()
    in_A, in_B = set(A_top), set(B_top)
    out_adj = view.graph.out_adj

    for x in A_top:  # G1: arcs inside an A band
        for y in out_adj[x]:
            if y in in_A and s.A_band(x) == s.A_band(y):
                tag, seq = _a_band_path(s, x, y)
                return view.emit(pattern, seq, tag), tag

    for x in B_top:  # G2: arcs inside a B band
        for y in out_adj[x]:
            if y in in_B and s.B_band(x) == s.B_band(y):
                tag, seq = _b_band_path(s, x, y)
                return view.emit(pattern, seq, tag), tag

    k, l = s.k, s.l
    for x in A_top:  # G3: arcs between the deep A and deep B levels
        for y in out_adj[x]:
            if y in in_B:
                tail = F_B.climb(y, l)
                seq = chain(F_A, x, k) + tail + s.out_of_B(tail[-1])
                return view.emit(pattern, seq, "G3a"), "G3a"
    for y in B_top:
        for x in out_adj[y]:
            if x in in_A:
                tail = F_B.climb(y, l - 1)
                seq = chain(F_A, x, k + 1) + tail + s.out_of_B(tail[-1])
                return view.emit(pattern, seq, "G3b"), "G3b"

    if residual is None:
        return None
    deep = {v for v, lv in residual.level.items() if lv >= k + 1}
    for v in sorted(deep):  # G4: deep A/B levels against deep residual levels
        for u in view.graph.in_adj[v]:
            if u in in_A:
                tag, tail = "G4a", F_A.climb(u, l)
                seq = chain(residual, v, k + 1) + tail + s.out_of_A(tail[-1])
            elif u in in_B:
                tag, tail = "G4c", F_B.climb(u, l - 1)
                seq = chain(residual, v, k + 1) + tail + s.out_of_B(tail[-1])
            else:
                continue
            return view.emit(pattern, seq, tag), tag
        for u in out_adj[v]:
            if u in in_A:
                tag, tail = "G4b", F_A.climb(u, l + 1)
                seq = chain(residual, v, k) + tail + s.out_of_A(tail[-1])
            elif u in in_B:
                tag, tail = "G4d", F_B.climb(u, l)
                seq = chain(residual, v, k) + tail + s.out_of_B(tail[-1])
            else:
                continue
            return view.emit(pattern, seq, tag), tag
    return None


def _a_band_path(s: Side, x: int, y: int) -> tuple[str, list[int]]:
    """Close a P(k,l,r) from the arc x->y joining two levels of one A band."""
    F, k, l = s.F_A, s.k, s.l
    lx, ly = F.level[x], F.level[y]
    if lx < ly:
        u, v, d = x, y, ly - lx
        if d >= l + 1 and lx >= k:
            tail = F.climb(v, l + 1)
            return "G1a", chain(F, u, k) + tail + s.out_of_A(tail[-1])
        if d >= k + 1 and lx >= l:
            tail = F.climb(u, l)
            return "G1b", chain(F, v, k + 1) + tail + s.out_of_A(tail[-1])
    else:
        # Backward arc of a final forest: y is an ancestor of x.
        v, u, d = x, y, lx - ly
        if d >= l and ly >= k + 1:
            tail = F.climb(v, l)
            return "G1c", chain(F, u, k + 1) + tail + s.out_of_A(tail[-1])
        if d >= k and ly >= l + 1:
            tail = F.climb(u, l + 1)
            return "G1d", chain(F, v, k) + tail + s.out_of_A(tail[-1])
    raise InternalConstructionError(f"no A-band construction for arc ({x}, {y}) at levels {lx}, {ly}")


def _b_band_path(s: Side, x: int, y: int) -> tuple[str, list[int]]:
    """Close a P(k,l,r) from the arc x->y joining two levels of one B band."""
    F, k, l = s.F_B, s.k, s.l
    lx, ly = F.level[x], F.level[y]
    if lx < ly:
        u, v, d = x, y, ly - lx
        if d >= k + 1 and lx >= l - 1:
            tail = F.climb(u, l - 1)
            return "G2a", chain(F, v, k + 1) + tail + s.out_of_B(tail[-1])
        if d >= l and lx >= k:
            tail = F.climb(v, l)
            return "G2b", chain(F, u, k) + tail + s.out_of_B(tail[-1])
    else:
        v, u, d = x, y, lx - ly
        if d >= k and ly >= l:
            tail = F.climb(u, l)
            return "G2c", chain(F, v, k) + tail + s.out_of_B(tail[-1])
        if d >= l - 1 and ly >= k + 1:
            tail = F.climb(v, l - 1)
            return "G2d", chain(F, u, k + 1) + tail + s.out_of_B(tail[-1])
    raise InternalConstructionError(f"no B-band construction for arc ({x}, {y}) at levels {lx}, {ly}")


def palette(D: Digraph, st: GeneralState) -> list[int]:
    k, l, r = st.k, st.l, st.r
    colors: list[int | None] = [None] * D.n
    for layer in st.dec.layers:
        for j, v in enumerate(layer.path, start=1):
            colors[v] = j
    for v, lv in st.dec.residual_forest.level.items():
        colors[v] = lv

    next_color = k + r

    def fresh(count: int) -> list[int]:
        nonlocal next_color
        out = list(range(next_color, next_color + count))
        next_color += count
        return out

    # A and B touch layers only at positions <= k and, once G4 is clear, the
    # residual only below level k+1, so their deep bands reuse k+1..k+r-1.
    hs = st.host_side
    shared = list(range(k + 1, k + r))
    width = max(hs.A_modulus, hs.B_modulus)
    shared += fresh(max(0, width - len(shared)))
    _color_side(hs, colors, shared, fresh)

    cs = st.converse_side
    _color_side(cs, colors, fresh(max(cs.A_modulus, cs.B_modulus)), fresh)
    return colors


def _color_side(s: Side, colors: list, bands: list[int], fresh) -> None:
    low_A = fresh(s.A_threshold - 1)
    for v, lv in s.F_A.level.items():
        colors[v] = low_A[lv - 1] if lv < s.A_threshold else bands[s.A_band(v)]
    low_B = fresh(s.B_threshold - 1)
    for v, lv in s.F_B.level.items():
        colors[v] = low_B[lv - 1] if lv < s.B_threshold else bands[s.B_band(v)]
