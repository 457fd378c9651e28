import pytest

from tripath import (BlockPattern, Coloring, PathEmbedding, build, induced, reverse,
                     validate_coloring, validate_embedding)
from tripath.errors import DuplicateArc, LoopArc, TwoCycle, VertexOutOfRange

from conftest import directed_path

TRIANGLE = [(0, 1), (1, 2), (2, 0)]


def test_build_single_vertex():
    D = build(1, [])
    assert D.n == 1 and D.m == 0


def test_build_cycle_adjacency():
    D = build(3, TRIANGLE)
    assert D.out_adj == ((1,), (2,), (0,))
    assert D.in_adj == ((2,), (0,), (1,))


def test_adjacency_sorted():
    D = build(4, [(0, 3), (0, 1), (0, 2), (2, 1)])
    assert D.out_adj[0] == (1, 2, 3)
    assert D.in_adj[1] == (0, 2)


@pytest.mark.parametrize("n, arcs, err, pair", [
    (2, [(0, 1), (1, 0)], TwoCycle, (1, 0)),
    (2, [(1, 1)], LoopArc, (1, 1)),
    (2, [(0, 1), (0, 1)], DuplicateArc, (0, 1)),
    (2, [(0, 2)], VertexOutOfRange, (0, 2)),
])
def test_build_rejects(n, arcs, err, pair):
    with pytest.raises(err) as info:
        build(n, arcs)
    assert info.value.pair == pair


def test_reverse():
    D = build(3, TRIANGLE)
    assert reverse(D).arcs == {(1, 0), (2, 1), (0, 2)}
    assert reverse(reverse(D)).arcs == D.arcs
    E = build(4, [])
    assert reverse(E).arcs == frozenset() and reverse(E).n == 4
    assert reverse(build(2, [(0, 1)])).arcs == {(1, 0)}


def test_induced():
    D = build(3, TRIANGLE)
    sub, keep = induced(D, {0, 1})
    assert sub.arcs == {(0, 1)} and keep == [0, 1]
    empty, keep = induced(D, set())
    assert empty.n == 0 and keep == []
    same, keep = induced(D, range(3))
    assert same.arcs == D.arcs and keep == [0, 1, 2]
    sub, keep = induced(D, {2, 0})
    assert keep == [0, 2] and sub.arcs == {(1, 0)}
    with pytest.raises(VertexOutOfRange):
        induced(D, {5})


def test_pattern_basics():
    p = BlockPattern(2, 1, 3)
    assert p.length == 6 and p.order == 7
    assert [p.forward(j) for j in range(6)] == [True, True, False, True, True, True]
    assert p.reversed() == BlockPattern(3, 1, 2)
    assert BlockPattern.parse(" 2, 3 ,4") == BlockPattern(2, 3, 4)
    for bad in ("2,3", "0,1,1", "a,b,c"):
        with pytest.raises(ValueError):
            BlockPattern.parse(bad)


def test_validate_embedding_examples():
    p = BlockPattern(2, 1, 3)
    seq = tuple(range(7))
    assert not validate_embedding(directed_path(7), PathEmbedding(p, seq))
    D = build(7, [(0, 1), (1, 2), (3, 2), (3, 4), (4, 5), (5, 6)])
    assert validate_embedding(D, PathEmbedding(p, seq))
    assert not validate_embedding(D, PathEmbedding(p, seq[::-1]))


def test_validate_embedding_malformed():
    D = build(7, [(0, 1), (1, 2), (3, 2), (3, 4), (4, 5), (5, 6)])
    p = BlockPattern(2, 1, 3)
    assert not validate_embedding(D, PathEmbedding(p, (0, 1, 2)))
    assert not validate_embedding(D, PathEmbedding(p, (0, 1, 2, 3, 4, 5, 5)))
    assert not validate_embedding(D, PathEmbedding(p, (0, 1, 2, 3, 4, 5, 9)))


def test_reversed_embedding_lives_in_converse():
    D = build(7, [(0, 1), (1, 2), (3, 2), (3, 4), (4, 5), (5, 6)])
    emb = PathEmbedding(BlockPattern(2, 1, 3), tuple(range(7)))
    back = emb.reversed()
    assert back.pattern == BlockPattern(3, 1, 2)
    assert validate_embedding(reverse(D), back)


def test_validate_coloring_examples():
    assert validate_coloring(build(4, []), Coloring((1, 1, 1, 1)))
    assert not validate_coloring(build(2, [(0, 1)]), Coloring((1, 1)))
    assert validate_coloring(build(3, TRIANGLE), Coloring((1, 2, 3)))
    assert not validate_coloring(build(3, TRIANGLE), Coloring((1, 2)))
    assert not validate_coloring(build(2, []), Coloring((0, 1)))
    assert Coloring((1, 3, 2)).num_colors == 3
