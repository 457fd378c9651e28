import itertools
import random

import pytest

from tripath import (BlockPattern, OracleLimits, build, chromatic_number, contains_pattern,
                     gen_random, gen_tournament, gen_transitive_tournament, validate_embedding)
from tripath.errors import LimitExceeded
from tripath.oracle import longest_path_order, optimal_coloring
from tripath.digraph import Coloring, validate_coloring

from conftest import corpus, directed_path

P111 = BlockPattern(1, 1, 1)


def brute_contains(D, p):
    for seq in itertools.permutations(range(D.n), p.order):
        if all(D.has_arc(seq[j], seq[j + 1]) if p.forward(j) else D.has_arc(seq[j + 1], seq[j])
               for j in range(p.length)):
            return seq
    return None


def brute_chi(D):
    for k in range(1, D.n + 1):
        for colors in itertools.product(range(k), repeat=D.n):
            if all(colors[u] != colors[v] for u, v in D.arcs):
                return k
    return 0


def test_contains_examples():
    assert contains_pattern(build(3, [(0, 1), (1, 2), (2, 0)]), P111) is None
    emb = contains_pattern(gen_transitive_tournament(4), P111)
    assert emb.vertices == (0, 2, 1, 3)
    assert contains_pattern(directed_path(4), P111) is None


def test_contains_matches_permutation_search():
    for D in corpus(80, 7, probs=(0.3, 0.6, 0.9), seed=51):
        for blocks in ((1, 1, 1), (2, 1, 1), (1, 2, 2), (2, 1, 3)):
            p = BlockPattern(*blocks)
            got, want = contains_pattern(D, p), brute_contains(D, p)
            assert (got is None) == (want is None)
            if got is not None:
                assert got.vertices == want  # permutations come out lexicographically
                assert validate_embedding(D, got)


def test_none_stable_under_relabeling():
    rng = random.Random(52)
    for D in corpus(40, 9, probs=(0.3, 0.5), seed=52):
        perm = list(range(D.n))
        rng.shuffle(perm)
        E = build(D.n, [(perm[u], perm[v]) for u, v in D.arcs])
        p = BlockPattern(2, 1, 2)
        assert (contains_pattern(D, p) is None) == (contains_pattern(E, p) is None)


@pytest.mark.parametrize("m", range(4, 9))
def test_transitive_tournaments_contain_every_pattern(m):
    D = gen_transitive_tournament(m)
    for k in range(1, m):
        for l in range(1, m - k):
            r = m - 1 - k - l
            if r >= 1:
                assert contains_pattern(D, BlockPattern(k, l, r)) is not None


def test_chi_examples():
    assert chromatic_number(build(5, [])) == 1
    for m in (1, 4, 7):
        assert chromatic_number(gen_transitive_tournament(m)) == m
    assert chromatic_number(build(5, [(0, 1), (2, 1), (2, 3), (3, 4), (0, 4)])) == 3
    assert chromatic_number(build(0, [])) == 0


def test_chi_matches_exhaustive_colorings():
    for D in corpus(60, 7, probs=(0.3, 0.5, 0.8), seed=53):
        chi = chromatic_number(D)
        assert chi == brute_chi(D)
        col = optimal_coloring(D)
        assert validate_coloring(D, Coloring(tuple(col))) and max(col) == chi


def test_longest_path_order():
    assert longest_path_order(directed_path(6)) == 6
    assert longest_path_order(build(3, [])) == 1
    assert longest_path_order(build(3, [(0, 1), (1, 2), (2, 0)])) == 3


def test_limits():
    D = gen_random(15, 0.3, 1)
    with pytest.raises(LimitExceeded):
        contains_pattern(D, P111)
    with pytest.raises(LimitExceeded):
        chromatic_number(gen_random(13, 0.3, 1))
    small = OracleLimits(max_vertices_path=5, max_vertices_chi=5)
    with pytest.raises(LimitExceeded):
        chromatic_number(gen_random(6, 0.3, 1), small)
    with pytest.raises(ValueError):
        OracleLimits(0, 3)


def test_generators():
    assert gen_transitive_tournament(3).arc_list() == [(0, 1), (0, 2), (1, 2)]
    assert gen_random(8, 0.0, 3).m == 0
    for n in (1, 5, 10):
        T = gen_tournament(n, 4)
        assert T.m == n * (n - 1) // 2
        assert not any((v, u) in T.arcs for u, v in T.arcs)
    assert gen_random(20, 0.4, 7).arcs == gen_random(20, 0.4, 7).arcs
    assert gen_random(20, 0.4, 7).arcs != gen_random(20, 0.4, 8).arcs
    with pytest.raises(ValueError):
        gen_random(0, 0.5, 1)
    with pytest.raises(ValueError):
        gen_random(3, 1.5, 1)
