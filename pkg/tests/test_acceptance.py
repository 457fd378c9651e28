"""Acceptance criteria, one test per criterion.

Each criterion prints a single PASS/FAIL line (collected into the pytest
terminal summary, or printed directly when this file is run as a script).
"""

from __future__ import annotations

import random
import sys
import time

import pytest

from tripath import (BlockPattern, bound, certify_middle_one, certify_three_blocks,
                     chromatic_number, contains_pattern, cross_edge_audit,
                     final_spanning_outforest, gen_random, gen_transitive_tournament, is_final,
                     level_coloring, middle_one_bound, peel, reverse, validate_coloring,
                     validate_embedding)

RESULTS: list[str] = []


def _seeded(count: int, sizes, probs, seed: int):
    rng = random.Random(seed)
    for _ in range(count):
        yield gen_random(rng.choice(sizes), rng.choice(probs), rng.randrange(2**31))


def _is_directed_path(D, seq) -> bool:
    return len(set(seq)) == len(seq) and all(D.has_arc(a, b) for a, b in zip(seq, seq[1:]))


def criterion_1():
    start = time.perf_counter()
    failures = 0
    patterns = [((2, 3), 10), ((3, 3), 12), ((2, 4), 12)]
    for D in _seeded(500, range(1, 61), (0.05, 0.2, 0.5), seed=1):
        for (k, l), cap in patterns:
            assert middle_one_bound(k, l) == cap
            cert = certify_middle_one(D, k, l)
            if not cert.check(D) or (not cert.is_path and cert.coloring.num_colors > cap):
                failures += 1
    elapsed = time.perf_counter() - start
    return failures == 0 and elapsed < 60, f"{failures} failures in 1500 runs, {elapsed:.1f}s"


def criterion_2():
    details, ok = [], True
    for m, (k, l) in ((11, (2, 3)), (13, (2, 4))):
        D = gen_transitive_tournament(m)
        start = time.perf_counter()
        cert = certify_middle_one(D, k, l)
        elapsed = time.perf_counter() - start
        good = (cert.is_path and cert.embedding.pattern == BlockPattern(k, 1, l)
                and validate_embedding(D, cert.embedding) and elapsed < 1)
        ok = ok and good
        details.append(f"TT{m} {cert.arm} {elapsed * 1000:.0f}ms")
    return ok, ", ".join(details)


def criterion_3():
    start = time.perf_counter()
    p = BlockPattern(2, 1, 3)
    disagreements = paths = 0
    for D in _seeded(200, range(7, 10), (0.3, 0.6, 0.9), seed=3):
        cert = certify_middle_one(D, 2, 3)
        truth = contains_pattern(D, p)
        if truth is None and cert.is_path:
            disagreements += 1
        if cert.is_path:
            paths += 1
            if truth is None or not validate_embedding(D, cert.embedding):
                disagreements += 1
    elapsed = time.perf_counter() - start
    return (disagreements == 0 and elapsed < 120,
            f"{disagreements} disagreements, {paths} paths, {elapsed:.1f}s")


def criterion_4():
    failures = 0
    caps = {(2, 2, 2): 14, (2, 3, 4): 23, (2, 4, 3): 24}
    worst = {klr: 0 for klr in caps}
    for D in _seeded(300, range(1, 51), (0.05, 0.2, 0.5), seed=4):
        for klr, cap in caps.items():
            assert bound(*klr) == cap
            cert = certify_three_blocks(D, *klr)
            if not cert.check(D):
                failures += 1
            elif not cert.is_path:
                worst[klr] = max(worst[klr], cert.coloring.num_colors)
                failures += cert.coloring.num_colors > cap
    used = ", ".join(f"{k}{l}{r}:{w}/{caps[(k, l, r)]}" for (k, l, r), w in worst.items())
    return failures == 0, f"{failures} failures, max colors {used}"


def criterion_5():
    D = gen_transitive_tournament(15)
    start = time.perf_counter()
    cert = certify_three_blocks(D, 2, 2, 2)
    elapsed = time.perf_counter() - start
    ok = cert.is_path and validate_embedding(D, cert.embedding) and elapsed < 5
    return ok, f"{cert.arm} in {elapsed * 1000:.0f}ms"


def criterion_6():
    start = time.perf_counter()
    failures = 0
    for D in _seeded(1000, range(1, 81), (0.02, 0.05, 0.1, 0.3), seed=6):
        F = final_spanning_outforest(D)
        good = is_final(D, F)
        for level in F.level_sets():
            members = set(level)
            good = good and not any(u in members and v in members for u, v in D.arcs)
        good = good and validate_coloring(D, level_coloring(F))
        good = good and all(_is_directed_path(D, F.root_path(v)) for v in range(D.n))
        failures += not good
    elapsed = time.perf_counter() - start
    return failures == 0 and elapsed < 60, f"{failures} failures, {elapsed:.1f}s"


def criterion_7():
    failures = 0
    for D in _seeded(100, range(1, 13), (0.2, 0.4, 0.6, 0.8), seed=7):
        chi = chromatic_number(D)
        F = final_spanning_outforest(D)
        path = F.root_path(F.deepest())
        failures += not (F.depth >= chi and len(path) >= chi and _is_directed_path(D, path))
    return failures == 0, f"{failures} failures"


def criterion_8():
    failures = 0
    for D in _seeded(200, range(1, 61), (0.05, 0.2, 0.5), seed=8):
        for L in (2, 3, 5):
            dec = peel(D, L)
            good = cross_edge_audit(dec) and dec.residual_forest.depth <= L
            good = good and all(len(x.path) == L + 1 and _is_directed_path(D, x.path)
                                for x in dec.layers)
            failures += not good
    return failures == 0, f"{failures} failures in 600 decompositions"


def _formula(case: int, k: int, l: int, r: int) -> int:
    n = k + l + r + 1
    return {1: 2 * (n - 1) + r, 2: 2 * (n - 1) + l + r - k, 3: 2 * (n + l - 1) - k}[case]


def criterion_9():
    start = time.perf_counter()
    bad = 0
    for k in range(2, 11):
        for l in range(2, 11):
            for r in range(2, 11):
                a, c = min(k, r), max(k, r)
                if l == a:
                    bad += _formula(1, a, l, c) != _formula(2, a, l, c)
                if l == c:
                    bad += _formula(2, a, l, c) != _formula(3, a, l, c)
                case = 1 if l <= a else 2 if l <= c else 3
                bad += bound(k, l, r) != _formula(case, a, l, c)
                bad += bound(k, l, r) != bound(r, l, k)
    quoted = bound(2, 2, 2) == 14 and bound(2, 3, 4) == 23 and bound(2, 4, 3) == 24
    elapsed = time.perf_counter() - start
    return bad == 0 and quoted and elapsed < 1, f"{bad} mismatches, {elapsed * 1000:.0f}ms"


def criterion_10():
    failures = 0
    runs = [(certify_middle_one, (2, 1, 3)), (certify_middle_one, (3, 1, 3)),
            (certify_three_blocks, (2, 3, 4)), (certify_three_blocks, (2, 2, 2))]
    for D in _seeded(100, range(1, 41), (0.05, 0.2, 0.5), seed=10):
        R = reverse(D)
        for fn, (k1, k2, k3) in runs:
            outer = (k1, k3) if k2 == 1 else (k1, k2, k3)
            back = (k3, k1) if k2 == 1 else (k3, k2, k1)
            a, b = fn(D, *outer), fn(R, *back)
            good = a.arm == b.arm and a.check(D) and b.check(R)
            if b.is_path:
                emb = b.embedding.reversed()
                good = good and emb.pattern == BlockPattern(k1, k2, k3) and validate_embedding(D, emb)
            failures += not good
    return failures == 0, f"{failures} failures in 400 pairs"


CRITERIA = {
    1: ("certificate soundness sweep (middle block 1)", criterion_1),
    2: ("threshold witness, transitive tournaments 11 and 13", criterion_2),
    3: ("oracle agreement on <= 9 vertices", criterion_3),
    4: ("three-block bound compliance", criterion_4),
    5: ("threshold witness, transitive tournament 15", criterion_5),
    6: ("final forest properties", criterion_6),
    7: ("forest depth against chromatic number", criterion_7),
    8: ("peel invariants", criterion_8),
    9: ("bound function identities", criterion_9),
    10: ("reversal duality", criterion_10),
}


def _line(number: int, ok: bool, detail: str) -> str:
    return f"criterion {number:2d} {'PASS' if ok else 'FAIL'}: {CRITERIA[number][0]} ({detail})"


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, detail = CRITERIA[number][1]()
    line = _line(number, ok, detail)
    RESULTS.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    outcomes = []
    for number in sorted(CRITERIA):
        ok, detail = CRITERIA[number][1]()
        outcomes.append(ok)
        print(_line(number, ok, detail), flush=True)
    sys.exit(0 if all(outcomes) else 1)
