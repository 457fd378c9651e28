import json
from pathlib import Path

import pytest

from tripath import build, gen_random

DATA = Path(__file__).parent / "data"


def directed_path(n):
    return build(n, [(i, i + 1) for i in range(n - 1)])


def pattern_digraph(k, l, r):
    """The oriented path P(k,l,r) itself, vertices numbered along the path."""
    arcs = []
    for j in range(k + l + r):
        forward = j < k or j >= k + l
        arcs.append((j, j + 1) if forward else (j + 1, j))
    return build(k + l + r + 1, arcs)


def corpus(count, n_max, probs=(0.05, 0.2, 0.5), seed=0, n_min=1):
    """Seeded random digraphs; sizes and densities cycle deterministically."""
    out = []
    for i in range(count):
        n = n_min + (i * 7 + seed) % (n_max - n_min + 1)
        out.append(gen_random(n, probs[i % len(probs)], seed * 100003 + i))
    return out


@pytest.fixture(scope="session")
def first_hits():
    """One digraph per forbidden configuration, each the first one found by its certifier."""
    raw = json.loads((DATA / "first_hits.json").read_text())
    return {tag: (build(e["n"], e["arcs"]), tuple(e["pattern"])) for tag, e in raw.items()}


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
