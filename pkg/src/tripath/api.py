"""One entry point that routes a pattern to the certifier that handles it."""

from __future__ import annotations

from .certificate import Certificate
from .certify_k1l import certify_middle_one, check_middle_one
from .certify_klr import bound as three_block_bound
from .certify_klr import certify_three_blocks
from .digraph import BlockPattern, Coloring, Digraph
from .errors import UnsupportedPattern
from .oracle import DEFAULT_LIMITS, OracleLimits, contains_pattern, optimal_coloring


def check_supported(p: BlockPattern) -> None:
    k, l, r = p.blocks
    if l == 1:
        check_middle_one(k, r)
    else:
        three_block_bound(k, l, r)


def certify(D: Digraph, p: BlockPattern, fallback: bool = False,
            limits: OracleLimits = DEFAULT_LIMITS) -> Certificate:
    """Certify ``p`` in ``D``.

    Patterns outside the certifiers' range raise UnsupportedPattern unless
    ``fallback`` is set, in which case the exhaustive oracle answers (and may
    raise LimitExceeded on large inputs).
    """
    try:
        check_supported(p)
    except UnsupportedPattern:
        if not fallback:
            raise
        return oracle_certificate(D, p, limits)
    k, l, r = p.blocks
    if l == 1:
        return certify_middle_one(D, k, r)
    return certify_three_blocks(D, k, l, r)


def oracle_certificate(D: Digraph, p: BlockPattern,
                       limits: OracleLimits = DEFAULT_LIMITS) -> Certificate:
    emb = contains_pattern(D, p, limits)
    if emb is not None:
        return Certificate(p, embedding=emb, method="oracle")
    # No bound is claimed: the coloring is optimal, nothing more.
    return Certificate(p, coloring=Coloring(tuple(optimal_coloring(D, limits))), method="oracle")
