"""Certifying algorithms for three-block oriented paths in digraphs.

Given a digraph and a pattern P(k,l,r) (k forward arcs, then l backward,
then r forward), :func:`certify` returns either an embedding of the path or a
proper coloring of the underlying graph that stays within a fixed bound.
Both outcomes are validated before they are returned.
"""

from .api import certify, check_supported, oracle_certificate
from .certificate import Certificate
from .certify_k1l import certify_middle_one, middle_one_bound
from .certify_klr import bound, certify_three_blocks, three_block_case
from .digraph import (BlockPattern, Coloring, Digraph, PathEmbedding, build, induced, reverse,
                      validate_coloring, validate_embedding)
from .errors import (DuplicateArc, GraphError, InternalConstructionError, LengthMismatch,
                     LimitExceeded, LoopArc, NotFinal, ParseError, TripathError, TwoCycle,
                     UnsupportedPattern, VertexOutOfRange)
from .forest import (Forest, Orientation, extract_path, final_spanning_inforest,
                     final_spanning_outforest, is_final, level_coloring)
from .oracle import (OracleLimits, chromatic_number, contains_pattern, gen_random,
                     gen_tournament, gen_transitive_tournament)
from .peel import Decomposition, Layer, cross_edge_audit, peel

__all__ = [
    "BlockPattern", "Certificate", "Coloring", "Decomposition", "Digraph", "DuplicateArc",
    "Forest", "GraphError", "InternalConstructionError", "Layer", "LengthMismatch",
    "LimitExceeded", "LoopArc", "NotFinal", "OracleLimits", "Orientation", "ParseError",
    "PathEmbedding", "TripathError", "TwoCycle", "UnsupportedPattern", "VertexOutOfRange",
    "bound", "build", "certify", "certify_middle_one", "certify_three_blocks",
    "check_supported", "chromatic_number", "contains_pattern", "cross_edge_audit",
    "extract_path", "final_spanning_inforest", "final_spanning_outforest", "gen_random",
    "gen_tournament", "gen_transitive_tournament", "induced", "is_final", "level_coloring",
    "middle_one_bound", "oracle_certificate", "peel", "reverse", "three_block_case",
    "validate_coloring", "validate_embedding",
]
