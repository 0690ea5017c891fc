"""Cutwidth, pathwidth and topological containment for semi-complete digraphs."""

from .constants import DESK, PROVEN, Constants
from .containment import contains_on_decomposition, contains_topological
from .cutwidth import approx_cutwidth, cutwidth, exact_cutwidth
from .decomposition import (
    PathDecomposition,
    Separation,
    SeparationChain,
    chain_to_decomposition,
    decomposition_to_chain,
    make_nice,
    verify_path_decomposition,
)
from .digraph import SemiCompleteDigraph, build, from_arcs, ordering_width, outdegree_ordering
from .obstacles import (
    BackwardTangle,
    DegreeTangle,
    MatchingTangle,
    Pattern,
    ShortJungle,
    embed_pattern,
    verify,
)
from .pathwidth import approx_pathwidth, exact_pathwidth, pathwidth

__version__ = "0.1.0"

__all__ = [
    "DESK", "PROVEN", "Constants",
    "contains_on_decomposition", "contains_topological",
    "approx_cutwidth", "cutwidth", "exact_cutwidth",
    "PathDecomposition", "Separation", "SeparationChain", "chain_to_decomposition",
    "decomposition_to_chain", "make_nice", "verify_path_decomposition",
    "SemiCompleteDigraph", "build", "from_arcs", "ordering_width", "outdegree_ordering",
    "BackwardTangle", "DegreeTangle", "MatchingTangle", "Pattern", "ShortJungle", "embed_pattern", "verify",
    "approx_pathwidth", "exact_pathwidth", "pathwidth",
]
