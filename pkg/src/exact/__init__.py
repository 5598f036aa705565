"""
Exact LCS oracles.

Quadratic dynamic programming, the sparse matching-pair algorithm, and the
strictly-increasing pair chain primitive they share with the pair sampler.
"""

from .dp import lcs_length, lcs_quadratic
from .lis import PairSequence, PrefixMaxTree, chain_from_groups, lis_pairs
from .sparse import iter_match_groups, lcs_sparse

__all__ = [
    "PairSequence",
    "PrefixMaxTree",
    "chain_from_groups",
    "iter_match_groups",
    "lcs_length",
    "lcs_quadratic",
    "lcs_sparse",
    "lis_pairs",
]
