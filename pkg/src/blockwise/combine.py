"""Combination of the two block algorithms on one pair."""

from src.blockwise.block_to_block import alg3_block_to_block
from src.blockwise.random_shift import alg4_random_shift
from src.core.rng import derive_seed
from src.core.types import MatchChain, SymbolString


def alg5_combine(s: SymbolString, t: SymbolString, seed: int) -> MatchChain:
    """The longer of the block-to-block and random-shift chains."""
    return MatchChain.longest(
        alg3_block_to_block(s, t, derive_seed(seed, "alg3")),
        alg4_random_shift(s, t, derive_seed(seed, "alg4")),
    )
