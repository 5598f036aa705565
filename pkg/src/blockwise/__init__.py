"""
Blockwise approximators.

Both strings are cut into ceil(sqrt n) blocks. The block-to-block program
matches whole block pairs through a randomly sampled symbol; the random shift
solves semi-permutation blocks along one random diagonal; combine keeps the
better of the two.
"""

from .block_to_block import (
    BlockToBlockResult,
    alg3_block_to_block,
    block_dp,
    solve_block_to_block,
)
from .blocks import (
    BlockDecomposition,
    BlockScoreTable,
    block_size_for,
    build_score_table,
    decompose_blocks,
)
from .combine import alg5_combine
from .random_shift import (
    RandomShiftResult,
    SemiPermutation,
    alg4_random_shift,
    reduce_to_semi_permutation,
    semi_permutation_blocks,
    shift_target,
    solve_random_shift,
)

__all__ = [
    "BlockDecomposition",
    "BlockScoreTable",
    "BlockToBlockResult",
    "RandomShiftResult",
    "SemiPermutation",
    "alg3_block_to_block",
    "alg4_random_shift",
    "alg5_combine",
    "block_dp",
    "block_size_for",
    "build_score_table",
    "decompose_blocks",
    "reduce_to_semi_permutation",
    "semi_permutation_blocks",
    "shift_target",
    "solve_block_to_block",
    "solve_random_shift",
]
