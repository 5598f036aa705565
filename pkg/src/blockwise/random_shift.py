"""
Random shift over semi-permutation blocks.

Every block keeps one uniformly chosen occurrence of each of its symbols. Block
i of s is then solved against block shift(i) of t for one random shift r, and
the two runs of block pairs that stay increasing in both strings are compared.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from src.blockwise.blocks import BlockDecomposition, decompose_blocks
from src.core.exceptions import LengthMismatchError, ParameterRangeError
from src.core.logging import setup_logger
from src.core.rng import derive_seed, make_rng
from src.core.types import MatchChain, Projection, SymbolString
from src.exact.sparse import lcs_sparse

logger = setup_logger("blockwise")


@dataclass(frozen=True, slots=True, eq=False)
class SemiPermutation:
    """A block reduced so no symbol repeats; positions are 1-based in the block."""

    kept: Projection

    def __post_init__(self) -> None:
        symbols = self.kept.string.symbols
        if np.unique(symbols).size != symbols.size:
            raise ParameterRangeError("kept", "repeated symbol", "distinct symbols")

    def __len__(self) -> int:
        return len(self.kept)

    @property
    def string(self) -> SymbolString:
        return self.kept.string

    @property
    def positions(self) -> np.ndarray:
        return self.kept.positions


@dataclass(frozen=True, slots=True, eq=False)
class RandomShiftResult:
    chain: MatchChain
    shift: int
    q_lengths: tuple[int, ...]
    first: MatchChain
    second: MatchChain


def reduce_to_semi_permutation(block: SymbolString, seed: int) -> SemiPermutation:
    """
    Keep one occurrence per distinct symbol, uniform among its occurrences and
    independent across symbols: the first occurrence under a uniform shuffle.
    """
    if not len(block):
        return SemiPermutation(block.project(np.empty(0, dtype=np.int64)))
    order = make_rng(seed).permutation(len(block))
    _, first = np.unique(block.symbols[order], return_index=True)
    kept = np.sort(order[first]) + 1
    return SemiPermutation(block.project(kept))


def shift_target(i: int, r: int, blocks: int) -> int:
    """((i + r - 1) mod B) + 1: the 1-based shift that maps B to B."""
    return (i + r - 1) % blocks + 1


def semi_permutation_blocks(
    decomposition: BlockDecomposition, seed: int, side: str
) -> list[SemiPermutation]:
    """One semi-permutation per block, each on seed (seed, side, block index)."""
    return [
        reduce_to_semi_permutation(decomposition.block(i), derive_seed(seed, side, i))
        for i in range(1, len(decomposition) + 1)
    ]


def solve_random_shift(
    s: SymbolString, t: SymbolString, seed: int, shift: int | None = None
) -> RandomShiftResult:
    """
    Solve block i of s against block shift(i) of t and keep the longer of the
    two runs that stay increasing in both strings.

    Args:
        s: First string.
        t: Second string, of the same length.
        seed: Seed for the shift and the per-block reductions.
        shift: A fixed shift in [1, B]; drawn uniformly when omitted.

    Returns:
        The chosen chain, the shift, every per-block length and both runs.

    Raises:
        LengthMismatchError: The strings differ in length.
        ParameterRangeError: ``shift`` outside [1, B].
    """
    if len(s) != len(t):
        raise LengthMismatchError(len(s), len(t))
    if not len(s):
        return RandomShiftResult(MatchChain(), 0, (), MatchChain(), MatchChain())

    sB, tB = decompose_blocks(s), decompose_blocks(t)
    blocks = len(sB)
    if shift is None:
        shift = int(make_rng(seed, "shift").integers(1, blocks + 1))
    elif not 1 <= shift <= blocks:
        raise ParameterRangeError("shift", shift, f"[1, {blocks}]")

    s_semi = semi_permutation_blocks(sB, seed, "s")
    t_semi = semi_permutation_blocks(tB, seed, "t")

    pieces: list[MatchChain] = []
    for i in range(1, blocks + 1):
        j = shift_target(i, shift, blocks)
        left, right = s_semi[i - 1], t_semi[j - 1]
        local = lcs_sparse(left.string, right.string)
        pieces.append(
            local.remap(
                left.positions + (sB.spans[i - 1][0] - 1),
                right.positions + (tB.spans[j - 1][0] - 1),
            )
        )

    cut = blocks - shift
    first = MatchChain(tuple(pair for piece in pieces[:cut] for pair in piece))
    second = MatchChain(tuple(pair for piece in pieces[cut:] for pair in piece))
    chain = MatchChain.longest(first, second)
    logger.debug(f"shift {shift} of {blocks}: runs {len(first)} / {len(second)}")
    return RandomShiftResult(
        chain=chain,
        shift=shift,
        q_lengths=tuple(len(piece) for piece in pieces),
        first=first,
        second=second,
    )


def alg4_random_shift(s: SymbolString, t: SymbolString, seed: int) -> MatchChain:
    return solve_random_shift(s, t, seed).chain
