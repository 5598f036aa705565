"""
Completion of semi-permutation blocks into permutations of a common symbol set.

A mask is assembled from a few randomly chosen blocks (their unseen symbols in
in-block order, then every leftover symbol ascending). Each block is completed
by appending the symbols it misses in mask order, so its kept sequence stays a
prefix.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from src.blockwise.random_shift import SemiPermutation
from src.core.exceptions import ParameterRangeError
from src.core.rng import make_rng
from src.verify.permutations import Permutation


@dataclass(frozen=True, slots=True, eq=False)
class RefinementResult:
    permutations: tuple[Permutation, ...]
    mask: Permutation
    sampled: tuple[int, ...]


def default_sample_count(m: int) -> int:
    """ceil(4 log2 m), at least 1."""
    return max(1, math.ceil(4 * math.log2(m))) if m > 1 else 1


def build_mask(
    blocks: Sequence[SemiPermutation], sampled: Iterable[int], universe: np.ndarray
) -> list[int]:
    mask: list[int] = []
    seen: set[int] = set()
    for index in sampled:
        for symbol in blocks[index].string.tolist():
            if symbol not in seen:
                seen.add(symbol)
                mask.append(symbol)
    mask.extend(symbol for symbol in universe.tolist() if symbol not in seen)
    return mask


def refine_to_complete(
    blocks: Sequence[SemiPermutation],
    sample_count: int | None = None,
    seed: int = 0,
    alphabet: Iterable[int] | None = None,
) -> RefinementResult:
    """
    Complete every semi-permutation block to a permutation of the alphabet.

    A mask is built from a random sample of the blocks; each block keeps its
    own symbols as a prefix and appends the missing ones in mask order.

    Args:
        blocks: The semi-permutation blocks, in string order.
        sample_count: Blocks sampled for the mask; defaults to
            ``default_sample_count`` of the alphabet size.
        seed: Seed for the block sample.
        alphabet: The common symbol set. Defaults to the union of the blocks'
            symbols and must contain all of them.

    Returns:
        The completed permutations, the mask and the sampled block indices.

    Raises:
        ParameterRangeError: No blocks were given, or ``sample_count`` < 1.
    """
    if not blocks:
        raise ParameterRangeError("len(blocks)", 0, "[1, inf)")
    if alphabet is None:
        universe = np.unique(np.concatenate([block.string.symbols for block in blocks]))
    else:
        universe = np.unique(np.asarray(list(alphabet), dtype=np.int64))
    if sample_count is None:
        sample_count = default_sample_count(universe.size)
    if sample_count < 1:
        raise ParameterRangeError("sample_count", sample_count, "[1, inf)")

    count = min(sample_count, len(blocks))
    sampled = tuple(make_rng(seed).choice(len(blocks), size=count, replace=False).tolist())
    mask = build_mask(blocks, sampled, universe)

    completed = []
    for block in blocks:
        kept = block.string.tolist()
        present = set(kept)
        completed.append(
            Permutation.of(kept + [symbol for symbol in mask if symbol not in present], universe)
        )
    return RefinementResult(
        permutations=tuple(completed), mask=Permutation.of(mask, universe), sampled=sampled
    )
