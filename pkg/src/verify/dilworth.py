"""Decomposition of one permutation into classes reverse-ordered by another."""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from src.core.exceptions import PermutationError
from src.verify.permutations import Permutation


@dataclass(frozen=True, slots=True)
class AntichainDecomposition:
    """
    ``levels[k]``: 1-based positions in the second permutation whose longest
    chain ending there has length k + 1. Keys are the first-permutation
    positions of those symbols.
    """

    levels: tuple[tuple[int, ...], ...]
    keys: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.levels)

    def is_partition(self) -> bool:
        flat = sorted(pos for level in self.levels for pos in level)
        return flat == list(range(1, len(self.keys) + 1))

    def is_antichain(self, level: int) -> bool:
        """Keys strictly decrease along increasing positions of the level."""
        keys = [self.keys[pos - 1] for pos in self.levels[level]]
        return all(a > b for a, b in zip(keys, keys[1:], strict=False))

    def symbols(self, p2: Permutation) -> list[list[int]]:
        return [[p2.order.at(pos) for pos in level] for level in self.levels]


def dilworth_decompose(p1: Permutation, p2: Permutation) -> AntichainDecomposition:
    """
    Patience levels of p2 keyed by p1-positions.

    Each new element lands on the first pile whose top key exceeds its own,
    so keys fall within a pile and the pile count equals lcs(p1, p2).
    """
    if p1.m != p2.m or p1.universe.tolist() != p2.universe.tolist():
        raise PermutationError(f"permutations over different symbol sets ({p1.m} vs {p2.m})")
    rank = p1.rank()
    keys = tuple(rank[symbol] for symbol in p2.tolist())

    tops: list[int] = []
    levels: list[list[int]] = []
    for pos, key in enumerate(keys, start=1):
        level = bisect_left(tops, key)
        if level == len(tops):
            tops.append(key)
            levels.append([pos])
        else:
            tops[level] = key
            levels[level].append(pos)
    return AntichainDecomposition(tuple(tuple(level) for level in levels), keys)
