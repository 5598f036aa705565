"""Shared test helpers: random instances and a brute-force LCS oracle."""

from __future__ import annotations

import numpy as np

from src.core.types import MatchChain, SymbolString


def brute_lcs(a: list[int], b: list[int]) -> int:
    """Textbook O(|a||b|) LCS length in pure Python."""
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0] * (len(b) + 1)
        for j, y in enumerate(b, start=1):
            cur[j] = prev[j - 1] + 1 if x == y else max(prev[j], cur[j - 1])
        prev = cur
    return prev[-1]


def random_string(rng: np.random.Generator, n: int, m: int) -> SymbolString:
    return SymbolString.of(rng.integers(0, m, n), m)


def random_pair(seed: int, n: int, m: int) -> tuple[SymbolString, SymbolString]:
    rng = np.random.default_rng(seed)
    return random_string(rng, n, m), random_string(rng, n, m)


def chain_symbols(s: SymbolString, chain: MatchChain) -> list[int]:
    return [s.at(i) for i, _ in chain]
