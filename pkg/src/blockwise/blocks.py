"""Block decomposition and the random-symbol block score table."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from src.core.exceptions import ParameterRangeError
from src.core.rng import make_rng
from src.core.types import FrequencyTable, SymbolString


@dataclass(frozen=True, slots=True, eq=False)
class BlockDecomposition:
    """
    A string split into consecutive blocks of ``block_size`` characters;
    only the last block may be shorter.
    """

    string: SymbolString
    block_size: int
    spans: tuple[tuple[int, int], ...]
    freq: tuple[FrequencyTable, ...]

    def __len__(self) -> int:
        return len(self.spans)

    def block(self, index: int) -> SymbolString:
        """Block ``index`` (1-based) as its own string."""
        start, end = self.spans[index - 1]
        return SymbolString(self.string.symbols[start - 1 : end], self.string.alphabet_size)

    def block_of(self, position: int) -> int:
        """1-based block index containing a 1-based string position."""
        return (position - 1) // self.block_size + 1


@dataclass(frozen=True, slots=True, eq=False)
class BlockScoreTable:
    """
    ``chosen[i][j]``: symbol at a random position of block i of s;
    ``T[i][j]``: min of its frequencies in block i of s and block j of t.
    Stored 0-based.
    """

    T: np.ndarray
    chosen: np.ndarray


def block_size_for(n: int) -> int:
    """ceil(sqrt(n)) for n >= 1."""
    return math.isqrt(n - 1) + 1


def decompose_blocks(s: SymbolString) -> BlockDecomposition:
    n = len(s)
    if n < 1:
        raise ParameterRangeError("len(s)", n, "[1, inf)")
    size = block_size_for(n)
    spans = tuple((start, min(start + size - 1, n)) for start in range(1, n + 1, size))
    freq = tuple(FrequencyTable.of(s.symbols[start - 1 : end]) for start, end in spans)
    return BlockDecomposition(string=s, block_size=size, spans=spans, freq=freq)


def build_score_table(
    sB: BlockDecomposition, tB: BlockDecomposition, seed: int
) -> BlockScoreTable:
    """
    For every block pair draw a uniform position of the s-block; row i draws
    from its own derived stream so rows are independent and reproducible.
    """
    rows, cols = len(sB), len(tB)
    if not rows or not cols:
        raise ParameterRangeError("blocks", (rows, cols), "non-empty decompositions")
    symbols = sB.string.symbols
    T = np.zeros((rows, cols), dtype=np.int64)
    chosen = np.zeros((rows, cols), dtype=np.int64)
    for i, (start, end) in enumerate(sB.spans):
        offsets = make_rng(seed, i).integers(0, end - start + 1, size=cols)
        picked = symbols[start - 1 + offsets].tolist()
        chosen[i] = picked
        own = sB.freq[i]
        T[i] = [min(own[c], tB.freq[j][c]) for j, c in enumerate(picked)]
    return BlockScoreTable(T=T, chosen=chosen)
