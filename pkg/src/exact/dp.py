"""
Quadratic dynamic program for LCS.

Rows are computed with numpy: given the previous row, every cell of the next
row is ``max(prev[j], prev[j-1] + match[j])`` followed by a running maximum,
which is the textbook recurrence with the horizontal term folded into the
accumulate. The traceback keeps two packed bit-planes per row instead of the
full table.
"""

from __future__ import annotations

import numpy as np

from src.core.types import MatchChain, SymbolString


def _next_row(prev: np.ndarray, match: np.ndarray) -> np.ndarray:
    row = np.empty_like(prev)
    row[0] = 0
    np.maximum(prev[1:], prev[:-1] + match, out=row[1:])
    return np.maximum.accumulate(row)


def lcs_length(s: SymbolString, t: SymbolString) -> int:
    """Exact LCS length in O(|s|·|t|) time and O(|t|) memory."""
    if not len(s) or not len(t):
        return 0
    b = t.symbols
    prev = np.zeros(len(t) + 1, dtype=np.int32)
    for symbol in s.symbols.tolist():
        prev = _next_row(prev, (b == symbol).astype(np.int32))
    return int(prev[-1])


def _bit(plane: np.ndarray, row: int, col: int) -> bool:
    return bool((plane[row, col >> 3] >> (7 - (col & 7))) & 1)


def lcs_quadratic(s: SymbolString, t: SymbolString) -> MatchChain:
    """Maximum-length common subsequence with witness, O(|s|·|t|) time."""
    n, m = len(s), len(t)
    if not n or not m:
        return MatchChain()

    b = t.symbols
    width = (m + 7) // 8
    up = np.empty((n, width), dtype=np.uint8)
    left = np.empty((n, width), dtype=np.uint8)
    prev = np.zeros(m + 1, dtype=np.int32)
    for row, symbol in enumerate(s.symbols.tolist()):
        cur = _next_row(prev, (b == symbol).astype(np.int32))
        up[row] = np.packbits(cur[1:] == prev[1:])
        left[row] = np.packbits(cur[1:] == cur[:-1])
        prev = cur

    pairs: list[tuple[int, int]] = []
    i, j = n, m
    while i > 0 and j > 0:
        if _bit(up, i - 1, j - 1):
            i -= 1
        elif _bit(left, i - 1, j - 1):
            j -= 1
        else:
            pairs.append((i, j))
            i -= 1
            j -= 1
    pairs.reverse()
    return MatchChain(tuple(pairs))
