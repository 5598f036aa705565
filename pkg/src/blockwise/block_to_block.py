"""
Block-to-block dynamic program.

No two characters of one s-block are matched to different t-blocks and each
matched block pair contributes copies of a single symbol, so the problem
reduces to a weighted LCS over the block score table.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

import numpy as np

from src.blockwise.blocks import BlockScoreTable, build_score_table, decompose_blocks
from src.core.exceptions import LengthMismatchError
from src.core.logging import setup_logger
from src.core.rng import derive_seed
from src.core.sequences import build_occurrence_index
from src.core.types import MatchChain, OccurrenceIndex, SymbolString

logger = setup_logger("blockwise")


@dataclass(frozen=True, slots=True, eq=False)
class BlockToBlockResult:
    chain: MatchChain
    table: BlockScoreTable
    D: np.ndarray
    matched: tuple[tuple[int, int], ...]


def block_dp(T: np.ndarray) -> np.ndarray:
    """D[i][j] = max(D[i-1][j], D[i][j-1], T[i][j] + D[i-1][j-1]), 1-based, D[0][*] = D[*][0] = 0."""
    rows, cols = T.shape
    D = np.zeros((rows + 1, cols + 1), dtype=np.int64)
    for i in range(1, rows + 1):
        row = np.zeros(cols + 1, dtype=np.int64)
        np.maximum(D[i - 1, 1:], D[i - 1, :-1] + T[i - 1], out=row[1:])
        D[i] = np.maximum.accumulate(row)
    return D


def _traceback(T: np.ndarray, D: np.ndarray) -> list[tuple[int, int]]:
    matched: list[tuple[int, int]] = []
    i, j = T.shape
    while i > 0 and j > 0:
        if D[i, j] == T[i - 1, j - 1] + D[i - 1, j - 1]:
            if T[i - 1, j - 1] > 0:
                matched.append((i, j))
            i -= 1
            j -= 1
        elif D[i, j] == D[i - 1, j]:
            i -= 1
        else:
            j -= 1
    matched.reverse()
    return matched


def _occurrences_in(index: OccurrenceIndex, symbol: int, start: int, count: int) -> list[int]:
    positions = index.positions(symbol)
    first = bisect_left(positions, start)
    return list(positions[first : first + count])


def solve_block_to_block(s: SymbolString, t: SymbolString, seed: int) -> BlockToBlockResult:
    if len(s) != len(t):
        raise LengthMismatchError(len(s), len(t))
    if not len(s):
        empty = np.zeros((0, 0), dtype=np.int64)
        return BlockToBlockResult(
            MatchChain(), BlockScoreTable(empty, empty), np.zeros((1, 1), dtype=np.int64), ()
        )

    sB, tB = decompose_blocks(s), decompose_blocks(t)
    table = build_score_table(sB, tB, derive_seed(seed, "score"))
    D = block_dp(table.T)
    matched = _traceback(table.T, D)

    s_index, t_index = build_occurrence_index(s), build_occurrence_index(t)
    pairs: list[tuple[int, int]] = []
    for i, j in matched:
        symbol = int(table.chosen[i - 1, j - 1])
        count = int(table.T[i - 1, j - 1])
        left = _occurrences_in(s_index, symbol, sB.spans[i - 1][0], count)
        right = _occurrences_in(t_index, symbol, tB.spans[j - 1][0], count)
        pairs.extend(zip(left, right, strict=True))

    chain = MatchChain(tuple(pairs))
    logger.debug(f"{len(sB)}x{len(tB)} blocks, {len(matched)} block pairs, length {len(chain)}")
    return BlockToBlockResult(chain=chain, table=table, D=D, matched=tuple(matched))


def alg3_block_to_block(s: SymbolString, t: SymbolString, seed: int) -> MatchChain:
    return solve_block_to_block(s, t, seed).chain
