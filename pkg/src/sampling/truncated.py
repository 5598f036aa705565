"""Character sampling with the column-truncated LCS table."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from src.core.exceptions import LengthMismatchError, ParameterRangeError
from src.core.logging import setup_logger
from src.core.rng import make_rng
from src.core.sequences import build_occurrence_index
from src.core.types import MatchChain, OccurrenceIndex, SymbolString

logger = setup_logger("sampling")


def ceil_power(n: int, exponent: float) -> int:
    """ceil(n ** exponent), at least 1, tolerant of float error at exact powers."""
    return max(1, math.ceil(n**exponent - 1e-9))


@dataclass(frozen=True, slots=True)
class SampleParams:
    """Sampling rate, column bound and seed of one character-sampling run."""

    rate: float
    cap: int
    seed: int

    def __post_init__(self) -> None:
        if not 0.0 < self.rate <= 1.0:
            raise ParameterRangeError("rate", self.rate, "(0, 1]")
        if self.cap < 1:
            raise ParameterRangeError("cap", self.cap, "[1, inf)")

    @classmethod
    def for_delta(cls, n: int, delta: float, seed: int) -> SampleParams:
        exponent = (1.0 - delta) / 2.0
        return cls(rate=min(1.0, n**-exponent), cap=ceil_power(n, exponent), seed=seed)


@dataclass(frozen=True, slots=True)
class TruncatedDpTable:
    """
    T*[i][j]: smallest end position in t of a common subsequence of length j
    between s_star[1..i] and t, or ``inf`` (= |t| + 1) when none exists.
    ``took[i][j]`` records whether the cell came from the match branch.
    """

    rows: list[list[int]]
    took: list[bytearray]
    cap: int
    inf: int

    def value(self, i: int, j: int) -> int | None:
        cell = self.rows[i][j]
        return None if cell >= self.inf else cell

    def best_length(self) -> int:
        last = self.rows[-1]
        length = 0
        while length < self.cap and last[length + 1] < self.inf:
            length += 1
        return length


def truncated_dp_table(
    s_star: SymbolString,
    t: SymbolString,
    cap: int,
    t_index: OccurrenceIndex | None = None,
) -> TruncatedDpTable:
    if cap < 1:
        raise ParameterRangeError("cap", cap, "[1, inf)")
    index = t_index if t_index is not None else build_occurrence_index(t)
    inf = len(t) + 1
    first_row = [inf] * (cap + 1)
    first_row[0] = 0
    rows = [first_row]
    took = [bytearray(cap + 1)]

    for i, symbol in enumerate(s_star.symbols.tolist(), start=1):
        prev = rows[-1]
        cur = prev.copy()
        flags = bytearray(cap + 1)
        for j in range(1, min(cap, i) + 1):
            start = prev[j - 1]
            if start >= inf:
                break
            found = index.first_after(symbol, start)
            if found is not None and found < cur[j]:
                cur[j] = found
                flags[j] = 1
        rows.append(cur)
        took.append(flags)

    return TruncatedDpTable(rows=rows, took=took, cap=cap, inf=inf)


def truncated_dp_lcs(
    s_star: SymbolString,
    t: SymbolString,
    cap: int,
    positions: np.ndarray | None = None,
    t_index: OccurrenceIndex | None = None,
) -> MatchChain:
    """
    LCS of (s_star, t) truncated at ``cap`` columns, with witness.

    ``positions`` maps s_star's characters to their positions in the string
    they were sampled from; by default they are s_star's own positions.
    """
    table = truncated_dp_table(s_star, t, cap, t_index)
    pairs: list[tuple[int, int]] = []
    i, j = len(s_star), table.best_length()
    while j > 0:
        if table.took[i][j]:
            source = int(positions[i - 1]) if positions is not None else i
            pairs.append((source, table.rows[i][j]))
            j -= 1
        i -= 1
    pairs.reverse()
    return MatchChain(tuple(pairs))


def _sample_and_solve(s: SymbolString, t: SymbolString, params: SampleParams) -> MatchChain:
    rng = make_rng(params.seed)
    kept = np.flatnonzero(rng.random(len(s)) < params.rate) + 1
    sample = s.project(kept)
    chain = truncated_dp_lcs(sample.string, t, params.cap, positions=sample.positions)
    logger.debug(
        f"sampled {len(sample)}/{len(s)} characters at rate {params.rate:.5f}, "
        f"cap {params.cap}: length {len(chain)}"
    )
    return chain


def _require_equal_lengths(s: SymbolString, t: SymbolString) -> int:
    if len(s) != len(t):
        raise LengthMismatchError(len(s), len(t))
    return len(s)


def alg1_bounded_solution(
    s: SymbolString, t: SymbolString, delta: float, seed: int
) -> MatchChain:
    """
    Sample each character of s with probability n^{-(1-delta)/2} and solve the
    sample against t with the table truncated at ceil(n^{(1-delta)/2}).
    """
    if not 0.0 <= delta <= 1.0:
        raise ParameterRangeError("delta", delta, "[0, 1]")
    n = _require_equal_lengths(s, t)
    if n == 0:
        return MatchChain()
    return _sample_and_solve(s, t, SampleParams.for_delta(n, delta, seed))


def alg0_sqrt_baseline(s: SymbolString, t: SymbolString, seed: int) -> MatchChain:
    """The sqrt(n) baseline: sampling rate n^{-1/2}, cap ceil(sqrt n)."""
    return alg1_bounded_solution(s, t, 0.0, seed)
