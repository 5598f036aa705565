"""Sparse exact LCS over the matching pairs (Hunt–Szymanski style)."""

from __future__ import annotations

from collections.abc import Iterator

from src.core.logging import setup_logger
from src.core.sequences import build_occurrence_index, compact_pair, count_matching_pairs
from src.core.types import MatchChain, OccurrenceIndex, SymbolString
from src.exact.dp import lcs_quadratic
from src.exact.lis import chain_from_groups

DENSITY_LIMIT = 0.25

logger = setup_logger("exact")


def iter_match_groups(
    s: SymbolString, t_index: OccurrenceIndex
) -> Iterator[tuple[int, tuple[int, ...]]]:
    """The matching pairs grouped by s-position: (i, positions of s_i in t)."""
    for i, symbol in enumerate(s.symbols.tolist(), start=1):
        occurrences = t_index.positions(symbol)
        if occurrences:
            yield i, occurrences


def lcs_sparse(
    s: SymbolString, t: SymbolString, density_limit: float = DENSITY_LIMIT
) -> MatchChain:
    """
    Exact LCS with witness in O(n + R log n).

    Defers to the quadratic oracle when R exceeds ``density_limit`` of all
    |s|·|t| cells; the result is identical either way. Pairs whose alphabet
    bound exceeds their combined length are relabelled first, so short
    substrings of a large-alphabet instance cost nothing per unused symbol.
    """
    if not len(s) or not len(t):
        return MatchChain()
    if max(s.alphabet_size, t.alphabet_size) > len(s) + len(t):
        s, t = compact_pair(s, t)
    total = count_matching_pairs(s, t)
    if total == 0:
        return MatchChain()
    if total > density_limit * len(s) * len(t):
        logger.debug(f"R={total} is dense for {len(s)}x{len(t)}, using the quadratic oracle")
        return lcs_quadratic(s, t)
    return chain_from_groups(iter_match_groups(s, build_occurrence_index(t)), len(t))
