"""Sampling the matching pairs without enumerating them."""

from __future__ import annotations

import numpy as np

from src.core.exceptions import ParameterRangeError, RankOutOfRangeError
from src.core.logging import setup_logger
from src.core.rng import make_rng
from src.core.sequences import build_occurrence_index, match_prefix_counts
from src.core.types import MatchChain, OccurrenceIndex, SymbolString
from src.exact.lis import PairSequence, lis_pairs

logger = setup_logger("sampling")


def _check_probability(p: float) -> None:
    if not 0.0 < p <= 1.0:
        raise ParameterRangeError("p", p, "(0, 1]")


def geometric_skip_indices(total: int, p: float, seed: int) -> np.ndarray:
    """
    Each index of 1..total kept independently with probability ``p``.

    Kept indices are generated as running sums of geometric gaps, so skipped
    indices are never visited.
    """
    _check_probability(p)
    if total <= 0:
        return np.empty(0, dtype=np.int64)
    if p == 1.0:
        return np.arange(1, total + 1, dtype=np.int64)

    rng = make_rng(seed)
    chunk = max(64, int(p * total * 1.05) + 64)
    parts: list[np.ndarray] = []
    position = 0
    while position < total:
        steps = position + np.cumsum(rng.geometric(p, size=chunk), dtype=np.int64)
        parts.append(steps[steps <= total])
        position = int(steps[-1])
    return np.concatenate(parts)


def locate_kth_match(
    s: SymbolString, t_index: OccurrenceIndex, prefix: np.ndarray, k: int
) -> tuple[int, int]:
    """
    The k-th matching pair (1-based) in (i, then j) order.

    ``prefix[i-1]`` is the number of pairs whose s-position is at most i.
    """
    total = int(prefix[-1]) if prefix.size else 0
    if not 1 <= k <= total:
        raise RankOutOfRangeError(k, total)
    row = int(np.searchsorted(prefix, k, side="left"))
    before = int(prefix[row - 1]) if row else 0
    j = t_index.positions(s.at(row + 1))[k - before - 1]
    return row + 1, j


def locate_matches(
    s: SymbolString, t_index: OccurrenceIndex, prefix: np.ndarray, ks: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised ``locate_kth_match`` over an array of ranks."""
    ks = np.asarray(ks, dtype=np.int64)
    if not ks.size:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty
    total = int(prefix[-1]) if prefix.size else 0
    if int(ks.min()) < 1 or int(ks.max()) > total:
        bad = int(ks.min()) if int(ks.min()) < 1 else int(ks.max())
        raise RankOutOfRangeError(bad, total)
    rows = np.searchsorted(prefix, ks, side="left")
    before = np.where(rows > 0, prefix[np.maximum(rows - 1, 0)], 0)
    symbols = s.symbols[rows]
    js = t_index.flat[t_index.offsets[symbols] + (ks - before - 1)]
    return rows + 1, js.astype(np.int64)


def alg6_sampled_pairs(s: SymbolString, t: SymbolString, p: float, seed: int) -> MatchChain:
    """
    Keep each matching pair with probability ``p`` and return the longest
    strictly increasing chain of the kept pairs. p = 1 is the exact LCS.
    """
    _check_probability(p)
    if not len(s) or not len(t):
        return MatchChain()
    prefix = match_prefix_counts(s, t)
    total = int(prefix[-1])
    if total == 0:
        return MatchChain()

    ranks = geometric_skip_indices(total, p, seed)
    t_index = build_occurrence_index(t.with_alphabet(max(s.alphabet_size, t.alphabet_size)))
    rows, cols = locate_matches(s, t_index, prefix, ranks)
    chain = lis_pairs(PairSequence(rows, cols))
    logger.debug(f"kept {ranks.size}/{total} pairs at p={p:.5f}: length {len(chain)}")
    return chain
