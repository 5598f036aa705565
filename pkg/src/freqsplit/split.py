"""Low/high frequency decomposition of both strings."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from src.core.exceptions import LengthMismatchError, ParameterRangeError
from src.core.logging import setup_logger
from src.core.rng import derive_seed
from src.core.sequences import count_matching_pairs, frequency_counts
from src.core.types import MatchChain, Projection, SymbolString
from src.sampling.pairs import alg6_sampled_pairs
from src.sampling.truncated import ceil_power

logger = setup_logger("freqsplit")

SUBINSTANCES = ("LL", "LH", "HL")


@dataclass(frozen=True, slots=True)
class FrequencySplit:
    """Characters of a string whose symbol frequency is at most / above ``tau``."""

    low: Projection
    high: Projection
    tau: int


@dataclass(frozen=True, slots=True)
class FrequencySplitOutcome:
    """
    Best mixed-subinstance chain (parent coordinates) and the high/high
    residual pair whose position maps lead back to the parent strings.
    """

    best: MatchChain
    residual_s: Projection
    residual_t: Projection
    tau: int
    pair_counts: dict[str, int] = field(default_factory=dict)
    candidates: dict[str, MatchChain] = field(default_factory=dict)


def split_by_frequency(t: SymbolString, tau: int) -> FrequencySplit:
    if tau < 1:
        raise ParameterRangeError("tau", tau, "[1, inf)")
    freq = frequency_counts(t)
    low = freq[t.symbols] <= tau
    return FrequencySplit(
        low=t.project(np.flatnonzero(low) + 1),
        high=t.project(np.flatnonzero(~low) + 1),
        tau=tau,
    )


def _restrict_to_shared(part: Projection, other: Projection) -> Projection:
    """Drop characters whose symbol never occurs in ``other``; they cannot match."""
    keep = np.isin(part.string.symbols, other.string.symbols)
    return Projection(
        SymbolString(part.string.symbols[keep], part.string.alphabet_size),
        part.positions[keep],
    )


def alg2_frequency_split(
    s: SymbolString, t: SymbolString, eta: float, seed: int
) -> FrequencySplitOutcome:
    """
    Split both strings at tau = ceil(n^{1/2 - eta}), approximate the (L,L),
    (L,H) and (H,L) subinstances by pair sampling at p = min(1, n / R_sub),
    and hand back the (H,H) residual.

    Args:
        s: First string.
        t: Second string, of the same length.
        eta: Threshold exponent in [0, 1/2].
        seed: Base seed; each subinstance samples on its own derived seed.

    Returns:
        The best mixed-subinstance chain in parent coordinates, every
        candidate, the pair counts and the residual projections.

    Raises:
        ParameterRangeError: ``eta`` outside [0, 1/2].
        LengthMismatchError: The strings differ in length.
    """
    if not 0.0 <= eta <= 0.5:
        raise ParameterRangeError("eta", eta, "[0, 1/2]")
    if len(s) != len(t):
        raise LengthMismatchError(len(s), len(t))
    n = len(s)
    tau = ceil_power(n, 0.5 - eta) if n else 1
    s_split = split_by_frequency(s, tau)
    t_split = split_by_frequency(t, tau)
    parts = {"L": (s_split.low, t_split.low), "H": (s_split.high, t_split.high)}

    pair_counts: dict[str, int] = {}
    candidates: dict[str, MatchChain] = {}
    for name in SUBINSTANCES:
        left = parts[name[0]][0]
        right = parts[name[1]][1]
        total = count_matching_pairs(left.string, right.string)
        pair_counts[name] = total
        if total == 0:
            candidates[name] = MatchChain()
            continue
        p = min(1.0, n / total)
        local = alg6_sampled_pairs(left.string, right.string, p, derive_seed(seed, name))
        candidates[name] = local.remap(left.positions, right.positions)

    best = MatchChain.longest(*(candidates[name] for name in SUBINSTANCES))
    residual_s = _restrict_to_shared(s_split.high, t_split.high)
    residual_t = _restrict_to_shared(t_split.high, s_split.high)
    logger.debug(
        f"tau={tau} pair counts {pair_counts}; best {len(best)}; "
        f"residual {len(residual_s)}x{len(residual_t)}"
    )
    return FrequencySplitOutcome(
        best=best,
        residual_s=residual_s,
        residual_t=residual_t,
        tau=tau,
        pair_counts=pair_counts,
        candidates=candidates,
    )
