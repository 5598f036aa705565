"""Single-symbol approximation: repeat the symbol with the largest common frequency."""

from __future__ import annotations

import numpy as np

from src.core.sequences import frequency_counts
from src.core.types import MatchChain, SymbolString


def dominant_symbol_chain(s: SymbolString, t: SymbolString) -> MatchChain:
    """
    Pair the first min(fr_c(s), fr_c(t)) occurrences of the symbol c that
    maximises that minimum (smallest id on ties). Within a factor of the
    alphabet size of the optimum.
    """
    alphabet = max(s.alphabet_size, t.alphabet_size)
    if not len(s) or not len(t) or alphabet == 0:
        return MatchChain()
    common = np.minimum(frequency_counts(s, alphabet), frequency_counts(t, alphabet))
    symbol = int(np.argmax(common))
    count = int(common[symbol])
    if count == 0:
        return MatchChain()
    left = np.flatnonzero(s.symbols == symbol)[:count] + 1
    right = np.flatnonzero(t.symbols == symbol)[:count] + 1
    return MatchChain(tuple(zip(left.tolist(), right.tolist(), strict=True)))
