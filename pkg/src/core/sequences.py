"""Alphabet handling, occurrence indexing, pair counting and witness validation."""

from __future__ import annotations

import numpy as np

from src.core.types import (
    SYMBOL_DTYPE,
    FrequencyTable,
    MatchChain,
    OccurrenceIndex,
    SymbolString,
)


def pad_pair(s: SymbolString, t: SymbolString) -> tuple[SymbolString, SymbolString]:
    """
    Extend the shorter string with a fresh sentinel id to the common length.

    The sentinel is the first id outside both alphabets, so it never forms a
    matching pair and the LCS of the pair is unchanged. Both outputs share the
    enlarged alphabet bound.
    """
    alphabet = max(s.alphabet_size, t.alphabet_size)
    if len(s) == len(t):
        return s.with_alphabet(alphabet), t.with_alphabet(alphabet)

    sentinel = alphabet
    n = max(len(s), len(t))

    def extend(x: SymbolString) -> SymbolString:
        padded = np.full(n, sentinel, dtype=SYMBOL_DTYPE)
        padded[: len(x)] = x.symbols
        return SymbolString.of(padded, alphabet + 1)

    if len(s) < len(t):
        return extend(s), t.with_alphabet(alphabet + 1)
    return s.with_alphabet(alphabet + 1), extend(t)


def frequency_counts(s: SymbolString, alphabet_size: int | None = None) -> np.ndarray:
    """Dense frequency vector ``fr_c(s)`` indexed by symbol id."""
    size = s.alphabet_size if alphabet_size is None else alphabet_size
    return np.bincount(s.symbols, minlength=size).astype(np.int64)


def frequency_table(s: SymbolString) -> FrequencyTable:
    return FrequencyTable.of(s.symbols)


def build_occurrence_index(s: SymbolString) -> OccurrenceIndex:
    """Group the 1-based positions of ``s`` by symbol, ascending within a symbol."""
    order = np.argsort(s.symbols, kind="stable")
    flat = order.astype(SYMBOL_DTYPE) + 1
    counts = frequency_counts(s)
    offsets = np.zeros(s.alphabet_size + 1, dtype=np.int64)
    np.cumsum(counts, out=offsets[1:])
    positions = flat.tolist()
    bounds = offsets.tolist()
    lists = tuple(tuple(positions[bounds[c] : bounds[c + 1]]) for c in range(s.alphabet_size))
    flat.flags.writeable = False
    offsets.flags.writeable = False
    return OccurrenceIndex(lists=lists, flat=flat, offsets=offsets, length=len(s))


def first_occurrence_after(idx: OccurrenceIndex, symbol: int, k: int) -> int | None:
    """Smallest position p > k holding ``symbol``, or None."""
    return idx.first_after(symbol, k)


def count_matching_pairs(s: SymbolString, t: SymbolString) -> int:
    """R = |{(i, j) : s_i = t_j}| in O(|s| + |t|)."""
    alphabet = max(s.alphabet_size, t.alphabet_size)
    fs = frequency_counts(s, alphabet)
    ft = frequency_counts(t, alphabet)
    return int(np.dot(fs, ft))


def compact_pair(s: SymbolString, t: SymbolString) -> tuple[SymbolString, SymbolString]:
    """
    Relabel both strings onto the symbols they actually use.

    Equal symbols stay equal and positions are untouched, so every chain of
    the compacted pair is a chain of the original one. The new alphabet bound
    is at most |s| + |t|.
    """
    values, inverse = np.unique(np.concatenate([s.symbols, t.symbols]), return_inverse=True)
    size = int(values.size)
    return SymbolString.of(inverse[: len(s)], size), SymbolString.of(inverse[len(s) :], size)


def is_dense(s: SymbolString, t: SymbolString, density_limit: float) -> bool:
    """True when R exceeds ``density_limit`` of all |s|·|t| cells."""
    return count_matching_pairs(s, t) > density_limit * len(s) * len(t)


def match_prefix_counts(s: SymbolString, t: SymbolString) -> np.ndarray:
    """P[i] = sum over l <= i of fr_{s_l}(t), as an array over i = 1..|s|."""
    alphabet = max(s.alphabet_size, t.alphabet_size)
    ft = frequency_counts(t, alphabet)
    return np.cumsum(ft[s.symbols], dtype=np.int64)


def validate_chain(s: SymbolString, t: SymbolString, chain: MatchChain) -> bool:
    """True iff the chain is strictly increasing in both coordinates and every pair matches."""
    if not chain.pairs:
        return True
    pairs = np.asarray(chain.pairs, dtype=np.int64)
    i, j = pairs[:, 0], pairs[:, 1]
    if i.min() < 1 or j.min() < 1 or i.max() > len(s) or j.max() > len(t):
        return False
    if np.any(np.diff(i) <= 0) or np.any(np.diff(j) <= 0):
        return False
    return bool(np.array_equal(s.symbols[i - 1], t.symbols[j - 1]))
