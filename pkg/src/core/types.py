"""
Immutable value types shared by every algorithm package.

Positions are 1-based throughout; position 0 means "before everything".
Symbol ids are dense non-negative integers.
"""

from __future__ import annotations

from bisect import bisect_right
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np

from src.core.exceptions import ParameterRangeError

SYMBOL_DTYPE = np.int64


def _frozen(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


@dataclass(frozen=True, slots=True, eq=False)
class SymbolString:
    """A sequence of symbol ids with the alphabet bound of its instance."""

    symbols: np.ndarray
    alphabet_size: int

    def __post_init__(self) -> None:
        if self.symbols.ndim != 1:
            raise ParameterRangeError("symbols.ndim", self.symbols.ndim, "{1}")
        if self.symbols.size and (
            int(self.symbols.min()) < 0 or int(self.symbols.max()) >= self.alphabet_size
        ):
            raise ParameterRangeError(
                "symbols", self.symbols.max(), f"[0, {self.alphabet_size})"
            )

    @classmethod
    def of(cls, symbols: Iterable[int], alphabet_size: int | None = None) -> SymbolString:
        array = np.asarray(list(symbols) if not isinstance(symbols, np.ndarray) else symbols)
        array = _frozen(array.astype(SYMBOL_DTYPE, copy=True))
        if alphabet_size is None:
            alphabet_size = int(array.max()) + 1 if array.size else 0
        return cls(array, alphabet_size)

    def __len__(self) -> int:
        return int(self.symbols.size)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymbolString):
            return NotImplemented
        return self.alphabet_size == other.alphabet_size and np.array_equal(
            self.symbols, other.symbols
        )

    def __hash__(self) -> int:
        return hash((self.alphabet_size, self.symbols.tobytes()))

    def at(self, position: int) -> int:
        """Symbol at a 1-based position."""
        return int(self.symbols[position - 1])

    def tolist(self) -> list[int]:
        return self.symbols.tolist()

    def with_alphabet(self, alphabet_size: int) -> SymbolString:
        return SymbolString(self.symbols, alphabet_size)

    def project(self, positions: np.ndarray) -> Projection:
        """Subsequence at the given increasing 1-based positions."""
        positions = _frozen(np.asarray(positions, dtype=SYMBOL_DTYPE).copy())
        sub = SymbolString(_frozen(self.symbols[positions - 1].copy()), self.alphabet_size)
        return Projection(sub, positions)

    def slice(self, start: int, end: int) -> Projection:
        """Contiguous span ``start..end`` (1-based, inclusive)."""
        return self.project(np.arange(start, end + 1, dtype=SYMBOL_DTYPE))


@dataclass(frozen=True, slots=True, eq=False)
class Projection:
    """A subsequence together with the parent positions of its characters."""

    string: SymbolString
    positions: np.ndarray

    def __len__(self) -> int:
        return len(self.string)


@dataclass(frozen=True, slots=True)
class FrequencyTable(Mapping[int, int]):
    """Symbol id to number of occurrences; absent symbols count zero."""

    counts: Mapping[int, int]
    total: int

    @classmethod
    def of(cls, symbols: np.ndarray) -> FrequencyTable:
        values, counts = np.unique(symbols, return_counts=True)
        return cls(dict(zip(values.tolist(), counts.tolist(), strict=True)), int(symbols.size))

    def __getitem__(self, symbol: int) -> int:
        return self.counts.get(symbol, 0)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self.counts

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)

    def __len__(self) -> int:
        return len(self.counts)


@dataclass(frozen=True, slots=True, eq=False)
class OccurrenceIndex:
    """
    Per-symbol sorted occurrence positions of one string.

    ``lists`` serves scalar lookups through ``bisect``; ``flat`` and
    ``offsets`` hold the same data grouped by symbol for vectorised access
    (the positions of symbol c are ``flat[offsets[c]:offsets[c + 1]]``).
    """

    lists: tuple[tuple[int, ...], ...]
    flat: np.ndarray
    offsets: np.ndarray
    length: int

    def positions(self, symbol: int) -> tuple[int, ...]:
        if 0 <= symbol < len(self.lists):
            return self.lists[symbol]
        return ()

    def count(self, symbol: int) -> int:
        return len(self.positions(symbol))

    def first_after(self, symbol: int, k: int) -> int | None:
        occurrences = self.positions(symbol)
        idx = bisect_right(occurrences, k)
        return occurrences[idx] if idx < len(occurrences) else None

    def as_dict(self) -> dict[int, list[int]]:
        return {c: list(p) for c, p in enumerate(self.lists) if p}


@dataclass(frozen=True, slots=True)
class MatchChain:
    """A common-subsequence witness: (i, j) pairs, 1-based in s and t."""

    pairs: tuple[tuple[int, int], ...] = field(default_factory=tuple)

    @classmethod
    def of(cls, pairs: Iterable[Sequence[int]]) -> MatchChain:
        return cls(tuple((int(i), int(j)) for i, j in pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)

    @property
    def length(self) -> int:
        return len(self.pairs)

    def remap(self, s_positions: np.ndarray, t_positions: np.ndarray) -> MatchChain:
        """Translate local positions into parent coordinates through position maps."""
        return MatchChain(
            tuple((int(s_positions[i - 1]), int(t_positions[j - 1])) for i, j in self.pairs)
        )

    @staticmethod
    def longest(*chains: MatchChain) -> MatchChain:
        """The first longest chain among the arguments."""
        return max(chains, key=len)
