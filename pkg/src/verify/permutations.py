"""Permutations of a finite symbol set, stored as SymbolStrings."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from src.core.exceptions import PermutationError
from src.core.rng import make_rng
from src.core.types import SYMBOL_DTYPE, SymbolString
from src.exact.sparse import lcs_sparse


@dataclass(frozen=True, slots=True, eq=False)
class Permutation:
    """
    Every symbol of ``universe`` exactly once, in the order of ``order``.

    The universe defaults to 0..m-1; refinement of semi-permutations produces
    permutations of an arbitrary symbol set.
    """

    order: SymbolString
    universe: np.ndarray

    def __post_init__(self) -> None:
        if not np.array_equal(np.sort(self.order.symbols), self.universe):
            raise PermutationError(
                f"order of length {len(self.order)} is not a bijection onto its "
                f"{self.universe.size}-symbol universe"
            )

    @classmethod
    def of(cls, ids: Iterable[int], universe: Iterable[int] | None = None) -> Permutation:
        order = SymbolString.of(ids)
        if universe is None:
            universe = np.arange(len(order), dtype=SYMBOL_DTYPE)
        else:
            universe = np.unique(np.asarray(list(universe), dtype=SYMBOL_DTYPE))
        size = max(order.alphabet_size, int(universe.max()) + 1 if universe.size else 0)
        return cls(order.with_alphabet(size), universe)

    @classmethod
    def identity(cls, m: int) -> Permutation:
        return cls.of(range(m))

    @classmethod
    def reverse(cls, m: int) -> Permutation:
        return cls.of(range(m - 1, -1, -1))

    @classmethod
    def random(cls, m: int, seed: int) -> Permutation:
        return cls.of(make_rng(seed).permutation(m))

    @property
    def m(self) -> int:
        return len(self.order)

    def __len__(self) -> int:
        return len(self.order)

    def tolist(self) -> list[int]:
        return self.order.tolist()

    def rank(self) -> dict[int, int]:
        """Symbol id to its 1-based position."""
        return {symbol: pos for pos, symbol in enumerate(self.order.tolist(), start=1)}


def permutation_lcs(p1: Permutation, p2: Permutation) -> int:
    return len(lcs_sparse(p1.order, p2.order))
