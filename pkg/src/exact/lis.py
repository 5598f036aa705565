"""Longest chain of pairs strictly increasing in both coordinates."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from src.core.exceptions import ParameterRangeError
from src.core.types import MatchChain


@dataclass(frozen=True, slots=True, eq=False)
class PairSequence:
    """Positive (a, b) coordinates sorted by a, then b."""

    a: np.ndarray
    b: np.ndarray

    def __post_init__(self) -> None:
        if self.a.shape != self.b.shape:
            raise ParameterRangeError("pairs", self.a.shape, "matching a/b shapes")
        if self.a.size:
            if int(self.a.min()) < 1 or int(self.b.min()) < 1:
                raise ParameterRangeError("pairs", "non-positive", "positive coordinates")
            da = np.diff(self.a)
            db = np.diff(self.b)
            if np.any(da < 0) or np.any((da == 0) & (db <= 0)):
                raise ParameterRangeError("pairs", "unsorted", "lexicographic order")

    @classmethod
    def of(cls, pairs: Iterable[Sequence[int]]) -> PairSequence:
        array = np.asarray(list(pairs), dtype=np.int64).reshape(-1, 2)
        return cls(array[:, 0].copy(), array[:, 1].copy())

    @classmethod
    def sorted_from(cls, pairs: Iterable[Sequence[int]]) -> PairSequence:
        array = np.asarray(list(pairs), dtype=np.int64).reshape(-1, 2)
        order = np.lexsort((array[:, 1], array[:, 0]))
        return cls(array[order, 0].copy(), array[order, 1].copy())

    def __len__(self) -> int:
        return int(self.a.size)

    def groups(self) -> Iterator[tuple[int, list[int]]]:
        """Yield (a, ascending b values) for each run of equal a."""
        a = self.a.tolist()
        b = self.b.tolist()
        k = 0
        while k < len(a):
            end = k
            while end < len(a) and a[end] == a[k]:
                end += 1
            yield a[k], b[k:end]
            k = end


class PrefixMaxTree:
    """
    Fenwick tree over keys 1..size answering "best (length, item) with key <= q".

    Ties keep the earlier item, so witnesses are deterministic.
    """

    __slots__ = ("_item", "_length", "size")

    def __init__(self, size: int):
        self.size = size
        self._length = [0] * (size + 1)
        self._item = [-1] * (size + 1)

    def query(self, key: int) -> tuple[int, int]:
        best, item = 0, -1
        length = self._length
        while key > 0:
            if length[key] > best:
                best, item = length[key], self._item[key]
            key -= key & -key
        return best, item

    def update(self, key: int, value: int, item: int) -> None:
        length = self._length
        while key <= self.size:
            if value > length[key]:
                length[key] = value
                self._item[key] = item
            key += key & -key


def chain_from_groups(groups: Iterable[tuple[int, Sequence[int]]], b_limit: int) -> MatchChain:
    """
    Longest strictly increasing chain over pairs fed as (a, ascending b list)
    groups in increasing a. Each group is processed with b descending, so a
    query at b - 1 never sees a pair with the same a.
    """
    tree = PrefixMaxTree(b_limit)
    pair_a: list[int] = []
    pair_b: list[int] = []
    parent: list[int] = []
    best_len, best_item = 0, -1

    for a, bs in groups:
        for b in reversed(bs):
            length, prev = tree.query(b - 1)
            item = len(pair_a)
            pair_a.append(a)
            pair_b.append(b)
            parent.append(prev)
            tree.update(b, length + 1, item)
            if length + 1 > best_len:
                best_len, best_item = length + 1, item

    chain: list[tuple[int, int]] = []
    item = best_item
    while item >= 0:
        chain.append((pair_a[item], pair_b[item]))
        item = parent[item]
    chain.reverse()
    return MatchChain(tuple(chain))


def lis_pairs(m: PairSequence) -> MatchChain:
    """Longest subsequence of ``m`` strictly increasing in both coordinates."""
    if not len(m):
        return MatchChain()
    return chain_from_groups(m.groups(), int(m.b.max()))
