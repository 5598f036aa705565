"""Product check over the pairwise LCS lengths of three permutations."""

from __future__ import annotations

from dataclasses import dataclass

from src.core.exceptions import PermutationError
from src.verify.permutations import Permutation, permutation_lcs


@dataclass(frozen=True, slots=True)
class TripleProductCheck:
    products: tuple[int, int, int]
    m: int

    @property
    def product(self) -> int:
        a, b, c = self.products
        return a * b * c

    @property
    def holds(self) -> bool:
        return self.product >= self.m


def check_triple_product(p1: Permutation, p2: Permutation, p3: Permutation) -> TripleProductCheck:
    """lcs(p1,p2) * lcs(p2,p3) * lcs(p3,p1) against m."""
    if not p1.m == p2.m == p3.m:
        raise PermutationError(f"permutation sizes differ: {p1.m}, {p2.m}, {p3.m}")
    return TripleProductCheck(
        products=(permutation_lcs(p1, p2), permutation_lcs(p2, p3), permutation_lcs(p3, p1)),
        m=p1.m,
    )
