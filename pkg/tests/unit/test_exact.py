import unittest

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.exceptions import ParameterRangeError
from src.core.sequences import validate_chain
from src.core.types import SymbolString
from src.exact import PairSequence, PrefixMaxTree, lcs_length, lcs_quadratic, lcs_sparse, lis_pairs
from tests.helpers import brute_lcs, random_pair


@pytest.mark.unit
class TestQuadratic(unittest.TestCase):
    """Unit tests for the quadratic oracle"""

    def test_identity(self):
        s = SymbolString.of([0, 1, 2])
        self.assertEqual(len(lcs_quadratic(s, s)), 3)

    def test_disjoint(self):
        self.assertEqual(len(lcs_quadratic(SymbolString.of([0, 1, 2]), SymbolString.of([3, 4, 5]))), 0)

    def test_worked_example(self):
        s = SymbolString.of([0, 1, 2, 1, 3, 0, 1])
        t = SymbolString.of([1, 3, 2, 0, 1, 0])
        chain = lcs_quadratic(s, t)
        self.assertEqual(len(chain), 4)
        self.assertTrue(validate_chain(s, t, chain))
        self.assertEqual(lcs_length(s, t), 4)

    def test_empty(self):
        self.assertEqual(len(lcs_quadratic(SymbolString.of([]), SymbolString.of([1]))), 0)
        self.assertEqual(lcs_length(SymbolString.of([1]), SymbolString.of([])), 0)

    def test_unequal_lengths(self):
        s = SymbolString.of([0, 1, 0, 1, 0, 1, 0, 1, 0])
        t = SymbolString.of([1, 1, 0])
        chain = lcs_quadratic(s, t)
        self.assertEqual(len(chain), 3)
        self.assertTrue(validate_chain(s, t, chain))

    def test_against_brute_force(self):
        for seed in range(50):
            s, t = random_pair(seed, 1 + seed % 23, 1 + seed % 5)
            chain = lcs_quadratic(s, t)
            self.assertTrue(validate_chain(s, t, chain))
            self.assertEqual(len(chain), brute_lcs(s.tolist(), t.tolist()))
            self.assertEqual(lcs_length(s, t), len(chain))


@pytest.mark.unit
class TestLisPairs(unittest.TestCase):
    """Unit tests for the chain search over pair sequences"""

    def test_examples(self):
        self.assertEqual(len(lis_pairs(PairSequence.of([(1, 1), (2, 2), (3, 3)]))), 3)
        self.assertEqual(len(lis_pairs(PairSequence.of([(1, 1), (1, 2), (2, 3)]))), 2)
        self.assertEqual(len(lis_pairs(PairSequence.of([(1, 3), (2, 2), (3, 1)]))), 1)
        self.assertEqual(len(lis_pairs(PairSequence.of([]))), 0)

    def test_same_row_never_chained(self):
        chain = lis_pairs(PairSequence.of([(1, 1), (1, 2), (1, 3)]))
        self.assertEqual(len(chain), 1)

    def test_rejects_unsorted(self):
        with self.assertRaises(ParameterRangeError):
            PairSequence.of([(2, 1), (1, 1)])
        with self.assertRaises(ParameterRangeError):
            PairSequence.of([(1, 2), (1, 1)])

    def test_sorted_from(self):
        pairs = PairSequence.sorted_from([(2, 1), (1, 3), (1, 2)])
        self.assertEqual(pairs.a.tolist(), [1, 1, 2])
        self.assertEqual(pairs.b.tolist(), [2, 3, 1])

    def test_prefix_max_tree(self):
        tree = PrefixMaxTree(8)
        tree.update(3, 2, item=7)
        tree.update(5, 1, item=9)
        self.assertEqual(tree.query(2), (0, -1))
        self.assertEqual(tree.query(4), (2, 7))
        self.assertEqual(tree.query(8), (2, 7))

    @given(st.lists(st.tuples(st.integers(1, 12), st.integers(1, 12)), max_size=40, unique=True))
    @settings(max_examples=150, deadline=None)
    def test_chain_is_strictly_increasing_and_optimal(self, raw):
        pairs = PairSequence.sorted_from(raw) if raw else PairSequence.of([])
        chain = lis_pairs(pairs)
        self.assertTrue(set(chain.pairs) <= set(raw))
        for (a1, b1), (a2, b2) in zip(chain.pairs, chain.pairs[1:], strict=False):
            self.assertLess(a1, a2)
            self.assertLess(b1, b2)
        # longest chain by quadratic DP over the sorted pairs
        ordered = sorted(raw)
        best = [1] * len(ordered)
        for k, (a, b) in enumerate(ordered):
            for q in range(k):
                if ordered[q][0] < a and ordered[q][1] < b:
                    best[k] = max(best[k], best[q] + 1)
        self.assertEqual(len(chain), max(best, default=0))


@pytest.mark.unit
class TestSparse(unittest.TestCase):
    """Unit tests for the sparse oracle"""

    def test_examples(self):
        self.assertEqual(len(lcs_sparse(SymbolString.of([0, 1, 2]), SymbolString.of([2, 0, 1]))), 2)
        s = SymbolString.of([0, 0])
        self.assertEqual(len(lcs_sparse(s, s)), 2)

    def test_zero_pairs(self):
        self.assertEqual(len(lcs_sparse(SymbolString.of([0, 1]), SymbolString.of([2, 3]))), 0)

    def test_sparse_path_matches_quadratic(self):
        # density limit 1.0 keeps every instance on the pair-chain path
        for seed in range(200):
            n = 1 + seed % 60
            s, t = random_pair(seed, n, max(2, n // 2))
            sparse = lcs_sparse(s, t, density_limit=1.0)
            self.assertTrue(validate_chain(s, t, sparse))
            self.assertEqual(len(sparse), len(lcs_quadratic(s, t)))

    def test_dense_fallback_matches(self):
        s, t = random_pair(3, 80, 2)
        chain = lcs_sparse(s, t)
        self.assertTrue(validate_chain(s, t, chain))
        self.assertEqual(len(chain), lcs_length(s, t))

    def test_alphabets_may_differ(self):
        s = SymbolString.of([0, 5, 1])
        t = SymbolString.of([1, 0])
        self.assertEqual(len(lcs_sparse(s, t, density_limit=1.0)), 1)

    def test_large_alphabet_bound_is_relabelled(self):
        s, t = random_pair(12, 80, 6)
        chain = lcs_sparse(s, t, density_limit=1.0)
        wide = lcs_sparse(s.with_alphabet(10**7), t.with_alphabet(10**7), density_limit=1.0)
        self.assertEqual(wide, chain)


@pytest.mark.unit
class TestOracleProperties(unittest.TestCase):
    """Length properties every exact oracle satisfies"""

    @given(
        st.lists(st.integers(0, 3), max_size=40),
        st.lists(st.integers(0, 3), max_size=40),
        st.integers(0, 3),
    )
    @settings(max_examples=150, deadline=None)
    def test_symmetric_and_append_monotone(self, a, b, c):
        s, t = SymbolString.of(a, 4), SymbolString.of(b, 4)
        length = len(lcs_sparse(s, t, density_limit=1.0))
        self.assertEqual(len(lcs_sparse(t, s, density_limit=1.0)), length)
        self.assertEqual(lcs_length(t, s), length)
        longer = lcs_length(SymbolString.of([*a, c], 4), t)
        self.assertIn(longer, (length, length + 1))
        both = len(lcs_quadratic(SymbolString.of([*a, c], 4), SymbolString.of([*b, c], 4)))
        self.assertEqual(both, length + 1)

    @pytest.mark.slow
    def test_oracle_equivalence_sweep(self):
        rng = np.random.default_rng(20240601)
        for case in range(1000):
            n = int(rng.integers(1, 201))
            m = [2, 4, 16, n][case % 4]
            s = SymbolString.of(rng.integers(0, m, n), m)
            t = SymbolString.of(rng.integers(0, m, n), m)
            # density limit 1.0 keeps even binary pairs on the pair-chain path
            sparse = lcs_sparse(s, t, density_limit=1.0)
            self.assertTrue(validate_chain(s, t, sparse))
            self.assertEqual(len(sparse), len(lcs_quadratic(s, t)))
