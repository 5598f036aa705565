import itertools
import unittest

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.blockwise import SemiPermutation
from src.core.config.schema import VerifyConfig
from src.core.exceptions import LengthMismatchError, ParameterRangeError, PermutationError
from src.core.types import SymbolString
from src.exact import lcs_quadratic
from src.verify import (
    Permutation,
    check_triple_product,
    default_sample_count,
    dilworth_decompose,
    mask_experiment,
    refine_to_complete,
    run_verification,
)


def semi(symbols: list[int], alphabet: int = 8) -> SemiPermutation:
    string = SymbolString.of(symbols, alphabet)
    return SemiPermutation(string.project(np.arange(1, len(string) + 1)))


@pytest.mark.unit
class TestPermutation(unittest.TestCase):
    def test_constructors(self):
        self.assertEqual(Permutation.identity(4).tolist(), [0, 1, 2, 3])
        self.assertEqual(Permutation.reverse(3).tolist(), [2, 1, 0])
        self.assertEqual(sorted(Permutation.random(6, seed=1).tolist()), list(range(6)))
        self.assertEqual(Permutation.random(6, seed=1).tolist(), Permutation.random(6, seed=1).tolist())

    def test_rejects_non_bijection(self):
        with self.assertRaises(PermutationError):
            Permutation.of([0, 0, 1])
        with self.assertRaises(PermutationError):
            Permutation.of([0, 2])

    def test_custom_universe(self):
        p = Permutation.of([7, 3, 5], universe=[3, 5, 7])
        self.assertEqual(p.rank(), {7: 1, 3: 2, 5: 3})


@pytest.mark.unit
class TestDilworth(unittest.TestCase):
    """Unit tests for the antichain decomposition"""

    def test_reverse_is_one_level(self):
        decomposition = dilworth_decompose(Permutation.identity(4), Permutation.reverse(4))
        self.assertEqual(len(decomposition), 1)
        self.assertEqual(decomposition.levels[0], (1, 2, 3, 4))

    def test_swapped_pairs(self):
        p2 = Permutation.of([1, 0, 3, 2])
        decomposition = dilworth_decompose(Permutation.identity(4), p2)
        self.assertEqual(decomposition.symbols(p2), [[1, 0], [3, 2]])

    def test_identity_gives_singletons(self):
        decomposition = dilworth_decompose(Permutation.identity(6), Permutation.identity(6))
        self.assertEqual(decomposition.levels, tuple((k,) for k in range(1, 7)))

    def test_mismatched_sizes(self):
        with self.assertRaises(PermutationError):
            dilworth_decompose(Permutation.identity(3), Permutation.identity(4))

    @given(st.integers(1, 80), st.integers(0, 2**32))
    @settings(max_examples=100, deadline=None)
    def test_level_count_is_lcs_and_levels_are_antichains(self, m, seed):
        p1, p2 = Permutation.random(m, seed), Permutation.random(m, seed + 1)
        decomposition = dilworth_decompose(p1, p2)
        self.assertEqual(len(decomposition), len(lcs_quadratic(p1.order, p2.order)))
        self.assertTrue(decomposition.is_partition())
        rank1, rank2 = p1.rank(), p2.rank()
        for level in decomposition.symbols(p2):
            for x, y in itertools.combinations(level, 2):
                self.assertNotEqual(rank1[x] < rank1[y], rank2[x] < rank2[y])


@pytest.mark.unit
class TestTripleProduct(unittest.TestCase):
    def test_identical(self):
        p = Permutation.identity(8)
        check = check_triple_product(p, p, p)
        self.assertEqual(check.products, (8, 8, 8))
        self.assertTrue(check.holds)

    def test_tight_case(self):
        check = check_triple_product(
            Permutation.identity(3), Permutation.reverse(3), Permutation.identity(3)
        )
        self.assertEqual(check.products, (1, 1, 3))
        self.assertEqual(check.product, 3)
        self.assertTrue(check.holds)

    def test_random_triples(self):
        for seed in range(200):
            m = 3 + seed % 60
            p1, p2, p3 = (Permutation.random(m, seed * 3 + k) for k in range(3))
            self.assertTrue(check_triple_product(p1, p2, p3).holds)

    def test_size_mismatch(self):
        with self.assertRaises(PermutationError):
            check_triple_product(Permutation.identity(3), Permutation.identity(3), Permutation.identity(4))


@pytest.mark.unit
class TestRefine(unittest.TestCase):
    """Unit tests for semi-permutation completion"""

    def test_full_permutations_unchanged(self):
        blocks = [semi([2, 0, 1]), semi([1, 2, 0]), semi([0, 1, 2])]
        result = refine_to_complete(blocks, sample_count=1, seed=4)
        for block, out in zip(blocks, result.permutations, strict=True):
            self.assertEqual(out.tolist(), block.string.tolist())
        self.assertEqual(result.mask.tolist(), blocks[result.sampled[0]].string.tolist())

    def test_single_completion(self):
        result = refine_to_complete([semi([0, 1])], sample_count=1, seed=0, alphabet=[0, 1, 2])
        self.assertEqual(result.permutations[0].tolist(), [0, 1, 2])

    def test_leftovers_ascending(self):
        result = refine_to_complete([semi([3])], sample_count=1, seed=0, alphabet=range(5))
        self.assertEqual(result.mask.tolist(), [3, 0, 1, 2, 4])
        self.assertEqual(result.permutations[0].tolist(), [3, 0, 1, 2, 4])

    def test_missing_symbols_follow_mask_order(self):
        blocks = [semi([2, 0]), semi([1])]
        result = refine_to_complete(blocks, sample_count=2, seed=1, alphabet=range(3))
        mask = result.mask.tolist()
        second = result.permutations[1].tolist()
        self.assertEqual(second[0], 1)
        self.assertEqual(second[1:], [x for x in mask if x != 1])

    def test_prefix_preserved(self):
        rng = np.random.default_rng(3)
        for case in range(500):
            m = int(rng.integers(1, 20))
            blocks = [
                semi(rng.permutation(m)[: int(rng.integers(0, m + 1))].tolist(), m)
                for _ in range(int(rng.integers(1, 6)))
            ]
            result = refine_to_complete(blocks, seed=case, alphabet=range(m))
            for block, out in zip(blocks, result.permutations, strict=True):
                self.assertEqual(out.m, m)
                self.assertEqual(out.tolist()[: len(block)], block.string.tolist())

    def test_errors(self):
        with self.assertRaises(ParameterRangeError):
            refine_to_complete([], sample_count=1)
        with self.assertRaises(ParameterRangeError):
            refine_to_complete([semi([0])], sample_count=0)

    def test_default_sample_count(self):
        self.assertEqual(default_sample_count(1), 1)
        self.assertEqual(default_sample_count(16), 16)
        self.assertEqual(default_sample_count(10), 14)


@pytest.mark.unit
class TestMaskExperiment(unittest.TestCase):
    def test_identical_permutation_blocks(self):
        block = [3, 0, 2, 1]
        s = SymbolString.of(block * 4)
        report = mask_experiment(s, s, seed=2)
        self.assertEqual(report.block_size, 4)
        self.assertEqual(report.diagonal_mean, 4.0)
        self.assertEqual(report.matrix.shape, (4, 4))

    def test_random_permutation_blocks_share_a_symbol(self):
        rng = np.random.default_rng(5)
        s = SymbolString.of(np.concatenate([rng.permutation(5) for _ in range(5)]))
        t = SymbolString.of(np.concatenate([rng.permutation(5) for _ in range(5)]))
        report = mask_experiment(s, t, seed=5)
        self.assertGreaterEqual(report.mean, 1.0)
        self.assertTrue(np.all(report.matrix >= 1))

    def test_triple_maximum_from_matrix(self):
        s = SymbolString.of(np.random.default_rng(6).integers(0, 6, 36))
        report = mask_experiment(s, s, seed=6)
        M = report.matrix
        expected = max(
            int(M[i, j] * M[j, k] * M[k, i]) for i, j, k in itertools.combinations(range(6), 3)
        )
        self.assertEqual(report.max_triple_product(), expected)
        self.assertGreaterEqual(expected, report.alphabet_size)

    def test_length_mismatch(self):
        with self.assertRaises(LengthMismatchError):
            mask_experiment(SymbolString.of([0]), SymbolString.of([0, 1]), seed=0)


@pytest.mark.unit
class TestRunVerification(unittest.TestCase):
    def test_small_suites_pass(self):
        config = VerifyConfig(
            triple_cases=30, triple_max_m=40, dilworth_cases=30, dilworth_max_m=60, refine_cases=30
        )
        summary = run_verification(config, seed=11)
        self.assertTrue(summary.passed)
        self.assertEqual(summary.suite("triple_product").cases, 30)
        self.assertEqual(summary.suite("refine").violations, 0)

    @pytest.mark.slow
    def test_full_suites_pass(self):
        self.assertTrue(run_verification(VerifyConfig(), seed=0).passed)
