import math
import unittest

import numpy as np
import pytest

from src.core.exceptions import LengthMismatchError, ParameterRangeError
from src.core.sequences import count_matching_pairs, validate_chain
from src.core.types import SymbolString
from src.exact import lcs_length
from src.freqsplit import SUBINSTANCES, alg2_frequency_split, split_by_frequency
from src.sampling import ceil_power
from tests.helpers import random_pair

A, B, C, D = range(4)


@pytest.mark.unit
class TestSplitByFrequency(unittest.TestCase):
    """Unit tests for the low/high decomposition"""

    def test_worked_example(self):
        t = SymbolString.of([A, A, B, C, C, D])
        split = split_by_frequency(t, tau=1)
        self.assertEqual(split.low.string.tolist(), [B, D])
        self.assertEqual(split.high.string.tolist(), [A, A, C, C])
        self.assertEqual(split.low.positions.tolist(), [3, 6])

    def test_all_distinct(self):
        t = SymbolString.of([0, 1, 2, 3])
        split = split_by_frequency(t, tau=1)
        self.assertEqual(len(split.high), 0)
        self.assertEqual(split.low.string, t)

    def test_constant(self):
        t = SymbolString.of([2] * 5)
        split = split_by_frequency(t, tau=4)
        self.assertEqual(len(split.low), 0)
        self.assertEqual(split.high.string.tolist(), [2] * 5)

    def test_cover_identity(self):
        _, t = random_pair(1, 200, 25)
        split = split_by_frequency(t, tau=8)
        merged = np.sort(np.concatenate([split.low.positions, split.high.positions]))
        self.assertEqual(merged.tolist(), list(range(1, 201)))
        rebuilt = np.empty(200, dtype=np.int64)
        rebuilt[split.low.positions - 1] = split.low.string.symbols
        rebuilt[split.high.positions - 1] = split.high.string.symbols
        self.assertEqual(rebuilt.tolist(), t.tolist())

    def test_four_subinstances_cover_the_lcs(self):
        rng = np.random.default_rng(8)
        for case in range(200):
            n = int(rng.integers(1, 60))
            s, t = random_pair(case, n, int(rng.integers(1, 12)))
            tau = int(rng.integers(1, 8))
            s_split, t_split = split_by_frequency(s, tau), split_by_frequency(t, tau)
            total = sum(
                lcs_length(a.string, b.string)
                for a in (s_split.low, s_split.high)
                for b in (t_split.low, t_split.high)
            )
            self.assertGreaterEqual(total, lcs_length(s, t))

    def test_rejects_tau_zero(self):
        with self.assertRaises(ParameterRangeError):
            split_by_frequency(SymbolString.of([0]), tau=0)


@pytest.mark.unit
class TestFrequencySplitAlgorithm(unittest.TestCase):
    """Unit tests for the three mixed subinstances and the residual"""

    def test_all_high_frequency(self):
        s = SymbolString.of([0] * 5 + [1] * 5 + [2] * 6)
        outcome = alg2_frequency_split(s, s, eta=0.0, seed=1)
        self.assertEqual(outcome.tau, 4)
        self.assertEqual(len(outcome.best), 0)
        self.assertEqual(outcome.residual_s.string, s)
        self.assertEqual(outcome.residual_t.positions.tolist(), list(range(1, 17)))

    def test_all_distinct_is_exact(self):
        s = SymbolString.of(range(30))
        outcome = alg2_frequency_split(s, s, eta=0.0, seed=2)
        self.assertEqual(len(outcome.best), 30)
        self.assertEqual(outcome.pair_counts["LL"], 30)
        self.assertEqual(len(outcome.residual_s), 0)
        self.assertEqual(len(outcome.residual_t), 0)

    def test_candidates_in_parent_coordinates(self):
        for seed in range(20):
            s, t = random_pair(seed, 150, 40)
            outcome = alg2_frequency_split(s, t, eta=0.05, seed=seed)
            self.assertEqual(set(outcome.candidates), set(SUBINSTANCES))
            for chain in outcome.candidates.values():
                self.assertTrue(validate_chain(s, t, chain))
            self.assertEqual(len(outcome.best), max(len(c) for c in outcome.candidates.values()))

    def test_residual_alphabet_bound(self):
        for seed in range(100):
            n = 400
            s, t = random_pair(seed, n, 1 + seed % 60)
            eta = 0.02
            outcome = alg2_frequency_split(s, t, eta=eta, seed=seed)
            symbols = np.union1d(outcome.residual_s.string.symbols, outcome.residual_t.string.symbols)
            self.assertLessEqual(symbols.size, ceil_power(n, 0.5 + eta) + 1)

    def test_low_subinstance_pair_bound(self):
        for seed in range(50):
            n = 300
            s, t = random_pair(seed, n, 2 + seed)
            outcome = alg2_frequency_split(s, t, eta=0.0, seed=seed)
            tau = outcome.tau
            self.assertLessEqual(outcome.pair_counts["LL"], tau * n)
            self.assertLessEqual(outcome.pair_counts["LH"], tau * n)
            self.assertLessEqual(outcome.pair_counts["HL"], tau * n)

    def test_residual_is_restricted_to_shared_symbols(self):
        s = SymbolString.of([0] * 6 + [1] * 6)
        t = SymbolString.of([0] * 6 + [2] * 6)
        outcome = alg2_frequency_split(s, t, eta=0.0, seed=3)
        self.assertEqual(set(outcome.residual_s.string.tolist()), {0})
        self.assertEqual(set(outcome.residual_t.string.tolist()), {0})
        self.assertEqual(
            count_matching_pairs(outcome.residual_s.string, outcome.residual_t.string), 36
        )

    def test_tau_follows_eta(self):
        s, t = random_pair(4, 10_000, 50)
        self.assertEqual(alg2_frequency_split(s, t, eta=0.0, seed=0).tau, 100)
        self.assertEqual(alg2_frequency_split(s, t, eta=0.25, seed=0).tau, math.ceil(10_000**0.25))

    def test_errors(self):
        s = SymbolString.of([0, 1])
        with self.assertRaises(ParameterRangeError):
            alg2_frequency_split(s, s, eta=0.75, seed=0)
        with self.assertRaises(LengthMismatchError):
            alg2_frequency_split(s, SymbolString.of([0]), eta=0.1, seed=0)
