import unittest

import numpy as np
import pytest

from src.blockwise import alg5_combine
from src.cli import InstanceSpec, generate, run_bench, scaling_slope
from src.core.config.schema import BenchConfig
from src.exact import lcs_sparse
from src.freqsplit import alg2_frequency_split
from src.pipeline import approximate_lcs, solve_exponent_lp
from src.sampling import alg0_sqrt_baseline, alg6_sampled_pairs


def instance(n: int, m: int | None = None, seed: int = 0):
    return generate(InstanceSpec.build(n=n, m=m or max(1, int(np.ceil(np.sqrt(n)))), seed=seed))


@pytest.mark.performance
def test_alg0_speed(benchmark):
    pair = instance(20_000)
    chain = benchmark(alg0_sqrt_baseline, pair.s, pair.t, 1)
    assert len(chain) >= 0


@pytest.mark.performance
def test_frequency_split_speed(benchmark):
    pair = instance(20_000)
    outcome = benchmark(alg2_frequency_split, pair.s, pair.t, 1 / 489, 2)
    assert outcome.tau >= 1


@pytest.mark.performance
def test_combine_speed(benchmark):
    pair = instance(10_000)
    chain = benchmark(alg5_combine, pair.s, pair.t, 3)
    assert len(chain) >= 0


@pytest.mark.performance
def test_sparse_pairs_speed(benchmark):
    pair = instance(20_000, m=20_000)
    chain = benchmark(alg6_sampled_pairs, pair.s, pair.t, 1.0, 4)
    assert len(chain) == len(lcs_sparse(pair.s, pair.t))


@pytest.mark.performance
def test_pipeline_speed(benchmark):
    pair = instance(20_000)
    params = solve_exponent_lp().with_seed(5)
    report = benchmark(approximate_lcs, pair.s, pair.t, params)
    assert len(report.chosen) > 0


@pytest.mark.performance
@pytest.mark.slow
class TestScaling(unittest.TestCase):
    """Wall time of the approximators grows near-linearly in n"""

    def test_pipeline_slope(self):
        sizes = (10_000, 40_000, 160_000)
        instances = [instance(n, seed=n) for n in sizes]
        rows = run_bench(instances, ["pipeline", "alg0"], 0, BenchConfig(trials=3, exact_cap=0))
        self.assertLessEqual(scaling_slope(rows, "pipeline"), 1.35)
        self.assertLessEqual(scaling_slope(rows, "alg0"), 1.35)

    def test_sparse_oracle_on_distinct_strings(self):
        sizes = (20_000, 80_000, 320_000)
        instances = [instance(n, m=n, seed=n) for n in sizes]
        rows = run_bench(instances, ["exact"], 0, BenchConfig(trials=2, exact_cap=0))
        self.assertLessEqual(scaling_slope(rows, "exact"), 1.5)

    def test_pipeline_slope_on_planted_large_alphabet(self):
        # planted noise draws fresh symbols, so the alphabet bound grows with n
        sizes = (10_000, 40_000, 160_000)
        instances = [
            generate(InstanceSpec.build(family="planted", n=n, m=4, planted_len=n // 2, seed=n))
            for n in sizes
        ]
        self.assertGreater(instances[-1].m, sizes[-1] // 2)
        rows = run_bench(instances, ["pipeline", "combine"], 0, BenchConfig(trials=2, exact_cap=0))
        self.assertLessEqual(scaling_slope(rows, "pipeline"), 1.35)
        self.assertLessEqual(scaling_slope(rows, "combine"), 1.35)
