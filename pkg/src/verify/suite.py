"""Mask experiment and the randomized checker suites run by ``--verify``."""

from __future__ import annotations

import itertools
import time
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np

from src.blockwise.blocks import decompose_blocks
from src.blockwise.random_shift import SemiPermutation, semi_permutation_blocks
from src.core.config.schema import VerifyConfig
from src.core.exceptions import LengthMismatchError, PermutationError
from src.core.logging import setup_logger
from src.core.rng import derive_seed, make_rng
from src.core.types import SymbolString
from src.exact.dp import lcs_length
from src.verify.dilworth import dilworth_decompose
from src.verify.permutations import Permutation, permutation_lcs
from src.verify.refine import refine_to_complete
from src.verify.triple import check_triple_product

logger = setup_logger("verify")


@dataclass(frozen=True, slots=True, eq=False)
class MaskExperimentReport:
    """Pairwise LCS of completed blocks: ``matrix[i, j]`` is s-block i vs t-block j."""

    matrix: np.ndarray
    block_size: int
    alphabet_size: int

    @property
    def mean(self) -> float:
        return float(self.matrix.mean()) if self.matrix.size else 0.0

    @property
    def diagonal_mean(self) -> float:
        diagonal = np.diagonal(self.matrix)
        return float(diagonal.mean()) if diagonal.size else 0.0

    def max_triple_product(self) -> int:
        """Max over i < j < k of M[i,j] * M[j,k] * M[k,i]."""
        size = min(self.matrix.shape)
        best = 0
        for i, j, k in itertools.combinations(range(size), 3):
            best = max(best, int(self.matrix[i, j] * self.matrix[j, k] * self.matrix[k, i]))
        return best


def mask_experiment(
    s: SymbolString, t: SymbolString, seed: int, sample_count: int | None = None
) -> MaskExperimentReport:
    """Blocks, semi-permutations, one common refinement, then all pairwise LCS lengths."""
    if len(s) != len(t):
        raise LengthMismatchError(len(s), len(t))
    if not len(s):
        return MaskExperimentReport(np.zeros((0, 0), dtype=np.int64), 0, 0)
    sB, tB = decompose_blocks(s), decompose_blocks(t)

    s_blocks = semi_permutation_blocks(sB, seed, "s")
    t_blocks = semi_permutation_blocks(tB, seed, "t")
    refined = refine_to_complete(s_blocks + t_blocks, sample_count, derive_seed(seed, "mask"))
    s_perms = refined.permutations[: len(s_blocks)]
    t_perms = refined.permutations[len(s_blocks) :]

    matrix = np.zeros((len(s_perms), len(t_perms)), dtype=np.int64)
    for i, p in enumerate(s_perms):
        for j, q in enumerate(t_perms):
            matrix[i, j] = permutation_lcs(p, q)
    report = MaskExperimentReport(matrix, sB.block_size, refined.mask.m)
    logger.info(
        f"mask experiment: {matrix.shape[0]}x{matrix.shape[1]} blocks over "
        f"{report.alphabet_size} symbols, mean {report.mean:.3f}, "
        f"diagonal {report.diagonal_mean:.3f}"
    )
    return report


@dataclass(slots=True)
class SuiteResult:
    name: str
    cases: int = 0
    violations: int = 0
    failing_seeds: list[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def record(self, ok: bool, seed: int) -> None:
        self.cases += 1
        if not ok:
            self.violations += 1
            self.failing_seeds.append(seed)


@dataclass(frozen=True, slots=True)
class VerificationSummary:
    suites: tuple[SuiteResult, ...]

    @property
    def passed(self) -> bool:
        return all(suite.passed for suite in self.suites)

    def suite(self, name: str) -> SuiteResult:
        return next(suite for suite in self.suites if suite.name == name)


def _triple_case(case_seed: int, config: VerifyConfig) -> bool:
    rng = make_rng(case_seed)
    m = int(rng.integers(3, config.triple_max_m + 1))
    p1, p2, p3 = (Permutation.random(m, derive_seed(case_seed, k)) for k in range(3))
    return check_triple_product(p1, p2, p3).holds


def _dilworth_case(case_seed: int, config: VerifyConfig) -> bool:
    m = int(make_rng(case_seed).integers(1, config.dilworth_max_m + 1))
    p1 = Permutation.random(m, derive_seed(case_seed, 1))
    p2 = Permutation.random(m, derive_seed(case_seed, 2))
    decomposition = dilworth_decompose(p1, p2)
    return (
        len(decomposition) == lcs_length(p1.order, p2.order)
        and decomposition.is_partition()
        and all(decomposition.is_antichain(k) for k in range(len(decomposition)))
    )


def _refine_case(case_seed: int, config: VerifyConfig) -> bool:
    rng = make_rng(case_seed)
    m = int(rng.integers(1, 65))
    blocks = []
    for _ in range(int(rng.integers(1, 9))):
        kept = rng.permutation(m)[: int(rng.integers(0, m + 1))]
        string = SymbolString.of(kept, m)
        blocks.append(SemiPermutation(string.project(np.arange(1, len(string) + 1))))
    try:
        result = refine_to_complete(blocks, None, derive_seed(case_seed, "refine"), range(m))
    except PermutationError:
        return False
    return all(
        out.m == m and out.tolist()[: len(block)] == block.string.tolist()
        for block, out in zip(blocks, result.permutations, strict=True)
    )


SUITES: dict[str, tuple[str, Callable[[int, VerifyConfig], bool]]] = {
    "triple_product": ("triple_cases", _triple_case),
    "dilworth": ("dilworth_cases", _dilworth_case),
    "refine": ("refine_cases", _refine_case),
}


def run_verification(config: VerifyConfig | None = None, seed: int = 0) -> VerificationSummary:
    """
    Run every checker suite on derived per-case seeds and count violations.

    Args:
        config: Case counts and sizes per suite; schema defaults when omitted.
        seed: Base seed; case k of suite S runs on derive_seed(seed, S, k).

    Returns:
        One result per suite with its case count, violations and failing seeds.
    """
    config = config or VerifyConfig()
    results = []
    perf = logger.bind(performance=True)
    for name, (count_field, case) in SUITES.items():
        result = SuiteResult(name)
        start = time.perf_counter()
        for index in range(getattr(config, count_field)):
            case_seed = derive_seed(seed, name, index)
            result.record(case(case_seed, config), case_seed)
        if result.passed:
            logger.info(f"{name}: {result.cases} cases, no violations")
        else:
            logger.error(
                f"{name}: {result.violations}/{result.cases} violations, "
                f"first failing seed {result.failing_seeds[0]}"
            )
        perf.debug(f"verify {name}: {result.cases} cases in {time.perf_counter() - start:.3f}s")
        results.append(result)
    return VerificationSummary(tuple(results))
