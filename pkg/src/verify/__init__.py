"""
Executable checkers for the permutation combinatorics behind the blockwise stage.
"""

from .dilworth import AntichainDecomposition, dilworth_decompose
from .permutations import Permutation, permutation_lcs
from .refine import RefinementResult, build_mask, default_sample_count, refine_to_complete
from .suite import (
    MaskExperimentReport,
    SuiteResult,
    VerificationSummary,
    mask_experiment,
    run_verification,
)
from .triple import TripleProductCheck, check_triple_product

__all__ = [
    "AntichainDecomposition",
    "MaskExperimentReport",
    "Permutation",
    "RefinementResult",
    "SuiteResult",
    "TripleProductCheck",
    "VerificationSummary",
    "build_mask",
    "check_triple_product",
    "default_sample_count",
    "dilworth_decompose",
    "mask_experiment",
    "permutation_lcs",
    "refine_to_complete",
    "run_verification",
]
