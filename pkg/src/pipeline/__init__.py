"""
End-to-end approximation pipeline.

Solves the exponent LP exactly, runs every approximator on derived seeds and
keeps the longest chain.
"""

from .approximate import (
    CANDIDATES,
    CandidateResult,
    PipelineReport,
    approximate_lcs,
    exact_lcs_length,
    params_from_config,
)
from .lp import PipelineParams, lp_slacks, nu_bounds, solve_exponent_lp

__all__ = [
    "CANDIDATES",
    "CandidateResult",
    "PipelineParams",
    "PipelineReport",
    "approximate_lcs",
    "exact_lcs_length",
    "lp_slacks",
    "nu_bounds",
    "params_from_config",
    "solve_exponent_lp",
]
