"""
Sampling approximators.

Character sampling against a column-truncated table (the sqrt(n) baseline and
its solution-size-bounded variant), matching-pair sampling with geometric
skips, and the single-symbol approximation.
"""

from .dominant import dominant_symbol_chain
from .pairs import (
    alg6_sampled_pairs,
    geometric_skip_indices,
    locate_kth_match,
    locate_matches,
)
from .truncated import (
    SampleParams,
    TruncatedDpTable,
    alg0_sqrt_baseline,
    alg1_bounded_solution,
    ceil_power,
    truncated_dp_lcs,
    truncated_dp_table,
)

__all__ = [
    "SampleParams",
    "TruncatedDpTable",
    "alg0_sqrt_baseline",
    "alg1_bounded_solution",
    "alg6_sampled_pairs",
    "ceil_power",
    "dominant_symbol_chain",
    "geometric_skip_indices",
    "locate_kth_match",
    "locate_matches",
    "truncated_dp_lcs",
    "truncated_dp_table",
]
