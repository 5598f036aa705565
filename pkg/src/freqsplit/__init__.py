"""
Frequency split.

Separates low- and high-frequency symbols, approximates the three mixed
subinstances by pair sampling, and emits the high/high residual instance
whose alphabet is bounded by n / tau.
"""

from .split import (
    SUBINSTANCES,
    FrequencySplit,
    FrequencySplitOutcome,
    alg2_frequency_split,
    split_by_frequency,
)

__all__ = [
    "SUBINSTANCES",
    "FrequencySplit",
    "FrequencySplitOutcome",
    "alg2_frequency_split",
    "split_by_frequency",
]
