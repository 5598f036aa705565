"""
Core types and sequence primitives for the LCS approximation library.

This module provides the immutable value types every algorithm speaks in
(symbol strings, occurrence indexes, match chains, frequency tables), the
sequence primitives built on them, the configuration registry and the
setup_logger function for the application.
"""

from .config.registry import ConfigRegistry
from .logging import setup_logger
from .sequences import (
    build_occurrence_index,
    compact_pair,
    count_matching_pairs,
    first_occurrence_after,
    frequency_counts,
    frequency_table,
    is_dense,
    match_prefix_counts,
    pad_pair,
    validate_chain,
)
from .types import FrequencyTable, MatchChain, OccurrenceIndex, Projection, SymbolString

__all__ = [
    "ConfigRegistry",
    "FrequencyTable",
    "MatchChain",
    "OccurrenceIndex",
    "Projection",
    "SymbolString",
    "build_occurrence_index",
    "compact_pair",
    "count_matching_pairs",
    "first_occurrence_after",
    "frequency_counts",
    "frequency_table",
    "is_dense",
    "match_prefix_counts",
    "pad_pair",
    "setup_logger",
    "validate_chain",
]
