"""
Core configuration module for the LCS approximation library.

This module provides the configuration registry, the YAML loader and the
Pydantic schemas for the pipeline, the benchmark harness and the verification
suites.
"""

from .registry import ConfigRegistry
from .schema import BenchConfig, PipelineConfig, VerifyConfig

__all__ = ["BenchConfig", "ConfigRegistry", "PipelineConfig", "VerifyConfig"]
