"""
Instance generation, instance files and the benchmark harness behind ``src.main``.
"""

from .exceptions import (
    BenchError,
    InstanceFormatError,
    InstanceSpecError,
    OutputPathError,
    ValidationFailure,
)
from .instances import Instance, InstanceSpec, generate, read_instance, write_instance
from .runner import (
    ALGORITHMS,
    CSV_COLUMNS,
    AlgorithmContext,
    BenchRow,
    run_bench,
    run_trial,
    scaling_slope,
    write_rows,
)

__all__ = [
    "ALGORITHMS",
    "CSV_COLUMNS",
    "AlgorithmContext",
    "BenchError",
    "BenchRow",
    "Instance",
    "InstanceFormatError",
    "InstanceSpec",
    "InstanceSpecError",
    "OutputPathError",
    "ValidationFailure",
    "generate",
    "read_instance",
    "run_bench",
    "run_trial",
    "scaling_slope",
    "write_instance",
    "write_rows",
]
