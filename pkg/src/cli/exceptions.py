"""Custom exceptions for the benchmark harness."""

from pathlib import Path


class BenchError(Exception):
    """Base exception for instance and benchmark errors."""


class InstanceSpecError(BenchError):
    """Raised when an instance description is invalid."""


class InstanceFormatError(BenchError):
    """Raised when an instance file does not follow the three-line text format."""

    def __init__(self, path: Path, reason: str):
        super().__init__(f"Malformed instance file {path}: {reason}")
        self.path = path


class OutputPathError(BenchError):
    """Raised when the CSV output path cannot be written."""

    def __init__(self, path: Path):
        super().__init__(f"Cannot write benchmark output to {path}")
        self.path = path


class ValidationFailure(BenchError):
    """Raised when a benchmarked chain is not a common subsequence."""

    def __init__(self, algorithm: str, instance_id: str, seed: int):
        super().__init__(
            f"{algorithm} returned an invalid chain on {instance_id}; reproduce with seed {seed}"
        )
        self.algorithm = algorithm
        self.instance_id = instance_id
        self.seed = seed
