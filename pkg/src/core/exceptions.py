"""Custom exceptions shared by the algorithm packages."""


class LcsError(Exception):
    """Base exception for all sequence and approximation errors."""


class ParameterRangeError(LcsError, ValueError):
    """Raised when a real parameter, probability or cap is out of range."""

    def __init__(self, name: str, value: object, expected: str):
        super().__init__(f"{name}={value!r} is outside {expected}")
        self.name = name
        self.value = value


class RankOutOfRangeError(LcsError, IndexError):
    """Raised when a matching-pair rank lies outside 1..R."""

    def __init__(self, k: int, total: int):
        super().__init__(f"rank {k} is outside 1..{total}")
        self.k = k
        self.total = total


class LengthMismatchError(LcsError, ValueError):
    """Raised when an operation needs two strings of equal length."""

    def __init__(self, left: int, right: int):
        super().__init__(f"strings must have equal length, got {left} and {right}")


class InvalidChainError(LcsError):
    """Raised when an approximator returns a chain that fails validation."""

    def __init__(self, algorithm: str, seed: int | None):
        super().__init__(f"{algorithm} returned an invalid chain (seed={seed})")
        self.algorithm = algorithm
        self.seed = seed


class PermutationError(LcsError, ValueError):
    """Raised for non-bijective permutations or mismatched symbol counts."""
