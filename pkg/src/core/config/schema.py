from pathlib import Path

from pydantic import BaseModel, Field


class PipelineConfig(BaseModel):
    """Configuration for the end-to-end approximator"""

    delta: float | None = Field(
        None, ge=0.0, le=1.0, description="Solution-size exponent, None for the LP optimum"
    )
    eta: float | None = Field(
        None, ge=-0.5, le=0.5, description="Alphabet exponent, None for the LP optimum"
    )
    exact_sparse_cap: int = Field(
        100_000, ge=0, description="Largest n compared against the sparse exact oracle"
    )
    exact_quadratic_cap: int = Field(
        2_000, ge=0, description="Largest n for the O(n)-memory quadratic length oracle"
    )
    sparse_density_limit: float = Field(
        0.25,
        gt=0.0,
        le=1.0,
        description="R / (|s|*|t|) above which the sparse oracle defers to the quadratic one",
    )

    model_config = {
        "validate_assignment": True,
        "extra": "forbid",
    }


class BenchConfig(BaseModel):
    """Configuration for the benchmark harness"""

    trials: int = Field(1, ge=1, description="Trials per (instance spec, algorithm)")
    exact_cap: int = Field(
        100_000, ge=0, description="Largest n for which the exact length is computed"
    )
    exact_dense_cap: int = Field(
        20_000,
        ge=0,
        description="Largest n the exact algorithm may run on when R is dense; "
        "its traceback keeps n*n/4 bytes",
    )
    output: Path = Field(Path("output/bench.csv"), description="CSV output path")
    workers: int = Field(1, ge=1, description="Worker processes for trial dispatch")
    alg6_probability: float = Field(
        1.0, gt=0.0, le=1.0, description="Pair-sampling probability for the alg6 runner"
    )
    log_dir: Path = Field(Path("logs"), description="Directory for log files")

    model_config = {
        "validate_assignment": True,
        "extra": "forbid",
    }


class VerifyConfig(BaseModel):
    """Sizes and case counts for the combinatorial checker suites"""

    triple_cases: int = Field(10_000, ge=1, description="Random permutation triples")
    triple_max_m: int = Field(256, ge=3, description="Largest permutation size for triples")
    dilworth_cases: int = Field(2_000, ge=1, description="Random permutation pairs")
    dilworth_max_m: int = Field(512, ge=1, description="Largest permutation size for pairs")
    refine_cases: int = Field(500, ge=1, description="Random refine_to_complete cases")

    model_config = {
        "validate_assignment": True,
        "extra": "forbid",
    }
