"""
Benchmark harness: every (instance, algorithm, trial) on its own derived seed,
validated, timed, and written as one CSV row.
"""

from __future__ import annotations

import csv
import math
import time
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import loguru
import numpy as np
import psutil
from pydantic import BaseModel, Field, model_validator

from src.blockwise import alg3_block_to_block, alg4_random_shift, alg5_combine
from src.cli.exceptions import BenchError, OutputPathError, ValidationFailure
from src.cli.instances import Instance
from src.core import logging
from src.core.config.schema import BenchConfig, PipelineConfig
from src.core.exceptions import InvalidChainError
from src.core.rng import derive_seed
from src.core.sequences import is_dense, pad_pair, validate_chain
from src.core.types import MatchChain, SymbolString
from src.exact.sparse import lcs_sparse
from src.freqsplit import alg2_frequency_split
from src.pipeline import PipelineParams, approximate_lcs, exact_lcs_length, solve_exponent_lp
from src.sampling import (
    alg0_sqrt_baseline,
    alg1_bounded_solution,
    alg6_sampled_pairs,
    dominant_symbol_chain,
)


class BenchRow(BaseModel):
    """One CSV row; field order is the column order"""

    instance_id: str
    family: str
    n: int = Field(..., ge=0)
    m: int = Field(..., ge=0)
    algorithm: str
    length: int = Field(..., ge=0)
    exact_length: int | None = None
    ratio: float | None = None
    wall_time: float = Field(..., ge=0.0)
    seed: int

    model_config = {
        "frozen": True,
        "extra": "forbid",
    }

    @model_validator(mode="after")
    def _check_ratio(self) -> BenchRow:
        if self.exact_length is None:
            if self.ratio is not None:
                raise ValueError("ratio requires exact_length")
        elif self.ratio is None or not math.isclose(
            self.ratio, self.exact_length / max(self.length, 1)
        ):
            raise ValueError("ratio must equal exact_length / max(length, 1)")
        return self

    @classmethod
    def for_trial(
        cls,
        instance: Instance,
        algorithm: str,
        length: int,
        exact_length: int | None,
        wall_time: float,
        seed: int,
    ) -> BenchRow:
        return cls(
            instance_id=instance.instance_id,
            family=instance.family,
            n=instance.n,
            m=instance.m,
            algorithm=algorithm,
            length=length,
            exact_length=exact_length,
            ratio=None if exact_length is None else exact_length / max(length, 1),
            wall_time=wall_time,
            seed=seed,
        )


CSV_COLUMNS = tuple(BenchRow.model_fields)


@dataclass(frozen=True, slots=True)
class AlgorithmContext:
    """Everything an algorithm runner needs besides the strings and the seed."""

    params: PipelineParams = field(default_factory=solve_exponent_lp)
    pipeline: PipelineConfig = field(default_factory=PipelineConfig)
    alg6_probability: float = 1.0


Runner = Callable[[SymbolString, SymbolString, int, AlgorithmContext], MatchChain]


def _padded(solver: Callable[[SymbolString, SymbolString, int], MatchChain]) -> Runner:
    def run(s: SymbolString, t: SymbolString, seed: int, _ctx: AlgorithmContext) -> MatchChain:
        return solver(*pad_pair(s, t), seed)

    return run


ALGORITHMS: dict[str, Runner] = {
    "exact": lambda s, t, _seed, ctx: lcs_sparse(s, t, ctx.pipeline.sparse_density_limit),
    "alg0": _padded(alg0_sqrt_baseline),
    "alg1": lambda s, t, seed, ctx: alg1_bounded_solution(
        *pad_pair(s, t), float(ctx.params.delta), seed
    ),
    "alg2": lambda s, t, seed, ctx: alg2_frequency_split(
        *pad_pair(s, t), max(float(ctx.params.eta), 0.0), seed
    ).best,
    "alg3": _padded(alg3_block_to_block),
    "alg4": _padded(alg4_random_shift),
    "alg6": lambda s, t, seed, ctx: alg6_sampled_pairs(s, t, ctx.alg6_probability, seed),
    "combine": _padded(alg5_combine),
    "pipeline": lambda s, t, seed, ctx: approximate_lcs(
        s, t, ctx.params.with_seed(seed), ctx.pipeline
    ).chosen,
    "dominant": lambda s, t, _seed, _ctx: dominant_symbol_chain(s, t),
}


@dataclass(frozen=True, slots=True, eq=False)
class TrialJob:
    order: tuple[int, int, int]
    instance: Instance
    algorithm: str
    seed: int
    context: AlgorithmContext


@dataclass(frozen=True, slots=True)
class TrialOutcome:
    order: tuple[int, int, int]
    length: int
    wall_time: float
    valid: bool


def run_trial(job: TrialJob) -> TrialOutcome:
    """Time the algorithm call alone and validate its chain against the unpadded pair."""
    s, t = job.instance.s, job.instance.t
    runner = ALGORITHMS[job.algorithm]
    start = time.perf_counter()
    try:
        chain = runner(s, t, job.seed, job.context)
    except InvalidChainError:
        return TrialOutcome(job.order, 0, time.perf_counter() - start, valid=False)
    wall_time = time.perf_counter() - start
    return TrialOutcome(job.order, len(chain), wall_time, validate_chain(s, t, chain))


def trial_seed(instance: Instance, base_seed: int, algorithm: str, trial: int) -> int:
    return derive_seed(base_seed, instance.instance_id, algorithm, trial)


def write_rows(rows: Iterable[BenchRow], output: Path) -> None:
    """UTF-8 CSV with header, LF endings, blank cells for missing values."""
    output = Path(output)
    try:
        output.parent.mkdir(parents=True, exist_ok=True)
        with output.open("w", encoding="utf-8", newline="") as f:
            writer = csv.DictWriter(f, fieldnames=CSV_COLUMNS, lineterminator="\n")
            writer.writeheader()
            for row in rows:
                writer.writerow(
                    {k: "" if v is None else v for k, v in row.model_dump().items()}
                )
    except OSError as e:
        raise OutputPathError(output) from e


def exact_column(
    instances: Sequence[Instance],
    outcomes: dict[tuple[int, int, int], TrialOutcome],
    algorithms: Sequence[str],
    config: BenchConfig,
    pipeline: PipelineConfig,
    logger: loguru.logger,
) -> dict[int, int | None]:
    """
    Exact length per instance index for every instance with n <= exact_cap.

    An "exact" trial already holds the length; otherwise the oracle caps are
    raised to ``exact_cap`` so dense pairs fall through to the O(n)-memory
    length oracle.
    """
    oracle = pipeline.model_copy(
        update={
            "exact_sparse_cap": max(pipeline.exact_sparse_cap, config.exact_cap),
            "exact_quadratic_cap": max(pipeline.exact_quadratic_cap, config.exact_cap),
        }
    )
    exact_slot = algorithms.index("exact") if "exact" in algorithms else None
    column: dict[int, int | None] = {}
    for i, instance in enumerate(instances):
        if instance.n > config.exact_cap:
            logger.warning(
                f"no exact length for {instance.instance_id}: n={instance.n} "
                f"above exact_cap={config.exact_cap}"
            )
            column[i] = None
        elif exact_slot is not None:
            column[i] = outcomes[(i, exact_slot, 0)].length
        else:
            column[i] = exact_lcs_length(instance.s, instance.t, oracle, logger)
    return column


def check_exact_feasible(
    instances: Sequence[Instance], config: BenchConfig, pipeline: PipelineConfig
) -> None:
    """Reject dense instances whose exact traceback would exceed ``exact_dense_cap``."""
    too_large = [
        instance.instance_id
        for instance in instances
        if instance.n > config.exact_dense_cap
        and is_dense(instance.s, instance.t, pipeline.sparse_density_limit)
    ]
    if too_large:
        raise BenchError(
            f"exact algorithm on dense instances above exact_dense_cap="
            f"{config.exact_dense_cap}: {', '.join(too_large)}"
        )


def run_bench(
    instances: Sequence[Instance],
    algorithms: Sequence[str],
    seed: int,
    config: BenchConfig | None = None,
    context: AlgorithmContext | None = None,
    output: Path | None = None,
    logger: loguru.logger = None,
) -> list[BenchRow]:
    """
    Run every (instance, algorithm, trial) and write the rows to ``output``.

    Args:
        instances: The string pairs to benchmark, in output order.
        algorithms: Names from ``ALGORITHMS``, in output order.
        seed: Base seed; each trial derives its own from (instance, algorithm, trial).
        config: Trials, exact caps and worker count.
        context: Exponents and caps handed to the algorithms.
        output: CSV path; rows are only returned when omitted.

    Returns:
        Rows sorted by (instance, algorithm, trial) regardless of completion order.

    Raises:
        BenchError: An unknown algorithm, or "exact" on a dense instance above
            ``exact_dense_cap``.
        ValidationFailure: A chain failed validation; carries the reproducing seed.
        OutputPathError: The CSV could not be written.
    """
    logger = logger if logger else logging.setup_logger("bench")
    config = config or BenchConfig()
    context = context or AlgorithmContext(alg6_probability=config.alg6_probability)
    unknown = [name for name in algorithms if name not in ALGORITHMS]
    if unknown:
        raise BenchError(f"unknown algorithms: {', '.join(unknown)}")
    if "exact" in algorithms:
        check_exact_feasible(instances, config, context.pipeline)

    jobs = [
        TrialJob(
            (i, a, trial), instance, name, trial_seed(instance, seed, name, trial), context
        )
        for i, instance in enumerate(instances)
        for a, name in enumerate(algorithms)
        for trial in range(config.trials)
    ]
    logger.info(
        f"benchmarking {len(instances)} instance(s) x {len(algorithms)} algorithm(s) "
        f"x {config.trials} trial(s) on {config.workers} worker(s)"
    )

    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            outcomes = list(pool.map(run_trial, jobs))
    else:
        outcomes = [run_trial(job) for job in jobs]

    by_order = {outcome.order: outcome for outcome in outcomes}
    exact = exact_column(instances, by_order, algorithms, config, context.pipeline, logger)

    perf = logger.bind(performance=True)
    rows = []
    for job in sorted(jobs, key=lambda j: j.order):
        outcome = by_order[job.order]
        if not outcome.valid:
            logger.error(
                f"{job.algorithm} failed validation on {job.instance.instance_id}, seed {job.seed}"
            )
            raise ValidationFailure(job.algorithm, job.instance.instance_id, job.seed)
        rows.append(
            BenchRow.for_trial(
                job.instance,
                job.algorithm,
                outcome.length,
                exact[job.order[0]],
                outcome.wall_time,
                job.seed,
            )
        )
        perf.debug(
            f"{job.algorithm} on {job.instance.instance_id}: "
            f"length={outcome.length} time={outcome.wall_time:.6f}s"
        )

    rss = psutil.Process().memory_info().rss
    perf.info(f"bench finished: {len(rows)} rows, rss={rss / 2**20:.1f} MiB")

    if output is not None:
        write_rows(rows, output)
        logger.info(f"wrote {len(rows)} rows to {output}")
    return rows


def scaling_slope(rows: Iterable[BenchRow], algorithm: str) -> float | None:
    """Least-squares slope of log(mean wall time) against log n; None with fewer than two sizes."""
    times: dict[int, list[float]] = {}
    for row in rows:
        if row.algorithm == algorithm and row.n > 0 and row.wall_time > 0:
            times.setdefault(row.n, []).append(row.wall_time)
    if len(times) < 2:
        return None
    sizes = sorted(times)
    x = np.log(np.asarray(sizes, dtype=float))
    y = np.log(np.asarray([np.mean(times[n]) for n in sizes]))
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)
