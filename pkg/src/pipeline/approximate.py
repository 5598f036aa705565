"""End-to-end approximator: every stage on its own derived seed, best chain wins."""

from __future__ import annotations

import time
from collections.abc import Callable
from dataclasses import dataclass

import loguru

from src.blockwise.combine import alg5_combine
from src.core import logging
from src.core.config.schema import PipelineConfig
from src.core.exceptions import InvalidChainError, ParameterRangeError
from src.core.rng import derive_seed
from src.core.sequences import is_dense, pad_pair, validate_chain
from src.core.types import MatchChain, SymbolString
from src.exact.dp import lcs_length
from src.exact.sparse import lcs_sparse
from src.freqsplit.split import FrequencySplitOutcome, alg2_frequency_split
from src.pipeline.lp import PipelineParams, solve_exponent_lp
from src.sampling.dominant import dominant_symbol_chain
from src.sampling.truncated import alg0_sqrt_baseline, alg1_bounded_solution

CANDIDATES = ("alg0", "alg1", "alg2", "combine", "dominant")


@dataclass(frozen=True, slots=True)
class CandidateResult:
    name: str
    length: int
    runtime: float
    seed: int | None
    chain: MatchChain


@dataclass(frozen=True, slots=True)
class PipelineReport:
    candidates: tuple[CandidateResult, ...]
    chosen: MatchChain
    chosen_name: str
    exact_length: int | None = None

    def candidate(self, name: str) -> CandidateResult:
        return next(c for c in self.candidates if c.name == name)

    @property
    def ratio(self) -> float | None:
        if self.exact_length is None:
            return None
        return self.exact_length / max(len(self.chosen), 1)


def params_from_config(config: PipelineConfig, seed: int) -> PipelineParams:
    """LP optimum unless the config pins delta and/or eta."""
    optimum = solve_exponent_lp()
    if config.delta is None and config.eta is None:
        return optimum.with_seed(seed)
    return PipelineParams.with_exponents(
        optimum.delta if config.delta is None else config.delta,
        optimum.eta if config.eta is None else config.eta,
        seed,
    )


def exact_lcs_length(
    s: SymbolString,
    t: SymbolString,
    config: PipelineConfig | None = None,
    logger: loguru.logger = None,
) -> int | None:
    """
    Exact length when the instance is within the configured oracle caps, else None.

    Sparse pairs up to ``exact_sparse_cap`` go through the pair-chain oracle;
    any pair up to ``exact_quadratic_cap`` goes through the O(n)-memory
    quadratic length oracle. A skipped instance is logged as a warning.
    """
    config = config or PipelineConfig()
    n = max(len(s), len(t))
    if n <= config.exact_sparse_cap and not is_dense(s, t, config.sparse_density_limit):
        return len(lcs_sparse(s, t, config.sparse_density_limit))
    if n <= config.exact_quadratic_cap:
        return lcs_length(s, t)
    logger = logger if logger else logging.setup_logger("pipeline")
    if n <= config.exact_sparse_cap:
        logger.warning(
            f"exact length skipped for dense n={n} above "
            f"exact_quadratic_cap={config.exact_quadratic_cap}"
        )
    else:
        logger.warning(f"exact length skipped for n={n} above exact_sparse_cap={config.exact_sparse_cap}")
    return None


def _combine_on_residual(outcome: FrequencySplitOutcome, seed: int) -> MatchChain:
    rs, rt = outcome.residual_s, outcome.residual_t
    if not len(rs) or not len(rt):
        return MatchChain()
    ps, pt = pad_pair(rs.string, rt.string)
    # padding symbols never match, so every pair indexes a real residual character
    return alg5_combine(ps, pt, seed).remap(rs.positions, rt.positions)


def approximate_lcs(
    s: SymbolString,
    t: SymbolString,
    params: PipelineParams,
    config: PipelineConfig | None = None,
    compute_exact: bool = False,
    logger: loguru.logger = None,
) -> PipelineReport:
    """
    Pad the pair, run the baseline, the bounded-solution sampler, the
    frequency split with combine on its residual, and the single-symbol
    candidate; return the longest chain with per-stage timings.

    Args:
        s: First string.
        t: Second string; padded against ``s`` when the lengths differ.
        params: Exponents and the base seed every stage derives its own from.
        config: Oracle caps for ``compute_exact``.
        compute_exact: Attach the exact length when within the caps.
        logger: An optional logger instance. If not provided, a new one will be set up.

    Returns:
        Every candidate with its length and runtime, and the chosen chain.

    Raises:
        ParameterRangeError: ``params`` carries no seed.
        InvalidChainError: A stage returned a chain that is not common to both strings.
    """
    logger = logger if logger else logging.setup_logger("pipeline")
    if params.seed is None:
        raise ParameterRangeError("seed", None, "an integer seed")
    config = config or PipelineConfig()
    ps, pt = pad_pair(s, t)
    delta, eta = float(params.delta), max(float(params.eta), 0.0)
    if params.eta < 0:
        logger.warning(f"eta={float(params.eta):.6f} < 0; the frequency split runs at eta=0")

    split: dict[str, FrequencySplitOutcome] = {}

    def run_alg2(seed: int) -> MatchChain:
        split["outcome"] = alg2_frequency_split(ps, pt, eta, seed)
        return split["outcome"].best

    stages: dict[str, Callable[[int], MatchChain]] = {
        "alg0": lambda seed: alg0_sqrt_baseline(ps, pt, seed),
        "alg1": lambda seed: alg1_bounded_solution(ps, pt, delta, seed),
        "alg2": run_alg2,
        "combine": lambda seed: _combine_on_residual(split["outcome"], seed),
        "dominant": lambda _seed: dominant_symbol_chain(ps, pt),
    }

    results: list[CandidateResult] = []
    perf = logger.bind(performance=True)
    for name in CANDIDATES:
        stage_seed = derive_seed(params.seed, name)
        if len(ps):
            start = time.perf_counter()
            chain = stages[name](stage_seed)
            runtime = time.perf_counter() - start
        else:
            chain, runtime = MatchChain(), 0.0
        if not validate_chain(s, t, chain):
            logger.error(f"{name} produced an invalid chain for seed {params.seed}")
            raise InvalidChainError(name, params.seed)
        results.append(CandidateResult(name, len(chain), runtime, stage_seed, chain))
        perf.debug(f"pipeline {name}: n={len(ps)} length={len(chain)} time={runtime:.6f}s")

    best = max(results, key=lambda result: result.length)
    exact = exact_lcs_length(s, t, config, logger) if compute_exact else None
    logger.info(
        f"pipeline n={len(ps)}: chosen {best.name} length {best.length}"
        + (f", exact {exact}" if exact is not None else "")
    )
    return PipelineReport(
        candidates=tuple(results), chosen=best.chain, chosen_name=best.name, exact_length=exact
    )
