import argparse
import math
import sys
from collections.abc import Sequence
from pathlib import Path

from src.cli import (
    ALGORITHMS,
    AlgorithmContext,
    BenchError,
    InstanceSpec,
    ValidationFailure,
    generate,
    read_instance,
    run_bench,
    scaling_slope,
    write_instance,
)
from src.core import logging
from src.core.config.exception import ConfigError
from src.core.config.registry import ConfigRegistry
from src.core.exceptions import LcsError
from src.core.rng import SEED_MASK
from src.pipeline import params_from_config
from src.verify import run_verification

DEFAULT_N = 1000


def uint64(value: str) -> int:
    try:
        seed = int(value, 10)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {value!r}") from e
    if not 0 <= seed <= SEED_MASK:
        raise argparse.ArgumentTypeError(f"seed {seed} is outside the unsigned 64-bit range")
    return seed


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcs-approx",
        description="Benchmark approximate and exact LCS algorithms on generated instances.",
    )
    parser.add_argument(
        "--family",
        choices=["uniform", "planted", "block_constant", "block_permutation"],
        default="uniform",
        help="Instance family (default: uniform)",
    )
    parser.add_argument(
        "--n", type=int, action="append", help=f"String length. Repeatable. Default: {DEFAULT_N}"
    )
    parser.add_argument("--m", type=int, help="Alphabet size (default: ceil(sqrt(n)))")
    parser.add_argument("--planted-len", type=int, help="Planted LCS length (default: n)")
    parser.add_argument("--seed", type=uint64, default=0, help="Base seed, unsigned 64-bit")
    parser.add_argument(
        "--algo",
        action="append",
        choices=sorted(ALGORITHMS),
        help="Algorithm to run. Repeatable. Default: pipeline",
    )
    parser.add_argument("--trials", type=int, help="Trials per instance and algorithm")
    parser.add_argument("--exact-cap", type=int, help="Largest n with an exact length column")
    parser.add_argument("--out", type=Path, help="CSV output path")
    parser.add_argument("--workers", type=int, help="Worker processes for trials")
    parser.add_argument("--alg6-p", type=float, help="Sampling probability for alg6")
    parser.add_argument("--params-delta", type=float, help="delta (default: LP optimum)")
    parser.add_argument("--params-eta", type=float, help="eta (default: LP optimum)")
    parser.add_argument(
        "--verify", action="store_true", help="Run the combinatorial checker suites"
    )
    parser.add_argument("--instance", type=Path, help="Benchmark a stored instance file")
    parser.add_argument("--save-instance", type=Path, help="Write generated instances here")
    parser.add_argument("--config", type=Path, help="Bench configuration YAML")
    return parser


def _instance_path(base: Path, n: int, count: int) -> Path:
    if count == 1:
        return base
    return base.with_name(f"{base.stem}-n{n}{base.suffix}")


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    registry = ConfigRegistry()

    if args.config is not None and registry.load_config("bench", args.config) is None:
        return 2
    bench = registry.create_custom_config(
        "bench",
        trials=args.trials,
        exact_cap=args.exact_cap,
        output=args.out,
        workers=args.workers,
        alg6_probability=args.alg6_p,
    )
    pipeline = registry.create_custom_config(
        "pipeline", delta=args.params_delta, eta=args.params_eta
    )
    if bench is None or pipeline is None:
        return 2

    logger = logging.setup_logger("main", log_dir=bench.log_dir)
    status = 0
    try:
        params = params_from_config(pipeline, args.seed)
        logger.info(
            f"exponents delta={float(params.delta):.6f} eta={float(params.eta):.6f} "
            f"nu={float(params.nu):.6f}, seed {args.seed}"
        )

        if args.verify:
            summary = run_verification(registry.get_config("verify"), args.seed)
            if not summary.passed:
                status = 1

        algorithms = args.algo or ([] if args.verify else ["pipeline"])
        if not algorithms:
            return status

        if args.instance is not None:
            instances = [read_instance(args.instance)]
        else:
            sizes = args.n or [DEFAULT_N]
            instances = []
            for n in sizes:
                spec = InstanceSpec.build(
                    family=args.family,
                    n=n,
                    m=args.m if args.m is not None else max(1, math.isqrt(n - 1) + 1),
                    planted_len=args.planted_len,
                    seed=args.seed,
                )
                instance = generate(spec)
                if args.save_instance is not None:
                    write_instance(
                        _instance_path(args.save_instance, n, len(sizes)), instance.s, instance.t
                    )
                instances.append(instance)

        context = AlgorithmContext(
            params=params, pipeline=pipeline, alg6_probability=bench.alg6_probability
        )
        rows = run_bench(
            instances, algorithms, args.seed, bench, context, output=bench.output, logger=logger
        )
        registry.save_custom_config(bench, bench.output.with_name(f"{bench.output.stem}.config.yaml"))

        perf = logger.bind(performance=True)
        for name in algorithms:
            slope = scaling_slope(rows, name)
            if slope is not None:
                perf.info(f"{name}: log-log wall time slope {slope:.3f}")
        return status

    except ValidationFailure as e:
        logger.error(str(e))
        return 1
    except (BenchError, ConfigError, LcsError, ValueError) as e:
        logger.error(str(e))
        return 2


if __name__ == "__main__":
    sys.exit(main())
