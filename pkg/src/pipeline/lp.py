"""
Exponent linear program, solved in closed form with exact rationals.

maximize nu subject to
    0 <= delta <= 1,  -1/2 <= eta <= 1/2,
    nu <= 1/2 - eta,
    nu <= 1/2 - delta/2,
    nu <= 1/2 - 1/37 + (221/37) delta + (10/37) eta.

At the optimum all three nu constraints are tight: the first two give
eta = delta/2, and the third then gives delta = 2/489.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from src.core.exceptions import ParameterRangeError

HALF = Fraction(1, 2)


def nu_bounds(delta: Fraction, eta: Fraction) -> dict[str, Fraction]:
    """Right-hand sides of the three nu constraints."""
    return {
        "nu_eta": HALF - eta,
        "nu_delta": HALF - delta / 2,
        "nu_mixed": HALF - Fraction(1, 37) + Fraction(221, 37) * delta + Fraction(10, 37) * eta,
    }


@dataclass(frozen=True, slots=True)
class PipelineParams:
    """Exponents driving the pipeline and the seed its stages derive from."""

    delta: Fraction
    eta: Fraction
    nu: Fraction
    seed: int | None = None

    def __post_init__(self) -> None:
        for name, slack in lp_slacks(self).items():
            if slack < 0:
                raise ParameterRangeError(name, float(slack), "a non-negative LP slack")

    @classmethod
    def with_exponents(
        cls, delta: float | Fraction, eta: float | Fraction, seed: int | None = None
    ) -> PipelineParams:
        """Given (delta, eta), take the largest feasible nu."""
        delta, eta = Fraction(delta), Fraction(eta)
        if not 0 <= delta <= 1:
            raise ParameterRangeError("delta", float(delta), "[0, 1]")
        if not -HALF <= eta <= HALF:
            raise ParameterRangeError("eta", float(eta), "[-1/2, 1/2]")
        return cls(delta=delta, eta=eta, nu=min(nu_bounds(delta, eta).values()), seed=seed)

    def with_seed(self, seed: int) -> PipelineParams:
        return replace(self, seed=seed)


def lp_slacks(params: PipelineParams) -> dict[str, Fraction]:
    """Slack of each of the five LP constraints; all must be >= 0."""
    slacks = {
        "delta_range": min(params.delta, 1 - params.delta),
        "eta_range": min(params.eta + HALF, HALF - params.eta),
    }
    for name, bound in nu_bounds(params.delta, params.eta).items():
        slacks[name] = bound - params.nu
    return slacks


def solve_exponent_lp() -> PipelineParams:
    """delta = 2/489, eta = 1/489, nu = 1/2 - 1/489."""
    # mixed bound at eta = delta/2: 1/2 - 1/37 + (226/37) delta = 1/2 - delta/2
    delta = Fraction(1, 37) / (Fraction(226, 37) + HALF)
    eta = delta / 2
    return PipelineParams(delta=delta, eta=eta, nu=HALF - eta)
