"""
Instance families and the plain-text instance format.

Format: line 1 ``n m``, line 2 the n symbols of s, line 3 the n symbols of t,
space-separated, LF endings.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Literal

import numpy as np
from pydantic import BaseModel, Field, ValidationError, model_validator

from src.blockwise.blocks import block_size_for
from src.cli.exceptions import InstanceFormatError, InstanceSpecError
from src.core.rng import SEED_MASK, make_rng
from src.core.types import SYMBOL_DTYPE, SymbolString

Family = Literal["uniform", "planted", "block_constant", "block_permutation"]


class InstanceSpec(BaseModel):
    """One generated instance: family, length, alphabet and seed"""

    family: Family = Field("uniform", description="Instance family")
    n: int = Field(..., ge=1, description="Length of both strings")
    m: int = Field(..., ge=1, description="Alphabet size")
    planted_len: int | None = Field(
        None, ge=0, description="Planted LCS length; defaults to n for the planted family"
    )
    seed: int = Field(0, ge=0, le=SEED_MASK, description="Generation seed")

    model_config = {
        "frozen": True,
        "extra": "forbid",
    }

    @model_validator(mode="after")
    def _check_planted(self) -> InstanceSpec:
        if self.planted_len is not None and self.planted_len > self.n:
            raise ValueError(f"planted_len={self.planted_len} exceeds n={self.n}")
        return self

    @classmethod
    def build(cls, **fields) -> InstanceSpec:
        """Validate, raising InstanceSpecError instead of a pydantic error."""
        try:
            return cls(**fields)
        except ValidationError as e:
            raise InstanceSpecError(str(e)) from e

    @property
    def planted(self) -> int:
        return self.n if self.planted_len is None else self.planted_len

    @property
    def instance_id(self) -> str:
        parts = [self.family, f"n{self.n}", f"m{self.m}"]
        if self.family == "planted":
            parts.append(f"L{self.planted}")
        parts.append(f"s{self.seed}")
        return "-".join(parts)


@dataclass(frozen=True, slots=True, eq=False)
class Instance:
    """A concrete string pair ready for benchmarking."""

    instance_id: str
    family: str
    s: SymbolString
    t: SymbolString

    @property
    def n(self) -> int:
        return max(len(self.s), len(self.t))

    @property
    def m(self) -> int:
        return max(self.s.alphabet_size, self.t.alphabet_size)


def _uniform(spec: InstanceSpec) -> tuple[np.ndarray, np.ndarray]:
    s = make_rng(spec.seed, "s").integers(0, spec.m, spec.n)
    t = make_rng(spec.seed, "t").integers(0, spec.m, spec.n)
    return s, t


def _planted(spec: InstanceSpec) -> tuple[np.ndarray, np.ndarray]:
    """
    A shared random string of length L placed at random positions of both
    strings; every other character is a noise id used exactly once in the pair.
    """
    rng = make_rng(spec.seed, "planted")
    length, noise = spec.planted, spec.n - spec.planted
    shared = rng.integers(0, spec.m, length)
    next_noise = spec.m
    strings = []
    for side in ("s", "t"):
        out = np.empty(spec.n, dtype=SYMBOL_DTYPE)
        slots = np.zeros(spec.n, dtype=bool)
        slots[make_rng(spec.seed, side).choice(spec.n, size=length, replace=False)] = True
        out[slots] = shared
        out[~slots] = np.arange(next_noise, next_noise + noise)
        next_noise += noise
        strings.append(out)
    return strings[0], strings[1]


def _block_constant(spec: InstanceSpec) -> tuple[np.ndarray, np.ndarray]:
    """Block k of both strings repeats one symbol; the block symbols are a random arrangement."""
    size = block_size_for(spec.n)
    count = -(-spec.n // size)
    rng = make_rng(spec.seed, "blocks")
    if spec.m >= count:
        symbols = rng.permutation(spec.m)[:count]
    else:
        symbols = rng.integers(0, spec.m, count)
    s = np.repeat(symbols, size)[: spec.n]
    return s, s.copy()


def _block_permutation(spec: InstanceSpec) -> tuple[np.ndarray, np.ndarray]:
    """Every block an independent uniform arrangement of min(m, block size) distinct symbols."""
    size = block_size_for(spec.n)
    strings = []
    for side in ("s", "t"):
        rng = make_rng(spec.seed, side)
        blocks = []
        for start in range(0, spec.n, size):
            width = min(size, spec.n - start)
            if spec.m >= width:
                blocks.append(rng.choice(spec.m, size=width, replace=False))
            else:
                runs = -(-width // spec.m)
                blocks.append(np.concatenate([rng.permutation(spec.m) for _ in range(runs)])[:width])
        strings.append(np.concatenate(blocks))
    return strings[0], strings[1]


GENERATORS = {
    "uniform": _uniform,
    "planted": _planted,
    "block_constant": _block_constant,
    "block_permutation": _block_permutation,
}


def generate(spec: InstanceSpec) -> Instance:
    s, t = GENERATORS[spec.family](spec)
    alphabet = max(spec.m, int(max(s.max(), t.max())) + 1)
    return Instance(
        instance_id=spec.instance_id,
        family=spec.family,
        s=SymbolString.of(s, alphabet),
        t=SymbolString.of(t, alphabet),
    )


def write_instance(path: Path, s: SymbolString, t: SymbolString) -> None:
    if len(s) != len(t):
        raise InstanceSpecError(f"instance strings differ in length: {len(s)} and {len(t)}")
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    m = max(s.alphabet_size, t.alphabet_size)
    lines = [f"{len(s)} {m}", " ".join(map(str, s.tolist())), " ".join(map(str, t.tolist()))]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def read_instance(path: Path) -> Instance:
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise InstanceFormatError(path, str(e)) from e
    if len(lines) < 3:
        raise InstanceFormatError(path, f"expected 3 lines, found {len(lines)}")
    try:
        n, m = (int(value) for value in lines[0].split())
        s = np.array(lines[1].split(), dtype=SYMBOL_DTYPE)
        t = np.array(lines[2].split(), dtype=SYMBOL_DTYPE)
    except ValueError as e:
        raise InstanceFormatError(path, str(e)) from e
    if s.size != n or t.size != n:
        raise InstanceFormatError(path, f"header says n={n}, strings have {s.size} and {t.size}")
    for symbols in (s, t):
        if symbols.size and (symbols.min() < 0 or symbols.max() >= m):
            raise InstanceFormatError(path, f"symbol outside 0..{m - 1}")
    return Instance(
        instance_id=path.stem,
        family="file",
        s=SymbolString.of(s, m),
        t=SymbolString.of(t, m),
    )
