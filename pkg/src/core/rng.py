"""
Named, splittable seeds on top of numpy's SeedSequence.

Every randomized operation takes an explicit integer seed. Stages derive their
own seeds from a parent with ``derive_seed(parent, "label", ...)`` so results
are reproducible per (input, seed) regardless of execution order.
"""

from __future__ import annotations

import zlib

import numpy as np

SEED_MASK = (1 << 64) - 1


def _label_key(label: int | str) -> int:
    if isinstance(label, str):
        return zlib.crc32(label.encode("utf-8"))
    return int(label) & 0xFFFFFFFF


def derive_seed(seed: int, *labels: int | str) -> int:
    """A 64-bit child seed, deterministic in (seed, labels)."""
    sequence = np.random.SeedSequence(
        int(seed) & SEED_MASK, spawn_key=tuple(_label_key(label) for label in labels)
    )
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def make_rng(seed: int, *labels: int | str) -> np.random.Generator:
    """A PCG64 generator for ``derive_seed(seed, *labels)``."""
    if labels:
        seed = derive_seed(seed, *labels)
    return np.random.Generator(np.random.PCG64(int(seed) & SEED_MASK))
