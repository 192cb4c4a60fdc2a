"""Per-purpose random streams derived from one 64-bit master seed."""

from __future__ import annotations

import numpy as np

PURPOSES = {"construction": 0, "encoding": 1, "channel": 2, "sampling": 3}


def stream(seed: int, purpose: str, *extra: int) -> np.random.Generator:
    if purpose not in PURPOSES:
        raise ValueError(f"unknown purpose {purpose!r}; expected one of {sorted(PURPOSES)}")
    if not 0 <= seed < 1 << 64:
        raise ValueError("seed must be a 64-bit unsigned integer")
    ss = np.random.SeedSequence(seed, spawn_key=(PURPOSES[purpose], *extra))
    return np.random.Generator(np.random.PCG64(ss))
