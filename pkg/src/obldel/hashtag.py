"""The transmitted outer hash of the mod-prime schemes and its fixed-width wire form."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .bitseq import BitLike, BitString, _s


@dataclass(frozen=True, slots=True)
class HashTag:
    """``residue`` of the inner hash modulo a prime, plus the prime itself or its index."""

    residue: int
    prime_field: int
    indexed: bool = False

    def __post_init__(self):
        if self.residue < 0 or self.prime_field < 0:
            raise ValueError("tag fields must be non-negative")

    def resolve(self, primes: Sequence[int] | None = None) -> int:
        """The prime this tag refers to; raises IndexError on a corrupt index."""
        if not self.indexed:
            return self.prime_field
        if primes is None or self.prime_field >= len(primes):
            raise IndexError(f"prime index {self.prime_field} out of range")
        return primes[self.prime_field]

    def to_bits(self, prime_width: int, residue_width: int) -> BitString:
        """Prime field first, then the residue, each fixed-width big-endian."""
        return BitString.from_int(self.prime_field, prime_width) + BitString.from_int(self.residue, residue_width)

    @classmethod
    def from_bits(cls, bits: BitLike, prime_width: int, residue_width: int, indexed: bool) -> "HashTag":
        s = _s(bits)
        if len(s) != prime_width + residue_width:
            raise ValueError(f"tag needs {prime_width + residue_width} bits, got {len(s)}")
        head, tail = s[:prime_width], s[prime_width:]
        return cls(int(tail, 2) if tail else 0, int(head, 2) if head else 0, indexed)


def draw_index(randomness, size: int) -> int:
    """Resolve encoder randomness: an explicit outcome index, or a Generator to draw one."""
    if isinstance(randomness, np.random.Generator):
        return int(randomness.integers(size))
    r = int(randomness)
    if not 0 <= r < size:
        raise ValueError(f"randomness index {r} outside [0, {size})")
    return r


def trim(z: BitLike, length: int) -> str:
    """Drop trailing bits so that exactly ``length`` remain."""
    s = _s(z)
    if len(s) < length:
        raise ValueError(f"received word has {len(s)} bits, needs at least {length}")
    return s[:length]
