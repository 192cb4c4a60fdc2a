"""Exact primality below 2^63 and seeded prime multisets drawn from [M/2, M]."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .bitseq import DEFAULT_BUDGET, BudgetExceeded
from .rng import stream

MAX_BITS = 63
# Miller-Rabin with these bases is exact below 3.3e24, which covers 63 bits.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class DensityError(RuntimeError):
    """A prime range is too sparse for rejection sampling or a build guard."""


def is_prime(n: int) -> bool:
    if n >= 1 << MAX_BITS:
        raise ValueError(f"{n} exceeds the {MAX_BITS}-bit primality range")
    if n < 2:
        return False
    for p in _WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while not d & 1:
        d >>= 1
        s += 1
    for a in _WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True, slots=True)
class PrimeRange:
    lo: int
    hi: int

    def __post_init__(self):
        if not 2 <= self.lo <= self.hi:
            raise ValueError(f"need 2 <= lo <= hi, got [{self.lo}, {self.hi}]")
        if self.hi >= 1 << MAX_BITS:
            raise ValueError(f"hi must fit in {MAX_BITS} bits")

    @classmethod
    def half(cls, M: int) -> "PrimeRange":
        """The range [M/2, M]."""
        return cls(max(2, (M + 1) // 2), M)

    @property
    def width(self) -> int:
        return self.hi - self.lo + 1


def _sieve_segment(lo: int, hi: int) -> list[int]:
    root = math.isqrt(hi)
    base = np.ones(root + 1, dtype=bool)
    base[:2] = False
    for i in range(2, math.isqrt(root) + 1):
        if base[i]:
            base[i * i :: i] = False
    seg = np.ones(hi - lo + 1, dtype=bool)
    for p in np.flatnonzero(base):
        p = int(p)
        start = max(p * p, (lo + p - 1) // p * p)
        seg[start - lo :: p] = False
    if lo <= 1:
        seg[: 2 - lo] = False
    return [lo + int(i) for i in np.flatnonzero(seg)]


@lru_cache(maxsize=64)
def _primes_cached(lo: int, hi: int) -> tuple[int, ...]:
    return tuple(_sieve_segment(lo, hi))


def primes_in_range(r: PrimeRange, budget: int = DEFAULT_BUDGET) -> tuple[int, ...]:
    if r.width > budget:
        raise BudgetExceeded(f"prime range of width {r.width} exceeds budget {budget}")
    return _primes_cached(r.lo, r.hi)


def pnt_floor_threshold(M: int) -> float:
    return M / (10 * math.log(M))


def pnt_floor_check(M: int) -> bool:
    """At least M/(10 ln M) primes lie in [M/2, M]."""
    if M < 100:
        raise ValueError("the density floor is only asserted for M >= 100")
    return len(primes_in_range(PrimeRange.half(M))) >= pnt_floor_threshold(M)


def density_ok(r: PrimeRange) -> bool:
    # width/(5 ln hi) equals M/(10 ln M) on [M/2, M]
    if r.hi >= 100 and r.lo == PrimeRange.half(r.hi).lo:
        return pnt_floor_check(r.hi)
    return len(primes_in_range(r)) >= r.width / (5 * math.log(max(r.hi, 3)))


@dataclass(frozen=True, slots=True)
class SampledPrimeSet:
    range: PrimeRange
    primes: tuple[int, ...]
    seed: int

    def __post_init__(self):
        object.__setattr__(self, "primes", tuple(self.primes))

    def __len__(self) -> int:
        return len(self.primes)

    def multiplicities(self) -> Counter:
        return Counter(self.primes)


def sample_prime_multiset(r: PrimeRange, count: int, seed: int,
                          max_draws: int | None = None) -> SampledPrimeSet:
    """``count`` independent uniform primes from ``r`` by rejection sampling on integers."""
    if count < 0:
        raise ValueError("count must be non-negative")
    if count and not density_ok(r):
        raise DensityError(f"prime density in [{r.lo}, {r.hi}] is below the floor")
    if max_draws is None:
        max_draws = 1000 + 100 * count * math.ceil(math.log(max(r.hi, 3)))
    gen = stream(seed, "construction", r.lo, r.hi)
    out: list[int] = []
    draws = 0
    while len(out) < count:
        batch = gen.integers(r.lo, r.hi, endpoint=True, size=max(64, 4 * (count - len(out))))
        for v in batch:
            draws += 1
            if draws > max_draws:
                raise DensityError(f"rejection budget of {max_draws} draws exhausted")
            v = int(v)
            if is_prime(v):
                out.append(v)
                if len(out) == count:
                    break
    return SampledPrimeSet(r, tuple(out), seed)


def dividing_prime_fraction(diffs: Iterable[int], candidates: Sequence[int]) -> Fraction:
    """Share of ``candidates`` (with multiplicity) dividing at least one of ``diffs``."""
    if not candidates:
        raise ValueError("candidates must be nonempty")
    diffs = list(diffs)
    if any(d <= 0 for d in diffs):
        raise ValueError("diffs must be positive")
    hits = sum(1 for p in candidates if any(d % p == 0 for d in diffs))
    return Fraction(hits, len(candidates))


def prime_factors(d: int) -> set[int]:
    """Distinct prime factors of |d| by trial division."""
    d = abs(d)
    out = set()
    p = 2
    while p * p <= d:
        while d % p == 0:
            out.add(p)
            d //= p
        p += 1 if p == 2 else 2
    if d > 1:
        out.add(d)
    return out


def bits_for(k: int) -> int:
    """Bits needed to index ``k`` distinct values, i.e. ceil(log2 k)."""
    if k < 1:
        raise ValueError("need at least one value")
    return (k - 1).bit_length()


class ConstructionError(RuntimeError):
    """A code construction could not meet its guard or verification."""


MIN_MODULUS = 1 << 10


def smallest_feasible_modulus(items: int, f: int, slack: Fraction,
                              budget: int = DEFAULT_BUDGET) -> int:
    """Smallest power of two M >= 2^10 with items * ceil(f / log2(M/2)) <= slack * #primes[M/2, M].

    ``ceil(f / log2(M/2))`` bounds how many primes above M/2 can divide a
    nonzero hash difference below 2^f, so the inequality caps the share of
    colliding primes at ``slack``.
    """
    M = MIN_MODULUS
    while M < 1 << MAX_BITS:
        per_item = -(-f // (M.bit_length() - 2))
        if items * per_item <= slack * len(primes_in_range(PrimeRange.half(M), budget)):
            return M
        M <<= 1
    raise ConstructionError("no feasible modulus below 2^63")
