"""Deterministic codes: repetition and VT baselines, and the adversarial good-prime code."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import inner_hash, kernels
from .bitseq import DEFAULT_BUDGET, BitLike, BitString, BudgetExceeded, CodeParams, _s, runs
from .hashtag import HashTag, trim
from .inner_hash import DecodeError, InnerHashSpec, vt_syndrome
from .primes import (ConstructionError, PrimeRange, SampledPrimeSet, bits_for,
                     sample_prime_multiset, smallest_feasible_modulus)


def rep_encode(x: BitLike, k: int) -> BitString:
    if k < 1:
        raise ValueError("repetition factor must be at least 1")
    return BitString("".join(c * k for c in _s(x)))


def rep_decode(z: BitLike, k: int, length: int | None = None) -> BitString:
    """Each run of length l becomes ceil(l/k) copies of its symbol.

    A fully deleted run merges its neighbours and cannot be seen locally, so
    when ``length`` is given the decoded length is checked against it.
    """
    if k < 1:
        raise ValueError("repetition factor must be at least 1")
    out = "".join(r.bits[0] * -(-len(r) // k) for r in runs(z))
    if length is not None and len(out) != length:
        raise DecodeError(f"repetition block decoded to {len(out)} bits, expected {length}")
    return BitString(out)


def vt_decode(z: BitLike, syndrome_target: int, n: int) -> BitString:
    """Reinsert the single deleted bit of a VT codeword by the weight/position rule."""
    y = _s(z)
    if len(y) != n - 1:
        raise ValueError(f"need |z| = n - 1 = {n - 1}, got {len(y)}")
    if not 0 <= syndrome_target <= n:
        raise DecodeError(f"syndrome {syndrome_target} outside [0, {n}]")
    w = y.count("1")
    s = (syndrome_target - vt_syndrome(y + "0")) % (n + 1)
    if s <= w:
        # a 0 with exactly s ones to its right
        ones_right = w
        i = 0
        while ones_right > s:
            ones_right -= y[i] == "1"
            i += 1
        x = y[:i] + "0" + y[i:]
    else:
        # a 1 with exactly s - w - 1 zeros to its left
        need = s - w - 1
        i, zeros = 0, 0
        while zeros < need and i < len(y):
            zeros += y[i] == "0"
            i += 1
        if zeros < need:
            raise DecodeError("no consistent reinsertion")
        x = y[:i] + "1" + y[i:]
    if vt_syndrome(x) != syndrome_target:
        raise DecodeError("no consistent reinsertion")
    return BitString(x)


@dataclass(frozen=True, slots=True)
class VTCode:
    """Single-deletion document exchange: the tag is the VT syndrome of the message."""

    n: int
    scheme: str = "vt"

    @property
    def t(self) -> int:
        return 1

    @property
    def randomness_size(self) -> int:
        return 1

    @property
    def tag_widths(self) -> tuple[int, int]:
        return 0, bits_for(self.n + 1)

    @property
    def tag_width(self) -> int:
        return sum(self.tag_widths)

    @property
    def redundancy(self) -> int:
        return self.tag_width

    def encode_hash(self, m: BitLike, randomness=0) -> HashTag:
        s = _s(m)
        if len(s) != self.n:
            raise ValueError(f"message must have length {self.n}")
        return HashTag(vt_syndrome(s), 0)

    def decode(self, z: BitLike, tag: HashTag) -> BitString:
        return vt_decode(trim(z, self.n - 1), tag.residue, self.n)


@dataclass(frozen=True, slots=True)
class AdversarialCode:
    params: CodeParams
    inner: InnerHashSpec
    M: int
    primes: SampledPrimeSet
    nominal_M0: float
    good_cache: tuple[int, ...] | None = field(default=None, compare=False, repr=False)
    scheme: str = "randomized-adversarial"

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def t(self) -> int:
        return self.params.t

    @property
    def randomness_size(self) -> int:
        return 1

    @property
    def tag_widths(self) -> tuple[int, int]:
        return bits_for(len(self.primes)), bits_for(self.M)

    @property
    def tag_width(self) -> int:
        return sum(self.tag_widths)

    @property
    def redundancy(self) -> int:
        return self.tag_width

    def good_index(self, v: int) -> int:
        """Position in P of the first prime forming a good pair with message ``v``, or -1."""
        h = self.inner.hash_int
        others = [h(y) for y in kernels.confusable(v, self.n, self.t) if y != v]
        order = list(dict.fromkeys(self.primes.primes))
        good = {p for p, c in zip(order, kernels.match_counts(others, h(v), order)) if c == 0}
        return next((i for i, p in enumerate(self.primes.primes) if p in good), -1)

    def encode_hash(self, m: BitLike, randomness=0) -> HashTag:
        s = _s(m)
        if len(s) != self.n:
            raise ValueError(f"message must have length {self.n}")
        v = int(s, 2)
        i = self.good_cache[v] if self.good_cache is not None else self.good_index(v)
        if i < 0:
            raise ConstructionError(f"message {s} has no good prime in P")
        return HashTag(self.inner.hash_int(v) % self.primes.primes[i], i, indexed=True)

    def decode(self, z: BitLike, tag: HashTag) -> BitString:
        p = tag.resolve(self.primes.primes)
        zs = trim(z, self.n - self.t)
        h = self.inner.hash_int
        matches = [v for v in inner_hash.candidates(self.inner, zs) if h(v) % p == tag.residue]
        if len(matches) != 1:
            raise DecodeError(f"{len(matches)} supersequences match the tag")
        return BitString.from_int(matches[0], self.n)


def adversarial_nominal_M0(n: int, t: int, alpha: float = 1.0) -> float:
    return 2 * alpha * n ** (2 * t) * math.log2(n)


def adversarial_build(params: CodeParams, inner: InnerHashSpec, seed: int = 0,
                      verify: bool = True, budget: int = DEFAULT_BUDGET) -> AdversarialCode:
    n, t = params.n, params.t
    if (inner.n, inner.t) != (n, t):
        raise ValueError("inner hash must be built for the same (n, t)")
    M = smallest_feasible_modulus(n ** (2 * t), inner.bit_length, Fraction(1, 2), budget)
    P = sample_prime_multiset(PrimeRange.half(M), math.ceil(10 * n), seed)
    code = AdversarialCode(params, inner, M, P, adversarial_nominal_M0(n, t))
    if not verify:
        return code
    if (1 << n) * len(P) > budget:
        raise BudgetExceeded(f"verifying 2^{n} messages exceeds budget {budget}")
    cache = tuple(code.good_index(v) for v in range(1 << n))
    missing = [v for v, i in enumerate(cache) if i < 0]
    if missing:
        raise ConstructionError(f"message {BitString.from_int(missing[0], n)} has no good prime in P (seed {seed})")
    return AdversarialCode(params, inner, M, P, code.nominal_M0, cache)


def adversarial_encode_hash(desc: AdversarialCode, m: BitLike) -> HashTag:
    return desc.encode_hash(m)


def adversarial_decode(desc: AdversarialCode, z: BitLike, tag: HashTag) -> BitString:
    return desc.decode(z, tag)
