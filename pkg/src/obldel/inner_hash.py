"""Deterministic document-exchange hashes used inside the mod-prime schemes.

Three realizations share one interface:

* ``greedy-coloring``: a proper colouring of the confusability graph on
  {0,1}^n, built greedily in lexicographic order.  Confusable words get
  distinct colours, so any two supersequences of a common length n-t word
  hash apart.
* ``vt-syndrome``: the Varshamov-Tenengolts checksum, valid for t <= 1.
* ``identity``: the word read as an integer.  Trivially injective, with
  ``bit_length = n``; useful when the hash should be wider than the prime.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .bitseq import BitLike, BitString, BudgetExceeded, _s
from .primes import bits_for

GREEDY_MAX_N = 22
KINDS = ("greedy-coloring", "vt-syndrome", "identity")


class DecodeError(ValueError):
    """No consistent (or no unique) decoding exists for the given input."""


@dataclass(frozen=True, slots=True, eq=False)
class InnerHashSpec:
    n: int
    t: int
    bit_length: int
    kind: str
    colors: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown inner hash kind {self.kind!r}")
        if self.kind == "vt-syndrome" and self.t > 1:
            raise ValueError("the VT syndrome only handles a single deletion")
        if self.kind == "greedy-coloring":
            if self.colors is None or len(self.colors) != 1 << self.n:
                raise ValueError(f"colour table must have 2^{self.n} entries")
            if self.colors and max(self.colors) >> self.bit_length:
                raise ValueError("colour table overflows the declared bit length")

    def __eq__(self, other):
        if not isinstance(other, InnerHashSpec):
            return NotImplemented
        return (self.n, self.t, self.bit_length, self.kind, self.colors) == (
            other.n, other.t, other.bit_length, other.kind, other.colors)

    def __hash__(self):
        return hash((self.n, self.t, self.bit_length, self.kind))

    @property
    def num_colors(self) -> int:
        return max(self.colors) + 1 if self.colors else 0

    def hash_int(self, v: int) -> int:
        """Hash of the length-n word whose integer value is ``v``."""
        if self.kind == "greedy-coloring":
            return self.colors[v]
        if self.kind == "identity":
            return v
        n = self.n
        return sum(n - i for i in range(n) if (v >> i) & 1) % (n + 1)


def vt_syndrome(x: BitLike) -> int:
    s = _s(x)
    return sum(i for i, c in enumerate(s, 1) if c == "1") % (len(s) + 1)


def hash(spec: InnerHashSpec, x: BitLike) -> int:  # noqa: A001 - matches the documented operation name
    s = _s(x)
    if len(s) != spec.n:
        raise ValueError(f"hash is built for length {spec.n}, got {len(s)}")
    return spec.hash_int(int(s, 2) if s else 0)


def build_greedy_coloring(n: int, t: int) -> InnerHashSpec:
    if n > GREEDY_MAX_N:
        raise BudgetExceeded(f"greedy colouring of 2^{n} words exceeds the 2^{GREEDY_MAX_N} limit")
    if not 0 <= t < n:
        raise ValueError("need 0 <= t < n")
    colors = tuple(kernels.greedy_coloring(n, t))
    return InnerHashSpec(n, t, bits_for(max(colors) + 1), "greedy-coloring", colors)


def vt_spec(n: int) -> InnerHashSpec:
    return InnerHashSpec(n, 1, bits_for(n + 1), "vt-syndrome")


def identity_spec(n: int, t: int) -> InnerHashSpec:
    return InnerHashSpec(n, t, n, "identity")


def build(kind: str, n: int, t: int) -> InnerHashSpec:
    if kind == "greedy-coloring":
        return build_greedy_coloring(n, t)
    if kind == "vt-syndrome":
        if t != 1:
            raise ValueError("vt-syndrome needs t = 1")
        return vt_spec(n)
    if kind == "identity":
        return identity_spec(n, t)
    raise ValueError(f"unknown inner hash kind {kind!r}")


def candidates(spec: InnerHashSpec, z: BitLike) -> list[int]:
    """Integer values of all length-n supersequences of ``z``."""
    s = _s(z)
    if len(s) != spec.n - spec.t:
        raise ValueError(f"received word must have length {spec.n - spec.t}, got {len(s)}")
    return kernels.supersequences(int(s, 2) if s else 0, len(s), spec.n)


def inner_decode(spec: InnerHashSpec, z: BitLike, hv: int) -> BitString:
    matches = [v for v in candidates(spec, z) if spec.hash_int(v) == hv]
    if len(matches) != 1:
        raise DecodeError(f"{len(matches)} supersequences carry hash {hv}")
    return BitString.from_int(matches[0], spec.n)


def coloring_violation(spec: InnerHashSpec) -> int:
    """First word colliding with a distinct confusable word, or -1 for a proper table."""
    if spec.kind == "identity" or spec.t == 0:
        return -1
    if spec.kind == "greedy-coloring":
        return kernels.coloring_violation(spec.colors, spec.n, spec.t)
    for x in range(1 << spec.n):
        hx = spec.hash_int(x)
        if any(y != x and spec.hash_int(y) == hx for y in kernels.confusable(x, spec.n, spec.t)):
            return x
    return -1


def spot_check(spec: InnerHashSpec, samples: int = 64, seed: int = 0) -> int:
    """Check confusable-distinctness on a seeded sample of words; returns a violator or -1."""
    if spec.kind == "identity" or spec.t == 0:
        return -1
    gen = np.random.default_rng(seed)
    picks = sorted(set(int(v) for v in gen.integers(0, 1 << spec.n, size=samples)))
    for x in picks:
        hx = spec.hash_int(x)
        for y in kernels.confusable(x, spec.n, spec.t):
            if y != x and spec.hash_int(y) == hx:
                return x
    return -1

