"""Binary words and deletion patterns, with the enumerations built on them.

Positions are 1-indexed throughout.  A :class:`DeletionPattern` records the
positions that *survive*; :meth:`DeletionPattern.from_deleted` converts
from the complementary "positions deleted" description.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

from . import kernels

DEFAULT_BUDGET = 1 << 26


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed its configured candidate budget."""


@dataclass(frozen=True, slots=True)
class BitString:
    bits: str = ""

    def __post_init__(self):
        if not isinstance(self.bits, str):
            raise TypeError(f"BitString needs a str, got {type(self.bits).__name__}")
        if self.bits.strip("01"):
            raise ValueError(f"not a binary word: {self.bits!r}")

    @classmethod
    def of(cls, x: "BitLike") -> "BitString":
        return x if isinstance(x, BitString) else cls(x)

    @classmethod
    def from_int(cls, value: int, n: int) -> "BitString":
        if value < 0 or value >> n:
            raise ValueError(f"{value} does not fit in {n} bits")
        return cls(format(value, f"0{n}b") if n else "")

    def to_int(self) -> int:
        return int(self.bits, 2) if self.bits else 0

    @property
    def n(self) -> int:
        return len(self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return self.bits

    def __iter__(self) -> Iterator[int]:
        return (int(c) for c in self.bits)

    def __getitem__(self, key):
        if isinstance(key, slice):
            return BitString(self.bits[key])
        return int(self.bits[key])

    def __add__(self, other: "BitLike") -> "BitString":
        return BitString(self.bits + BitString.of(other).bits)

    def weight(self) -> int:
        return self.bits.count("1")


BitLike = Union[BitString, str]


def _s(x: BitLike) -> str:
    return x.bits if isinstance(x, BitString) else BitString(x).bits


def all_words(n: int) -> Iterator[BitString]:
    """{0,1}^n in lexicographic order."""
    for v in range(1 << n):
        yield BitString.from_int(v, n)


@dataclass(frozen=True, slots=True)
class DeletionPattern:
    n: int
    survivors: tuple[int, ...]

    def __post_init__(self):
        s = tuple(self.survivors)
        object.__setattr__(self, "survivors", s)
        if self.n < 0:
            raise ValueError("pattern length must be non-negative")
        if any(b <= a for a, b in zip(s, s[1:])):
            raise ValueError(f"survivors must be strictly increasing: {s}")
        if s and (s[0] < 1 or s[-1] > self.n):
            raise ValueError(f"survivors must lie in [1, {self.n}]: {s}")

    @property
    def t(self) -> int:
        return self.n - len(self.survivors)

    @property
    def deleted(self) -> tuple[int, ...]:
        keep = set(self.survivors)
        return tuple(i for i in range(1, self.n + 1) if i not in keep)

    @classmethod
    def from_deleted(cls, n: int, deleted: Iterable[int]) -> "DeletionPattern":
        gone = set(deleted)
        if any(i < 1 or i > n for i in gone):
            raise ValueError(f"deleted positions must lie in [1, {n}]")
        return cls(n, tuple(i for i in range(1, n + 1) if i not in gone))

    @classmethod
    def identity(cls, n: int) -> "DeletionPattern":
        return cls(n, tuple(range(1, n + 1)))

    def __str__(self) -> str:
        return f"{self.n}:" + ",".join(map(str, self.survivors))

    @classmethod
    def parse(cls, text: str) -> "DeletionPattern":
        head, _, tail = text.strip().partition(":")
        if not _:
            raise ValueError(f"pattern must look like 'n:p1,p2,...', got {text!r}")
        surv = tuple(int(p) for p in tail.split(",")) if tail else ()
        return cls(int(head), surv)


@dataclass(frozen=True, slots=True)
class CodeParams:
    n: int
    t: int
    epsilon: Fraction = Fraction(1, 4)

    def __post_init__(self):
        object.__setattr__(self, "epsilon", Fraction(self.epsilon))
        if self.n < 1 or self.t < 0 or self.t >= self.n:
            raise ValueError(f"need 0 <= t < n, got n={self.n}, t={self.t}")
        if not 0 < self.epsilon < 1:
            raise ValueError(f"epsilon must lie strictly in (0, 1), got {self.epsilon}")

    def supersequence_bound_applies(self) -> bool:
        return 2 <= self.t < self.n / 2


def apply_pattern(x: BitLike, tau: DeletionPattern) -> BitString:
    s = _s(x)
    if len(s) != tau.n:
        raise ValueError(f"pattern is for length {tau.n}, word has length {len(s)}")
    return BitString("".join(s[i - 1] for i in tau.survivors))


def is_subsequence(z: BitLike, x: BitLike) -> bool:
    zs, xs = _s(z), _s(x)
    pos = 0
    for c in zs:
        pos = xs.find(c, pos)
        if pos < 0:
            return False
        pos += 1
    return True


def count_supersequences(z_len: int, n: int) -> int:
    if z_len > n or z_len < 0:
        raise ValueError("need 0 <= z_len <= n")
    return sum(math.comb(n, i) for i in range(n - z_len + 1))


def _guard(size: int, budget: int, what: str) -> None:
    if size > budget:
        raise BudgetExceeded(f"{what}: {size} candidates exceeds budget {budget}")


def enumerate_supersequences(z: BitLike, n: int, budget: int = DEFAULT_BUDGET) -> list[BitString]:
    """Every length-n word having ``z`` as a subsequence, in lexicographic order."""
    zs = _s(z)
    k = len(zs)
    if k > n:
        raise ValueError(f"|z|={k} exceeds target length {n}")
    _guard(count_supersequences(k, n), budget, "supersequences")
    zi = int(zs, 2) if zs else 0
    return [BitString.from_int(v, n) for v in kernels.supersequences(zi, k, n)]


def enumerate_subsequences(x: BitLike, k: int) -> list[BitString]:
    """Distinct length-k subsequences of ``x``, in lexicographic order."""
    xs = _s(x)
    if not 0 <= k <= len(xs):
        raise ValueError(f"need 0 <= k <= {len(xs)}")
    xi = int(xs, 2) if xs else 0
    return [BitString.from_int(v, k) for v in kernels.subsequences(xi, len(xs), k)]


def runs(x: BitLike) -> list[BitString]:
    return [BitString("".join(g)) for _, g in itertools.groupby(_s(x))]


def confusable_set(m: BitLike, t: int, budget: int = DEFAULT_BUDGET) -> list[BitString]:
    """Words sharing a length n-t subsequence with ``m``; ``m`` itself is included."""
    ms = _s(m)
    n = len(ms)
    if t < 0 or (t > 0 and not t < n / 2):
        raise ValueError(f"confusable_set needs t < n/2, got n={n}, t={t}")
    _guard(math.comb(n, t) * count_supersequences(n - t, n), budget, "confusable set")
    xi = int(ms, 2) if ms else 0
    return [BitString.from_int(v, n) for v in kernels.confusable(xi, n, t)]


def pattern_distance(tau: DeletionPattern, tau2: DeletionPattern) -> int:
    if tau.n != tau2.n or tau.t != tau2.t:
        raise ValueError("patterns must share n and t")
    return sum(a != b for a, b in zip(tau.survivors, tau2.survivors))


def iter_patterns(n: int, t: int) -> Iterator[DeletionPattern]:
    for surv in itertools.combinations(range(1, n + 1), n - t):
        yield DeletionPattern(n, surv)


def max_collision_distance(x: BitLike, t: int) -> int:
    """Largest pattern distance between two distinct t-patterns giving the same output (0 if none)."""
    xs = _s(x)
    n = len(xs)
    groups: dict[str, list[tuple[int, ...]]] = defaultdict(list)
    for surv in itertools.combinations(range(n), n - t):
        groups["".join(xs[i] for i in surv)].append(surv)
    best = 0
    for pats in groups.values():
        for a, b in itertools.combinations(pats, 2):
            d = sum(i != j for i, j in zip(a, b))
            if d > best:
                best = d
    return best


def is_bad_string(x: BitLike, ell: int, t: int) -> bool:
    if ell < 1:
        raise ValueError("ell must be at least 1")
    n = len(_s(x))
    if not 0 <= t < n:
        raise ValueError("need 0 <= t < |x|")
    if ell > n - t:
        return False
    return max_collision_distance(x, t) >= ell


# -- bit-exact binary serialization ---------------------------------------

def pack_bits(x: BitLike) -> bytes:
    """16-bit big-endian bit-length header followed by the bits, MSB first, zero padded."""
    s = _s(x)
    if len(s) >= 1 << 16:
        raise ValueError("word too long for a 16-bit length header")
    body = s + "0" * (-len(s) % 8)
    payload = int(body, 2).to_bytes(len(body) // 8, "big") if body else b""
    return len(s).to_bytes(2, "big") + payload


def unpack_bits(data: bytes) -> BitString:
    if len(data) < 2:
        raise ValueError("missing length header")
    n = int.from_bytes(data[:2], "big")
    nbytes = (n + 7) // 8
    if len(data) != 2 + nbytes:
        raise ValueError(f"expected {nbytes} payload bytes for {n} bits, got {len(data) - 2}")
    if n == 0:
        return BitString("")
    s = format(int.from_bytes(data[2:], "big"), f"0{nbytes * 8}b")
    if s[n:].strip("0"):
        raise ValueError("non-zero padding bits")
    return BitString(s[:n])

