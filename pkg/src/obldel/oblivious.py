"""Oblivious-deletion schemes built from mod-prime hashing.

Document-exchange schemes (``explicit``, ``randomized``) expose
``encode_hash(m, randomness) -> HashTag`` and ``decode(z, tag)``; full codes
(``list-wrapped``, ``existential``, ``systematic``) expose
``encode(m, randomness) -> BitString`` and ``decode(z)``.  Decoders return
``None`` for the failure symbol.  Randomness is an outcome index in
``[0, randomness_size)`` or a numpy Generator to draw one.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Protocol

from . import inner_hash, kernels
from .adversarial import rep_decode, rep_encode
from .bitseq import DEFAULT_BUDGET, BitLike, BitString, BudgetExceeded, CodeParams, _s, is_subsequence
from .hashtag import HashTag, draw_index, trim
from .inner_hash import DecodeError, InnerHashSpec
from .primes import (ConstructionError, PrimeRange, SampledPrimeSet, bits_for, prime_factors,
                     primes_in_range, sample_prime_multiset, smallest_feasible_modulus)
from .rng import stream

PROTECTOR_NOTE = "protector code for the hash block is Rep_{t+1} (redundancy (t+1)r)"


@dataclass(frozen=True, slots=True)
class StochasticEncoderContract:
    message_space: int
    randomness_size: int

    @property
    def randomness_bits(self) -> int:
        return bits_for(self.randomness_size)


class DocumentExchange(Protocol):
    n: int
    t: int

    @property
    def randomness_size(self) -> int: ...
    @property
    def tag_widths(self) -> tuple[int, int]: ...
    def encode_hash(self, m: BitLike, randomness=0) -> HashTag: ...
    def decode(self, z: BitLike, tag: HashTag): ...


# -- shared mod-prime machinery ---------------------------------------------

@lru_cache(maxsize=1 << 16)
def _large_factors(d: int, lo: int) -> frozenset[int]:
    return frozenset(q for q in prime_factors(d) if q >= lo)


def collision_primes(inner: InnerHashSpec, v: int, z: BitLike, lo: int) -> frozenset[int] | None:
    """Primes >= ``lo`` dividing h(y) - h(v) for some supersequence y != v of ``z``.

    Returns ``None`` when some y != v has exactly the same hash, in which case
    every prime collides.
    """
    h = inner.hash_int
    hv = h(v)
    out: set[int] = set()
    for y in inner_hash.candidates(inner, z):
        if y == v:
            continue
        d = abs(h(y) - hv)
        if d == 0:
            return None
        if d >= lo:
            out |= _large_factors(d, lo)
    return frozenset(out)


def _unique_match(inner: InnerHashSpec, z: str, p: int, residue: int) -> BitString | None:
    h = inner.hash_int
    matches = [v for v in inner_hash.candidates(inner, z) if h(v) % p == residue]
    return BitString.from_int(matches[0], inner.n) if len(matches) == 1 else None


def _message_int(m: BitLike, n: int) -> int:
    s = _s(m)
    if len(s) != n:
        raise ValueError(f"message must have length {n}, got {len(s)}")
    return int(s, 2) if s else 0


def _check_inner(params: CodeParams, inner: InnerHashSpec) -> None:
    if params.t == 0:
        raise ValueError("t = 0 is outside the model: the prime guard degenerates")
    if (inner.n, inner.t) != (params.n, params.t):
        raise ValueError(f"inner hash is built for ({inner.n}, {inner.t}), not ({params.n}, {params.t})")


# -- explicit scheme: a uniform prime from [M/2, M] --------------------------

@dataclass(frozen=True, slots=True)
class ExplicitCode:
    params: CodeParams
    inner: InnerHashSpec
    M: int
    nominal_M: float
    scheme: str = "explicit"

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def t(self) -> int:
        return self.params.t

    @property
    def prime_range(self) -> PrimeRange:
        return PrimeRange.half(self.M)

    @property
    def primes(self) -> tuple[int, ...]:
        return primes_in_range(self.prime_range)

    @property
    def randomness_size(self) -> int:
        return len(self.primes)

    @property
    def tag_widths(self) -> tuple[int, int]:
        w = bits_for(self.M)
        return w, w

    @property
    def tag_width(self) -> int:
        return sum(self.tag_widths)

    @property
    def redundancy(self) -> int:
        return self.tag_width

    def contract(self) -> StochasticEncoderContract:
        return StochasticEncoderContract(1 << self.n, self.randomness_size)

    def encode_hash(self, m: BitLike, randomness=0) -> HashTag:
        v = _message_int(m, self.n)
        p = self.primes[draw_index(randomness, self.randomness_size)]
        return HashTag(self.inner.hash_int(v) % p, p)

    def decode(self, z: BitLike, tag: HashTag) -> BitString | None:
        p = tag.resolve()
        r = self.prime_range
        if not r.lo <= p <= r.hi:
            raise ValueError(f"tag prime {p} lies outside [{r.lo}, {r.hi}]")
        return _unique_match(self.inner, trim(z, self.n - self.t), p, tag.residue)


def explicit_nominal_M(n: int, t: int, f: int, eps: Fraction) -> float:
    return 100 * n ** t * f / float(eps)


def explicit_build(params: CodeParams, inner: InnerHashSpec, budget: int = DEFAULT_BUDGET) -> ExplicitCode:
    _check_inner(params, inner)
    n, t, f = params.n, params.t, inner.bit_length
    M = smallest_feasible_modulus(n ** t, f, params.epsilon / 2, budget)
    return ExplicitCode(params, inner, M, explicit_nominal_M(n, t, f, params.epsilon))


def explicit_encode_hash(desc: ExplicitCode, m: BitLike, randomness=0) -> HashTag:
    return desc.encode_hash(m, randomness)


def explicit_decode(desc: ExplicitCode, z: BitLike, tag: HashTag) -> BitString | None:
    return desc.decode(z, tag)


# -- randomized scheme: a uniform element of a sampled multiset P ------------

@dataclass(frozen=True, slots=True)
class RandomizedCode:
    params: CodeParams
    inner: InnerHashSpec
    M: int
    primes: SampledPrimeSet
    nominal_M0: float
    nominal_M: float
    scheme: str = "randomized"

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def t(self) -> int:
        return self.params.t

    @property
    def prime_range(self) -> PrimeRange:
        return self.primes.range

    @property
    def randomness_size(self) -> int:
        return len(self.primes)

    @property
    def tag_widths(self) -> tuple[int, int]:
        return bits_for(len(self.primes)), bits_for(self.M)

    @property
    def tag_width(self) -> int:
        return sum(self.tag_widths)

    @property
    def redundancy(self) -> int:
        return self.tag_width

    def contract(self) -> StochasticEncoderContract:
        return StochasticEncoderContract(1 << self.n, self.randomness_size)

    def encode_hash(self, m: BitLike, randomness=0) -> HashTag:
        v = _message_int(m, self.n)
        i = draw_index(randomness, self.randomness_size)
        return HashTag(self.inner.hash_int(v) % self.primes.primes[i], i, indexed=True)

    def decode(self, z: BitLike, tag: HashTag) -> BitString | None:
        p = tag.resolve(self.primes.primes)
        return _unique_match(self.inner, trim(z, self.n - self.t), p, tag.residue)

    def bad_fraction(self, v: int, z: BitLike) -> Fraction:
        """Share of P (with multiplicity) on which decoding ``z`` fails for message ``v``."""
        bad = collision_primes(self.inner, v, z, self.prime_range.lo)
        if bad is None:
            return Fraction(1)
        if not bad:
            return Fraction(0)
        return Fraction(sum(1 for p in self.primes.primes if p in bad), len(self.primes))


def randomized_nominal_M(n: int, t: int, eps: Fraction, alpha: float = 1.0) -> tuple[float, float]:
    M0 = 4 * alpha / float(eps) * n ** t * math.log2(n)
    return M0, 100 * M0 * math.log(M0)


def randomized_build(params: CodeParams, inner: InnerHashSpec, seed: int = 0,
                     verify: bool = True, messages: Iterable[int] | None = None,
                     budget: int = DEFAULT_BUDGET) -> RandomizedCode:
    """Sample P and, in exact mode, check every (m, tau) of the grid against epsilon.

    A failed verification raises; retrying with another seed is up to the caller.
    """
    _check_inner(params, inner)
    n, t, eps = params.n, params.t, params.epsilon
    M = smallest_feasible_modulus(n ** t, inner.bit_length, eps / 2, budget)
    P = sample_prime_multiset(PrimeRange.half(M), math.ceil(100 * n / eps), seed)
    code = RandomizedCode(params, inner, M, P, *randomized_nominal_M(n, t, eps))
    if verify:
        if messages is None:
            if (1 << n) * math.comb(n, t) > budget:
                raise BudgetExceeded("exact-mode verification grid exceeds the budget")
            messages = range(1 << n)
        for v in messages:
            for z in kernels.subsequences(v, n, n - t):
                zs = BitString.from_int(z, n - t)
                frac = code.bad_fraction(v, zs)
                if frac > eps:
                    raise ConstructionError(
                        f"seed {seed}: message {BitString.from_int(v, n)} with received {zs} "
                        f"fails on {frac} of P, above {eps}")
    return code


def randomized_encode_hash(desc: RandomizedCode, m: BitLike, randomness=0) -> HashTag:
    return desc.encode_hash(m, randomness)


def randomized_decode(desc: RandomizedCode, z: BitLike, tag: HashTag) -> BitString | None:
    return desc.decode(z, tag)


# -- brute-force (t, L) list code and the list-to-oblivious wrapper ----------

@dataclass(frozen=True, slots=True)
class BruteForceListCode:
    """Greedy lexicographic codebook: every length-(N-t) word has at most L codeword supersequences."""

    n: int
    t: int
    L: int
    length: int
    codewords: tuple[int, ...]
    _index: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if len(self.codewords) != 1 << self.n:
            raise ValueError(f"need 2^{self.n} codewords, got {len(self.codewords)}")
        object.__setattr__(self, "_index", {c: i for i, c in enumerate(self.codewords)})

    @property
    def redundancy(self) -> int:
        return self.length - self.n

    def encode(self, m: BitLike) -> BitString:
        return BitString.from_int(self.codewords[_message_int(m, self.n)], self.length)

    def list_decode(self, z: BitLike) -> list[BitString]:
        """Messages whose codeword is a supersequence of ``z``, in codeword order."""
        zs = trim(z, self.length - self.t)
        zi = int(zs, 2) if zs else 0
        hits = (self._index.get(c) for c in kernels.supersequences(zi, len(zs), self.length))
        return [BitString.from_int(i, self.n) for i in hits if i is not None]


def build_list_code(n: int, t: int, L: int, max_length: int = 24) -> BruteForceListCode:
    """Shortest codeword length N >= n at which the greedy codebook reaches 2^n words."""
    if L < 1:
        raise ValueError("list size must be at least 1")
    for N in range(n, max_length + 1):
        book = kernels.list_codebook(N, t, L, 1 << n)
        if len(book) == 1 << n:
            return BruteForceListCode(n, t, L, N, tuple(book))
    raise BudgetExceeded(f"no greedy (t={t}, L={L}) list code for n={n} up to length {max_length}")


@dataclass(frozen=True, slots=True)
class ListWrappedCode:
    params: CodeParams
    listcode: BruteForceListCode
    inner: InnerHashSpec
    M: int
    nominal_M: float
    scheme: str = "list-wrapped"

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def t(self) -> int:
        return self.params.t

    @property
    def prime_range(self) -> PrimeRange:
        return PrimeRange.half(self.M)

    @property
    def primes(self) -> tuple[int, ...]:
        return primes_in_range(self.prime_range)

    @property
    def randomness_size(self) -> int:
        return len(self.primes)

    @property
    def tag_widths(self) -> tuple[int, int]:
        return bits_for(len(self.primes)), bits_for(self.M)

    @property
    def rep_length(self) -> int:
        return (self.t + 1) * sum(self.tag_widths)

    @property
    def length(self) -> int:
        return self.listcode.length + self.rep_length

    @property
    def redundancy(self) -> int:
        return self.length - self.n

    def contract(self) -> StochasticEncoderContract:
        return StochasticEncoderContract(1 << self.n, self.randomness_size)

    def tag_for(self, c: BitString, index: int) -> HashTag:
        p = self.primes[index]
        return HashTag(self.inner.hash_int(c.to_int()) % p, index, indexed=True)

    def encode(self, m: BitLike, randomness=0) -> BitString:
        c = self.listcode.encode(m)
        i = draw_index(randomness, self.randomness_size)
        return c + rep_encode(self.tag_for(c, i).to_bits(*self.tag_widths), self.t + 1)

    def decode(self, z: BitLike) -> BitString | None:
        zs = trim(z, self.length - self.t)
        N, t = self.listcode.length, self.t
        z0, z1 = zs[: N - t], zs[len(zs) - (self.rep_length - t):]
        try:
            tag = HashTag.from_bits(rep_decode(z1, t + 1, sum(self.tag_widths)), *self.tag_widths, indexed=True)
            p = tag.resolve(self.primes)
        except (DecodeError, IndexError):
            return None
        h = self.inner.hash_int
        hits = [m for m in self.listcode.list_decode(z0)
                if h(self.listcode.codewords[m.to_int()]) % p == tag.residue]
        return hits[0] if len(hits) == 1 else None


def list_nominal_M(n: int, t: int, L: int, eps: Fraction, alpha: float = 1.0) -> float:
    return 100 * alpha * t * (L / float(eps)) * math.log2(2 * n) ** 2


def default_list_inner(length: int, t: int) -> InnerHashSpec:
    if length <= 16:
        return inner_hash.build_greedy_coloring(length, t)
    return inner_hash.identity_spec(length, t)


def list_wrap_build(listcode: BruteForceListCode, params: CodeParams, inner: InnerHashSpec | None = None,
                    epsilon: Fraction | None = None, budget: int = DEFAULT_BUDGET) -> ListWrappedCode:
    eps = Fraction(params.epsilon if epsilon is None else epsilon)
    if (listcode.n, listcode.t) != (params.n, params.t):
        raise ValueError("list code must match (n, t)")
    if inner is None:
        inner = default_list_inner(listcode.length, params.t)
    if (inner.n, inner.t) != (listcode.length, params.t):
        raise ValueError("inner hash must be built for the list-code length")
    M = smallest_feasible_modulus(listcode.L, inner.bit_length, eps, budget)
    params = CodeParams(params.n, params.t, eps)
    return ListWrappedCode(params, listcode, inner, M, list_nominal_M(params.n, params.t, listcode.L, eps))


def list_wrap_encode(desc: ListWrappedCode, m: BitLike, randomness=0) -> BitString:
    return desc.encode(m, randomness)


def list_wrap_decode(desc: ListWrappedCode, z: BitLike) -> BitString | None:
    return desc.decode(z)


# -- existential random codebooks --------------------------------------------

@dataclass(frozen=True, slots=True)
class ExistentialCode:
    params: CodeParams
    s: int
    size: int
    seed: int
    codebooks: tuple[tuple[int, ...], ...]
    survivors: tuple[int, ...]
    scheme: str = "existential"

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def t(self) -> int:
        return self.params.t

    @property
    def randomness_size(self) -> int:
        return self.s

    @property
    def length(self) -> int:
        return self.n

    @property
    def redundancy(self) -> float:
        return self.n - math.log2(len(self.survivors)) if self.survivors else math.inf

    def contract(self) -> StochasticEncoderContract:
        return StochasticEncoderContract(len(self.survivors), self.s)

    def encode(self, i: int, randomness=0) -> BitString:
        """Codeword for surviving message index ``i`` (an index into the original |C|)."""
        if i not in self.survivors:
            raise ValueError(f"message {i} did not survive pruning")
        return BitString.from_int(self.codebooks[i][draw_index(randomness, self.s)], self.n)

    def decode(self, z: BitLike) -> int | None:
        zs = trim(z, self.n - self.t)
        hits = [i for i in self.survivors
                if any(is_subsequence(zs, BitString.from_int(w, self.n)) for w in self.codebooks[i])]
        return hits[0] if len(hits) == 1 else None


def existential_nominal_s(n: int, t: int, eps: Fraction) -> float:
    return 10 * t * math.log2(n) / float(eps) ** 2


def bad_counts(codebooks: tuple[tuple[int, ...], ...], n: int, t: int,
               members: Iterable[int] | None = None) -> dict[tuple[int, tuple[int, ...]], int]:
    """For each (i, tau): how many w in E_i have tau(w) inside some word of another E_j.

    ``members`` restricts the competing codebooks (all by default).
    """
    members = range(len(codebooks)) if members is None else tuple(members)
    k = n - t
    owners: dict[int, set[int]] = {}
    for j in members:
        for u in codebooks[j]:
            for z in kernels.subsequences(u, n, k):
                owners.setdefault(z, set()).add(j)
    out = {}
    for i in members:
        for surv in itertools.combinations(range(n), k):
            cnt = 0
            for w in codebooks[i]:
                z = 0
                for pos in surv:
                    z = (z << 1) | ((w >> (n - 1 - pos)) & 1)
                if owners.get(z, set()) - {i}:
                    cnt += 1
            out[i, tuple(p + 1 for p in surv)] = cnt
    return out


def existential_build(params: CodeParams, s_override: int | None = None, codebook_size: int | None = None,
                      seed: int = 0, budget: int = DEFAULT_BUDGET) -> ExistentialCode:
    """Random multisets E_i, then one-shot pruning of every message that is tau-bad for some tau."""
    n, t, eps = params.n, params.t, params.epsilon
    s = s_override if s_override is not None else math.ceil(existential_nominal_s(n, t, eps))
    if codebook_size is None:
        codebook_size = max(1, math.floor(float(eps) / (2 * s) * 2 ** n / n ** t))
    if codebook_size * s * (1 << n) > budget:
        raise BudgetExceeded("existential build exceeds the enumeration budget")
    gen = stream(seed, "construction", n, t, s, codebook_size)
    draws = gen.integers(0, 1 << n, size=(codebook_size, s))
    books = tuple(tuple(int(w) for w in row) for row in draws)
    counts = bad_counts(books, n, t)
    survivors = tuple(i for i in range(codebook_size)
                      if all(counts[i, tau] <= eps * s for (j, tau) in counts if j == i))
    code = ExistentialCode(params, s, codebook_size, seed, books, survivors)
    if 2 * len(survivors) < codebook_size:
        err = ConstructionError(
            f"only {len(survivors)} of {codebook_size} messages survive pruning (seed {seed})")
        err.code = code
        raise err
    return code


# -- systematic codes from document exchange ---------------------------------

@dataclass(frozen=True, slots=True)
class SystematicCode:
    """Enc(m) = m followed by Rep_{t+1} of the document-exchange tag bits."""

    de: object
    scheme: str = "systematic"
    note: str = PROTECTOR_NOTE

    @property
    def n(self) -> int:
        return self.de.n

    @property
    def t(self) -> int:
        return self.de.t

    @property
    def randomness_size(self) -> int:
        return self.de.randomness_size

    @property
    def params(self) -> CodeParams:
        return getattr(self.de, "params", None) or CodeParams(self.n, self.t)

    @property
    def tag_bits(self) -> int:
        return sum(self.de.tag_widths)

    @property
    def length(self) -> int:
        return self.n + (self.t + 1) * self.tag_bits

    @property
    def redundancy(self) -> int:
        return self.length - self.n

    def encode(self, m: BitLike, randomness=0) -> BitString:
        tag = self.de.encode_hash(m, randomness)
        return BitString.of(m) + rep_encode(tag.to_bits(*self.de.tag_widths), self.t + 1)

    def decode(self, z: BitLike):
        n, t, r = self.n, self.t, self.tag_bits
        zs = trim(z, self.length - t)
        z0, z1 = zs[: n - t], zs[len(zs) - ((t + 1) * r - t):]
        indexed = getattr(self.de, "scheme", "") in ("randomized", "randomized-adversarial")
        try:
            tag = HashTag.from_bits(rep_decode(z1, t + 1, r), *self.de.tag_widths, indexed=indexed)
            return self.de.decode(z0, tag)
        except (DecodeError, IndexError, ValueError):
            return None


def systematic_wrap(de, m: BitLike, randomness=0) -> BitString:
    return SystematicCode(de).encode(m, randomness)


def systematic_unwrap(de, z: BitLike):
    return SystematicCode(de).decode(z)


@dataclass(frozen=True, slots=True)
class SystematicAsDocumentExchange:
    """Read a systematic code as a document exchange: the hash is the redundancy suffix."""

    code: SystematicCode

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def t(self) -> int:
        return self.code.t

    @property
    def randomness_size(self) -> int:
        return self.code.randomness_size

    def encode_hash(self, m: BitLike, randomness=0) -> BitString:
        return self.code.encode(m, randomness)[self.n:]

    def decode(self, z: BitLike, suffix: BitLike):
        return self.code.decode(BitString(trim(z, self.n - self.t)) + suffix)
