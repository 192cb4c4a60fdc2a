"""Exact failure probabilities over verification grids, plus the combinatorial bound checks.

Each failure probability can be computed along two independent paths:

* ``"decode"`` runs the real decoder once per encoder-randomness outcome
  (batched over primes for the two document-exchange schemes, where one
  pass of ``match_counts`` is exactly what the decoder does for each prime);
* ``"count"`` counts the outcomes that must fail, that is primes dividing a
  hash difference or codebook words whose received word lies inside a
  competing codebook.

For the systematic and list-wrapped codes the count path also relies on two
structural facts, both checked separately: the first ``N - t`` received bits
are a length ``N - t`` subsequence of the prefix, independent of the coins,
and the repetition block always decodes to the transmitted tag.
"""

from __future__ import annotations

import csv
import io
import itertools
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from . import inner_hash, kernels
from .adversarial import AdversarialCode, VTCode, adversarial_build, rep_decode, rep_encode
from .bitseq import (DEFAULT_BUDGET, BitLike, BitString, BudgetExceeded, CodeParams, DeletionPattern,
                     _s, apply_pattern, is_bad_string, iter_patterns, pattern_distance)
from .hashtag import HashTag
from .inner_hash import DecodeError, vt_syndrome
from .oblivious import (ExistentialCode, ExplicitCode, ListWrappedCode, RandomizedCode, SystematicCode,
                        collision_primes, explicit_build, randomized_build)
from .primes import prime_factors
from .rng import stream

DE_SCHEMES = ("explicit", "randomized", "randomized-adversarial", "vt")
CHANNELS = ("oblivious-exhaustive", "adversarial-worst-case", "uniform-random-t", "iid-deletion")
CSV_COLUMNS = ("scheme", "n", "t", "eps", "m", "tau", "fail_num", "fail_den", "bound")
REDUNDANCY_COLUMNS = ("scheme", "n", "t", "eps", "measured_bits", "formula_bits", "difference")


def _frac(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


# -- scheme plumbing ------------------------------------------------------------

def is_document_exchange(desc) -> bool:
    return desc.scheme in DE_SCHEMES


def channel_length(desc) -> int:
    return desc.n if is_document_exchange(desc) else desc.length


def message_space(desc) -> list:
    if isinstance(desc, ExistentialCode):
        return list(desc.survivors)
    return [BitString.from_int(v, desc.n) for v in range(1 << desc.n)]


def contract_bound(desc) -> Fraction:
    if desc.scheme in ("randomized-adversarial", "vt"):
        return Fraction(0)
    if isinstance(desc, SystematicCode):
        return contract_bound(desc.de)
    return desc.params.epsilon


def _prefix(desc, m) -> tuple[BitString, int]:
    """The coin-independent prefix whose first ``N - t`` received bits the decoder reads."""
    if is_document_exchange(desc):
        return BitString.of(m), desc.n
    if isinstance(desc, SystematicCode):
        return BitString.of(m), desc.n
    if isinstance(desc, ListWrappedCode):
        return desc.listcode.encode(m), desc.listcode.length
    raise TypeError(f"{desc.scheme} has no coin-independent prefix")


def _received_prefix(desc, m, tau: DeletionPattern) -> str:
    c, N = _prefix(desc, m)
    padded = c.bits + "0" * (tau.n - len(c))
    return apply_pattern(padded, tau).bits[: N - desc.t]


# -- count path -----------------------------------------------------------------

def _indices_hit(primes: Sequence[int], coll) -> frozenset[int]:
    if coll is None:
        return frozenset(range(len(primes)))
    if not coll:
        return frozenset()
    return frozenset(i for i, p in enumerate(primes) if p in coll)


def _de_bad_count(de, v: int, z: str) -> frozenset[int]:
    if de.scheme == "vt":
        hits = [y for y in kernels.supersequences(int(z, 2) if z else 0, len(z), de.n)
                if vt_syndrome(BitString.from_int(y, de.n)) == vt_syndrome(BitString.from_int(v, de.n))]
        return frozenset() if hits == [v] else frozenset({0})
    if de.scheme == "explicit":
        return _indices_hit(de.primes, collision_primes(de.inner, v, z, de.prime_range.lo))
    if de.scheme == "randomized":
        return _indices_hit(de.primes.primes, collision_primes(de.inner, v, z, de.prime_range.lo))
    if de.scheme == "randomized-adversarial":
        i = de.good_cache[v] if de.good_cache is not None else de.good_index(v)
        if i < 0:
            return frozenset({0})
        coll = collision_primes(de.inner, v, z, de.primes.range.lo)
        return frozenset({0}) if coll is None or de.primes.primes[i] in coll else frozenset()
    raise TypeError(f"not a document-exchange scheme: {de.scheme}")


@lru_cache(maxsize=8)
def _owners(desc: ExistentialCode) -> dict[int, frozenset[int]]:
    n, k = desc.n, desc.n - desc.t
    out: dict[int, set[int]] = {}
    for j in desc.survivors:
        for u in desc.codebooks[j]:
            for z in kernels.subsequences(u, n, k):
                out.setdefault(z, set()).add(j)
    return {z: frozenset(s) for z, s in out.items()}


def bad_outcomes(desc, m, tau: DeletionPattern) -> frozenset[int]:
    """Encoder-randomness outcomes that must fail on (m, tau), by counting."""
    if isinstance(desc, ExistentialCode):
        owners = _owners(desc)
        bad = set()
        for r, w in enumerate(desc.codebooks[m]):
            z = apply_pattern(BitString.from_int(w, desc.n), tau).bits[: desc.n - desc.t]
            if owners.get(int(z, 2) if z else 0, frozenset()) - {m}:
                bad.add(r)
        return frozenset(bad)
    v = BitString.of(m).to_int()
    z = _received_prefix(desc, m, tau)
    if is_document_exchange(desc):
        return _de_bad_count(desc, v, z)
    if isinstance(desc, SystematicCode):
        return _de_bad_count(desc.de, v, z)
    if isinstance(desc, ListWrappedCode):
        return _list_bad_count(desc, m, z)
    raise TypeError(f"unsupported scheme {desc.scheme}")


def _list_bad_count(desc: ListWrappedCode, m, z0: str) -> frozenset[int]:
    lst = desc.listcode.list_decode(z0)
    mb = BitString.of(m)
    if mb not in lst:
        return frozenset(range(desc.randomness_size))
    h = desc.inner.hash_int
    hc = h(desc.listcode.codewords[mb.to_int()])
    lo = desc.prime_range.lo
    coll: set[int] = set()
    for other in lst:
        if other == mb:
            continue
        d = abs(h(desc.listcode.codewords[other.to_int()]) - hc)
        if d == 0:
            return frozenset(range(desc.randomness_size))
        if d >= lo:
            coll |= {q for q in prime_factors(d) if q >= lo}
    return _indices_hit(desc.primes, coll)


# -- decode path ----------------------------------------------------------------

def decode_outcomes(desc, m, tau: DeletionPattern, literal: bool = False) -> tuple[frozenset[int], frozenset[int]]:
    """(failing outcomes, outcomes that decode to a *wrong* message) by running the decoder."""
    if not literal and desc.scheme in ("explicit", "randomized"):
        return _batched_de(desc, m, tau)
    fail, wrong = set(), set()
    for r in range(desc.randomness_size):
        if is_document_exchange(desc):
            z = apply_pattern(m, tau)
            try:
                out = desc.decode(z, desc.encode_hash(m, r))
            except DecodeError:
                out = None
        else:
            out = desc.decode(apply_pattern(desc.encode(m, r), tau))
        if out != m:
            fail.add(r)
            if out is not None:
                wrong.add(r)
    return frozenset(fail), frozenset(wrong)


def _batched_de(desc, m, tau):
    v = BitString.of(m).to_int()
    z = apply_pattern(m, tau).bits[: desc.n - desc.t]
    cands = inner_hash.candidates(desc.inner, z)
    if v not in cands:
        raise AssertionError("transmitted message is not a supersequence of its received word")
    h = desc.inner.hash_int
    primes = desc.primes if desc.scheme == "explicit" else desc.primes.primes
    order = list(dict.fromkeys(primes))
    counts = dict(zip(order, kernels.match_counts([h(y) for y in cands], h(v), order)))
    # the message itself always matches, so a unique match is the message
    return frozenset(i for i, p in enumerate(primes) if counts[p] != 1), frozenset()


def exact_failure(desc, m, tau: DeletionPattern, method: str = "decode") -> Fraction:
    """Pr over encoder randomness that decoding tau(Enc(m)) does not return m."""
    if method == "decode":
        bad = decode_outcomes(desc, m, tau)[0]
    elif method == "count":
        bad = bad_outcomes(desc, m, tau)
    else:
        raise ValueError(f"unknown method {method!r}")
    return Fraction(len(bad), desc.randomness_size)


# -- reports --------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class ChannelModel:
    kind: str
    p: Fraction = Fraction(0)

    def __post_init__(self):
        if self.kind not in CHANNELS:
            raise ValueError(f"unknown channel model {self.kind!r}")
        object.__setattr__(self, "p", Fraction(self.p))


@dataclass(frozen=True, slots=True)
class GridSpec:
    """Messages and patterns to sweep; ``None`` means all of them.

    With ``reduced`` set and no explicit patterns, one representative pattern
    is used per distinct coin-independent received prefix; every other
    pattern has the same failure probability as its representative.
    """

    messages: tuple | None = None
    patterns: tuple[DeletionPattern, ...] | None = None
    reduced: bool = True
    method: str = "count"


@dataclass(frozen=True, slots=True)
class GridPoint:
    m: object
    tau: DeletionPattern | None
    fail: Fraction


@dataclass
class FailureReport:
    scheme: str
    n: int
    t: int
    eps: Fraction
    channel: str
    bound: Fraction
    points: list[GridPoint] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def worst(self) -> Fraction:
        return max((p.fail for p in self.points), default=Fraction(0))

    @property
    def mean(self) -> Fraction:
        if not self.points:
            return Fraction(0)
        return sum((p.fail for p in self.points), Fraction(0)) / len(self.points)

    def violations(self) -> list[GridPoint]:
        return [p for p in self.points if p.fail > self.bound]

    @property
    def ok(self) -> bool:
        return not self.violations()

    def rows(self) -> Iterator[tuple[str, ...]]:
        for p in self.points:
            yield (self.scheme, str(self.n), str(self.t), _frac(self.eps), str(p.m),
                   "" if p.tau is None else str(p.tau), str(p.fail.numerator), str(p.fail.denominator),
                   _frac(self.bound))

    def to_csv(self) -> str:
        return rows_to_csv(CSV_COLUMNS, self.rows())


def rows_to_csv(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def representative_patterns(desc, m) -> list[DeletionPattern]:
    """One t-deletion pattern per distinct (N - t)-subsequence of the coin-independent prefix."""
    c, N = _prefix(desc, m)
    L, t = channel_length(desc), desc.t
    out = []
    for z in kernels.subsequences(c.to_int(), N, N - t):
        zs = BitString.from_int(z, N - t).bits
        surv, pos = [], 0
        for ch in zs:
            pos = c.bits.index(ch, pos)
            surv.append(pos + 1)
            pos += 1
        out.append(DeletionPattern(L, tuple(surv) + tuple(range(N + 1, L + 1))))
    return out


def _patterns(desc, m, grid: GridSpec) -> Iterable[DeletionPattern]:
    if grid.patterns is not None:
        return grid.patterns
    if grid.reduced and not isinstance(desc, ExistentialCode):
        return representative_patterns(desc, m)
    return iter_patterns(channel_length(desc), desc.t)


def worst_case_report(desc, channel: ChannelModel, grid: GridSpec = GridSpec(),
                      budget: int = DEFAULT_BUDGET) -> FailureReport:
    start = time.perf_counter()
    eps = getattr(getattr(desc, "params", None), "epsilon", Fraction(0))
    rep = FailureReport(desc.scheme, desc.n, desc.t, eps, channel.kind, contract_bound(desc))
    messages = message_space(desc) if grid.messages is None else list(grid.messages)
    L, t = channel_length(desc), desc.t
    if len(messages) * math.comb(L, t) > budget:
        raise BudgetExceeded("grid exceeds the verification budget")
    fail = (lambda m, tau: exact_failure(desc, m, tau, grid.method))
    for m in messages:
        if channel.kind == "oblivious-exhaustive":
            for tau in _patterns(desc, m, grid):
                rep.points.append(GridPoint(m, tau, fail(m, tau)))
        elif channel.kind == "adversarial-worst-case":
            rep.points.append(_adaptive_point(desc, m, grid))
        elif channel.kind == "uniform-random-t":
            pats = list(iter_patterns(L, t))
            rep.points.append(GridPoint(m, None, sum((fail(m, p) for p in pats), Fraction(0)) / len(pats)))
        else:
            rep.points.append(GridPoint(m, None, _iid_failure(desc, m, channel.p, grid.method)))
    rep.wall_time = time.perf_counter() - start
    return rep


def _adaptive_point(desc, m, grid: GridSpec) -> GridPoint:
    """Adversary sees the codeword: an outcome fails if *some* pattern breaks it."""
    hit: set[int] = set()
    worst_tau, worst = None, -1
    for tau in _patterns(desc, m, grid):
        bad = bad_outcomes(desc, m, tau) if grid.method == "count" else decode_outcomes(desc, m, tau)[0]
        hit |= bad
        if len(bad) > worst:
            worst_tau, worst = tau, len(bad)
    tau = worst_tau if desc.randomness_size == 1 else None
    return GridPoint(m, tau, Fraction(len(hit), desc.randomness_size))


def _iid_failure(desc, m, p: Fraction, method: str) -> Fraction:
    """Exact failure under i.i.d. deletions; more than t deletions count as failure."""
    L, t = channel_length(desc), desc.t
    total = Fraction(0)
    ok_mass = Fraction(0)
    for k in range(t + 1):
        w = p ** k * (1 - p) ** (L - k)
        for gone in itertools.combinations(range(1, L + 1), k):
            tau = DeletionPattern.from_deleted(L, gone)
            total += w * exact_failure(desc, m, tau, method)
            ok_mass += w
    return total + (1 - ok_mass)


def two_path_agreement(desc, grid: GridSpec = GridSpec()) -> list[tuple]:
    """Grid points where the decode and count paths disagree (empty when they agree)."""
    out = []
    messages = message_space(desc) if grid.messages is None else list(grid.messages)
    for m in messages:
        for tau in _patterns(desc, m, grid):
            a = exact_failure(desc, m, tau, "decode")
            b = exact_failure(desc, m, tau, "count")
            if a != b:
                out.append((m, tau, a, b))
    return out


def rep_block_check(bits: BitLike, k: int) -> list[tuple[int, ...]]:
    """Deletion sets (at most k - 1 positions) on Rep_k(bits) that fail to decode back."""
    s = _s(bits)
    block = rep_encode(s, k).bits
    bad = []
    for j in range(k):
        for gone in itertools.combinations(range(len(block)), j):
            keep = set(gone)
            z = "".join(c for i, c in enumerate(block) if i not in keep)
            try:
                out = rep_decode(z, k, len(s)).bits
            except DecodeError:
                out = None
            if out != s:
                bad.append(tuple(g + 1 for g in gone))
    return bad


# -- Dec'(z) = C(Dec(z)) --------------------------------------------------------

@dataclass(frozen=True, slots=True)
class AverageCaseResult:
    seed: int
    error: Fraction
    bound: float
    codewords_only: bool

    @property
    def within_bound(self) -> bool:
        return float(self.error) <= self.bound


def sample_deterministic_code(code, seed: int) -> list[BitString]:
    """One codeword per message, coins drawn from the seed's sampling stream."""
    gen = stream(seed, "sampling", code.n, code.t)
    return [code.encode(m, int(gen.integers(code.randomness_size))) for m in message_space(code)]


def oblivious_to_average(code, seed: int, literal: bool = False) -> AverageCaseResult:
    """Exact avg-case error of Dec'(z) = C(Dec(z)) over a uniform codeword of C and uniform tau.

    Dec' maps the failure symbol to the first codeword of C.
    """
    msgs = message_space(code)
    C = sample_deterministic_code(code, seed)
    index = {m: i for i, m in enumerate(msgs)}
    bound = 2 * math.sqrt(float(contract_bound(code)))

    def dec_prime(out) -> BitString:
        return C[index[out]] if out is not None else C[0]

    L, t, n = code.length, code.t, code.n
    errors, total, codewords_only = 0, 0, True
    cset = set(C)
    if literal or not isinstance(code, SystematicCode):
        for i, m in enumerate(msgs):
            cache: dict[str, BitString] = {}
            for tau in iter_patterns(L, t):
                z = apply_pattern(C[i], tau).bits
                if z not in cache:
                    cache[z] = dec_prime(code.decode(z))
                out = cache[z]
                codewords_only &= out in cset
                errors += out != C[i]
                total += 1
        return AverageCaseResult(seed, Fraction(errors, total), bound, codewords_only)
    # systematic shortcut: only deletions inside the message change the DE input
    de, r = code.de, code.tag_bits
    for i, m in enumerate(msgs):
        tag_bits = C[i].bits[n:]
        tag = _tag_from_bits(code, tag_bits)
        for j in range(t + 1):
            mult = math.comb(L - n, t - j)
            if not mult:
                continue
            seen: dict[str, BitString] = {}
            for gone in itertools.combinations(range(n), j):
                z0 = "".join(c for q, c in enumerate(m.bits) if q not in gone)[: n - t]
                if z0 not in seen:
                    try:
                        seen[z0] = dec_prime(de.decode(z0, tag))
                    except DecodeError:
                        seen[z0] = dec_prime(None)
                out = seen[z0]
                codewords_only &= out in cset
                errors += mult * (out != C[i])
                total += mult
    return AverageCaseResult(seed, Fraction(errors, total), bound, codewords_only)


def _tag_from_bits(code: SystematicCode, rep_bits: str):
    bits = rep_decode(rep_bits, code.t + 1, code.tag_bits)
    indexed = code.de.scheme in ("randomized", "randomized-adversarial")
    return HashTag.from_bits(bits, *code.de.tag_widths, indexed=indexed)


def average_case_distribution(code, seeds: Iterable[int]) -> list[AverageCaseResult]:
    return [oblivious_to_average(code, s) for s in seeds]


def average_case_rows(results: Sequence[AverageCaseResult]) -> list[tuple[str, ...]]:
    return [(str(r.seed), _frac(r.error), f"{r.bound:.6f}", str(int(r.within_bound)), str(int(r.codewords_only)))
            for r in results]


# -- counting bounds --------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class CountCheck:
    count: int
    bound: int

    @property
    def holds(self) -> bool:
        return self.count <= self.bound


def close_patterns_bound(t: int, ell: int) -> int:
    return (ell + 1) * math.comb(2 * t + ell + 1, 2 * t + 1) * math.comb(t + ell, t)


def close_patterns_count(tau: DeletionPattern, ell: int) -> CountCheck:
    """How many t-deletion patterns lie within Delta-distance ell of tau."""
    cnt = sum(1 for other in iter_patterns(tau.n, tau.t) if pattern_distance(tau, other) <= ell)
    return CountCheck(cnt, close_patterns_bound(tau.t, ell))


def bad_string_bound(n: int, ell: int, t: int) -> int:
    return math.comb(n, t) ** 2 * 2 ** (n - ell) if ell <= n else 0


def bad_string_census(n: int, ell: int, t: int, budget: int = DEFAULT_BUDGET) -> CountCheck:
    if (1 << n) > budget:
        raise BudgetExceeded(f"census over 2^{n} strings exceeds budget")
    cnt = sum(1 for v in range(1 << n) if is_bad_string(BitString.from_int(v, n), ell, t))
    return CountCheck(cnt, bad_string_bound(n, ell, t))


def lower_bound_value(n: int, t: int, eps) -> float:
    """log2 C(n,t) + t - log2(3t) - log2(2/(1-eps)), without the unevaluable -O(t log log n) term."""
    eps = Fraction(eps)
    if t < 1:
        raise ValueError("the lower bound needs t >= 1")
    if eps >= 1:
        return -math.inf
    return math.log2(math.comb(n, t)) + t - math.log2(3 * t) - math.log2(2 / (1 - float(eps)))


# -- redundancy table -----------------------------------------------------------

FORMULAS = {
    "explicit": lambda n, t: 2 * t * math.log2(n),
    "randomized": lambda n, t: (t + 1) * math.log2(n),
    "randomized-adversarial": lambda n, t: (2 * t + 1) * math.log2(n),
    "vt": lambda n, t: math.log2(n),
}


def build_scheme(scheme: str, n: int, t: int, eps, seed: int = 0, inner_kind: str = "greedy-coloring",
                 verify: bool = False):
    params = CodeParams(n, t, Fraction(eps))
    if scheme == "vt":
        if t != 1:
            raise ValueError("vt handles a single deletion only")
        return VTCode(n)
    inner = inner_hash.build(inner_kind, n, t)
    if scheme == "explicit":
        return explicit_build(params, inner)
    if scheme == "randomized":
        return randomized_build(params, inner, seed, verify=verify)
    if scheme == "randomized-adversarial":
        return adversarial_build(params, inner, seed, verify=verify)
    raise ValueError(f"unknown scheme {scheme!r}")


def redundancy_rows(schemes: Sequence[str], grid: Iterable[tuple[int, int, Fraction]],
                    seed: int = 0) -> list[tuple[str, ...]]:
    """Measured tag/redundancy bits vs the leading-order formula at each grid point."""
    rows = []
    for n, t, eps in grid:
        for scheme in schemes:
            if scheme == "vt" and t != 1:
                continue
            desc = build_scheme(scheme, n, t, eps, seed)
            measured = desc.redundancy
            formula = FORMULAS[scheme](n, t)
            rows.append((scheme, str(n), str(t), _frac(eps), str(measured), f"{formula:.6f}",
                         f"{measured - formula:.6f}"))
    return rows


def redundancy_table(schemes: Sequence[str], grid: Iterable[tuple[int, int, Fraction]], seed: int = 0) -> str:
    return rows_to_csv(REDUNDANCY_COLUMNS, redundancy_rows(schemes, grid, seed))


# -- diagnostics ----------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class MonotonicityCase:
    m: BitString
    z: str
    M_small: int
    M_large: int
    fail_small: Fraction
    fail_large: Fraction


def monotonicity_report(params: CodeParams, inner, moduli: Sequence[int],
                        messages: Iterable[int] | None = None) -> tuple[int, list[MonotonicityCase]]:
    """Compare explicit-scheme failure across growing prime ranges; returns (#comparisons, counterexamples)."""
    n, t = params.n, params.t
    codes = [ExplicitCode(params, inner, M, float("nan")) for M in sorted(moduli)]
    messages = range(1 << n) if messages is None else messages
    checked, bad = 0, []
    for v in messages:
        for z in kernels.subsequences(v, n, n - t):
            zs = BitString.from_int(z, n - t).bits
            fails = [Fraction(len(_de_bad_count(c, v, zs)), c.randomness_size) for c in codes]
            for a, b, fa, fb in zip(codes, codes[1:], fails, fails[1:]):
                checked += 1
                if fb > fa:
                    bad.append(MonotonicityCase(BitString.from_int(v, n), zs, a.M, b.M, fa, fb))
    return checked, bad


@dataclass(frozen=True, slots=True)
class GapWitness:
    n: int
    t: int
    eps: Fraction
    explicit_worst: Fraction
    explicit_at: tuple
    adversarial_worst: Fraction


def gap_witness(n: int = 12, t: int = 1, eps=Fraction(1, 2), seed: int = 0,
                inner_kind: str = "identity") -> GapWitness:
    """Worst per-(m, tau) failure of the explicit oblivious scheme vs the adversarial scheme."""
    params = CodeParams(n, t, Fraction(eps))
    inner = inner_hash.build(inner_kind, n, t)
    ex = explicit_build(params, inner)
    adv = adversarial_build(params, inner, seed)
    grid = GridSpec()
    rex = worst_case_report(ex, ChannelModel("oblivious-exhaustive"), grid)
    radv = worst_case_report(adv, ChannelModel("oblivious-exhaustive"), grid)
    at = max(rex.points, key=lambda p: p.fail)
    return GapWitness(n, t, params.epsilon, rex.worst, (str(at.m), str(at.tau)), radv.worst)
