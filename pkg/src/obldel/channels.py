"""Deletion channel models, each seeded and replayable from its string form."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .bitseq import DEFAULT_BUDGET, BitLike, BitString, BudgetExceeded, DeletionPattern, _s, apply_pattern, iter_patterns
from .rng import stream

MODELS = ("oblivious", "uniform", "iid")


@dataclass(frozen=True, slots=True)
class ChannelInstance:
    """``oblivious`` carries its pattern; ``uniform`` deletes ``t`` uniform positions; ``iid`` deletes w.p. ``p``."""

    model: str
    n: int
    seed: int = 0
    t: int = 0
    p: Fraction = Fraction(0)
    pattern: DeletionPattern | None = None

    def __post_init__(self):
        object.__setattr__(self, "p", Fraction(self.p))
        if self.model not in MODELS:
            raise ValueError(f"unknown channel model {self.model!r}")
        if self.model == "oblivious":
            if self.pattern is None or self.pattern.n != self.n:
                raise ValueError("an oblivious channel needs a pattern on n positions")
            object.__setattr__(self, "t", self.pattern.t)
        if not 0 <= self.t <= self.n:
            raise ValueError("need 0 <= t <= n")
        if not 0 <= self.p <= 1:
            raise ValueError("deletion probability must lie in [0, 1]")

    @classmethod
    def oblivious(cls, pattern: DeletionPattern, seed: int = 0) -> "ChannelInstance":
        return cls("oblivious", pattern.n, seed, pattern=pattern)

    @classmethod
    def committed(cls, n: int, t: int, m: BitLike, seed: int = 0) -> "ChannelInstance":
        """An oblivious pattern chosen from (n, t, m) and the channel seed, never from encoder coins."""
        gen = stream(seed, "channel", n, t, int(_s(m), 2) if _s(m) else 0)
        gone = sorted(int(i) + 1 for i in gen.choice(n, size=t, replace=False))
        return cls.oblivious(DeletionPattern.from_deleted(n, gone), seed)

    def __str__(self) -> str:
        if self.model == "oblivious":
            return f"oblivious:{self.pattern}:{self.seed}"
        if self.model == "uniform":
            return f"uniform:{self.n},{self.t}:{self.seed}"
        return f"iid:{self.n},{self.p.numerator}/{self.p.denominator}:{self.seed}"

    @classmethod
    def parse(cls, text: str) -> "ChannelInstance":
        """Inverse of ``str``: ``model:params:seed``."""
        model, _, rest = text.strip().partition(":")
        params, _, seed = rest.rpartition(":")
        if not params:
            raise ValueError(f"channel spec must look like 'model:params:seed', got {text!r}")
        seed = int(seed)
        if model == "oblivious":
            return cls.oblivious(DeletionPattern.parse(params), seed)
        n, _, arg = params.partition(",")
        if model == "uniform":
            return cls("uniform", int(n), seed, t=int(arg))
        if model == "iid":
            return cls("iid", int(n), seed, p=Fraction(arg))
        raise ValueError(f"unknown channel model {model!r}")


def draw_pattern(ch: ChannelInstance, trial: int = 0) -> DeletionPattern:
    if ch.model == "oblivious":
        return ch.pattern
    gen = stream(ch.seed, "channel", ch.n, trial)
    if ch.model == "uniform":
        gone = gen.choice(ch.n, size=ch.t, replace=False) + 1
    else:
        # exact Bernoulli(p) per position from a uniform integer draw against p's denominator
        num, den = ch.p.numerator, ch.p.denominator
        gone = [i + 1 for i, u in enumerate(gen.integers(0, den, size=ch.n)) if u < num]
    return DeletionPattern.from_deleted(ch.n, [int(i) for i in gone])


def corrupt(ch: ChannelInstance, c: BitLike, trial: int = 0) -> BitString:
    s = _s(c)
    if len(s) != ch.n:
        raise ValueError(f"channel is for length {ch.n}, word has length {len(s)}")
    return apply_pattern(s, draw_pattern(ch, trial))


def all_patterns(n: int, t: int, budget: int = DEFAULT_BUDGET) -> Iterator[DeletionPattern]:
    if not 0 <= t <= n:
        raise ValueError("need 0 <= t <= n")
    if math.comb(n, t) > budget:
        raise BudgetExceeded(f"C({n},{t}) patterns exceed budget {budget}")
    return iter_patterns(n, t)
