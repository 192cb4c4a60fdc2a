"""JSON descriptor files: every integer is a decimal string, and loading re-verifies primes and colour tables."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .adversarial import AdversarialCode, VTCode
from .bitseq import CodeParams
from .inner_hash import InnerHashSpec, spot_check
from .oblivious import (PROTECTOR_NOTE, BruteForceListCode, ExistentialCode, ExplicitCode, ListWrappedCode,
                        RandomizedCode, SystematicCode)
from .primes import PrimeRange, SampledPrimeSet, is_prime, primes_in_range, sample_prime_multiset

FORMAT_VERSION = "1"


class DescriptorError(ValueError):
    """A descriptor file is malformed, from another format version, or fails an integrity check."""


def _ints(xs) -> str:
    return ",".join(str(x) for x in xs)


def _parse_ints(s: str) -> tuple[int, ...]:
    return tuple(int(x) for x in s.split(",")) if s else ()


def _params(p: CodeParams) -> dict:
    return {"n": str(p.n), "t": str(p.t), "epsilon": f"{p.epsilon.numerator}/{p.epsilon.denominator}"}


def _inner(spec: InnerHashSpec) -> dict:
    d = {"kind": spec.kind, "n": str(spec.n), "t": str(spec.t), "bit_length": str(spec.bit_length)}
    if spec.colors is not None:
        d["colors"] = _ints(spec.colors)
    return d


def _sampled(P: SampledPrimeSet) -> dict:
    return {"range": [str(P.range.lo), str(P.range.hi)], "seed": str(P.seed),
            "count": str(len(P)), "list": _ints(P.primes)}


def to_dict(d) -> dict:
    out = {"format_version": FORMAT_VERSION, "scheme": d.scheme, "notes": []}
    if isinstance(d, VTCode):
        out["n"] = str(d.n)
        return out
    if isinstance(d, SystematicCode):
        out["inner_scheme"] = to_dict(d.de)
        out["notes"] = [d.note]
        return out
    out["params"] = _params(d.params)
    if isinstance(d, ExistentialCode):
        out.update(s=str(d.s), size=str(d.size), seed=str(d.seed),
                   codebooks=[_ints(b) for b in d.codebooks], survivors=_ints(d.survivors))
        return out
    out["inner"] = _inner(d.inner)
    out["M"] = str(d.M)
    if isinstance(d, ExplicitCode):
        out["nominal"] = {"M": repr(d.nominal_M)}
        out["primes"] = {"range": [str(d.prime_range.lo), str(d.prime_range.hi)], "count": str(len(d.primes))}
    elif isinstance(d, RandomizedCode):
        out["nominal"] = {"M0": repr(d.nominal_M0), "M": repr(d.nominal_M)}
        out["primes"] = _sampled(d.primes)
        out["seed"] = str(d.primes.seed)
    elif isinstance(d, AdversarialCode):
        out["nominal"] = {"M0": repr(d.nominal_M0)}
        out["primes"] = _sampled(d.primes)
        out["seed"] = str(d.primes.seed)
    elif isinstance(d, ListWrappedCode):
        lc = d.listcode
        out["nominal"] = {"M": repr(d.nominal_M)}
        out["list_code"] = {"n": str(lc.n), "t": str(lc.t), "L": str(lc.L), "length": str(lc.length),
                            "codewords": _ints(lc.codewords)}
        out["notes"] = [PROTECTOR_NOTE]
    else:
        raise TypeError(f"cannot store {type(d).__name__}")
    return out


def store_descriptor(d, path) -> None:
    Path(path).write_text(dumps(d))


def dumps(d) -> str:
    return json.dumps(to_dict(d), indent=1, sort_keys=True) + "\n"


def _load_params(obj) -> CodeParams:
    return CodeParams(int(obj["n"]), int(obj["t"]), Fraction(obj["epsilon"]))


def _load_inner(obj) -> InnerHashSpec:
    colors = _parse_ints(obj["colors"]) if "colors" in obj else None
    n = int(obj["n"])
    if colors is not None and len(colors) != 1 << n:
        raise DescriptorError(f"colour table has {len(colors)} entries, expected 2^{n}")
    try:
        spec = InnerHashSpec(n, int(obj["t"]), int(obj["bit_length"]), obj["kind"], colors)
    except ValueError as e:
        raise DescriptorError(str(e)) from None
    bad = spot_check(spec)
    if bad >= 0:
        raise DescriptorError(f"colour table fails confusable-distinctness at word {bad}")
    return spec


def _load_sampled(obj) -> SampledPrimeSet:
    r = PrimeRange(int(obj["range"][0]), int(obj["range"][1]))
    primes = _parse_ints(obj["list"])
    for p in primes:
        if not is_prime(p):
            raise DescriptorError(f"listed prime {p} is composite")
        if not r.lo <= p <= r.hi:
            raise DescriptorError(f"listed prime {p} lies outside [{r.lo}, {r.hi}]")
    if len(primes) != int(obj["count"]):
        raise DescriptorError("prime list length disagrees with its recorded count")
    P = SampledPrimeSet(r, primes, int(obj["seed"]))
    if sample_prime_multiset(r, len(primes), P.seed) != P:
        raise DescriptorError("prime list does not re-derive from (range, count, seed)")
    return P


def from_dict(obj: dict):
    if obj.get("format_version") != FORMAT_VERSION:
        raise DescriptorError(f"unsupported format version {obj.get('format_version')!r}")
    try:
        return _from_dict(obj)
    except (KeyError, TypeError) as e:
        raise DescriptorError(f"malformed descriptor: missing or bad field {e}") from None


def _from_dict(obj: dict):
    scheme = obj["scheme"]
    if scheme == "vt":
        return VTCode(int(obj["n"]))
    if scheme == "systematic":
        return SystematicCode(from_dict(obj["inner_scheme"]))
    params = _load_params(obj["params"])
    if scheme == "existential":
        return ExistentialCode(params, int(obj["s"]), int(obj["size"]), int(obj["seed"]),
                               tuple(_parse_ints(b) for b in obj["codebooks"]), _parse_ints(obj["survivors"]))
    inner = _load_inner(obj["inner"])
    M = int(obj["M"])
    nominal = obj["nominal"]
    if scheme == "explicit":
        lo, hi = (int(x) for x in obj["primes"]["range"])
        if PrimeRange(lo, hi) != PrimeRange.half(M):
            raise DescriptorError("prime range does not match [M/2, M]")
        if len(primes_in_range(PrimeRange(lo, hi))) != int(obj["primes"]["count"]):
            raise DescriptorError("prime count does not match the sieve")
        return ExplicitCode(params, inner, M, float(nominal["M"]))
    if scheme == "randomized":
        return RandomizedCode(params, inner, M, _load_sampled(obj["primes"]),
                              float(nominal["M0"]), float(nominal["M"]))
    if scheme == "randomized-adversarial":
        return AdversarialCode(params, inner, M, _load_sampled(obj["primes"]), float(nominal["M0"]))
    if scheme == "list-wrapped":
        lc = obj["list_code"]
        listcode = BruteForceListCode(int(lc["n"]), int(lc["t"]), int(lc["L"]), int(lc["length"]),
                                      _parse_ints(lc["codewords"]))
        return ListWrappedCode(params, listcode, inner, M, float(nominal["M"]))
    raise DescriptorError(f"unknown scheme {scheme!r}")


def loads(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise DescriptorError(f"not JSON: {e}") from None
    return from_dict(obj)


def load_descriptor(path):
    return loads(Path(path).read_text())
