"""Command-line harness: build, encode, corrupt, decode, verify, analyze, report.

Exit status: 0 success, 1 contract violation, 2 usage error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import analysis, inner_hash, persist
from .adversarial import VTCode, adversarial_build
from .bitseq import BitString, BudgetExceeded, CodeParams, pack_bits, unpack_bits
from .channels import ChannelInstance, corrupt
from .hashtag import HashTag
from .inner_hash import DecodeError
from .oblivious import (ExplicitCode, RandomizedCode, SystematicCode, build_list_code, existential_build,
                        explicit_build, list_wrap_build, randomized_build)
from .primes import ConstructionError, PrimeRange, sample_prime_multiset
from .rng import stream

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
BOTTOM = "-"
DE_BASES = ("explicit", "randomized", "randomized-adversarial", "vt")
SCHEMES = DE_BASES + ("list-wrapped", "existential") + tuple(f"systematic-{s}" for s in DE_BASES)


class UsageError(Exception):
    pass


# -- building -------------------------------------------------------------------

def build_descriptor(args):
    n, t, eps, seed = args.n, args.t, Fraction(args.eps), args.seed
    scheme = args.scheme
    if scheme.startswith("systematic-"):
        args.scheme = scheme[len("systematic-"):]
        return SystematicCode(build_descriptor(args))
    if scheme == "vt":
        return VTCode(n)
    params = CodeParams(n, t, eps)
    if scheme == "existential":
        return existential_build(params, args.s, args.size, seed)
    if scheme == "list-wrapped":
        lc = build_list_code(n, t, args.L)
        inner = inner_hash.build(args.inner, lc.length, t) if args.inner else None
        d = list_wrap_build(lc, params, inner)
        if args.modulus:
            d = type(d)(d.params, d.listcode, d.inner, args.modulus, d.nominal_M)
        return d
    inner = inner_hash.build(args.inner or "greedy-coloring", n, t)
    if scheme == "explicit":
        d = explicit_build(params, inner)
        return ExplicitCode(params, inner, args.modulus, d.nominal_M) if args.modulus else d
    if scheme == "randomized":
        if args.modulus:
            d = randomized_build(params, inner, seed, verify=False)
            P = sample_prime_multiset(PrimeRange.half(args.modulus), len(d.primes), seed)
            return RandomizedCode(params, inner, args.modulus, P, d.nominal_M0, d.nominal_M)
        return randomized_build(params, inner, seed, verify=not args.no_verify)
    if scheme == "randomized-adversarial":
        return adversarial_build(params, inner, seed, verify=not args.no_verify)
    raise UsageError(f"unknown scheme {scheme!r}")


# -- word I/O ---------------------------------------------------------------------

def _read_records(path: str | None, binary: bool) -> list[list[str]]:
    if binary:
        data = Path(path).read_bytes() if path else sys.stdin.buffer.read()
        recs, i = [], 0
        while i < len(data):
            nfields = data[i]
            i += 1
            fields = []
            for _ in range(nfields):
                width = int.from_bytes(data[i : i + 2], "big")
                size = 2 + (width + 7) // 8
                fields.append(unpack_bits(data[i : i + size]).bits)
                i += size
            recs.append(fields)
        return recs
    text = Path(path).read_text() if path else sys.stdin.read()
    return [line.split() for line in text.splitlines() if line.strip()]


def _write_records(recs: list[list[str]], path: str | None, binary: bool) -> None:
    if binary:
        out = b"".join(bytes([len(r)]) + b"".join(pack_bits(f) for f in r) for r in recs)
        if path:
            Path(path).write_bytes(out)
        else:
            sys.stdout.buffer.write(out)
        return
    text = "".join(" ".join(r) + "\n" for r in recs)
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _is_de(d) -> bool:
    return d.scheme in DE_BASES


def _tag_indexed(d) -> bool:
    return d.scheme in ("randomized", "randomized-adversarial")


def _message(d, field: str):
    return int(field) if d.scheme == "existential" else BitString(field)


def cmd_encode(args) -> int:
    d = persist.load_descriptor(args.descriptor)
    out = []
    for i, rec in enumerate(_read_records(args.input, args.binary)):
        m = _message(d, rec[0])
        coins = args.randomness if args.randomness is not None else stream(args.seed, "encoding", i)
        if _is_de(d):
            tag = d.encode_hash(m, coins)
            out.append([str(m), tag.to_bits(*d.tag_widths).bits])
        else:
            out.append([d.encode(m, coins).bits])
    _write_records(out, args.out, args.binary)
    return EXIT_OK


def cmd_corrupt(args) -> int:
    if not args.channel:
        raise UsageError("corrupt needs --channel model:params:seed")
    ch = ChannelInstance.parse(args.channel)
    out = []
    for i, rec in enumerate(_read_records(args.input, args.binary)):
        out.append([corrupt(ch, rec[0], i).bits, *rec[1:]])
    _write_records(out, args.out, args.binary)
    return EXIT_OK


def cmd_decode(args) -> int:
    d = persist.load_descriptor(args.descriptor)
    out = []
    for rec in _read_records(args.input, args.binary):
        try:
            if _is_de(d):
                if len(rec) < 2:
                    raise UsageError("document-exchange decode needs 'word tag' records")
                tag = HashTag.from_bits(rec[1], *d.tag_widths, indexed=_tag_indexed(d))
                res = d.decode(rec[0], tag)
            else:
                res = d.decode(rec[0])
        except (DecodeError, IndexError):
            res = None
        out.append([BOTTOM if res is None else str(res)])
    _write_records(out, args.out, args.binary)
    return EXIT_OK


# -- verification and analysis -----------------------------------------------------

def parse_grid(spec: str | None, d) -> analysis.GridSpec:
    """Comma-separated tokens: ``all``, ``empty``, ``full`` (every pattern), ``decode``, ``m=LO-HI``."""
    messages, reduced, method = None, True, "count"
    for tok in (spec or "all").split(","):
        tok = tok.strip()
        if tok in ("", "all"):
            continue
        if tok == "empty":
            messages = ()
        elif tok == "full":
            reduced = False
        elif tok == "decode":
            method = "decode"
        elif tok.startswith("m="):
            lo, _, hi = tok[2:].partition("-")
            space = analysis.message_space(d)
            messages = tuple(space[int(lo) : int(hi or lo) + 1])
        else:
            raise UsageError(f"unknown grid token {tok!r}")
    return analysis.GridSpec(messages, None, reduced, method)


def _channel_model(spec: str | None) -> analysis.ChannelModel:
    kind, _, p = (spec or "oblivious-exhaustive").partition(":")
    if kind not in analysis.CHANNELS:
        raise UsageError(f"verify channel must be one of {', '.join(analysis.CHANNELS)}")
    return analysis.ChannelModel(kind, Fraction(p or 0))


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args) -> int:
    d = persist.load_descriptor(args.descriptor)
    rep = analysis.worst_case_report(d, _channel_model(args.channel), parse_grid(args.grid, d))
    _emit(rep.to_csv(), args.out)
    bad = rep.violations()
    if bad:
        v = bad[0]
        print(f"contract violated at m={v.m} tau={v.tau}: {v.fail} > {rep.bound}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_analyze(args) -> int:
    n, t, what = args.n, args.t, args.what
    if what == "census":
        rows = []
        for ell in range(1, args.ell + 1):
            c = analysis.bad_string_census(n, ell, t)
            rows.append((str(n), str(ell), str(t), str(c.count), str(c.bound), str(int(c.holds))))
        text = analysis.rows_to_csv(("n", "ell", "t", "count", "bound", "holds"), rows)
        ok = all(r[-1] == "1" for r in rows)
    elif what == "close-patterns":
        rows = []
        for tau in analysis.iter_patterns(n, t):
            for ell in range(args.ell + 1):
                c = analysis.close_patterns_count(tau, ell)
                rows.append((str(tau), str(ell), str(c.count), str(c.bound), str(int(c.holds))))
        text = analysis.rows_to_csv(("tau", "ell", "count", "bound", "holds"), rows)
        ok = all(r[-1] == "1" for r in rows)
    elif what == "lower-bound":
        v = analysis.lower_bound_value(n, t, Fraction(args.eps))
        text = analysis.rows_to_csv(("n", "t", "eps", "value", "unevaluated"),
                                    [(str(n), str(t), args.eps, f"{v:.6f}", "-O(t log log n)")])
        ok = True
    elif what == "reduction":
        args.scheme = args.scheme or "systematic-explicit"
        code = build_descriptor(args)
        res = analysis.average_case_distribution(code, range(args.seed, args.seed + args.seeds))
        text = analysis.rows_to_csv(("seed", "error", "bound", "within_bound", "codewords_only"),
                                    analysis.average_case_rows(res))
        ok = all(r.codewords_only for r in res)
    elif what == "gap":
        w = analysis.gap_witness(n, t, Fraction(args.eps), args.seed)
        text = analysis.rows_to_csv(("n", "t", "eps", "explicit_worst", "explicit_m", "explicit_tau",
                                     "adversarial_worst"),
                                    [(str(n), str(t), args.eps, analysis._frac(w.explicit_worst), *w.explicit_at,
                                      analysis._frac(w.adversarial_worst))])
        ok = w.explicit_worst > 0 and w.adversarial_worst == 0
    else:
        raise UsageError(f"unknown analysis {what!r}")
    _emit(text, args.out)
    return EXIT_OK if ok else EXIT_VIOLATION


def _grid_points(spec: str | None) -> list[tuple[int, int, Fraction]]:
    """``n=8,10;t=1,2;eps=1/2,1/4`` as a cartesian product."""
    axes = {"n": ["8", "10", "12"], "t": ["1", "2"], "eps": ["1/2", "1/4"]}
    for part in (spec or "").split(";"):
        if not part.strip():
            continue
        key, _, vals = part.partition("=")
        if key.strip() not in axes:
            raise UsageError(f"report grid axis must be n, t or eps, got {key!r}")
        axes[key.strip()] = [v for v in vals.split(",") if v]
    return [(int(n), int(t), Fraction(e)) for n in axes["n"] for t in axes["t"] for e in axes["eps"]]


def cmd_report(args) -> int:
    schemes = [s for s in (args.schemes or "vt,explicit,randomized,randomized-adversarial").split(",") if s]
    for s in schemes:
        if s not in analysis.FORMULAS:
            raise UsageError(f"report has no formula for scheme {s!r}")
    _emit(analysis.redundancy_table(schemes, _grid_points(args.grid), args.seed), args.out)
    return EXIT_OK


def cmd_build(args) -> int:
    d = build_descriptor(args)
    text = persist.dumps(d)
    _emit(text, args.out)
    return EXIT_OK


# -- argument parsing ------------------------------------------------------------

def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="obldel", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, io=True):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out")
        if io:
            p.add_argument("--input")
            p.add_argument("--binary", action="store_true", help="16-bit length-header records")

    def code_flags(p):
        p.add_argument("--scheme", choices=SCHEMES)
        p.add_argument("--n", type=int, default=8)
        p.add_argument("--t", type=int, default=1)
        p.add_argument("--eps", default="1/4")
        p.add_argument("--inner", choices=inner_hash.KINDS)
        p.add_argument("--L", type=int, default=4, help="list size for list-wrapped")
        p.add_argument("--s", type=int, help="codebook multiset size for existential")
        p.add_argument("--size", type=int, help="number of messages |C| for existential")
        p.add_argument("--modulus", type=int, help="force M, bypassing the prime guard")
        p.add_argument("--no-verify", action="store_true")

    p = sub.add_parser("build", help="build a code and write its descriptor")
    code_flags(p)
    common(p, io=False)
    p.set_defaults(func=cmd_build, need_scheme=True)

    for name, func, help_ in (("encode", cmd_encode, "encode messages read one per line"),
                              ("decode", cmd_decode, "decode received words; '-' marks failure")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--descriptor", required=True)
        p.add_argument("--randomness", type=int, help="fixed encoder outcome index")
        common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("corrupt", help="pass words through a channel")
    p.add_argument("--channel")
    common(p)
    p.set_defaults(func=cmd_corrupt)

    p = sub.add_parser("verify", help="exact failure report over a grid")
    p.add_argument("--descriptor", required=True)
    p.add_argument("--channel", help="oblivious-exhaustive | adversarial-worst-case | uniform-random-t | iid-deletion:p")
    p.add_argument("--grid")
    common(p, io=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("analyze", help="bound checks and diagnostics")
    p.add_argument("what", choices=("census", "close-patterns", "lower-bound", "reduction", "gap"))
    code_flags(p)
    p.add_argument("--ell", type=int, default=2)
    p.add_argument("--seeds", type=int, default=100)
    common(p, io=False)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("report", help="redundancy table as CSV")
    p.add_argument("--schemes")
    p.add_argument("--grid", help="n=8,10;t=1,2;eps=1/2,1/4")
    common(p, io=False)
    p.set_defaults(func=cmd_report)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if getattr(args, "need_scheme", False) and not args.scheme:
        print("obldel: --scheme is required", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except BudgetExceeded as e:
        print(f"obldel: budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except ConstructionError as e:
        print(f"obldel: construction failed: {e}", file=sys.stderr)
        return EXIT_VIOLATION
    except (UsageError, ValueError, persist.DescriptorError, OSError) as e:
        print(f"obldel: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
