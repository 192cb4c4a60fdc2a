"""Backend selection for the enumeration kernels.

The compiled ``_ckernels`` extension is used when it imports; otherwise
the pure-Python ``_pykernels`` twin is used.  Words longer than 62 bits
always go through the Python path since the compiled one packs into
64-bit machine words.
"""

from __future__ import annotations

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # no compiled extension in this install
    _ckernels = None

_MAX_NATIVE_BITS = 62
_backend = "cython" if _ckernels is not None else "python"


def backend() -> str:
    return _backend


def use_backend(name: str) -> None:
    """Force ``"python"`` or ``"cython"`` (the latter only if built)."""
    global _backend
    if name not in ("python", "cython"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "cython" and _ckernels is None:
        raise RuntimeError("compiled kernels are not built")
    _backend = name


def _impl(nbits: int):
    if _backend == "cython" and nbits <= _MAX_NATIVE_BITS:
        return _ckernels
    return _pykernels


def supersequences(z: int, k: int, n: int) -> list[int]:
    return _impl(n).supersequences(z, k, n)


def subsequences(x: int, n: int, k: int) -> list[int]:
    return _impl(n).subsequences(x, n, k)


def confusable(x: int, n: int, t: int) -> list[int]:
    return _impl(n).confusable(x, n, t)


def greedy_coloring(n: int, t: int) -> list[int]:
    return _impl(n).greedy_coloring(n, t)


def coloring_violation(colors, n: int, t: int) -> int:
    return _impl(n).coloring_violation(colors, n, t)


def match_counts(hashes, target: int, primes) -> list[int]:
    nbits = max([target.bit_length(), *(h.bit_length() for h in hashes)], default=0)
    return _impl(nbits).match_counts(hashes, target, primes)


def list_codebook(n: int, t: int, L: int, need: int) -> list[int]:
    if L >= 255:
        return _pykernels.list_codebook(n, t, L, need)
    return _impl(n).list_codebook(n, t, L, need)
