"""The compiled kernels and the pure-Python kernels must agree exactly."""

import random

import pytest

from obldel import _pykernels, kernels

c = pytest.importorskip("obldel._ckernels")


def test_backend_selected():
    assert kernels.backend() == "cython"
    kernels.use_backend("python")
    try:
        assert kernels.backend() == "python"
        assert kernels.supersequences(5, 3, 5) == _pykernels.supersequences(5, 3, 5)
    finally:
        kernels.use_backend("cython")
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


def test_enumeration_kernels_agree():
    for n in range(0, 9):
        for x in range(1 << n):
            for k in range(n + 1):
                assert c.supersequences(x % (1 << k) if k else 0, k, n) == _pykernels.supersequences(
                    x % (1 << k) if k else 0, k, n)
                assert c.subsequences(x, n, k) == _pykernels.subsequences(x, n, k)
            for t in range(0, (n + 1) // 2):
                assert c.confusable(x, n, t) == _pykernels.confusable(x, n, t)


def test_coloring_kernels_agree():
    for n, t in [(6, 1), (7, 2), (9, 2), (10, 1)]:
        colors = c.greedy_coloring(n, t)
        assert colors == _pykernels.greedy_coloring(n, t)
        assert c.coloring_violation(colors, n, t) == _pykernels.coloring_violation(colors, n, t) == -1
        broken = list(colors)
        broken[1] = broken[0]
        assert c.coloring_violation(broken, n, t) == _pykernels.coloring_violation(broken, n, t) >= 0


def test_match_counts_agree():
    rng = random.Random(3)
    for _ in range(50):
        hashes = [rng.randrange(1 << 40) for _ in range(rng.randrange(1, 80))]
        primes = [rng.choice([1009, 1013, 2003, 65537, 1000003]) for _ in range(20)]
        target = rng.choice(hashes)
        assert c.match_counts(hashes, target, primes) == _pykernels.match_counts(hashes, target, primes)


def test_list_codebook_agree():
    for n, t, L in [(6, 1, 2), (8, 2, 4), (9, 1, 3)]:
        assert c.list_codebook(n, t, L, 1 << 5) == _pykernels.list_codebook(n, t, L, 1 << 5)


def test_wide_words_use_python_path():
    z = (1 << 62) | 1
    out = kernels.supersequences(z, 63, 64)
    assert len(out) == 1 + 64
    assert out == _pykernels.supersequences(z, 63, 64)
