"""Pure-Python enumeration kernels.

Words are passed as integers, most significant bit first, together with
their length, so integer order is lexicographic order.  ``_ckernels`` is
a compiled twin with the same signatures and results.
"""

from __future__ import annotations

import sys

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))


def supersequences(z: int, k: int, n: int) -> list[int]:
    """All length-n words containing the length-k word ``z``, ascending.

    Depth-first over output prefixes while tracking the greedy match of
    ``z``; every word is produced exactly once, so no dedupe is needed.
    """
    zbits = [(z >> (k - 1 - j)) & 1 for j in range(k)]
    out: list[int] = []

    def rec(pos: int, j: int, val: int) -> None:
        if pos == n:
            out.append(val)
            return
        rest = n - pos - 1
        for b in (0, 1):
            nj = j + 1 if j < k and zbits[j] == b else j
            if rest >= k - nj:
                rec(pos + 1, nj, (val << 1) | b)

    rec(0, 0, 0)
    return out


def _next_table(x: int, n: int) -> tuple[list[int], list[int]]:
    nx0 = [n] * (n + 1)
    nx1 = [n] * (n + 1)
    for i in range(n - 1, -1, -1):
        nx0[i], nx1[i] = nx0[i + 1], nx1[i + 1]
        if (x >> (n - 1 - i)) & 1:
            nx1[i] = i
        else:
            nx0[i] = i
    return nx0, nx1


def subsequences(x: int, n: int, k: int) -> list[int]:
    """Distinct length-k subsequences of the length-n word ``x``, ascending."""
    nx0, nx1 = _next_table(x, n)
    out: list[int] = []

    def rec(i: int, depth: int, val: int) -> None:
        if depth == k:
            out.append(val)
            return
        need = k - depth - 1
        j = nx0[i]
        if j < n and n - j - 1 >= need:
            rec(j + 1, depth + 1, val << 1)
        j = nx1[i]
        if j < n and n - j - 1 >= need:
            rec(j + 1, depth + 1, (val << 1) | 1)

    rec(0, 0, 0)
    return out


def confusable(x: int, n: int, t: int) -> list[int]:
    """Words of length n sharing a length n-t subsequence with ``x`` (x included)."""
    k = n - t
    found: set[int] = set()
    for z in subsequences(x, n, k):
        found.update(supersequences(z, k, n))
    return sorted(found)


def greedy_coloring(n: int, t: int) -> list[int]:
    """Colour {0,1}^n in lexicographic order, smallest colour unused by earlier neighbours."""
    colors = [0] * (1 << n)
    for x in range(1 << n):
        used = {colors[y] for y in confusable(x, n, t) if y < x}
        c = 0
        while c in used:
            c += 1
        colors[x] = c
    return colors


def coloring_violation(colors, n: int, t: int) -> int:
    """First word sharing its colour with a distinct confusable word, or -1."""
    for x in range(1 << n):
        cx = colors[x]
        for y in confusable(x, n, t):
            if y != x and colors[y] == cx:
                return x
    return -1


def match_counts(hashes, target: int, primes) -> list[int]:
    """For each prime p, how many entries of ``hashes`` agree with ``target`` mod p."""
    out = []
    for p in primes:
        g = target % p
        out.append(sum(1 for h in hashes if h % p == g))
    return out


def list_codebook(n: int, t: int, L: int, need: int) -> list[int]:
    """Greedy lexicographic codebook in which no length n-t word has more than L supersequences."""
    k = n - t
    load: dict[int, int] = {}
    book: list[int] = []
    for x in range(1 << n):
        subs = subsequences(x, n, k)
        if all(load.get(z, 0) < L for z in subs):
            for z in subs:
                load[z] = load.get(z, 0) + 1
            book.append(x)
            if len(book) == need:
                break
    return book
