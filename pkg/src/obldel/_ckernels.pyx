# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_pykernels``; same signatures, same outputs."""

from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memset

ctypedef unsigned long long u64


cdef class _Buf:
    cdef u64* data
    cdef Py_ssize_t size
    cdef Py_ssize_t cap

    def __cinit__(self, Py_ssize_t cap):
        self.data = <u64*> malloc(max(cap, 1) * sizeof(u64))
        if self.data == NULL:
            raise MemoryError()
        self.size = 0
        self.cap = cap

    def __dealloc__(self):
        free(self.data)


cdef Py_ssize_t _binom_sum(int n, int t):
    cdef Py_ssize_t total = 0, c = 1
    cdef int i
    for i in range(t + 1):
        total += c
        c = c * (n - i) // (i + 1)
    return total


cdef Py_ssize_t _binom(int n, int k):
    cdef Py_ssize_t c = 1
    cdef int i
    if k < 0 or k > n:
        return 0
    if k > n - k:
        k = n - k
    for i in range(k):
        c = c * (n - i) // (i + 1)
    return c


cdef void _super_rec(u64 z, int k, int n, int pos, int j, u64 val,
                     u64* out, Py_ssize_t* cnt) noexcept nogil:
    cdef int b, nj
    if pos == n:
        out[cnt[0]] = val
        cnt[0] += 1
        return
    for b in range(2):
        nj = j
        if j < k and <int>((z >> (k - 1 - j)) & 1) == b:
            nj = j + 1
        if n - pos - 1 >= k - nj:
            _super_rec(z, k, n, pos + 1, nj, (val << 1) | b, out, cnt)


cdef Py_ssize_t _supers(u64 z, int k, int n, u64* out) noexcept nogil:
    cdef Py_ssize_t cnt = 0
    _super_rec(z, k, n, 0, 0, 0, out, &cnt)
    return cnt


cdef void _sub_rec(int* nx0, int* nx1, int n, int k, int i, int depth, u64 val,
                   u64* out, Py_ssize_t* cnt) noexcept nogil:
    cdef int j, need
    if depth == k:
        out[cnt[0]] = val
        cnt[0] += 1
        return
    need = k - depth - 1
    j = nx0[i]
    if j < n and n - j - 1 >= need:
        _sub_rec(nx0, nx1, n, k, j + 1, depth + 1, val << 1, out, cnt)
    j = nx1[i]
    if j < n and n - j - 1 >= need:
        _sub_rec(nx0, nx1, n, k, j + 1, depth + 1, (val << 1) | 1, out, cnt)


cdef Py_ssize_t _subs(u64 x, int n, int k, int* nx0, int* nx1, u64* out) noexcept nogil:
    cdef int i
    cdef Py_ssize_t cnt = 0
    nx0[n] = n
    nx1[n] = n
    for i in range(n - 1, -1, -1):
        nx0[i] = nx0[i + 1]
        nx1[i] = nx1[i + 1]
        if (x >> (n - 1 - i)) & 1:
            nx1[i] = i
        else:
            nx0[i] = i
    _sub_rec(nx0, nx1, n, k, 0, 0, 0, out, &cnt)
    return cnt


def supersequences(u64 z, int k, int n):
    cdef _Buf buf = _Buf(_binom_sum(n, n - k))
    buf.size = _supers(z, k, n, buf.data)
    return [buf.data[i] for i in range(buf.size)]


def subsequences(u64 x, int n, int k):
    cdef _Buf buf = _Buf(_binom(n, k))
    cdef int nx0[66]
    cdef int nx1[66]
    buf.size = _subs(x, n, k, nx0, nx1, buf.data)
    return [buf.data[i] for i in range(buf.size)]


def confusable(u64 x, int n, int t):
    cdef int k = n - t
    cdef _Buf subs = _Buf(_binom(n, k))
    cdef _Buf sup = _Buf(_binom_sum(n, t))
    cdef int nx0[66]
    cdef int nx1[66]
    cdef Py_ssize_t a, b, ns, m
    cdef set found = set()
    ns = _subs(x, n, k, nx0, nx1, subs.data)
    for a in range(ns):
        m = _supers(subs.data[a], k, n, sup.data)
        for b in range(m):
            found.add(sup.data[b])
    return sorted(found)


def greedy_coloring(int n, int t):
    cdef Py_ssize_t N = (<Py_ssize_t> 1) << n
    cdef int k = n - t
    cdef _Buf subs = _Buf(_binom(n, k))
    cdef _Buf sup = _Buf(_binom_sum(n, t))
    cdef unsigned int* colors = <unsigned int*> calloc(N, sizeof(unsigned int))
    cdef unsigned int* used = <unsigned int*> calloc(N + 1, sizeof(unsigned int))
    cdef int nx0[66]
    cdef int nx1[66]
    cdef Py_ssize_t x, a, b, ns, m
    cdef u64 y
    cdef unsigned int c, stamp
    if colors == NULL or used == NULL:
        free(colors)
        free(used)
        raise MemoryError()
    try:
        with nogil:
            for x in range(N):
                stamp = <unsigned int> (x + 1)
                ns = _subs(<u64> x, n, k, nx0, nx1, subs.data)
                for a in range(ns):
                    m = _supers(subs.data[a], k, n, sup.data)
                    for b in range(m):
                        y = sup.data[b]
                        if y < <u64> x:
                            used[colors[y]] = stamp
                c = 0
                while used[c] == stamp:
                    c += 1
                colors[x] = c
        return [colors[x] for x in range(N)]
    finally:
        free(colors)
        free(used)


def coloring_violation(colors, int n, int t):
    cdef Py_ssize_t N = (<Py_ssize_t> 1) << n
    cdef int k = n - t
    cdef _Buf subs = _Buf(_binom(n, k))
    cdef _Buf sup = _Buf(_binom_sum(n, t))
    cdef unsigned int* col = <unsigned int*> malloc(max(N, 1) * sizeof(unsigned int))
    cdef int nx0[66]
    cdef int nx1[66]
    cdef Py_ssize_t x, a, b, ns, m, bad = -1
    cdef u64 y
    if col == NULL:
        raise MemoryError()
    try:
        for x in range(N):
            col[x] = colors[x]
        with nogil:
            for x in range(N):
                ns = _subs(<u64> x, n, k, nx0, nx1, subs.data)
                for a in range(ns):
                    m = _supers(subs.data[a], k, n, sup.data)
                    for b in range(m):
                        y = sup.data[b]
                        if y != <u64> x and col[y] == col[x]:
                            bad = x
                            break
                    if bad >= 0:
                        break
                if bad >= 0:
                    break
        return bad
    finally:
        free(col)


def match_counts(hashes, u64 target, primes):
    cdef Py_ssize_t nh = len(hashes), npr = len(primes), i, j
    cdef _Buf hs = _Buf(nh)
    cdef _Buf ps = _Buf(npr)
    cdef _Buf out = _Buf(npr)
    cdef u64 p, g, cnt
    for i in range(nh):
        hs.data[i] = hashes[i]
    for j in range(npr):
        ps.data[j] = primes[j]
    with nogil:
        for j in range(npr):
            p = ps.data[j]
            g = target % p
            cnt = 0
            for i in range(nh):
                if hs.data[i] % p == g:
                    cnt += 1
            out.data[j] = cnt
    return [out.data[j] for j in range(npr)]


def list_codebook(int n, int t, int L, Py_ssize_t need):
    cdef int k = n - t
    cdef Py_ssize_t N = (<Py_ssize_t> 1) << n
    cdef _Buf subs = _Buf(_binom(n, k))
    cdef unsigned char* load = <unsigned char*> calloc((<Py_ssize_t> 1) << k, 1)
    cdef int nx0[66]
    cdef int nx1[66]
    cdef Py_ssize_t x, a, ns
    cdef bint ok
    cdef list book = []
    if load == NULL:
        raise MemoryError()
    try:
        for x in range(N):
            ns = _subs(<u64> x, n, k, nx0, nx1, subs.data)
            ok = True
            for a in range(ns):
                if load[subs.data[a]] >= L:
                    ok = False
                    break
            if ok:
                for a in range(ns):
                    load[subs.data[a]] += 1
                book.append(x)
                if len(book) == need:
                    break
        return book
    finally:
        free(load)
