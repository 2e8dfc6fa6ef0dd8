# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot loops (see _pykernels for the reference).

Bitmasks are 64-bit, so these handle up to 64 propagators / vertices;
``kernels`` routes anything larger to the Python version.
"""

from libc.stdint cimport uint64_t, int64_t

ctypedef uint64_t mask_t

cdef enum:
    MAXW = 64


def necklace_walk(int n, int k, vertex_orders, int start):
    cdef int out[MAXW]
    cdef int left = k, j = start, step, p, i
    for i in range(k):
        out[i] = 0
    for step in range(n):
        if left == 0:
            break
        for p in vertex_orders[j - 1]:
            if out[p] == 0:
                out[p] = j
                left -= 1
                break
        j = j + 1 if j < n else 1
    if left:
        raise ValueError(f"walk from {start} left {left} propagator(s) unassigned")
    return [out[i] for i in range(k)]


cdef inline int _lowbit(mask_t m) nogil:
    cdef int b = 0
    while not (m & 1):
        m >>= 1
        b += 1
    return b


cdef bint _augment(int v, mask_t *adj, int *match_p, mask_t *seen) nogil:
    cdef mask_t m = adj[v] & ~seen[0]
    cdef mask_t low
    cdef int p
    while m:
        low = m & (~m + 1)
        p = _lowbit(low)
        m ^= low
        seen[0] |= low
        if match_p[p] < 0 or _augment(match_p[p], adj, match_p, seen):
            match_p[p] = v
            return True
    return False


cdef bint _independent(mask_t *adj, mask_t jmask, int k) nogil:
    cdef int match_p[MAXW]
    cdef int i, v = 0
    cdef mask_t seen
    for i in range(k):
        match_p[i] = -1
    while jmask:
        if jmask & 1:
            seen = 0
            if not _augment(v, adj, match_p, &seen):
                return False
        jmask >>= 1
        v += 1
    return True


cdef void _load(vertex_adj, mask_t *adj, int *count):
    cdef int i = 0
    for a in vertex_adj:
        adj[i] = <mask_t>a
        i += 1
    count[0] = i


def independent(vertex_adj, jmask, int k):
    cdef mask_t adj[MAXW]
    cdef int nv
    _load(vertex_adj, adj, &nv)
    return bool(_independent(adj, <mask_t>jmask, k))


def bases_masks(vertex_adj, int n, int k):
    cdef mask_t adj[MAXW]
    cdef int nv
    cdef mask_t x, c, r, top
    if k == 0:
        return [0]
    if k > n:
        return []
    _load(vertex_adj, adj, &nv)
    out = []
    x = (<mask_t>1 << k) - 1
    top = (<mask_t>1 << n) if n < 64 else 0
    while True:
        if n < 64 and x >= top:
            break
        if _independent(adj, x, k):
            out.append(x)
        c = x & (~x + 1)
        r = x + c
        if r == 0:
            break
        x = (((r ^ x) >> 2) // c) | r
    return out


cdef void _rec(int r, int m, mask_t *allowed, mask_t used, int *perm, list out):
    cdef mask_t free, low
    cdef int i
    if r == m:
        out.append(tuple([perm[i] for i in range(m)]))
        return
    free = allowed[r] & ~used
    while free:
        low = free & (~free + 1)
        perm[r] = _lowbit(low)
        _rec(r + 1, m, allowed, used | low, perm, out)
        free ^= low


def perfect_matchings(allowed):
    cdef mask_t al[MAXW]
    cdef int perm[MAXW]
    cdef int m
    _load(allowed, al, &m)
    out = []
    _rec(0, m, al, 0, perm, out)
    return out
