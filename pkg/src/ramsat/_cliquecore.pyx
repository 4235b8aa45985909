# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled clique branch-and-bound kernel on packed 64-bit adjacency words.

Same algorithm and tie-breaking as the pure-Python fallback: greedy
sequential coloring bound, reverse color order expansion, lowest index first.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

ctypedef unsigned long long u64

BACKEND = "cython"


cdef struct Ctx:
    int n
    int W
    int target
    int best_size
    u64 *adj        # n * W
    int *best_cl
    int *R
    int r_len
    u64 *pstack     # (n + 1) * W candidate sets
    u64 *cbuf       # 2 * W coloring scratch
    int *order      # n * n
    int *bounds     # n * n


cdef bint expand(Ctx *c, int depth) nogil:
    cdef u64 *P = c.pstack + depth * c.W
    cdef u64 *newP = c.pstack + (depth + 1) * c.W
    cdef u64 *uncolored = c.cbuf
    cdef u64 *avail = c.cbuf + c.W
    cdef int *order = c.order + depth * c.n
    cdef int *bounds = c.bounds + depth * c.n
    cdef int W = c.W
    cdef int m = 0
    cdef int color = 0
    cdef int i, w, v, rsize
    cdef u64 bits
    cdef bint any_left

    memcpy(uncolored, P, W * sizeof(u64))
    while True:
        any_left = False
        for w in range(W):
            if uncolored[w]:
                any_left = True
                break
        if not any_left:
            break
        color += 1
        memcpy(avail, uncolored, W * sizeof(u64))
        w = 0
        while w < W:
            bits = avail[w]
            if bits == 0:
                w += 1
                continue
            v = w * 64 + __builtin_ctzll(bits)
            order[m] = v
            bounds[m] = color
            m += 1
            for i in range(W):
                avail[i] &= ~(c.adj[v * W + i])
            avail[w] &= ~((<u64>1) << (v & 63))
            uncolored[v >> 6] &= ~((<u64>1) << (v & 63))
            # restart scan from the word we cleared; lower words unchanged
        # (avail only ever loses bits, so the inner while advances)

    rsize = c.r_len
    for i in range(m - 1, -1, -1):
        if rsize + bounds[i] <= c.best_size:
            return False
        v = order[i]
        for w in range(W):
            newP[w] = P[w] & c.adj[v * W + w]
        c.R[c.r_len] = v
        c.r_len += 1
        any_left = False
        for w in range(W):
            if newP[w]:
                any_left = True
                break
        if any_left:
            if expand(c, depth + 1):
                return True
        elif c.r_len > c.best_size:
            c.best_size = c.r_len
            memcpy(c.best_cl, c.R, c.r_len * sizeof(int))
            if c.target and c.best_size >= c.target:
                c.r_len -= 1
                return True
        c.r_len -= 1
        P[v >> 6] &= ~((<u64>1) << (v & 63))
    return False


def solve(u64[:, ::1] adj, int n, u64[::1] subset, int target):
    """Maximum clique within `subset`; decision mode when target > 0.

    Returns (size, list of clique vertices); in decision mode size is 0 and
    the list empty when no clique of the target size exists.
    """
    cdef int W = adj.shape[1]
    cdef Ctx c
    cdef int i, w
    cdef bint nonempty = False
    c.n = n
    c.W = W
    c.target = target
    c.best_size = target - 1 if target else 0
    c.r_len = 0
    c.adj = <u64 *>malloc(n * W * sizeof(u64))
    c.best_cl = <int *>malloc((n + 1) * sizeof(int))
    c.R = <int *>malloc((n + 1) * sizeof(int))
    c.pstack = <u64 *>malloc((n + 2) * W * sizeof(u64))
    c.cbuf = <u64 *>malloc(2 * W * sizeof(u64))
    c.order = <int *>malloc(n * n * sizeof(int))
    c.bounds = <int *>malloc(n * n * sizeof(int))
    if (c.adj == NULL or c.best_cl == NULL or c.R == NULL or c.pstack == NULL
            or c.cbuf == NULL or c.order == NULL or c.bounds == NULL):
        _free_ctx(&c)
        raise MemoryError()
    try:
        for i in range(n):
            for w in range(W):
                c.adj[i * W + w] = adj[i, w]
        for w in range(W):
            c.pstack[w] = subset[w]
            if subset[w]:
                nonempty = True
        found = False
        if nonempty:
            found = expand(&c, 0)
        if target:
            if found:
                return c.best_size, [c.best_cl[i] for i in range(c.best_size)]
            return 0, []
        return c.best_size, [c.best_cl[i] for i in range(c.best_size)]
    finally:
        _free_ctx(&c)


cdef void _free_ctx(Ctx *c) nogil:
    if c.adj != NULL:
        free(c.adj)
    if c.best_cl != NULL:
        free(c.best_cl)
    if c.R != NULL:
        free(c.R)
    if c.pstack != NULL:
        free(c.pstack)
    if c.cbuf != NULL:
        free(c.cbuf)
    if c.order != NULL:
        free(c.order)
    if c.bounds != NULL:
        free(c.bounds)
