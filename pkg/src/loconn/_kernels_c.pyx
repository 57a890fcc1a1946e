# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contracts and results as ``_kernels_py``."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXN = 64
    MAXC = 10

MAX_TABLE_ORDER = 22
MAX_CANON_ORDER = 10


cdef inline int popc(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int ctz(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef int _load(object adj, int n, uint64_t* out) except -1:
    cdef int i
    for i in range(n):
        out[i] = <uint64_t>adj[i]
    return 0


def cyclable_table(int n, adj):
    if n < 1 or n > MAX_TABLE_ORDER:
        raise ValueError(f"cyclable table supports orders 1..{MAX_TABLE_ORDER}")
    cdef uint64_t a[MAXN]
    _load(adj, n, a)
    cdef uint64_t size = (<uint64_t>1) << n
    cdef uint64_t* reach = <uint64_t*>malloc(size * sizeof(uint64_t))
    if reach == NULL:
        raise MemoryError()
    out = bytearray(size)
    cdef unsigned char[:] table = out
    cdef uint64_t s, low, rest, b, r
    with nogil:
        reach[0] = 0
        for s in range(1, size):
            low = s & (~s + 1)
            if s == low:
                reach[s] = low
                continue
            r = 0
            rest = s ^ low
            while rest:
                b = rest & (~rest + 1)
                rest ^= b
                if reach[s ^ b] & a[ctz(b)]:
                    r |= b
            reach[s] = r
            if (r & a[ctz(low)]) and popc(s) >= 3:
                table[s] = 1
    free(reach)
    return bytes(out)


cdef struct Part:
    int lab[MAXC]
    int start[MAXC + 1]
    int ncells


cdef void _refine(Part* p, uint64_t* adj, int n) nogil:
    cdef Part q
    cdef int s, c, i, j, a, b, pos, key, tmp, split
    cdef uint64_t smask
    cdef int cnt[MAXC]
    cdef int buf[MAXC]
    while True:
        split = 0
        for s in range(p.ncells):
            smask = 0
            for i in range(p.start[s], p.start[s + 1]):
                smask |= (<uint64_t>1) << p.lab[i]
            q.ncells = 0
            pos = 0
            for c in range(p.ncells):
                a = p.start[c]
                b = p.start[c + 1]
                if b - a == 1:
                    q.start[q.ncells] = pos
                    q.ncells += 1
                    q.lab[pos] = p.lab[a]
                    pos += 1
                    continue
                for i in range(a, b):
                    buf[i - a] = p.lab[i]
                    cnt[i - a] = popc(adj[p.lab[i]] & smask)
                # insertion sort of the cell by count
                for i in range(1, b - a):
                    key = cnt[i]
                    tmp = buf[i]
                    j = i - 1
                    while j >= 0 and cnt[j] > key:
                        cnt[j + 1] = cnt[j]
                        buf[j + 1] = buf[j]
                        j -= 1
                    cnt[j + 1] = key
                    buf[j + 1] = tmp
                for i in range(b - a):
                    if i == 0 or cnt[i] != cnt[i - 1]:
                        if i > 0:
                            split = 1
                        q.start[q.ncells] = pos
                        q.ncells += 1
                    q.lab[pos] = buf[i]
                    pos += 1
            if split:
                q.start[q.ncells] = n
                p[0] = q
                break
        if not split:
            return


cdef uint64_t _leaf_code(int n, uint64_t* adj, Part* p) nogil:
    cdef uint64_t code = 0
    cdef int i, j
    cdef uint64_t row
    for j in range(1, n):
        row = adj[p.lab[j]]
        for i in range(j):
            code = (code << 1) | ((row >> p.lab[i]) & 1)
    return code


cdef void _search(Part* p, uint64_t* adj, int n, uint64_t* best, int* have) nogil:
    cdef uint64_t code
    cdef int t, i, k, pos, a, b
    cdef Part q
    if p.ncells == n:
        code = _leaf_code(n, adj, p)
        if not have[0] or code < best[0]:
            best[0] = code
            have[0] = 1
        return
    t = 0
    while p.start[t + 1] - p.start[t] == 1:
        t += 1
    a = p.start[t]
    b = p.start[t + 1]
    for i in range(a, b):
        # cells before t, then [v], then the rest of the target, then later cells
        q.ncells = 0
        for k in range(p.ncells + 1):
            if k <= t:
                q.start[k] = p.start[k]
        for k in range(n):
            q.lab[k] = p.lab[k]
        q.lab[a] = p.lab[i]
        pos = a + 1
        for k in range(a, b):
            if k != i:
                q.lab[pos] = p.lab[k]
                pos += 1
        q.start[t + 1] = a + 1
        for k in range(t + 1, p.ncells + 1):
            q.start[k + 1] = p.start[k]
        q.ncells = p.ncells + 1
        _refine(&q, adj, n)
        _search(&q, adj, n, best, have)


def canonical_code(int n, adj):
    if n < 1 or n > MAX_CANON_ORDER:
        raise ValueError(f"canonical code supports orders 1..{MAX_CANON_ORDER}")
    cdef uint64_t a[MAXN]
    _load(adj, n, a)
    cdef Part p
    cdef int i
    for i in range(n):
        p.lab[i] = i
    p.start[0] = 0
    p.start[1] = n
    p.ncells = 1
    cdef uint64_t best = 0
    cdef int have = 0
    with nogil:
        _refine(&p, a, n)
        _search(&p, a, n, &best, &have)
    return best


cdef struct EmbedState:
    int pn
    uint64_t hadj[MAXN]
    int hdeg[MAXN]
    int pdeg[MAXN]
    int order[MAXN]
    # link[d][e] = 1 when order[d] and order[e] are adjacent in the pattern
    unsigned char link[MAXN][MAXN]
    int image[MAXN]
    uint64_t allowed
    uint64_t required


cdef int _extend(EmbedState* st, int d, uint64_t used) nogil:
    cdef int p, e, v, missing
    cdef uint64_t cand, h, b
    if d == st.pn:
        return 1
    p = st.order[d]
    cand = st.allowed & ~used
    for e in range(d):
        h = st.hadj[st.image[st.order[e]]]
        if st.link[d][e]:
            cand &= h
        else:
            cand &= ~h
    missing = popc(st.required & ~used)
    if missing > st.pn - d:
        return 0
    if missing == st.pn - d:
        cand &= st.required
    while cand:
        b = cand & (~cand + 1)
        cand ^= b
        v = ctz(b)
        if st.hdeg[v] < st.pdeg[p]:
            continue
        st.image[p] = v
        if _extend(st, d + 1, used | b):
            return 1
    st.image[p] = -1
    return 0


def embed(int hn, hadj, int pn, padj, order, allowed, required):
    if pn > hn:
        return None
    cdef EmbedState* st = <EmbedState*>malloc(sizeof(EmbedState))
    if st == NULL:
        raise MemoryError()
    cdef int i, d, e, found
    cdef uint64_t prow[MAXN]
    try:
        st.pn = pn
        _load(hadj, hn, st.hadj)
        _load(padj, pn, prow)
        for i in range(hn):
            st.hdeg[i] = popc(st.hadj[i])
        for i in range(pn):
            st.pdeg[i] = popc(prow[i])
            st.order[i] = order[i]
            st.image[i] = -1
        for d in range(pn):
            for e in range(d):
                st.link[d][e] = (prow[st.order[d]] >> st.order[e]) & 1
        st.allowed = <uint64_t>allowed
        st.required = <uint64_t>required
        if popc(st.required) > pn:
            return None
        with nogil:
            found = _extend(st, 0, 0)
        if not found:
            return None
        return tuple(st.image[i] for i in range(pn))
    finally:
        free(st)
