# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels over 64-bit vertex masks (order <= 64).

Mirrors ``gpkit._pycore`` function for function; the two must return
identical results, witnesses included.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXN = 64
    MAXC = 16


cdef inline int popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int lowbit(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef inline uint64_t bit(int v) nogil:
    return (<uint64_t>1) << v


# ---------------------------------------------------------------- max clique

cdef struct CliqueState:
    int n
    uint64_t adj[MAXN]
    int pos[MAXN]
    int order[MAXN]
    int best
    uint64_t best_mask


cdef int colour_sort(CliqueState* st, uint64_t cand, int* verts, int* bounds) nogil:
    cdef uint64_t cls_mask[MAXN]
    cdef int cls_verts[MAXN][MAXN]
    cdef int cls_len[MAXN]
    cdef int ncls = 0
    cdef int i, k, v, placed, count = 0
    for i in range(st.n):
        v = st.order[i]
        if not (cand >> v) & 1:
            continue
        placed = 0
        for k in range(ncls):
            if not (cls_mask[k] & st.adj[v]):
                cls_verts[k][cls_len[k]] = v
                cls_len[k] += 1
                cls_mask[k] |= bit(v)
                placed = 1
                break
        if not placed:
            cls_mask[ncls] = bit(v)
            cls_verts[ncls][0] = v
            cls_len[ncls] = 1
            ncls += 1
    for k in range(ncls):
        for i in range(cls_len[k]):
            verts[count] = cls_verts[k][i]
            bounds[count] = k + 1
            count += 1
    return count


cdef void clique_expand(CliqueState* st, uint64_t clique, int size, uint64_t cand) nogil:
    cdef int verts[MAXN]
    cdef int bounds[MAXN]
    cdef int count = colour_sort(st, cand, verts, bounds)
    cdef int i, v
    cdef uint64_t new_cand
    i = count - 1
    while i >= 0:
        v = verts[i]
        if size + bounds[i] <= st.best:
            return
        new_cand = cand & st.adj[v]
        if new_cand:
            clique_expand(st, clique | bit(v), size + 1, new_cand)
        elif size + 1 > st.best:
            st.best = size + 1
            st.best_mask = clique | bit(v)
        cand &= ~bit(v)
        i -= 1


def max_clique(adj, order):
    cdef int n = len(adj)
    cdef CliqueState st
    cdef int i
    if n == 0:
        return 0, 0
    if n > MAXN:
        raise ValueError("compiled kernel supports order <= 64")
    st.n = n
    for i in range(n):
        st.adj[i] = <uint64_t>adj[i]
        st.order[i] = order[i]
    st.best = 0
    st.best_mask = 0
    cdef uint64_t full = (~(<uint64_t>0)) if n == 64 else (bit(n) - 1)
    with nogil:
        clique_expand(&st, 0, 0, full)
    return st.best, int(st.best_mask)


# ------------------------------------------------------- triple-free search

cdef struct TripleState:
    int n
    uint64_t* forbid
    int pos[MAXN]
    uint64_t after[MAXN]
    int best
    uint64_t best_mask
    int found
    int upper
    int chosen[MAXN]


cdef int triple_expand(TripleState* st, uint64_t chosen, int size, uint64_t cand) nogil:
    cdef int v, w, a, bestpos
    cdef uint64_t new_cand, scan
    cdef uint64_t* row
    if size > st.best:
        st.best = size
        st.best_mask = chosen
        st.found = 1
        if size >= st.upper:
            return 1
    while cand:
        if size + popcount(cand) <= st.best:
            return 0
        # candidate with the smallest position in the branching order
        scan = cand
        v = -1
        bestpos = MAXN + 1
        while scan:
            w = lowbit(scan)
            scan &= scan - 1
            if st.pos[w] < bestpos:
                bestpos = st.pos[w]
                v = w
        cand &= ~bit(v)
        new_cand = cand & st.after[v]
        row = st.forbid + v * st.n
        for a in range(size):
            new_cand &= ~row[st.chosen[a]]
        st.chosen[size] = v
        if triple_expand(st, chosen | bit(v), size + 1, new_cand):
            return 1
    return 0


def max_triple_free(int n, forbid, order, int lower, int upper):
    cdef TripleState st
    cdef int i, j
    cdef uint64_t m, full
    if lower >= upper:
        return lower, -1
    if n > MAXN:
        raise ValueError("compiled kernel supports order <= 64")
    st.forbid = <uint64_t*>malloc(n * n * sizeof(uint64_t))
    if st.forbid == NULL:
        raise MemoryError()
    try:
        for i in range(n * n):
            st.forbid[i] = <uint64_t>forbid[i]
        st.n = n
        for i in range(n):
            st.pos[<int>order[i]] = i
        for i in range(n):
            m = 0
            for j in range(i + 1, n):
                m |= bit(<int>order[j])
            st.after[<int>order[i]] = m
        st.best = lower
        st.best_mask = 0
        st.found = 0
        st.upper = upper
        full = (~(<uint64_t>0)) if n == 64 else (bit(n) - 1)
        with nogil:
            triple_expand(&st, 0, 0, full)
    finally:
        free(st.forbid)
    if not st.found:
        return lower, -1
    return st.best, int(st.best_mask)


# ------------------------------------------------------ brute-force gp search

cdef int definitional(int n, const int* dist, const int* verts, int k) nogil:
    cdef int a, b, c, u, v, w, duv
    for a in range(k):
        u = verts[a] * n
        for b in range(a + 1, k):
            duv = dist[u + verts[b]]
            v = verts[b] * n
            for c in range(k):
                if c == a or c == b:
                    continue
                w = verts[c]
                if dist[u + w] + dist[v + w] == duv:
                    return 0
    return 1


def gp_brute(int n, dist, int top):
    cdef int* d = <int*>malloc(n * n * sizeof(int))
    cdef int idx[MAXN]
    cdef int i, j, k, ok
    cdef uint64_t m
    if d == NULL:
        raise MemoryError()
    if n > MAXN:
        free(d)
        raise ValueError("compiled kernel supports order <= 64")
    try:
        for i in range(n * n):
            d[i] = dist[i]
        k = top if top < n else n
        while k > 0:
            if k <= 2:
                return k, int((bit(k) - 1))
            for i in range(k):
                idx[i] = i
            while True:
                with nogil:
                    ok = definitional(n, d, idx, k)
                if ok:
                    m = 0
                    for i in range(k):
                        m |= bit(idx[i])
                    return k, int(m)
                i = k - 1
                while i >= 0 and idx[i] == n - k + i:
                    i -= 1
                if i < 0:
                    break
                idx[i] += 1
                for j in range(i + 1, k):
                    idx[j] = idx[j - 1] + 1
            k -= 1
        return 0, 0
    finally:
        free(d)


# ------------------------------------------------------------ canonical form

cdef struct CanonState:
    int n
    uint64_t adj[MAXC]
    int colors[MAXC]
    int slots[MAXC]
    int64_t best_cols[MAXC]
    int path[MAXC]
    int best_perm[MAXC]


cdef void canon_dfs(CanonState* st, int j, uint64_t used, int64_t* colval) nogil:
    cdef int n = st.n
    cdef int cand_v[MAXC]
    cdef int64_t cand_c[MAXC]
    cdef int ncand = 0
    cdef int v, w, i, t, k
    cdef int64_t c, tc
    cdef int64_t nxt[MAXC]
    if j == n:
        for i in range(n):
            st.best_perm[i] = st.path[i]
        return
    for v in range(n):
        if not (used >> v) & 1 and st.colors[v] == st.slots[j]:
            # insertion sort by (colval, vertex)
            c = colval[v]
            i = ncand
            while i > 0 and (cand_c[i - 1] > c or (cand_c[i - 1] == c and cand_v[i - 1] > v)):
                cand_c[i] = cand_c[i - 1]
                cand_v[i] = cand_v[i - 1]
                i -= 1
            cand_c[i] = c
            cand_v[i] = v
            ncand += 1
    for i in range(ncand):
        c = cand_c[i]
        v = cand_v[i]
        if c > st.best_cols[j]:
            break
        if c < st.best_cols[j]:
            st.best_cols[j] = c
            for k in range(j + 1, n):
                st.best_cols[k] = <int64_t>1 << 62
        st.path[j] = v
        for w in range(n):
            nxt[w] = (colval[w] << 1) | <int64_t>((st.adj[v] >> w) & 1)
        canon_dfs(st, j + 1, used | bit(v), nxt)


def canonical_order(adj, colors):
    cdef CanonState st
    cdef int n = len(adj)
    cdef int i
    cdef int64_t colval[MAXC]
    if n > MAXC:
        raise ValueError("canonical kernel supports order <= 16")
    st.n = n
    slots = sorted(colors)
    for i in range(n):
        st.adj[i] = <uint64_t>adj[i]
        st.colors[i] = colors[i]
        st.slots[i] = slots[i]
        st.best_cols[i] = <int64_t>1 << 62
        colval[i] = 0
    with nogil:
        canon_dfs(&st, 0, 0, colval)
    position_of = [0] * n
    for i in range(n):
        position_of[st.best_perm[i]] = i
    return position_of
