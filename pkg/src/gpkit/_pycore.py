"""Pure-Python search kernels.

Reference twin of the compiled ``_core`` extension: same functions, same
arguments, same results (including which witness is returned).  Vertex sets
are int bitmasks; ``order`` lists the vertices in branching priority.
"""

from __future__ import annotations

INF = 1 << 62


def _bits(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def max_clique(adj, order):
    """Maximum clique by branch and bound with greedy-colouring bounds.

    Returns ``(size, mask)``.
    """
    n = len(adj)
    if n == 0:
        return 0, 0
    pos = {v: i for i, v in enumerate(order)}
    best = [0, 0]

    def colour_sort(cand):
        # greedy colouring in branching order; colour k bounds cliques using these vertices
        verts = sorted(_bits(cand), key=pos.__getitem__)
        classes = []
        for v in verts:
            for cls in classes:
                if not cls[1] & adj[v]:
                    cls[0].append(v)
                    cls[1] |= 1 << v
                    break
            else:
                classes.append([[v], 1 << v])
        out = []
        for k, cls in enumerate(classes, 1):
            for v in cls[0]:
                out.append((v, k))
        return out

    def expand(clique, size, cand):
        for v, bound in reversed(colour_sort(cand)):
            if size + bound <= best[0]:
                return
            new_clique = clique | 1 << v
            new_cand = cand & adj[v]
            if new_cand:
                expand(new_clique, size + 1, new_cand)
            elif size + 1 > best[0]:
                best[0] = size + 1
                best[1] = new_clique
            cand &= ~(1 << v)

    expand(0, 0, (1 << n) - 1)
    return best[0], best[1]


def max_triple_free(n, forbid, order, lower, upper):
    """Largest vertex set containing no forbidden triple.

    ``forbid[a * n + b]`` is the mask of vertices ``c`` such that ``{a, b, c}``
    is a forbidden triple.  Only sets strictly larger than ``lower`` are
    reported; the search stops as soon as a set of size ``upper`` is found.

    Branching takes candidates in ``order``, include-branch first, so the
    first set found of the final size is the lexicographically smallest in
    that order.  Returns ``(size, mask)``; ``mask`` is -1 if nothing larger
    than ``lower`` exists.
    """
    best = [lower, -1]
    if lower >= upper:
        return best[0], best[1]
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    after = [0] * n
    for i, v in enumerate(order):
        m = 0
        for w in order[i + 1:]:
            m |= 1 << w
        after[v] = m

    def expand(chosen, members_, cand):
        size = len(members_)
        if size > best[0]:
            best[0] = size
            best[1] = chosen
            if size >= upper:
                return True
        while cand:
            if size + cand.bit_count() <= best[0]:
                return False
            v = min(_bits(cand), key=pos.__getitem__)
            cand &= ~(1 << v)
            new_cand = cand & after[v]
            row = v * n
            for a in members_:
                new_cand &= ~forbid[row + a]
            members_.append(v)
            done = expand(chosen | 1 << v, members_, new_cand)
            members_.pop()
            if done:
                return True
        return False

    expand(0, [], (1 << n) - 1)
    return best[0], best[1]


def gp_brute(n, dist, top):
    """Largest general position set by exhaustive subset enumeration.

    Sizes are tried from ``top`` downwards; within a size, subsets in
    lexicographic order.  Every subset is checked against the definition:
    no three distinct members ``u, w, v`` with ``d(u,w) + d(w,v) == d(u,v)``.
    Returns ``(size, mask)``.
    """
    for k in range(min(top, n), 0, -1):
        if k <= 2:
            return k, (1 << k) - 1
        idx = list(range(k))
        while True:
            if _definitional(n, dist, idx):
                m = 0
                for v in idx:
                    m |= 1 << v
                return k, m
            # next k-combination in lexicographic order
            i = k - 1
            while i >= 0 and idx[i] == n - k + i:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for j in range(i + 1, k):
                idx[j] = idx[j - 1] + 1
    return 0, 0


def _definitional(n, dist, verts):
    k = len(verts)
    for a in range(k):
        u = verts[a] * n
        for b in range(a + 1, k):
            duv = dist[u + verts[b]]
            vrow = verts[b] * n
            for c in range(k):
                if c == a or c == b:
                    continue
                w = verts[c]
                if dist[u + w] + dist[vrow + w] == duv:
                    return False
    return True


def canonical_order(adj, colors):
    """Relabelling that minimises the graph6 bit string among those placing
    vertices in nondecreasing colour order.

    Returns ``position_of`` with ``position_of[v]`` the new index of ``v``.
    """
    n = len(adj)
    slots = sorted(colors)
    best_cols = [INF] * n
    best_perm = [None]
    path = []

    def dfs(j, used, colval):
        if j == n:
            best_perm[0] = list(path)
            return
        want = slots[j]
        cands = []
        for v in range(n):
            if not used >> v & 1 and colors[v] == want:
                cands.append((colval[v], v))
        cands.sort()
        for c, v in cands:
            if c > best_cols[j]:
                break
            if c < best_cols[j]:
                best_cols[j] = c
                for k in range(j + 1, n):
                    best_cols[k] = INF
            path.append(v)
            row = adj[v]
            nxt = [(colval[w] << 1) | (row >> w & 1) for w in range(n)]
            dfs(j + 1, used | 1 << v, nxt)
            path.pop()

    dfs(0, 0, [0] * n)
    position_of = [0] * n
    for i, v in enumerate(best_perm[0]):
        position_of[v] = i
    return position_of
