"""Pure-Python kernels.  ``_kernels_c.pyx`` mirrors these function by function.

All kernels take the order ``n`` and the adjacency rows as a sequence of
ints, so they are independent of the ``Graph`` class.
"""

MAX_TABLE_ORDER = 22
MAX_CANON_ORDER = 10


def cyclable_table(n, adj):
    """``table[S] == 1`` iff ``|S| >= 3`` and the subgraph induced by ``S`` is hamiltonian.

    Subset DP: ``reach[S]`` holds the possible last vertices of a path that
    starts at ``min(S)`` and visits exactly ``S``.
    """
    if not 1 <= n <= MAX_TABLE_ORDER:
        raise ValueError(f"cyclable table supports orders 1..{MAX_TABLE_ORDER}")
    size = 1 << n
    reach = [0] * size
    table = bytearray(size)
    for s in range(1, size):
        low = s & -s
        if s == low:
            reach[s] = low
            continue
        r = 0
        rest = s ^ low
        while rest:
            b = rest & -rest
            rest ^= b
            if reach[s ^ b] & adj[b.bit_length() - 1]:
                r |= b
        reach[s] = r
        if r & adj[low.bit_length() - 1] and s.bit_count() >= 3:
            table[s] = 1
    return bytes(table)


def _refine(cells, adj):
    """Equitable refinement of an ordered partition.

    Cells split by the number of neighbors in a splitter cell, sub-cells in
    ascending count order; after any split the scan restarts at splitter 0.
    """
    while True:
        for splitter in cells:
            smask = 0
            for v in splitter:
                smask |= 1 << v
            out = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups = {}
                for v in cell:
                    groups.setdefault((adj[v] & smask).bit_count(), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    split = True
                    for key in sorted(groups):
                        out.append(groups[key])
            if split:
                cells = out
                break
        else:
            return cells


def _leaf_code(n, adj, order):
    code = 0
    for j in range(1, n):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def canonical_code(n, adj):
    """Minimum upper-triangle code over the leaves of an individualization-refinement tree.

    Bits follow graph6 column order ``(0,1),(0,2),(1,2),(0,3),...`` with the
    first pair most significant.  Two graphs get the same code iff they are
    isomorphic.
    """
    if not 1 <= n <= MAX_CANON_ORDER:
        raise ValueError(f"canonical code supports orders 1..{MAX_CANON_ORDER}")
    best = None
    stack = [_refine([list(range(n))], adj)]
    while stack:
        cells = stack.pop()
        if len(cells) == n:
            code = _leaf_code(n, adj, [c[0] for c in cells])
            if best is None or code < best:
                best = code
            continue
        t = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[t]
        for v in target:
            rest = [w for w in target if w != v]
            stack.append(_refine(cells[:t] + [[v], rest] + cells[t + 1:], adj))
    return best


def embed(hn, hadj, pn, padj, order, allowed, required):
    """Find an induced embedding of the pattern into the host.

    Pattern vertices are placed in ``order``; each gets the smallest host
    vertex in ``allowed`` consistent with edges and non-edges to those
    already placed.  Every vertex of ``required`` must be used.  Returns the
    image tuple indexed by pattern vertex, or ``None``.
    """
    if pn > hn:
        return None
    hdeg = [row.bit_count() for row in hadj]
    pdeg = [row.bit_count() for row in padj]
    image = [-1] * pn
    # Per depth: bitmask of earlier-placed pattern positions adjacent to order[d].
    placed_adj = []
    for d in range(pn):
        p = order[d]
        placed_adj.append([padj[p] >> order[e] & 1 for e in range(d)])
    nreq = required.bit_count()

    def extend(d, used):
        if d == pn:
            return True
        p = order[d]
        cand = allowed & ~used
        for e in range(d):
            h = hadj[image[order[e]]]
            cand &= h if placed_adj[d][e] else ~h
        missing = (required & ~used).bit_count()
        if missing > pn - d:
            return False
        if missing == pn - d:
            cand &= required
        while cand:
            b = cand & -cand
            cand ^= b
            v = b.bit_length() - 1
            if hdeg[v] < pdeg[p]:
                continue
            image[p] = v
            if extend(d + 1, used | b):
                return True
        image[p] = -1
        return False

    if nreq > pn:
        return None
    return tuple(image) if extend(0, 0) else None
