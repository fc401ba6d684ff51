# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel.

Twin of ``_kernel_py`` with the same API and bit-identical output: the
refinement signatures are packed so that their integer order reproduces
the tuple order used by the pure backend (missing neighbor slots encode
as 0 and real colors are shifted by one, so shorter neighbor lists sort
first exactly like Python tuples).
"""

from libc.stdint cimport uint32_t, uint64_t

from itertools import combinations

cdef enum:
    MAXN = 64

cdef struct State:
    int n
    uint64_t adj[MAXN]
    int deg[MAXN]
    int nbr[MAXN][3]
    uint64_t best[MAXN]
    int best_pos[MAXN]
    bint has_best


cdef int _load(State* st, object adj) except -1:
    cdef int n = len(adj)
    if n < 1 or n > MAXN:
        raise ValueError(f"kernel supports 1..{MAXN} vertices, got {n}")
    cdef int v, u, d
    cdef uint64_t row, low
    for v in range(n):
        row = <uint64_t> adj[v]
        if (row >> v) & 1:
            raise ValueError(f"self-loop at vertex {v}")
        st.adj[v] = row
        d = 0
        while row:
            low = row & (~row + 1)
            u = _bit_index(low)
            if d == 3:
                raise ValueError("kernel supports maximum degree 3")
            st.nbr[v][d] = u
            d += 1
            row ^= low
        st.deg[v] = d
    st.n = n
    st.has_best = False
    return 0


cdef inline int _bit_index(uint64_t low) noexcept:
    cdef int i = 0
    while not (low & 1):
        low >>= 1
        i += 1
    return i


cdef void _refine(State* st, int* colors) noexcept:
    cdef int n = st.n
    cdef uint64_t keys[MAXN]
    cdef int newc[MAXN]
    cdef int v, i, j, d, t, rank
    cdef uint32_t sig
    cdef int nb[3]
    cdef uint64_t key
    cdef bint changed = True
    while changed:
        for v in range(n):
            d = st.deg[v]
            for i in range(d):
                nb[i] = colors[st.nbr[v][i]] + 1
            # insertion-sort the (at most 3) neighbor colors ascending
            for i in range(1, d):
                t = nb[i]
                j = i
                while j > 0 and nb[j - 1] > t:
                    nb[j] = nb[j - 1]
                    j -= 1
                nb[j] = t
            for i in range(d, 3):
                nb[i] = 0
            sig = (<uint32_t> colors[v] << 21) | (<uint32_t> nb[0] << 14) \
                | (<uint32_t> nb[1] << 7) | <uint32_t> nb[2]
            keys[v] = (<uint64_t> sig << 7) | <uint64_t> v
        # insertion sort of keys (n <= 64)
        for i in range(1, n):
            key = keys[i]
            j = i
            while j > 0 and keys[j - 1] > key:
                keys[j] = keys[j - 1]
                j -= 1
            keys[j] = key
        rank = 0
        for i in range(n):
            if i > 0 and (keys[i] >> 7) != (keys[i - 1] >> 7):
                rank += 1
            newc[<int> (keys[i] & 127)] = rank
        changed = False
        for v in range(n):
            if newc[v] != colors[v]:
                changed = True
            colors[v] = newc[v]


cdef void _search(State* st, int* colors) noexcept:
    cdef int n = st.n
    cdef int work[MAXN]
    cdef int child[MAXN]
    cdef int counts[MAXN]
    cdef uint64_t rows[MAXN]
    cdef int v, u, i, c, target
    cdef uint64_t acc
    cdef bint better
    for v in range(n):
        work[v] = colors[v]
    _refine(st, work)
    for v in range(n):
        counts[v] = 0
    for v in range(n):
        counts[work[v]] += 1
    target = -1
    for c in range(n):
        if counts[c] > 1:
            target = c
            break
    if target < 0:
        for v in range(n):
            acc = 0
            for i in range(st.deg[v]):
                acc |= (<uint64_t> 1) << work[st.nbr[v][i]]
            rows[work[v]] = acc
        if st.has_best:
            better = False
            for i in range(n):
                if rows[i] != st.best[i]:
                    better = rows[i] < st.best[i]
                    break
            if not better:
                return
        for i in range(n):
            st.best[i] = rows[i]
        for v in range(n):
            st.best_pos[v] = work[v]
        st.has_best = True
        return
    for v in range(n):
        if work[v] != target:
            continue
        for u in range(n):
            c = work[u]
            if c < target:
                child[u] = c
            elif c == target:
                child[u] = target if u == v else target + 1
            else:
                child[u] = c + 1
        _search(st, child)


cdef void _canonize(State* st) noexcept:
    cdef int n = st.n
    cdef int initial[MAXN]
    cdef int degs[4]
    cdef int v, d, r
    for d in range(4):
        degs[d] = 0
    for v in range(n):
        degs[st.deg[v]] = 1
    # rank of each occurring degree, ascending
    r = 0
    for d in range(4):
        if degs[d]:
            degs[d] = r
            r += 1
    for v in range(n):
        initial[v] = degs[st.deg[v]]
    st.has_best = False
    _search(st, initial)


cdef bytes _form_bytes(State* st):
    cdef int n = st.n
    cdef bytearray out = bytearray(1 + 8 * n)
    cdef int i, b
    cdef uint64_t row
    out[0] = n
    for i in range(n):
        row = st.best[i]
        for b in range(8):
            out[1 + 8 * i + b] = <int> ((row >> (8 * (7 - b))) & 255)
    return bytes(out)


def canonical_form(adj):
    """Canonical form of the graph; equal bytes iff the graphs are isomorphic."""
    cdef State st
    _load(&st, tuple(adj))
    _canonize(&st)
    return _form_bytes(&st)


def canonical_labeling(adj):
    """Canonical form plus the canonical position assigned to each vertex."""
    cdef State st
    _load(&st, tuple(adj))
    _canonize(&st)
    return _form_bytes(&st), tuple(st.best_pos[v] for v in range(st.n))


cdef int _artic_dfs(State* st, int v, int parent, int* timer,
                    int* disc, int* low, bint* is_cut) noexcept:
    cdef int children = 0
    cdef int i, u
    disc[v] = timer[0]
    low[v] = timer[0]
    timer[0] += 1
    for i in range(st.deg[v]):
        u = st.nbr[v][i]
        if disc[u] < 0:
            children += 1
            _artic_dfs(st, u, v, timer, disc, low, is_cut)
            if low[u] < low[v]:
                low[v] = low[u]
            if parent >= 0 and low[u] >= disc[v]:
                is_cut[v] = True
        elif u != parent:
            if disc[u] < low[v]:
                low[v] = disc[u]
    return children


cdef void _non_cutvertices(State* st, bint* is_cut) noexcept:
    cdef int n = st.n
    cdef int disc[MAXN]
    cdef int low[MAXN]
    cdef int timer = 0
    cdef int v
    for v in range(n):
        disc[v] = -1
        is_cut[v] = False
    if n == 1:
        return
    if _artic_dfs(st, 0, -1, &timer, disc, low, is_cut) > 1:
        is_cut[0] = True


def accepted_children(adj):
    """Canonical forms of the accepted one-vertex extensions of a connected parent."""
    cdef State parent
    cdef State child
    cdef State reduced
    cdef bint is_cut[MAXN]
    _load(&parent, tuple(adj))
    cdef int n = parent.n
    if n >= MAXN:
        raise ValueError(f"cannot extend a graph with {MAXN} vertices")
    _canonize(&parent)
    parent_form = _form_bytes(&parent)

    cands = [v for v in range(n) if parent.deg[v] < 3]
    out = []
    seen = set()
    cdef int v, u, w, i, bestpos
    cdef uint64_t newbit = (<uint64_t> 1) << n
    cdef uint64_t row, low_mask
    for size in (1, 2, 3):
        for subset in combinations(cands, size):
            for v in range(n):
                child.adj[v] = parent.adj[v]
            child.adj[n] = 0
            for v in subset:
                child.adj[v] |= newbit
                child.adj[n] |= (<uint64_t> 1) << v
            child.n = n + 1
            for v in range(n + 1):
                row = child.adj[v]
                i = 0
                while row:
                    u = _bit_index(row & (~row + 1))
                    child.nbr[v][i] = u
                    i += 1
                    row &= row - 1
                child.deg[v] = i
            _canonize(&child)
            form = _form_bytes(&child)
            if form in seen:
                continue
            seen.add(form)
            _non_cutvertices(&child, is_cut)
            w = -1
            bestpos = -1
            for v in range(n + 1):
                if not is_cut[v] and child.best_pos[v] > bestpos:
                    bestpos = child.best_pos[v]
                    w = v
            if w == n:
                out.append(form)
                continue
            # delete w and compare the reduced graph with the parent
            low_mask = ((<uint64_t> 1) << w) - 1
            i = 0
            for v in range(n + 1):
                if v == w:
                    continue
                row = child.adj[v]
                reduced.adj[i] = (row & low_mask) | ((row >> (w + 1)) << w)
                i += 1
            reduced.n = n
            for v in range(n):
                row = reduced.adj[v]
                i = 0
                while row:
                    u = _bit_index(row & (~row + 1))
                    reduced.nbr[v][i] = u
                    i += 1
                    row &= row - 1
                reduced.deg[v] = i
            _canonize(&reduced)
            if _form_bytes(&reduced) == parent_form:
                out.append(form)
    return out
