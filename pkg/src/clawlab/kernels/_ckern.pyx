# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; exact mirrors of the pure-Python reference.

Same search orders, same tie-breaks, same results (witnesses included).
Graphs are at most 64 vertices, so adjacency rows are single words.
"""

from libc.string cimport memset

ctypedef unsigned long long u64

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define CLAWLAB_POPCNT(x) __builtin_popcountll(x)
    #define CLAWLAB_CTZ(x) __builtin_ctzll(x)
    #else
    static int CLAWLAB_POPCNT(unsigned long long x){int c=0;while(x){x&=x-1;c++;}return c;}
    static int CLAWLAB_CTZ(unsigned long long x){int c=0;while(!(x&1ULL)){x>>=1;c++;}return c;}
    #endif
    """
    int CLAWLAB_POPCNT(u64 x) nogil
    int CLAWLAB_CTZ(u64 x) nogil


cdef inline int _popcount(u64 x) nogil:
    return CLAWLAB_POPCNT(x)


cdef inline int _ctz(u64 x) nogil:
    return CLAWLAB_CTZ(x)


cdef inline u64 _bits_below(int b) nogil:
    # all bits < b, safe for b in 0..64
    if b >= 64:
        return <u64> 0xFFFFFFFFFFFFFFFFULL
    return ((<u64> 1) << b) - 1


cdef int _load_adj(object adj, int n, u64 *rows) except -1:
    cdef int v
    for v in range(n):
        rows[v] = <u64> adj[v]
    return 0


# ---------------------------------------------------------------- max clique

cdef struct MCState:
    u64 adj[64]
    u64 best_mask
    int best_size


cdef void _mc_expand(MCState *st, u64 rmask, int rsize, u64 pmask) noexcept nogil:
    cdef u64 colours[64]
    cdef int order_c[65]
    cdef int order_v[65]
    cdef int sc[65]
    cdef int sv[65]
    cdef int bucket[66]
    cdef u64 pref[66]
    cdef u64 m, bit
    cdef int v, ci, cnt, ncol, placed, i, c

    if pmask == 0:
        if rsize > st.best_size:
            st.best_size = rsize
            st.best_mask = rmask
        return
    cnt = 0
    ncol = 0
    m = pmask
    while m:
        v = _ctz(m)
        m &= m - 1
        bit = (<u64> 1) << v
        placed = 0
        for ci in range(ncol):
            if st.adj[v] & colours[ci] == 0:
                colours[ci] |= bit
                order_c[cnt] = ci + 1
                order_v[cnt] = v
                placed = 1
                break
        if not placed:
            colours[ncol] = bit
            ncol += 1
            order_c[cnt] = ncol
            order_v[cnt] = v
        cnt += 1
    # stable counting sort by colour; within a colour the scan order is
    # already ascending by vertex, matching the reference sort on (c, v)
    memset(bucket, 0, sizeof(int) * (ncol + 2))
    for i in range(cnt):
        bucket[order_c[i]] += 1
    for i in range(1, ncol + 1):
        bucket[i] += bucket[i - 1]
    for i in range(cnt - 1, -1, -1):
        c = order_c[i]
        bucket[c] -= 1
        sc[bucket[c]] = c
        sv[bucket[c]] = order_v[i]
    pref[0] = 0
    for i in range(cnt):
        pref[i + 1] = pref[i] | ((<u64> 1) << sv[i])
    for i in range(cnt - 1, -1, -1):
        c = sc[i]
        v = sv[i]
        if rsize + c <= st.best_size:
            return
        _mc_expand(st, rmask | ((<u64> 1) << v), rsize + 1, pref[i] & st.adj[v])


def max_clique(n, adj):
    """Bitmask of a maximum clique (deterministic; mirrors pure.max_clique)."""
    cdef int cn = n
    if cn == 0:
        return 0
    cdef MCState st
    _load_adj(adj, cn, st.adj)
    st.best_mask = 0
    st.best_size = 0
    _mc_expand(&st, 0, 0, _bits_below(cn))
    return st.best_mask


# ---------------------------------------------------------------- colouring

cdef struct ColState:
    u64 adj[64]
    u64 neigh[64]
    int colour[64]
    int n
    int k


cdef bint _col_go(ColState *st, int done, int max_used) noexcept nogil:
    cdef int v, best_v, best_sat, s, c, u, limit, nxt
    cdef u64 m, nb, touched

    if done == st.n:
        return 1
    best_v = -1
    best_sat = -1
    for v in range(st.n):
        if st.colour[v] < 0:
            s = _popcount(st.neigh[v])
            if s > best_sat:
                best_sat = s
                best_v = v
    v = best_v
    limit = max_used + 2
    if limit > st.k:
        limit = st.k
    m = (~st.neigh[v]) & _bits_below(limit)
    while m:
        c = _ctz(m)
        m &= m - 1
        st.colour[v] = c
        touched = 0
        nb = st.adj[v]
        while nb:
            u = _ctz(nb)
            nb &= nb - 1
            if st.colour[u] < 0 and not (st.neigh[u] >> c) & 1:
                st.neigh[u] |= (<u64> 1) << c
                touched |= (<u64> 1) << u
        nxt = c if c > max_used else max_used
        if _col_go(st, done + 1, nxt):
            return 1
        while touched:
            u = _ctz(touched)
            touched &= touched - 1
            st.neigh[u] &= ~((<u64> 1) << c)
        st.colour[v] = -1
    return 0


def color_with(n, adj, k):
    """Proper colouring with at most k colours, or None (mirrors pure)."""
    cdef int cn = n
    cdef int ck = k
    if cn == 0:
        return ()
    if ck <= 0:
        return None
    if ck > 64:
        ck = 64  # n <= 64 colours always suffice
    cdef ColState st
    st.n = cn
    st.k = ck
    _load_adj(adj, cn, st.adj)
    cdef int v
    for v in range(cn):
        st.neigh[v] = 0
        st.colour[v] = -1
    if _col_go(&st, 0, -1):
        return tuple(st.colour[v] for v in range(cn))
    return None


# ------------------------------------------------- induced pattern embedding

cdef struct EmbState:
    u64 adj[64]
    u64 padj[16]
    int assign[16]
    int n
    int pn


cdef bint _emb_bt(EmbState *st, int i, u64 used) noexcept nogil:
    cdef int v, j, ok
    for v in range(st.n):
        if (used >> v) & 1:
            continue
        ok = 1
        for j in range(i):
            if ((st.padj[i] >> j) & 1) != ((st.adj[v] >> st.assign[j]) & 1):
                ok = 0
                break
        if ok:
            st.assign[i] = v
            if i + 1 == st.pn or _emb_bt(st, i + 1, used | ((<u64> 1) << v)):
                return 1
            st.assign[i] = -1
    return 0


def find_induced_embedding(n, adj, pn, padj):
    """Lex-least induced embedding of the pattern, or None (mirrors pure)."""
    cdef int cn = n
    cdef int cpn = pn
    if cpn > cn:
        return None
    if cpn == 0:
        return ()
    cdef EmbState st
    st.n = cn
    st.pn = cpn
    _load_adj(adj, cn, st.adj)
    cdef int i
    for i in range(cpn):
        st.padj[i] = <u64> padj[i]
        st.assign[i] = -1
    if _emb_bt(&st, 0, 0):
        return tuple(st.assign[i] for i in range(cpn))
    return None


cdef struct HasState:
    u64 adj[64]
    u64 padj[16]
    int order[16]
    int assign[16]
    int pdeg[16]
    int hdeg[64]
    int n
    int pn


cdef bint _has_bt(HasState *st, int t, u64 used) noexcept nogil:
    cdef int p, v, s, q, ok
    if t == st.pn:
        return 1
    p = st.order[t]
    for v in range(st.n):
        if (used >> v) & 1 or st.hdeg[v] < st.pdeg[p]:
            continue
        ok = 1
        for s in range(t):
            q = st.order[s]
            if ((st.padj[p] >> q) & 1) != ((st.adj[v] >> st.assign[q]) & 1):
                ok = 0
                break
        if ok:
            st.assign[p] = v
            if _has_bt(st, t + 1, used | ((<u64> 1) << v)):
                return 1
            st.assign[p] = -1
    return 0


def has_induced(n, adj, pn, padj, required=-1):
    """Existence-only induced containment test (mirrors pure.has_induced)."""
    cdef int cn = n
    cdef int cpn = pn
    cdef int creq = required
    if cpn > cn:
        return False
    if cpn == 0:
        return creq < 0
    cdef HasState st
    st.n = cn
    st.pn = cpn
    _load_adj(adj, cn, st.adj)
    cdef int i, v, best, bi, p, pos
    cdef bint taken[16]
    for i in range(cpn):
        st.padj[i] = <u64> padj[i]
        st.pdeg[i] = _popcount(st.padj[i])
        taken[i] = 0
    for v in range(cn):
        st.hdeg[v] = _popcount(st.adj[v])
    # base order: descending pattern degree, ties by index (matches sorted())
    cdef int base[16]
    for pos in range(cpn):
        best = -1
        bi = -1
        for i in range(cpn):
            if not taken[i] and (bi < 0 or st.pdeg[i] > best):
                best = st.pdeg[i]
                bi = i
        taken[bi] = 1
        base[pos] = bi
    if creq < 0:
        for i in range(cpn):
            st.order[i] = base[i]
            st.assign[i] = -1
        return bool(_has_bt(&st, 0, 0))
    for p in range(cpn):
        if st.hdeg[creq] < st.pdeg[p]:
            continue
        st.order[0] = p
        pos = 1
        for i in range(cpn):
            if base[i] != p:
                st.order[pos] = base[i]
                pos += 1
        for i in range(cpn):
            st.assign[i] = -1
        st.assign[p] = creq
        if _has_bt(&st, 1, (<u64> 1) << creq):
            return True
    return False


# ----------------------------------------------------------- induced cycles

cdef struct CycState:
    u64 adj[64]
    int path[64]
    int n
    int length


cdef bint _cyc_grow(CycState *st, int depth, u64 used, u64 inner_forbid, u64 v0adj) noexcept nogil:
    cdef int last = st.path[depth - 1]
    cdef u64 cand, nf
    cdef int v
    if depth == st.length - 1:
        cand = st.adj[last] & v0adj & ~used & ~inner_forbid
        cand &= ~_bits_below(st.path[1] + 1)
        if cand:
            st.path[depth] = _ctz(cand)
            return 1
        return 0
    cand = st.adj[last] & ~used & ~inner_forbid & ~v0adj
    while cand:
        v = _ctz(cand)
        cand &= cand - 1
        st.path[depth] = v
        nf = inner_forbid | st.adj[last]
        if _cyc_grow(st, depth + 1, used | ((<u64> 1) << v), nf, v0adj):
            return 1
    return 0


def find_induced_cycle(n, adj, length):
    """Lex-least induced cycle of exactly ``length``, or None (mirrors pure)."""
    cdef int cn = n
    cdef int clen = length
    if clen < 3 or clen > cn:
        return None
    cdef CycState st
    st.n = cn
    st.length = clen
    _load_adj(adj, cn, st.adj)
    cdef int v0, v1, i
    cdef u64 below, m, cand
    for v0 in range(cn - clen + 1):
        st.path[0] = v0
        below = _bits_below(v0 + 1)
        m = st.adj[v0] & ~below
        while m:
            v1 = _ctz(m)
            m &= m - 1
            st.path[1] = v1
            if clen == 3:
                cand = st.adj[v1] & st.adj[v0] & ~_bits_below(v1 + 1)
                if cand:
                    st.path[2] = _ctz(cand)
                    return tuple(st.path[i] for i in range(3))
                continue
            if _cyc_grow(&st, 2, ((<u64> 1) << v0) | ((<u64> 1) << v1) | below, 0, st.adj[v0]):
                return tuple(st.path[i] for i in range(clen))
    return None


# ------------------------------------------------------- canonical labelling

cdef struct CanonState:
    u64 adj[64]
    u64 best_cert[64]
    int best_perm[64]
    int n
    bint have_best


cdef void _refine(CanonState *st, int *colours) noexcept nogil:
    """Colour refinement with canonically ordered classes (mirrors pure)."""
    cdef u64 masks[64]
    cdef int key[64][65]
    cdef int idx[64]
    cdef int v, c, ncls, i, j, t, klen, cmp_res, newncls
    cdef int n = st.n

    ncls = 0
    for v in range(n):
        if colours[v] + 1 > ncls:
            ncls = colours[v] + 1
    while True:
        for c in range(ncls):
            masks[c] = 0
        for v in range(n):
            masks[colours[v]] |= (<u64> 1) << v
        klen = ncls + 1
        for v in range(n):
            key[v][0] = colours[v]
            for c in range(ncls):
                key[v][c + 1] = _popcount(st.adj[v] & masks[c])
        # insertion sort of vertex indices by key, lexicographic
        for v in range(n):
            idx[v] = v
        for i in range(1, n):
            t = idx[i]
            j = i - 1
            while j >= 0:
                cmp_res = 0
                for c in range(klen):
                    if key[idx[j]][c] != key[t][c]:
                        cmp_res = 1 if key[idx[j]][c] > key[t][c] else -1
                        break
                if cmp_res > 0:
                    idx[j + 1] = idx[j]
                    j -= 1
                else:
                    break
            idx[j + 1] = t
        # rank by distinct key runs
        newncls = 0
        for i in range(n):
            if i > 0:
                cmp_res = 0
                for c in range(klen):
                    if key[idx[i - 1]][c] != key[idx[i]][c]:
                        cmp_res = 1
                        break
                if cmp_res:
                    newncls += 1
            colours[idx[i]] = newncls
        newncls += 1
        if newncls == ncls:
            return
        ncls = newncls


cdef void _emit(CanonState *st, int *colours) noexcept nogil:
    cdef int inv[64]
    cdef u64 rows[64]
    cdef int v, i, j, better
    cdef u64 row, src
    cdef int n = st.n
    for v in range(n):
        inv[colours[v]] = v
    for i in range(n):
        row = 0
        src = st.adj[inv[i]]
        for j in range(n):
            if (src >> inv[j]) & 1:
                row |= (<u64> 1) << j
        rows[i] = row
    if st.have_best:
        better = 0
        for i in range(n):
            if rows[i] != st.best_cert[i]:
                better = 1 if rows[i] < st.best_cert[i] else -1
                break
        if better <= 0:
            return
    st.have_best = 1
    for i in range(n):
        st.best_cert[i] = rows[i]
        st.best_perm[i] = colours[i]


cdef void _canon_search(CanonState *st, int *colours) noexcept nogil:
    cdef int counts[64]
    cdef int cell[64]
    cdef int reps[64]
    cdef int child[64]
    cdef int v, c, ncls, target, cell_len, nreps, i, r, skip
    cdef int n = st.n

    ncls = 0
    for v in range(n):
        if colours[v] + 1 > ncls:
            ncls = colours[v] + 1
    if ncls == n:
        _emit(st, colours)
        return
    for c in range(ncls):
        counts[c] = 0
    for v in range(n):
        counts[colours[v]] += 1
    target = 0
    while counts[target] < 2:
        target += 1
    cell_len = 0
    for v in range(n):
        if colours[v] == target:
            cell[cell_len] = v
            cell_len += 1
    nreps = 0
    for i in range(cell_len):
        v = cell[i]
        skip = 0
        for r in range(nreps):
            if (st.adj[reps[r]] & ~((<u64> 1) << v)) == (st.adj[v] & ~((<u64> 1) << reps[r])):
                skip = 1
                break
        if skip:
            continue
        reps[nreps] = v
        nreps += 1
        for c in range(n):
            child[c] = colours[c] if colours[c] <= target else colours[c] + 1
        for r in range(cell_len):
            if cell[r] != v:
                child[cell[r]] = target + 1
        _refine(st, child)
        _canon_search(st, child)


def canon_form(n, adj):
    """Canonical (rows, perm); identical output to pure.canon_form."""
    cdef int cn = n
    if cn == 0:
        return (), ()
    cdef CanonState st
    st.n = cn
    st.have_best = 0
    _load_adj(adj, cn, st.adj)
    cdef int colours[64]
    cdef int v
    for v in range(cn):
        colours[v] = 0
    _refine(&st, colours)
    _canon_search(&st, colours)
    return (
        tuple(st.best_cert[v] for v in range(cn)),
        tuple(st.best_perm[v] for v in range(cn)),
    )
