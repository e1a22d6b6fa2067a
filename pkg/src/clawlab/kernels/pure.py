"""Pure-Python reference kernels.

Every function here has a compiled twin in ``_ckern.pyx`` with identical
search order, so witnesses (not just verdicts) match bit for bit between
backends.  Graphs enter as ``(n, adj)`` with ``adj`` a sequence of per-vertex
neighbour bitmasks; vertex sets leave as bitmasks or index tuples.
"""

from __future__ import annotations


def max_clique(n, adj):
    """Bitmask of a maximum clique.

    Branch and bound with a greedy-colouring bound (Tomita-style): the
    candidate set is greedily coloured in ascending vertex order, candidates
    are expanded from the highest colour class down, and a branch is cut when
    the clique so far plus the candidate's colour cannot beat the incumbent.
    The incumbent is only replaced by a strictly larger clique, so the result
    is the first maximum clique in this fixed order.
    """
    if n == 0:
        return 0
    best = [0, 0]  # size, mask

    def expand(rmask, rsize, pmask):
        if pmask == 0:
            if rsize > best[0]:
                best[0] = rsize
                best[1] = rmask
            return
        # greedy colouring of the candidates, ascending vertex order
        colours = []
        order = []
        m = pmask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            for ci in range(len(colours)):
                if adj[v] & colours[ci] == 0:
                    colours[ci] |= 1 << v
                    order.append((ci + 1, v))
                    break
            else:
                colours.append(1 << v)
                order.append((len(colours), v))
        order.sort()
        prefix = [0] * (len(order) + 1)
        for i, (_, v) in enumerate(order):
            prefix[i + 1] = prefix[i] | (1 << v)
        for i in range(len(order) - 1, -1, -1):
            c, v = order[i]
            if rsize + c <= best[0]:
                return
            expand(rmask | (1 << v), rsize + 1, prefix[i] & adj[v])

    expand(0, 0, (1 << n) - 1)
    return best[1]


def color_with(n, adj, k):
    """Proper colouring with at most ``k`` colours as a tuple, or None.

    Backtracking with DSATUR selection: always colour an uncoloured vertex of
    maximum saturation, ties broken by lowest index; colours are tried in
    ascending index and a fresh colour may only be the next unused one.
    """
    if n == 0:
        return ()
    if k <= 0:
        return None
    colours = [-1] * n
    neigh = [0] * n  # bitmask of colours on coloured neighbours

    def go(done, max_used):
        if done == n:
            return True
        best_v = -1
        best_sat = -1
        for v in range(n):
            if colours[v] < 0:
                s = neigh[v].bit_count()
                if s > best_sat:
                    best_sat = s
                    best_v = v
        v = best_v
        limit = max_used + 2 if max_used + 2 < k else k
        m = ~neigh[v] & ((1 << limit) - 1)
        while m:
            c = (m & -m).bit_length() - 1
            m &= m - 1
            colours[v] = c
            touched = 0
            nb = adj[v]
            while nb:
                u = (nb & -nb).bit_length() - 1
                nb &= nb - 1
                if colours[u] < 0 and not (neigh[u] >> c) & 1:
                    neigh[u] |= 1 << c
                    touched |= 1 << u
            nxt = c if c > max_used else max_used
            if go(done + 1, nxt):
                return True
            while touched:
                u = (touched & -touched).bit_length() - 1
                touched &= touched - 1
                neigh[u] &= ~(1 << c)
            colours[v] = -1
        return False

    if go(0, -1):
        return tuple(colours)
    return None


def find_induced_embedding(n, adj, pn, padj):
    """Lexicographically least induced embedding of the pattern, or None.

    Pattern vertices are assigned in index order with host candidates tried
    ascending, so the first complete assignment is the lex-least tuple.
    """
    if pn > n:
        return None
    if pn == 0:
        return ()
    assign = [-1] * pn

    def bt(i, used):
        for v in range(n):
            if (used >> v) & 1:
                continue
            ok = True
            for j in range(i):
                if ((padj[i] >> j) & 1) != ((adj[v] >> assign[j]) & 1):
                    ok = False
                    break
            if ok:
                assign[i] = v
                if i + 1 == pn or bt(i + 1, used | (1 << v)):
                    return True
                assign[i] = -1
        return False

    if bt(0, 0):
        return tuple(assign)
    return None


def has_induced(n, adj, pn, padj, required=-1):
    """True iff the pattern embeds as an induced subgraph.

    Existence only; pattern vertices are matched in descending-degree order
    for speed.  If ``required`` is a host vertex, only embeddings using it
    count (the hereditary-pruning case: new copies must touch the new vertex).
    """
    if pn > n:
        return False
    if pn == 0:
        return required < 0
    pdeg = [padj[i].bit_count() for i in range(pn)]
    hdeg = [adj[v].bit_count() for v in range(n)]
    base = sorted(range(pn), key=lambda i: (-pdeg[i], i))

    def search(order):
        assign = [-1] * pn
        start = 0
        used = 0
        if required >= 0:
            p0 = order[0]
            if hdeg[required] < pdeg[p0]:
                return False
            assign[p0] = required
            used = 1 << required
            start = 1

        def bt(t, used):
            if t == pn:
                return True
            p = order[t]
            for v in range(n):
                if (used >> v) & 1 or hdeg[v] < pdeg[p]:
                    continue
                ok = True
                for s in range(t):
                    q = order[s]
                    if ((padj[p] >> q) & 1) != ((adj[v] >> assign[q]) & 1):
                        ok = False
                        break
                if ok:
                    assign[p] = v
                    if bt(t + 1, used | (1 << v)):
                        return True
                    assign[p] = -1
            return False

        return bt(start, used)

    if required < 0:
        return search(base)
    for p in range(pn):
        order = [p] + [q for q in base if q != p]
        if search(order):
            return True
    return False


def find_induced_cycle(n, adj, length):
    """Lexicographically least induced cycle of exactly ``length``, or None.

    The cycle is returned with its least vertex first and the smaller of the
    two neighbours second; candidates are grown in ascending order so the
    first hit is the lex-least such sequence.
    """
    if length < 3 or length > n:
        return None
    path = [0] * length

    def grow(depth, used, inner_forbid, v0adj):
        last = path[depth - 1]
        if depth == length - 1:
            cand = adj[last] & v0adj & ~used & ~inner_forbid
            # orientation: closing vertex must exceed path[1]
            cand &= ~((1 << (path[1] + 1)) - 1)
            if cand:
                path[depth] = (cand & -cand).bit_length() - 1
                return True
            return False
        cand = adj[last] & ~used & ~inner_forbid & ~v0adj
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            path[depth] = v
            nf = inner_forbid | (adj[last] if depth >= 2 else 0)
            if grow(depth + 1, used | (1 << v), nf, v0adj):
                return True
        return False

    for v0 in range(n - length + 1):
        path[0] = v0
        below = (1 << (v0 + 1)) - 1
        start = adj[v0] & ~below
        m = start
        while m:
            v1 = (m & -m).bit_length() - 1
            m &= m - 1
            path[1] = v1
            if length == 3:
                cand = adj[v1] & adj[v0] & ~below & ~((1 << (v1 + 1)) - 1)
                if cand:
                    path[2] = (cand & -cand).bit_length() - 1
                    return tuple(path)
                continue
            if grow(2, (1 << v0) | (1 << v1) | below, 0, adj[v0]):
                return tuple(path)
    return None


def canon_form(n, adj):
    """Canonical relabelling: ``(rows, perm)``.

    ``rows`` is the adjacency of the canonical copy (minimum certificate over
    the individualisation-refinement tree) and ``perm[v]`` is the canonical
    position of original vertex ``v``.  Isomorphic graphs get equal ``rows``.

    Refinement is colour refinement with signatures sorted canonically; the
    search individualises every vertex of the first non-singleton cell,
    skipping vertices whose swap with an earlier sibling is an automorphism.
    """
    if n == 0:
        return (), ()
    best = [None, None]  # cert rows, perm

    def refine(colours):
        ncls = max(colours) + 1
        while True:
            masks = [0] * ncls
            for v in range(n):
                masks[colours[v]] |= 1 << v
            sigs = []
            for v in range(n):
                row = adj[v]
                sigs.append((colours[v], tuple((row & masks[c]).bit_count() for c in range(ncls))))
            ranked = {s: i for i, s in enumerate(sorted(set(sigs)))}
            if len(ranked) == ncls:
                return colours
            colours = [ranked[sigs[v]] for v in range(n)]
            ncls = len(ranked)

    def emit(colours):
        inv = [0] * n
        for v in range(n):
            inv[colours[v]] = v
        rows = []
        for i in range(n):
            row = 0
            src = adj[inv[i]]
            for j in range(n):
                if (src >> inv[j]) & 1:
                    row |= 1 << j
            rows.append(row)
        cert = tuple(rows)
        if best[0] is None or cert < best[0]:
            best[0] = cert
            best[1] = tuple(colours)

    def search(colours):
        ncls = max(colours) + 1
        if ncls == n:
            emit(colours)
            return
        counts = [0] * ncls
        for v in range(n):
            counts[colours[v]] += 1
        target = 0
        while counts[target] < 2:
            target += 1
        cell = [v for v in range(n) if colours[v] == target]
        reps = []
        for v in cell:
            skip = False
            for r in reps:
                if (adj[r] & ~(1 << v)) == (adj[v] & ~(1 << r)):
                    skip = True
                    break
            if skip:
                continue
            reps.append(v)
            child = [c if c <= target else c + 1 for c in colours]
            for u in cell:
                if u != v:
                    child[u] = target + 1
            search(refine(child))

    search(refine([0] * n))
    return best[0], best[1]
