"""Isomorph-free exhaustive generation of small graphs.

Generation is canonical augmentation: each representative on n-1 vertices
is extended by one new vertex over all neighbourhood bitmasks, and an
extension survives only when deleting the new vertex reaches the same
graph (up to isomorphism) as deleting the vertex in the last canonical
position -- i.e. the child was built along its canonical construction
path.  Children of one parent are deduplicated by canonical form; distinct
parents cannot produce the same class, so no global table is needed.

Induced-hereditary constraints (pattern-freeness) prune whole subtrees;
connectivity, independence-number and odd-cycle filters are not hereditary
and apply only at emission.
"""

from __future__ import annotations

from dataclasses import dataclass

from clawlab import kernels
from clawlab.graphs import Graph, to_graph6
from clawlab.patterns import pattern_graph

MAX_ENUM_VERTICES = 11  # documented runtime wall
MAX_PRUNE_PATTERN_VERTICES = 7
ORACLE_MAX_VERTICES = 7


@dataclass(frozen=True)
class EnumerationConfig:
    max_n: int
    connected_only: bool = False
    free_of: tuple[str, ...] = ()
    min_alpha: int = 0
    exclude_odd_cycles: bool = False

    def __post_init__(self):
        object.__setattr__(self, "free_of", tuple(self.free_of))
        if not 1 <= self.max_n <= MAX_ENUM_VERTICES:
            raise ValueError(f"max_n must be in 1..{MAX_ENUM_VERTICES}")
        for token in self.free_of:
            p = pattern_graph(token)
            if p.n > MAX_PRUNE_PATTERN_VERTICES:
                raise ValueError(
                    f"prune pattern {token} has {p.n} vertices (max {MAX_PRUNE_PATTERN_VERTICES})"
                )


def _delete_last(n, adj):
    """Adjacency rows after removing vertex n-1."""
    mask = (1 << (n - 1)) - 1
    return tuple(adj[v] & mask for v in range(n - 1))


def _delete_vertex(n, adj, x):
    rows = []
    for v in range(n):
        if v == x:
            continue
        row = adj[v]
        low = row & ((1 << x) - 1)
        high = row >> (x + 1)
        rows.append(low | (high << x))
    return tuple(rows)


def _children(rep: Graph, pattern_adjs):
    """Canonically accepted one-vertex extensions of a representative."""
    n = rep.n + 1
    out = []
    seen = {}
    for mask in range(1 << rep.n):
        rows = [rep.adj[v] | (((mask >> v) & 1) << (n - 1)) for v in range(rep.n)]
        rows.append(mask)
        adj = tuple(rows)
        fails = False
        for pn, padj in pattern_adjs:
            if kernels.has_induced(n, adj, pn, padj, n - 1):
                fails = True
                break
        if fails:
            continue
        cert, perm = kernels.canon_form(n, adj)
        if cert in seen:
            continue
        if perm[n - 1] == n - 1:
            accepted = True
        else:
            w_last = perm.index(n - 1)
            a = kernels.canon_form(n - 1, _delete_last(n, adj))[0]
            b = kernels.canon_form(n - 1, _delete_vertex(n, adj, w_last))[0]
            accepted = a == b
        seen[cert] = accepted
        if accepted:
            out.append(Graph(n, cert))
    out.sort(key=lambda g: g.adj)
    return out


def _emit_ok(g: Graph, config: EnumerationConfig) -> bool:
    if config.connected_only and not g.is_connected():
        return False
    if config.exclude_odd_cycles:
        if g.n % 2 == 1 and g.n >= 3 and all(d == 2 for d in g.degrees()) and g.is_connected():
            return False
    if config.min_alpha > 0:
        comp = g.complement()
        if kernels.max_clique(comp.n, comp.adj).bit_count() < config.min_alpha:
            return False
    return True


def enumerate_graphs(config: EnumerationConfig, visit=None) -> int:
    """Visit one canonical representative per isomorphism class; return count.

    Classes run over 1..max_n vertices and satisfy all config constraints;
    visit order is (n ascending, canonical adjacency ascending) and the
    representatives passed to ``visit`` are canonical copies.
    """
    pattern_adjs = []
    for token in config.free_of:
        p = pattern_graph(token)
        pattern_adjs.append((p.n, p.adj))

    count = 0
    single = Graph(1, (0,))
    level = []
    if all(not kernels.has_induced(1, single.adj, pn, padj) for pn, padj in pattern_adjs):
        level = [single]
    for n in range(1, config.max_n + 1):
        if n > 1:
            nxt = []
            for rep in level:
                nxt.extend(_children(rep, pattern_adjs))
            nxt.sort(key=lambda g: g.adj)
            level = nxt
        for g in level:
            if _emit_ok(g, config):
                count += 1
                if visit is not None:
                    visit(g)
    return count


def oracle_enumerate(max_n: int) -> dict[int, list[Graph]]:
    """All isomorphism classes on 0..max_n vertices by exhaustive generation.

    Every labelled graph is generated (2^(n(n-1)/2) per size) and classes are
    deduplicated by canonical form.  Test oracle only; max_n <= 7.
    """
    if max_n > ORACLE_MAX_VERTICES:
        raise ValueError(f"oracle enumeration capped at {ORACLE_MAX_VERTICES} vertices")
    catalog: dict[int, list[Graph]] = {}
    for n in range(0, max_n + 1):
        seen = set()
        nbits = n * (n - 1) // 2
        pairs = [(u, v) for v in range(1, n) for u in range(v)]
        for bits in range(1 << nbits):
            rows = [0] * n
            b = bits
            for u, v in pairs:
                if b & 1:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                b >>= 1
            seen.add(kernels.canon_form(n, tuple(rows))[0])
        catalog[n] = [Graph(n, cert) for cert in sorted(seen)]
    return catalog


def catalog_labels(catalog: dict[int, list[Graph]]) -> dict[int, set[str]]:
    """graph6 label sets per size, for comparing enumerations."""
    return {n: {to_graph6(g) for g in gs} for n, gs in catalog.items()}
