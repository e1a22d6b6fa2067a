"""Immutable bitset-backed simple graphs with graph6 serialisation.

Vertices are 0..n-1 and adjacency is one int bitmask per vertex, so the
set algebra used everywhere else (complements, induced subgraphs, common
neighbourhoods) stays branch-free.  Capacity is capped at 64 vertices:
one machine word per row, and everything built here is far smaller.
"""

from __future__ import annotations

from typing import Iterable, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid graph construction or serialisation input."""


def bitset_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex indices into a bitmask."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def vertices_of(mask: int) -> tuple[int, ...]:
    """Unpack a bitmask into a sorted tuple of vertex indices."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


class Graph:
    """Simple undirected graph; immutable after construction.

    ``adj[v]`` is the neighbour bitmask of vertex ``v``.  Construction
    asserts symmetry, irreflexivity and that all set bits are below ``n``.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int] = ()):
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        adj = tuple(adj) if adj else (0,) * n
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"row {v} has bits outside 0..{n - 1}")
            if (row >> v) & 1:
                raise GraphError(f"loop at vertex {v}")
        for v, row in enumerate(adj):
            m = row
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                if not (adj[u] >> v) & 1:
                    raise GraphError(f"asymmetric edge {v}-{u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list; duplicate edges collapse."""
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop edge ({u},{v})")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def from_graph6(cls, text: str) -> "Graph":
        return parse_graph6(text)

    def to_graph6(self) -> str:
        return to_graph6(self)

    # -- basic queries -------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return vertices_of(self.adj[v])

    def edge_list(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            m = self.adj[v] >> (v + 1)
            while m:
                low = m & -m
                out.append((v, v + low.bit_length()))
                m ^= low
        return out

    def n_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    # -- algebra -------------------------------------------------------

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple((full & ~row) & ~(1 << v) for v, row in enumerate(self.adj)))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph; vertex order is ascending original index."""
        keep = sorted(set(vertices))
        if keep and not (0 <= keep[0] and keep[-1] < self.n):
            raise GraphError(f"vertex set not within 0..{self.n - 1}")
        pos = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            row = 0
            m = self.adj[v]
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                if u in pos:
                    row |= 1 << pos[u]
            rows.append(row)
        return Graph(len(keep), rows)

    def is_connected(self) -> bool:
        """True iff the graph has one component (n=0, n=1 count as connected)."""
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            m = frontier
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def components(self) -> list[tuple[int, ...]]:
        """Connected components as sorted vertex tuples, ordered by least vertex."""
        out = []
        unseen = (1 << self.n) - 1
        while unseen:
            start = (unseen & -unseen).bit_length() - 1
            comp = 1 << start
            frontier = comp
            while frontier:
                nxt = 0
                m = frontier
                while m:
                    v = (m & -m).bit_length() - 1
                    m &= m - 1
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            out.append(vertices_of(comp))
            unseen &= ~comp
        return out

    # -- dunder --------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_list()!r})"


def graph_new(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Alias of :meth:`Graph.from_edges` for symmetry with the parser."""
    return Graph.from_edges(n, edges)


# -- graph6 ------------------------------------------------------------
#
# Format (one graph per line, no header): for n <= 62 the first byte is
# n+63; for 63 <= n <= 258047 the first byte is '~' (126) followed by n in
# three 6-bit groups.  The upper triangle of the adjacency matrix is read
# column by column -- x(0,1), x(0,2), x(1,2), x(0,3), ... -- packed
# big-endian into 6-bit groups, zero-padded, each group offset by 63.


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [chr(n + 63)]
    else:
        head = ["~", chr(63 + ((n >> 12) & 63)), chr(63 + ((n >> 6) & 63)), chr(63 + (n & 63))]
    bits = []
    for col in range(1, n):
        for row in range(col):
            bits.append((g.adj[row] >> col) & 1)
    chars = []
    for i in range(0, len(bits), 6):
        group = 0
        for j, b in enumerate(bits[i : i + 6]):
            group |= b << (5 - j)
        chars.append(chr(group + 63))
    return "".join(head) + "".join(chars)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if not s:
        raise GraphError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"character {ch!r} outside graph6 range 63..126")
    if s[0] == "~":
        if len(s) < 4:
            raise GraphError("truncated graph6 size prefix")
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n > MAX_VERTICES:
        raise GraphError(f"graph6 vertex count {n} exceeds capacity {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError(f"graph6 body length {len(body)} wrong for n={n}")
    bits = []
    for ch in body:
        group = ord(ch) - 63
        for j in range(5, -1, -1):
            bits.append((group >> j) & 1)
    if any(bits[nbits:]):
        raise GraphError("nonzero trailing bits in graph6 body")
    rows = [0] * n
    i = 0
    for col in range(1, n):
        for row in range(col):
            if bits[i]:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            i += 1
    return Graph(n, rows)
