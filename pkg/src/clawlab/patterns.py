"""Catalog of named small graphs and induced-subgraph testing.

Patterns are addressed by token: the fixed names ``K1_3`` (claw), ``B``
(bull), ``H`` (hourglass), ``D`` (diamond), ``Z1`` (paw), ``Z2`` (hammer),
``THETA`` (5-cap), ``K2_3``, the parametric families ``K<k>``, ``P<k>``,
``C<k>``, ``AH<k>`` (antihole = complement of ``C<k>``), a multiplier for
disjoint copies (``3K1``, ``2K2``), and ``+`` for disjoint unions
(``K1+K3``, ``2K1+K2``).  Pattern graphs are capped at 10 vertices.
"""

from __future__ import annotations

import re
from enum import Enum
from functools import lru_cache

from clawlab import kernels
from clawlab.canon import is_isomorphic
from clawlab.graphs import Graph, bitset_of, vertices_of

MAX_PATTERN_VERTICES = 10

_FIXED = {
    "K1_3": (4, ((0, 1), (0, 2), (0, 3))),
    "B": (5, ((0, 1), (0, 2), (1, 2), (0, 3), (1, 4))),
    "H": (5, ((0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4))),
    "D": (4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3))),
    "Z1": (4, ((0, 1), (0, 2), (1, 2), (0, 3))),
    "Z2": (5, ((0, 1), (0, 2), (1, 2), (0, 3), (3, 4))),
    "THETA": (6, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2))),
    "K2_3": (5, ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4))),
}

_TERM_RE = re.compile(r"^(\d+)?(K1_3|K2_3|AH(\d+)|([KPC])(\d+)|B|H|D|Z1|Z2|THETA)$")


class PatternError(ValueError):
    """Unknown pattern token or parameter out of range."""


def _term_graph(body: str) -> Graph:
    if body in _FIXED:
        n, edges = _FIXED[body]
        return Graph.from_edges(n, edges)
    m = re.match(r"^AH(\d+)$", body)
    if m:
        k = int(m.group(1))
        if k < 4:
            raise PatternError(f"antihole needs k >= 4, got {k}")
        return _term_graph(f"C{k}").complement()
    m = re.match(r"^([KPC])(\d+)$", body)
    if m:
        kind, k = m.group(1), int(m.group(2))
        if kind == "K":
            if k < 1:
                raise PatternError(f"K{k} needs k >= 1")
            return Graph.from_edges(k, [(u, v) for u in range(k) for v in range(u + 1, k)])
        if kind == "P":
            if k < 1:
                raise PatternError(f"P{k} needs k >= 1")
            return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])
        if k < 3:
            raise PatternError(f"C{k} needs k >= 3")
        return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])
    raise PatternError(f"unknown pattern term {body!r}")


@lru_cache(maxsize=None)
def pattern_graph(token: str) -> Graph:
    """Resolve a pattern token to its graph."""
    token = token.strip().upper()
    if not token:
        raise PatternError("empty pattern token")
    pieces = []
    for term in token.split("+"):
        term = term.strip()
        m = _TERM_RE.match(term)
        if not m:
            raise PatternError(f"cannot parse pattern term {term!r}")
        mult = int(m.group(1)) if m.group(1) else 1
        if mult < 1:
            raise PatternError(f"multiplier must be positive in {term!r}")
        g = _term_graph(m.group(2))
        pieces.extend([g] * mult)
    total = sum(g.n for g in pieces)
    if total > MAX_PATTERN_VERTICES:
        raise PatternError(f"pattern {token!r} has {total} vertices (max {MAX_PATTERN_VERTICES})")
    edges = []
    off = 0
    for g in pieces:
        edges.extend((u + off, v + off) for u, v in g.edge_list())
        off += g.n
    return Graph.from_edges(total, edges)


def _as_graph(pattern) -> Graph:
    return pattern if isinstance(pattern, Graph) else pattern_graph(pattern)


def find_induced(g: Graph, pattern) -> tuple[int, ...] | None:
    """Lexicographically least induced embedding of ``pattern`` in ``g``.

    The result maps pattern vertex ``i`` to host vertex ``result[i]``;
    ``None`` when the pattern does not occur.  ``pattern`` may be a token
    or any small Graph.
    """
    p = _as_graph(pattern)
    return kernels.find_induced_embedding(g.n, g.adj, p.n, p.adj)


def has_induced(g: Graph, pattern, required: int = -1) -> bool:
    """Existence-only containment test (faster search order than find_induced)."""
    p = _as_graph(pattern)
    return kernels.has_induced(g.n, g.adj, p.n, p.adj, required)


def is_free(g: Graph, patterns) -> bool:
    """True iff none of the patterns occurs in ``g`` as an induced subgraph."""
    return all(not has_induced(g, p) for p in patterns)


class NeighborhoodShape(Enum):
    """Isomorphism type of the subgraph a cycle cuts out of a neighbourhood."""

    K2 = "K2"
    P3 = "P3"
    P4 = "P4"
    C5 = "C5"
    TWO_K2 = "2K2"
    NONE = "NONE"
    OTHER = "OTHER"


_SHAPES = (
    (NeighborhoodShape.K2, "K2"),
    (NeighborhoodShape.P3, "P3"),
    (NeighborhoodShape.P4, "P4"),
    (NeighborhoodShape.C5, "C5"),
    (NeighborhoodShape.TWO_K2, "2K2"),
)


def induces_cycle(g: Graph, vertices) -> bool:
    """True iff the vertex set induces a (chordless) cycle in ``g``."""
    vs = sorted(set(vertices))
    if len(vs) < 3:
        return False
    sub = g.induced(vs)
    return all(d == 2 for d in sub.degrees()) and sub.is_connected()


def classify_cycle_neighborhood(g: Graph, cycle, x: int) -> NeighborhoodShape:
    """Isomorphism type of the subgraph induced by ``N(x)`` on a cycle.

    ``cycle`` must induce a cycle of length at least 5 and ``x`` must lie
    outside it.  Returns NONE when ``x`` has no neighbour on the cycle and
    OTHER for shapes outside the claw-free repertoire, so the classifier
    doubles as a falsifier on hosts that do contain a claw.
    """
    cset = sorted(set(cycle))
    if x in cset:
        raise ValueError(f"vertex {x} lies on the cycle")
    if len(cset) < 5 or not induces_cycle(g, cset):
        raise ValueError("vertex set does not induce a cycle of length >= 5")
    nb = vertices_of(g.adj[x] & bitset_of(cset))
    if not nb:
        return NeighborhoodShape.NONE
    sub = g.induced(nb)
    for shape, token in _SHAPES:
        p = pattern_graph(token)
        if sub.n == p.n and is_isomorphic(sub, p):
            return shape
    return NeighborhoodShape.OTHER
