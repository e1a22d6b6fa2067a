"""Exact invariants with witnesses, and perfection with certificates.

Clique number is exact branch-and-bound, chromatic number is iterative
deepening on exact k-colourability seeded by the clique lower bound, and
all witnesses are deterministic (see the kernels for the search orders).
Perfection is decided two ways: via the odd-hole/odd-antihole criterion
("spgt") and by checking chi = omega on every induced subgraph ("direct");
both return re-checkable certificates when the graph is imperfect.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from clawlab import kernels
from clawlab.graphs import Graph, vertices_of

DIRECT_MAX_VERTICES = 14


@dataclass(frozen=True)
class InvariantReport:
    omega: int
    alpha: int
    chi: int
    max_degree: int
    clique: tuple[int, ...]
    independent: tuple[int, ...]
    coloring: tuple[int, ...]


@dataclass(frozen=True)
class Certificate:
    """Evidence of imperfection; ``kind`` is odd_hole, odd_antihole or chi_gt_omega."""

    kind: str
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class PerfectionVerdict:
    perfect: bool
    method: str  # "spgt" or "direct"
    certificate: Certificate | None


def clique_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact clique number with a maximum-clique witness."""
    mask = kernels.max_clique(g.n, g.adj)
    return mask.bit_count(), vertices_of(mask)


def independence_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact independence number: clique number of the complement."""
    return clique_number(g.complement())


def chromatic_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact chromatic number with a proper colouring witness."""
    if g.n == 0:
        return 0, ()
    lb = kernels.max_clique(g.n, g.adj).bit_count()
    for k in range(lb, g.n + 1):
        col = kernels.color_with(g.n, g.adj, k)
        if col is not None:
            return k, col
    raise AssertionError("unreachable: n colours always suffice")


def is_omega_colourable(g: Graph) -> bool:
    """chi(g) == omega(g) for the graph itself (not hereditary)."""
    omega = kernels.max_clique(g.n, g.adj).bit_count()
    return g.n == 0 or kernels.color_with(g.n, g.adj, omega) is not None

def invariant_report(g: Graph) -> InvariantReport:
    omega, clique = clique_number(g)
    alpha, independent = independence_number(g)
    chi, coloring = chromatic_number(g)
    return InvariantReport(
        omega=omega,
        alpha=alpha,
        chi=chi,
        max_degree=g.max_degree(),
        clique=clique,
        independent=independent,
        coloring=coloring,
    )


def find_odd_hole(g: Graph) -> tuple[int, ...] | None:
    """Shortest odd chordless cycle of length >= 5, lexicographically least."""
    for length in range(5, g.n + 1, 2):
        cyc = kernels.find_induced_cycle(g.n, g.adj, length)
        if cyc is not None:
            return cyc
    return None


def find_odd_antihole(g: Graph) -> tuple[int, ...] | None:
    """Odd hole of the complement, as a vertex sequence of g.

    The returned vertices induce a chordless odd cycle of length >= 5 in the
    complement; a C5 reports itself (it is its own antihole).
    """
    return find_odd_hole(g.complement())


def is_perfect(g: Graph, method: str = "spgt") -> PerfectionVerdict:
    """Perfection verdict with a certificate when imperfect.

    ``spgt`` searches for an odd hole, then an odd antihole.  ``direct``
    (only for n <= 14) scans connected induced subgraphs on >= 5 vertices
    for chi > omega; smaller or disconnected subgraphs can never be the
    smallest violators.
    """
    method = method.lower()
    if method == "spgt":
        hole = find_odd_hole(g)
        if hole is not None:
            return PerfectionVerdict(False, "spgt", Certificate("odd_hole", hole))
        anti = find_odd_antihole(g)
        if anti is not None:
            return PerfectionVerdict(False, "spgt", Certificate("odd_antihole", anti))
        return PerfectionVerdict(True, "spgt", None)
    if method == "direct":
        if g.n > DIRECT_MAX_VERTICES:
            raise ValueError(f"direct perfection test limited to n <= {DIRECT_MAX_VERTICES}")
        for size in range(5, g.n + 1):
            for sub in itertools.combinations(range(g.n), size):
                h = g.induced(sub)
                if not h.is_connected():
                    continue
                omega = kernels.max_clique(h.n, h.adj).bit_count()
                if kernels.color_with(h.n, h.adj, omega) is None:
                    return PerfectionVerdict(False, "direct", Certificate("chi_gt_omega", sub))
        return PerfectionVerdict(True, "direct", None)
    raise ValueError(f"unknown perfection method {method!r}")


def is_complete_multipartite(g: Graph) -> tuple[tuple[int, ...], ...] | None:
    """Partition into independent parts with all cross edges, or None.

    A graph is complete multipartite exactly when its complement is a
    disjoint union of cliques, so the parts are the complement's components.
    """
    comp = g.complement()
    parts = comp.components()
    for part in parts:
        for u, v in itertools.combinations(part, 2):
            if g.has_edge(u, v):
                return None
    return tuple(parts)
