"""Theorem-level verification campaigns over enumerated graph classes.

Each theorem id binds a graph class (enumeration config plus emission
filters) and a per-graph predicate; a run reports the class size and every
counterexample as (graph6, reason).  In-theorem configurations must come
back empty -- the statements are proved -- while deliberately broken
hypotheses (e.g. forbidding C4 instead of a P5/Z2 subgraph) are expected
to surface the counterexample families.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass

from clawlab import kernels
from clawlab.canon import canonical_label
from clawlab.enumeration import EnumerationConfig, enumerate_graphs
from clawlab.graphs import Graph, bitset_of, parse_graph6, to_graph6, vertices_of
from clawlab.invariants import (
    chromatic_number,
    clique_number,
    find_odd_antihole,
    is_perfect,
)
from clawlab.patterns import NeighborhoodShape, classify_cycle_neighborhood, has_induced
from clawlab.structure import TheoremViolation, VerdictKind, classify_claw_bull_free, olariu_classify

THEOREM_IDS = (
    "T1_BRAUSE",
    "T3_OLARIU",
    "T4_NOALPHA",
    "T5_ALPHA3",
    "T6_BULL",
    "L5_BENREBEA",
    "L6_C5FREE",
    "OBS2_NEIGHBORHOOD",
    "SPGT_CROSSCHECK",
    "L7_RULES",
)

_NEEDS_Y = ("T4_NOALPHA", "T5_ALPHA3")

_GOOD_SHAPES = (
    NeighborhoodShape.K2,
    NeighborhoodShape.P3,
    NeighborhoodShape.P4,
    NeighborhoodShape.C5,
    NeighborhoodShape.TWO_K2,
)


@dataclass
class VerificationReport:
    theorem: str
    max_n: int
    y: str | None
    class_size: int
    counterexamples: list[tuple[str, str]]
    elapsed: float

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def induced_cycles(g: Graph, min_len: int):
    """All induced cycles of length >= min_len, one orientation each.

    Cycles come out as vertex sequences starting at their least vertex with
    the smaller neighbour second.  A candidate adjacent to the start can
    only close the cycle (an internal vertex there would be a chord), so
    candidates split into closing and extending sets.
    """
    adj = g.adj
    min_len = max(min_len, 3)

    def grow(path, used, inner_forbid, v0adj):
        last = path[-1]
        base = adj[last] & ~used & ~inner_forbid
        if len(path) + 1 >= min_len:
            m = base & v0adj
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                if path[1] < v:
                    yield tuple(path) + (v,)
        m = base & ~v0adj
        nf = inner_forbid | adj[last]
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            yield from grow(path + [v], used | (1 << v), nf, v0adj)

    for v0 in range(g.n):
        below = (1 << (v0 + 1)) - 1
        m = adj[v0] & ~below
        while m:
            v1 = (m & -m).bit_length() - 1
            m &= m - 1
            yield from grow([v0, v1], below | (1 << v1), 0, adj[v0])


def _reasons_imperfect_or_not_omega(g: Graph, require_odd_hole_free: bool):
    reasons = []
    omega, _ = clique_number(g)
    if kernels.color_with(g.n, g.adj, omega) is None:
        chi, _ = chromatic_number(g)
        reasons.append(f"not omega-colourable: chi={chi} > omega={omega}")
    verdict = is_perfect(g, "spgt")
    if not verdict.perfect:
        cert = verdict.certificate
        reasons.append(f"imperfect: {cert.kind} {list(cert.vertices)}")
    if require_odd_hole_free:
        for length in range(7, g.n + 1, 2):
            cyc = kernels.find_induced_cycle(g.n, g.adj, length)
            if cyc is not None:
                reasons.append(f"odd hole of length {length}: {list(cyc)}")
                break
    return reasons


def _check_perfect_class(require_odd_hole_free=False):
    def check(g: Graph):
        return _reasons_imperfect_or_not_omega(g, require_odd_hole_free)

    return check


def _check_spgt(g: Graph):
    spgt = is_perfect(g, "spgt")
    direct = is_perfect(g, "direct")
    if spgt.perfect != direct.perfect:
        return [f"spgt says perfect={spgt.perfect}, direct says perfect={direct.perfect}"]
    return []


def _check_olariu(g: Graph):
    try:
        olariu_classify(g)
    except TheoremViolation as exc:
        return [str(exc)]
    return []


def _check_bull_dichotomy(g: Graph):
    try:
        verdict = classify_claw_bull_free(g)
    except TheoremViolation as exc:
        return [str(exc)]
    if verdict.kind == VerdictKind.OUT_OF_CLASS:
        return [f"unexpected OUT_OF_CLASS ({verdict.violation})"]
    if verdict.kind == VerdictKind.ODD_CYCLE_INFLATION:
        k = verdict.partition.k
        if k < 7 or k % 2 == 0:
            return [f"inflation with invalid cycle length {k}"]
    return []


def _check_ben_rebea(g: Graph):
    anti = find_odd_antihole(g)
    if anti is None:
        return []
    if kernels.find_induced_cycle(g.n, g.adj, 5) is None:
        return [f"odd antihole {list(anti)} but no hole of order 5"]
    return []


def _check_c5_free(g: Graph):
    cyc = kernels.find_induced_cycle(g.n, g.adj, 5)
    if cyc is not None:
        return [f"induced C5 {list(cyc)}"]
    return []


def _check_obs2(g: Graph):
    reasons = []
    for cycle in induced_cycles(g, 5):
        cmask = bitset_of(cycle)
        cset = set(cycle)
        for x in range(g.n):
            if x in cset or not (g.adj[x] & cmask):
                continue
            shape = classify_cycle_neighborhood(g, cycle, x)
            if shape not in _GOOD_SHAPES:
                reasons.append(f"cycle {list(cycle)}, vertex {x}: shape {shape.value}")
    return reasons


def _check_l7_rules(g: Graph):
    reasons = []
    for cycle in induced_cycles(g, 6):
        cmask = bitset_of(cycle)
        outside = [w for w in range(g.n) if not ((cmask >> w) & 1)]
        for i, w in enumerate(outside):
            for w2 in outside[i + 1 :]:
                c = (g.adj[w] & g.adj[w2] & cmask).bit_count()
                adjacent = g.has_edge(w, w2)
                if adjacent != (c >= 2):
                    reasons.append(
                        f"cycle {list(cycle)}: vertices {w},{w2} share {c} cycle"
                        f" neighbours but adjacent={adjacent}"
                    )
    return reasons


def _theorem_setup(theorem: str, y: str | None):
    if theorem == "T1_BRAUSE":
        return dict(free=("K1_3", "2K2"), connected=True, min_alpha=3), _check_perfect_class()
    if theorem == "T3_OLARIU":
        return dict(free=("Z1",), connected=True), _check_olariu
    if theorem == "T4_NOALPHA":
        return dict(free=("K1_3", y), connected=True, exclude_odd=True), _check_perfect_class()
    if theorem == "T5_ALPHA3":
        check = _check_perfect_class(require_odd_hole_free=(y.strip().upper() == "Z2"))
        return dict(free=("K1_3", y), connected=True, exclude_odd=True, min_alpha=3), check
    if theorem == "T6_BULL":
        return dict(free=("K1_3", "B"), connected=True, min_alpha=3), _check_bull_dichotomy
    if theorem == "L5_BENREBEA":
        return dict(free=("K1_3",), connected=True, min_alpha=3), _check_ben_rebea
    if theorem == "L6_C5FREE":
        return dict(free=("K1_3", "THETA"), connected=True, min_alpha=3), _check_c5_free
    if theorem == "OBS2_NEIGHBORHOOD":
        return dict(free=("K1_3",), connected=True), _check_obs2
    if theorem == "SPGT_CROSSCHECK":
        return dict(free=(), connected=False), _check_spgt
    if theorem == "L7_RULES":
        return dict(free=("K1_3", "B"), connected=True), _check_l7_rules
    raise ValueError(f"unknown theorem id {theorem!r}")


def verify(theorem: str, max_n: int, y: str | None = None) -> VerificationReport:
    """Run one verification campaign; see THEOREM_IDS for the statements."""
    theorem = theorem.strip().upper()
    if theorem not in THEOREM_IDS:
        raise ValueError(f"unknown theorem id {theorem!r}")
    if theorem in _NEEDS_Y and not y:
        raise ValueError(f"{theorem} requires a forbidden pattern y")
    setup, check = _theorem_setup(theorem, y)
    config = EnumerationConfig(
        max_n=max_n,
        connected_only=setup.get("connected", False),
        free_of=setup.get("free", ()),
        min_alpha=setup.get("min_alpha", 0),
        exclude_odd_cycles=setup.get("exclude_odd", False),
    )
    t0 = time.perf_counter()
    examined = 0
    counterexamples: list[tuple[str, str]] = []

    def visitor(g: Graph):
        nonlocal examined
        examined += 1
        for reason in check(g):
            counterexamples.append((to_graph6(g), reason))

    enumerate_graphs(config, visitor)
    return VerificationReport(
        theorem=theorem,
        max_n=max_n,
        y=y,
        class_size=examined,
        counterexamples=counterexamples,
        elapsed=time.perf_counter() - t0,
    )


_COLUMNS = ("theorem", "y", "max_n", "class_size", "elapsed", "graph6", "reason")


def _sorted_rows(report: VerificationReport):
    decorated = []
    for g6, reason in report.counterexamples:
        g = parse_graph6(g6)
        decorated.append(((g.n, canonical_label(g), reason), g6, reason))
    decorated.sort()
    rows = []
    for _, g6, reason in decorated:
        rows.append(
            {
                "theorem": report.theorem,
                "y": report.y or "",
                "max_n": report.max_n,
                "class_size": report.class_size,
                "elapsed": round(report.elapsed, 6),
                "graph6": g6,
                "reason": reason,
            }
        )
    return rows


def report_emit(report: VerificationReport, format: str = "json") -> str:
    """Counterexample table with the run's scalars on every row.

    Empty reports emit "[]" (json) or a header-only table (csv); rows are
    sorted by (n, canonical label).
    """
    rows = _sorted_rows(report)
    if format == "json":
        return json.dumps(rows, indent=2)
    if format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    raise ValueError(f"unknown report format {format!r}")
