import itertools
import random

import pytest

from clawlab.enumeration import oracle_enumerate
from clawlab.graphs import Graph


@pytest.fixture(scope="session")
def oracle6():
    return oracle_enumerate(6)


@pytest.fixture(scope="session")
def oracle7():
    return oracle_enumerate(7)


@pytest.fixture()
def rng():
    return random.Random(0xC1A3)


def random_graph(rng, n, p):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def permuted(rng, g):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edge_list()]), perm


# -- brute-force oracles (independent of the kernels under test) -----------


def brute_clique_number(g):
    for r in range(g.n, 0, -1):
        for sub in itertools.combinations(range(g.n), r):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(sub, 2)):
                return r
    return 0


def brute_chromatic_number(g):
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for assign in itertools.product(range(k), repeat=g.n):
            if all(assign[u] != assign[v] for u, v in g.edge_list()):
                return k
    raise AssertionError


def brute_is_isomorphic(g, h):
    if g.n != h.n:
        return False
    for perm in itertools.permutations(range(g.n)):
        if all(h.has_edge(perm[u], perm[v]) == g.has_edge(u, v)
               for u in range(g.n) for v in range(u + 1, g.n)):
            return True
    return False


def brute_has_induced(g, p):
    if p.n > g.n:
        return False
    for sub in itertools.combinations(range(g.n), p.n):
        for perm in itertools.permutations(sub):
            if all(((p.adj[i] >> j) & 1) == g.has_edge(perm[i], perm[j])
                   for i in range(p.n) for j in range(i + 1, p.n)):
                return True
    return False


def brute_induced_cycle_sets(g, exact_len):
    found = []
    for sub in itertools.combinations(range(g.n), exact_len):
        h = g.induced(sub)
        if all(d == 2 for d in h.degrees()) and h.is_connected():
            found.append(frozenset(sub))
    return found
