"""Independent oracles shared by the test modules.

Nothing here calls the library's closure, join or enumeration code; the
oracles work on plain index matrices so they can check those paths.
"""

import itertools
import random

import pytest
from hypothesis import strategies as st

from valuelattice.poset import ElementId, build_poset


def warshall(n, pairs):
    """Reflexive-transitive closure as an n x n boolean matrix."""
    m = [[i == j for j in range(n)] for i in range(n)]
    for a, b in pairs:
        m[a][b] = True
    for k in range(n):
        for i in range(n):
            if m[i][k]:
                for j in range(n):
                    if m[k][j]:
                        m[i][j] = True
    return m


def oracle_join(pairs, elements, a, b):
    """Least upper bound by scanning every candidate against the raw pair set."""
    ups = [u for u in elements if (a, u) in pairs and (b, u) in pairs]
    least = [u for u in ups if all((u, v) in pairs for v in ups)]
    return least[0] if len(least) == 1 else None


def brute_force_posets(n):
    """Every reflexive, antisymmetric, transitive relation on range(n), by filtering all relations."""
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    found = []
    for bits in range(1 << len(off)):
        rel = {off[k] for k in range(len(off)) if bits >> k & 1}
        if any((j, i) in rel for i, j in rel):
            continue
        if any((i, k) not in rel for i, j in rel for j2, k in rel if j == j2 and i != k):
            continue
        found.append(frozenset(rel))
    return found


def random_dag(rng, n, density):
    """Random strict relation compatible with a random labelling order."""
    perm = list(range(n))
    rng.shuffle(perm)
    return [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < density]


def poset_from_indices(n, pairs):
    es = [ElementId(str(k)) for k in range(n)]
    return build_poset(es, [(es[a], es[b]) for a, b in pairs]), es


@st.composite
def posets(draw, max_size=7):
    n = draw(st.integers(1, max_size))
    perm = draw(st.permutations(range(n)))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    # orient every edge along perm so the relation is acyclic
    rank = {x: k for k, x in enumerate(perm)}
    strict = [(a, b) if rank[a] < rank[b] else (b, a) for a, b in edges if a != b]
    p, _ = poset_from_indices(n, strict)
    return p


@pytest.fixture
def rng():
    return random.Random(20261019)


def pairs_of(p):
    return itertools.product(p.elements, repeat=2)
