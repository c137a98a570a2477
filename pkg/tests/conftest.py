import random
from fractions import Fraction
from itertools import combinations
from pathlib import Path

import pytest

from boolebounds.instance import AtomDistribution, BooleInstance, SetFamily, marginal_of
from boolebounds.reductions import Graph

FIXTURES = Path(__file__).parent / "fixtures"


def random_atoms(rng, n, max_support=None, max_den=12):
    """A random atom distribution with small-denominator weights."""
    size = 1 << n
    k = rng.randint(1, max_support or size)
    support = rng.sample(range(size), k)
    raw = [rng.randint(1, max_den) for _ in support]
    total = sum(raw)
    return AtomDistribution(n, tuple((t, Fraction(r, total)) for t, r in zip(support, raw)))


def project(x, fam):
    return BooleInstance(fam, tuple(marginal_of(x, s) for s in fam))


def random_family(rng, n, required=(), p=0.5):
    members = list(required)
    for s in range(1, 1 << n):
        if s not in members and rng.random() < p:
            members.append(s)
    if not members:
        members.append(rng.randrange(1, 1 << n))
    rng.shuffle(members)
    return SetFamily(n, tuple(members))


def random_feasible(rng, n, required=(), p=0.5):
    fam = random_family(rng, n, required, p)
    return project(random_atoms(rng, n), fam)


def graph_from_nx(g):
    nodes = sorted(g.nodes())
    idx = {v: i + 1 for i, v in enumerate(nodes)}
    return Graph(len(nodes), tuple((idx[u], idx[v]) for u, v in g.edges()))


def cycle(n):
    return Graph(n, tuple((i, i % n + 1) for i in range(1, n + 1)))


def complete(n):
    return Graph(n, tuple(combinations(range(1, n + 1), 2)))


def brute_max_clique(g):
    """Largest vertex subset whose pairs are all edges; independent of the library."""
    edges = set(g.edges)
    best = 1
    for size in range(2, g.n + 1):
        for sub in combinations(range(1, g.n + 1), size):
            if all(pair in edges for pair in combinations(sub, 2)):
                best = size
                break
    return best


@pytest.fixture
def rng():
    return random.Random(20261018)
