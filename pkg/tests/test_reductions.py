import random
from fractions import Fraction as F
from itertools import combinations

import networkx as nx
import pytest

from boolebounds.errors import SizeGuardError, ValidationError
from boolebounds.hailperin import union_bounds
from boolebounds.numerics import GE, LinearProgram, Row, lp_enumerate_basic
from boolebounds.reductions import (
    Graph,
    WeightedGraph,
    clique_lp,
    cliques,
    color_gadget,
    fractional_chromatic,
    has_k_clique,
    independent_sets,
    max_union_via_dual,
    parse_weighted_graph,
    phi_membership,
    weighted_graph_to_doc,
)

from conftest import brute_max_clique, complete, cycle, graph_from_nx

PATH4 = Graph(4, ((1, 2), (2, 3), (3, 4)))
TRIANGLE = complete(3)


def test_graph_validation():
    with pytest.raises(ValidationError):
        Graph(2, ((1, 1),))
    with pytest.raises(ValidationError):
        Graph(2, ((1, 2), (2, 1)))
    with pytest.raises(ValidationError):
        Graph(2, ((1, 3),))


def test_color_gadget_shapes():
    c5 = color_gadget(cycle(5))
    assert len(c5.family) == 10
    assert sorted(c5.b) == [0] * 5 + [F(1, 5)] * 5
    k2 = color_gadget(complete(2))
    assert dict(k2.items()) == {0b01: F(1, 2), 0b10: F(1, 2), 0b11: 0}
    empty = color_gadget(Graph(3, ()))
    assert empty.b == (F(1, 3),) * 3


def _independent_set_lp(g):
    # built here from scratch so the oracle shares nothing with the library
    sets = [s for r in range(1, g.n + 1) for s in combinations(range(1, g.n + 1), r)
            if not any(p in set(g.edges) for p in combinations(s, 2))]
    rows = tuple(Row(tuple(1 if u in s else 0 for s in sets), GE, 1) for u in range(1, g.n + 1))
    return LinearProgram(len(sets), (1,) * len(sets), rows)


@pytest.mark.parametrize("g, chi", [(complete(3), F(3)), (cycle(5), F(5, 2)), (Graph(4, ()), F(1)), (complete(4), F(4))])
def test_fractional_chromatic(g, chi):
    assert fractional_chromatic(g) == chi
    lp = _independent_set_lp(g)
    if lp.num_vars <= 12:
        assert lp_enumerate_basic(lp, "min").value == chi


def test_independent_sets_and_cliques_against_networkx():
    rng = random.Random(41)
    for _ in range(25):
        nxg = nx.gnp_random_graph(rng.randint(1, 7), 0.5, seed=rng.randrange(10**6))
        g = graph_from_nx(nx.convert_node_labels_to_integers(nxg))
        found = {frozenset(i + 1 for i in range(g.n) if s >> i & 1) for s in cliques(g)}
        expected = set()
        full = nx.Graph()
        full.add_nodes_from(range(1, g.n + 1))
        full.add_edges_from(g.edges)
        for c in nx.enumerate_all_cliques(full):
            expected.add(frozenset(c))
        assert found == expected
        ind = {frozenset(i + 1 for i in range(g.n) if s >> i & 1) for s in independent_sets(g)}
        assert ind == {frozenset(c) for c in nx.enumerate_all_cliques(nx.complement(full))}


@pytest.mark.parametrize(
    "g, w, value",
    [
        (complete(2), (F(1),), F(1)),
        (TRIANGLE, (F(1),) * 3, F(2)),
        (PATH4, (F(1),) * 3, F(3)),
    ],
)
def test_clique_lp(g, w, value):
    assert clique_lp(WeightedGraph(g, w)) == value


def test_clique_lp_triangle_by_oracle():
    # y_e <= 1 per edge, y_12 + y_23 + y_13 <= 2; free y split by hand
    rows = []
    for e in range(3):
        c = [0] * 6
        c[e], c[e + 3] = -1, 1
        rows.append(Row(tuple(c), GE, -1))
    rows.append(Row((-1, -1, -1, 1, 1, 1), GE, -2))
    lp = LinearProgram(6, (1, 1, 1, -1, -1, -1), tuple(rows))
    assert lp_enumerate_basic(lp, "max").value == clique_lp(WeightedGraph(TRIANGLE, (F(1),) * 3)) == 2


def test_max_union_via_dual_examples():
    edge = WeightedGraph(complete(2), (F(1, 8),))
    # full family on two events: 1/2 + 1/2 - 1/8
    assert max_union_via_dual(edge) == F(7, 8) == 1 - clique_lp(edge)
    tri = WeightedGraph(TRIANGLE, (F(1, 18),) * 3)
    assert max_union_via_dual(tri) == 1 - clique_lp(tri)
    zero = WeightedGraph(PATH4, (F(0),) * 3)
    assert clique_lp(zero) == 0 and max_union_via_dual(zero) == 1
    with pytest.raises(ValidationError):
        max_union_via_dual(WeightedGraph(complete(2), (F(1, 3),)))


def test_dual_chain_random():
    rng = random.Random(43)
    for _ in range(12):
        n = rng.randint(2, 5)
        nxg = nx.gnp_random_graph(n, 0.6, seed=rng.randrange(10**6))
        if nxg.number_of_edges() == 0:
            continue
        g = graph_from_nx(nxg)
        w = tuple(F(rng.randint(0, 64), 64) / (n * n) for _ in g.edges)
        gw = WeightedGraph(g, w)
        assert max_union_via_dual(gw) == 1 - clique_lp(gw)


def _clique_lp_by_oracle(g, w):
    # LP dual: min sum (|T| - 1) z_T over z >= 0 with sum_{T ⊇ e} z_T = w_e
    cl = [t for size in range(2, g.n + 1) for t in combinations(range(1, g.n + 1), size)
             if set(combinations(t, 2)) <= set(g.edges)]
    rows = tuple(Row(tuple(1 if set(e) <= set(t) else 0 for t in cl), "=", we) for e, we in zip(g.edges, w))
    lp = LinearProgram(len(cl), tuple(len(t) - 1 for t in cl), rows)
    return lp_enumerate_basic(lp, "min").value


def test_clique_lp_not_monotone_with_free_variables():
    # y is sign-free, so raising a weight can lower the optimum
    k4 = complete(4)
    w = (F(0), F(1), F(1), F(3), F(2), F(1))
    raised = (F(1),) + w[1:]
    assert clique_lp(WeightedGraph(k4, w)) == _clique_lp_by_oracle(k4, w) == 7
    assert clique_lp(WeightedGraph(k4, raised)) == _clique_lp_by_oracle(k4, raised) == 6


def test_clique_lp_convex_in_weights():
    rng = random.Random(47)
    g = graph_from_nx(nx.gnp_random_graph(5, 0.7, seed=3))
    for _ in range(10):
        w1 = tuple(F(rng.randint(0, 8), 8) for _ in g.edges)
        w2 = tuple(F(rng.randint(0, 8), 8) for _ in g.edges)
        mid = tuple((a + b) / 2 for a, b in zip(w1, w2))
        f = lambda w: clique_lp(WeightedGraph(g, w))
        assert 2 * f(mid) <= f(w1) + f(w2)


def test_phi_membership():
    assert not phi_membership(TRIANGLE, (F(1),) * 3)
    for g in (TRIANGLE, PATH4, complete(5)):
        m = len(g.edges)
        assert phi_membership(g, (F(0),) * m)
        assert phi_membership(g, (F(-5),) + (F(0),) * (m - 1))
    assert phi_membership(TRIANGLE, {(1, 2): F(1), (2, 3): F(1), (1, 3): F(0)})


def test_phi_membership_antitone():
    rng = random.Random(53)
    g = complete(4)
    for _ in range(40):
        y = [F(rng.randint(0, 6), 4) for _ in g.edges]
        lower = [v - F(rng.randint(0, 2), 4) if v > 0 else v for v in y]
        lower = [max(v, F(0)) for v in lower]
        if phi_membership(g, tuple(y)):
            assert phi_membership(g, tuple(lower))


def test_has_k_clique_examples():
    assert has_k_clique(TRIANGLE, 3)
    assert not has_k_clique(PATH4, 3)
    assert brute_max_clique(PATH4) == 2
    assert has_k_clique(complete(4), 2)
    with pytest.raises(ValidationError):
        has_k_clique(TRIANGLE, 1)


def test_guards():
    big = Graph(13, ())
    with pytest.raises(SizeGuardError):
        fractional_chromatic(big)
    with pytest.raises(SizeGuardError):
        has_k_clique(big, 2)


def test_weighted_graph_document_round_trip():
    gw = WeightedGraph(TRIANGLE, (F(1, 18), F(1, 9), F(0)))
    assert parse_weighted_graph(weighted_graph_to_doc(gw)) == gw


def test_gadget_identity_small_graphs():
    for g in (complete(1), complete(2), PATH4, cycle(4), complete(4)):
        assert union_bounds(color_gadget(g)).interval.lo == fractional_chromatic(g) / g.n
