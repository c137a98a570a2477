"""The two hardness constructions, as executable transforms.

``color_gadget`` turns a graph into an instance whose minimum union
probability is its fractional chromatic number over ``n``. The weighted
edge construction in ``max_union_via_dual`` turns the maximum union
probability into ``1 - clique_lp``, and ``has_k_clique`` decides k-clique
from membership of a constant vector in the clique polyhedron.

Cliques and independent sets are enumerated explicitly, so everything here
is guarded to small graphs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .errors import FormatError, SizeGuardError, ValidationError
from .hailperin import union_bounds
from .instance import BooleInstance, SetFamily, mask_of
from .numerics.lp import GE, LE, LinearProgram, Optimal, Row, lp_solve
from .numerics.rational import rat_parse, rat_str

MAX_GRAPH = 12

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValidationError(f"graph needs at least one vertex, got n={self.n!r}")
        norm = []
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValidationError(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValidationError(f"edge {e} has an endpoint outside [1, {self.n}]")
            norm.append((min(u, v), max(u, v)))
        if len(set(norm)) != len(norm):
            raise ValidationError("duplicate edge")
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    def adjacency(self) -> list[int]:
        """Neighbour bit masks, index ``u - 1`` for vertex ``u``."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return adj


@dataclass(frozen=True)
class WeightedGraph:
    graph: Graph
    w: tuple[Fraction, ...]  # parallel to graph.edges

    def __post_init__(self):
        w = tuple(Fraction(x) for x in self.w)
        object.__setattr__(self, "w", w)
        if len(w) != len(self.graph.edges):
            raise ValidationError("one weight per edge is required")
        if any(x < 0 for x in w):
            raise ValidationError("edge weights must be nonnegative")

    @classmethod
    def from_mapping(cls, graph: Graph, w: Mapping[Edge, Fraction]) -> "WeightedGraph":
        return cls(graph, tuple(w[e] for e in graph.edges))


def _guard(g: Graph) -> None:
    if g.n > MAX_GRAPH:
        raise SizeGuardError(f"enumeration limited to graphs with at most {MAX_GRAPH} vertices")


def cliques(g: Graph) -> Iterator[int]:
    """Every nonempty clique (not only maximal ones) as a vertex bit mask."""
    _guard(g)
    adj = g.adjacency()

    def expand(clique: int, candidates: int):
        yield clique
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            # only later vertices, so each clique is produced once
            yield from expand(clique | low, candidates & adj[v])

    for v in range(g.n):
        later = adj[v] & ~((1 << (v + 1)) - 1)
        yield from expand(1 << v, later)


def independent_sets(g: Graph) -> list[int]:
    """All nonempty independent sets, increasing mask order."""
    _guard(g)
    adj = g.adjacency()
    out = []
    for s in range(1, 1 << g.n):
        t, ok = s, True
        while t:
            low = t & -t
            if adj[low.bit_length() - 1] & s:
                ok = False
                break
            t ^= low
        if ok:
            out.append(s)
    return out


def _edges_inside(g: Graph, t: int) -> list[int]:
    return [k for k, (u, v) in enumerate(g.edges) if t >> (u - 1) & 1 and t >> (v - 1) & 1]


def color_gadget(g: Graph) -> BooleInstance:
    """Singletons at ``1/n`` and edges at ``0``."""
    members = [1 << i for i in range(g.n)] + [mask_of(e) for e in g.edges]
    b = [Fraction(1, g.n)] * g.n + [Fraction(0)] * len(g.edges)
    return BooleInstance(SetFamily(g.n, tuple(members)), tuple(b))


def fractional_chromatic(g: Graph) -> Fraction:
    """Minimum total weight of independent sets covering every vertex once."""
    sets = independent_sets(g)
    rows = tuple(
        Row(tuple(1 if s >> u & 1 else 0 for s in sets), GE, 1) for u in range(g.n)
    )
    out = lp_solve(LinearProgram(len(sets), (1,) * len(sets), rows), "min")
    assert isinstance(out, Optimal)
    return out.value


def clique_lp(gw: WeightedGraph) -> Fraction:
    """Max ``w . y`` over free ``y`` with ``sum_{e ⊆ T} y_e <= |T| - 1`` per clique T."""
    g = gw.graph
    m = len(g.edges)
    rows = []
    for t in cliques(g):
        inside = _edges_inside(g, t)
        if inside:
            coeffs = [0] * m
            for k in inside:
                coeffs[k] = 1
            rows.append(Row(tuple(coeffs), LE, bin(t).count("1") - 1))
    out = lp_solve(LinearProgram(m, gw.w, tuple(rows), frozenset(range(m))), "max")
    # each edge is itself a clique, so y_e <= 1 and w >= 0 keep this bounded
    assert isinstance(out, Optimal)
    return out.value


def dual_query_instance(gw: WeightedGraph) -> BooleInstance:
    """Singletons at ``1/n``, every pair at its edge weight (``0`` for non-edges)."""
    g = gw.graph
    if g.n < 2 or not g.edges:
        raise ValidationError("the construction needs n >= 2 and at least one edge")
    cap = Fraction(1, g.n * g.n)
    if any(not 0 <= x <= cap for x in gw.w):
        raise ValidationError(f"edge weights must lie in [0, 1/{g.n * g.n}]")
    weight = dict(zip(g.edges, gw.w))
    members, b = [], []
    for u in range(1, g.n + 1):
        members.append(1 << (u - 1))
        b.append(Fraction(1, g.n))
    for u in range(1, g.n + 1):
        for v in range(u + 1, g.n + 1):
            members.append(mask_of((u, v)))
            b.append(weight.get((u, v), Fraction(0)))
    return BooleInstance(SetFamily(g.n, tuple(members)), tuple(b))


def max_union_via_dual(gw: WeightedGraph) -> Fraction:
    """Maximum union probability of the weighted-edge query; equals ``1 - clique_lp``."""
    return union_bounds(dual_query_instance(gw)).interval.hi


def phi_membership(g: Graph, y: Mapping[Edge, Fraction] | tuple) -> bool:
    """Whether ``y`` satisfies every clique constraint of the clique polyhedron."""
    if isinstance(y, Mapping):
        y = tuple(Fraction(y[e]) for e in g.edges)
    if len(y) != len(g.edges):
        raise ValidationError("one value per edge is required")
    for t in cliques(g):
        if sum((y[k] for k in _edges_inside(g, t)), Fraction(0)) > bin(t).count("1") - 1:
            return False
    return True


def has_k_clique(g: Graph, k: int) -> bool:
    """k-clique test via the constant vector ``2/(k-1)``.

    A clique ``T`` violates its constraint iff ``|T| > k - 1``, so the
    vector leaves the polyhedron iff some clique has at least ``k``
    vertices, which is the same as the graph containing a k-clique.
    """
    if k < 2:
        raise ValidationError("k must be at least 2")
    kappa = Fraction(2, k - 1)
    return not phi_membership(g, (kappa,) * len(g.edges))


# -- documents -------------------------------------------------------------


def _load(document):
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(document, dict):
        raise FormatError("graph document must be an object")
    return document


def _graph_from(doc) -> Graph:
    n, edges = doc.get("n"), doc.get("edges")
    if not isinstance(n, int) or isinstance(n, bool) or not isinstance(edges, list):
        raise FormatError("graph document needs integer 'n' and list 'edges'")
    pairs = []
    for e in edges:
        if not isinstance(e, list) or len(e) != 2 or not all(isinstance(i, int) for i in e):
            raise FormatError(f"edge {e!r} is not a pair of vertex numbers")
        pairs.append(tuple(e))
    return Graph(n, tuple(pairs))


def parse_graph(document) -> Graph:
    return _graph_from(_load(document))


def parse_weighted_graph(document) -> WeightedGraph:
    """Graph document plus ``"w"``: one ``"p/q"`` per edge, in the order listed."""
    doc = _load(document)
    g = _graph_from(doc)
    w = doc.get("w")
    if not isinstance(w, list) or len(w) != len(doc["edges"]):
        raise FormatError("'w' must list one weight per edge")
    given = {}
    for (u, v), x in zip(doc["edges"], w):
        given[(min(u, v), max(u, v))] = rat_parse(x)
    return WeightedGraph.from_mapping(g, given)


def graph_to_doc(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def weighted_graph_to_doc(gw: WeightedGraph) -> dict:
    doc = graph_to_doc(gw.graph)
    doc["w"] = [rat_str(x) for x in gw.w]
    return doc
