"""Venn, union and correlation polytopes in vertex representation.

The Venn polytope lives in coordinates ``(b_S for S in F, x_T for T in mask
order)``; the union polytope keeps ``(b_S, x_{})`` and the correlation
polytope keeps only ``b_S``. All three are hulls of set-inclusion indicator
vectors, one generator per atom ``T``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ValidationError
from .instance import SetFamily, is_subset, set_label
from .numerics.linalg import rank
from .numerics.lp import EQ, LinearProgram, Optimal, Row, lp_solve

TAU, SIGMA, RHO = "tau", "sigma", "rho"


@dataclass(frozen=True)
class VPolytope:
    coord_labels: tuple[str, ...]
    vertices: tuple[tuple[Fraction, ...], ...]

    @property
    def dim_ambient(self) -> int:
        return len(self.coord_labels)

    def dump(self) -> str:
        """Header row of coordinate labels, then one 0/1 row per vertex."""
        lines = [" ".join(self.coord_labels)]
        lines += [" ".join(str(v) for v in vert) for vert in self.vertices]
        return "\n".join(lines) + "\n"


def indicator(fam: SetFamily, t: int) -> tuple[int, ...]:
    """The set-inclusion indicator: entry ``[S ⊆ T]`` for each member ``S``."""
    return tuple(1 if is_subset(s, t) else 0 for s in fam)


def b_labels(fam: SetFamily) -> list[str]:
    return ["b_" + set_label(s) for s in fam]


def atom_label(t: int) -> str:
    return "x_" + set_label(t)


def _dedup(vectors) -> tuple[tuple[Fraction, ...], ...]:
    seen, out = set(), []
    for v in vectors:
        if v not in seen:
            seen.add(v)
            out.append(v)
    return tuple(out)


def _as_rats(v) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


def venn_vertices(fam: SetFamily) -> VPolytope:
    size = 1 << fam.n
    labels = b_labels(fam) + [atom_label(t) for t in range(size)]
    verts = []
    for t in range(size):
        e = tuple(1 if u == t else 0 for u in range(size))
        verts.append(_as_rats(indicator(fam, t) + e))
    return VPolytope(tuple(labels), tuple(verts))


def correlation_vertices(fam: SetFamily) -> VPolytope:
    verts = _dedup(_as_rats(indicator(fam, t)) for t in range(1 << fam.n))
    return VPolytope(tuple(b_labels(fam)), verts)


def union_vertices(fam: SetFamily) -> VPolytope:
    verts = _dedup(_as_rats(indicator(fam, t) + (1 if t == 0 else 0,)) for t in range(1 << fam.n))
    return VPolytope(tuple(b_labels(fam) + [atom_label(0)]), verts)


def polytope(fam: SetFamily, which: str) -> VPolytope:
    return {TAU: venn_vertices, RHO: correlation_vertices, SIGMA: union_vertices}[which](fam)


def project(poly: VPolytope, keep: Sequence[int]) -> VPolytope:
    """Coordinate projection followed by deduplication of the images."""
    labels = tuple(poly.coord_labels[i] for i in keep)
    return VPolytope(labels, _dedup(tuple(v[i] for i in keep) for v in poly.vertices))


def vertex_count_formula(fam: SetFamily) -> tuple[int, int]:
    """Vertex counts of the correlation and union polytopes.

    Each atom ``T`` gets the signature ``([S ⊆ T] for S in F)``; the cells
    of the meet of the up-set bipartitions are the signature classes. The
    union polytope splits the cell of the empty atom exactly when another
    atom shares its (all-zero) signature.
    """
    sigs = {}
    for t in range(1 << fam.n):
        sigs.setdefault(indicator(fam, t), []).append(t)
    rho = len(sigs)
    empty_cell = sigs[indicator(fam, 0)]
    sigma = rho + (1 if len(empty_cell) > 1 else 0)
    return rho, sigma


def affine_dim(poly: VPolytope) -> int:
    if not poly.vertices:
        raise ValidationError("affine dimension of an empty vertex list")
    base = poly.vertices[0]
    diffs = [[a - b for a, b in zip(v, base)] for v in poly.vertices[1:]]
    return rank(diffs) if diffs else 0


def hull_membership(poly: VPolytope, point: Sequence) -> bool:
    """Exact test of ``point ∈ conv(vertices)`` as an LP feasibility problem."""
    point = _as_rats(point)
    if len(point) != poly.dim_ambient:
        raise ValidationError(f"point has {len(point)} coordinates, polytope has {poly.dim_ambient}")
    k = len(poly.vertices)
    rows = [Row((1,) * k, EQ, 1)]
    for i, c in enumerate(point):
        rows.append(Row(tuple(v[i] for v in poly.vertices), EQ, c))
    return isinstance(lp_solve(LinearProgram(k, (0,) * k, tuple(rows)), "max"), Optimal)
