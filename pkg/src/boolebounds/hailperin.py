"""Hailperin's linear program over the ``2**n`` Venn atoms.

Variable ``T`` is the atom probability ``x_T`` (mask order). Row 0 is the
normalization ``sum_T x_T = 1``; row ``k + 1`` fixes the marginal of the
``k``-th family member. The union probability is ``1 - x_{}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InfeasibleInstance, NotInUnionPolytope, ValidationError
from .instance import AtomDistribution, BooleInstance, Interval, is_subset, realizes
from .numerics.lp import EQ, Infeasible, LinearProgram, Optimal, Row, check_farkas, lp_solve


@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    realization: Optional[AtomDistribution] = None
    certificate: Optional[tuple[Fraction, ...]] = None


@dataclass(frozen=True)
class BoundsResult:
    interval: Interval
    min_witness: AtomDistribution
    max_witness: AtomDistribution


def union_objective(n: int) -> tuple[int, ...]:
    return (0,) + (1,) * ((1 << n) - 1)


def build_hailperin_lp(inst: BooleInstance) -> LinearProgram:
    size = 1 << inst.n
    rows = [Row((1,) * size, EQ, 1)]
    for s, p in inst.items():
        rows.append(Row(tuple(1 if is_subset(s, t) else 0 for t in range(size)), EQ, p))
    return LinearProgram(size, union_objective(inst.n), tuple(rows))


def _distribution(n: int, point) -> AtomDistribution:
    return AtomDistribution.from_dense(n, point)


def is_feasible(inst: BooleInstance) -> Feasibility:
    lp = build_hailperin_lp(inst)
    out = lp_solve(lp, "max")
    if isinstance(out, Infeasible):
        return Feasibility(False, certificate=out.farkas_certificate)
    return Feasibility(True, realization=_distribution(inst.n, out.point))


def check_certificate(inst: BooleInstance, certificate) -> bool:
    """Independently re-check a Farkas certificate against the instance's LP."""
    return check_farkas(build_hailperin_lp(inst), certificate)


def union_bounds(inst: BooleInstance) -> BoundsResult:
    """Tight interval for the union probability with attaining realizations.

    Raises ``InfeasibleInstance`` (carrying the Farkas certificate) when no
    realization exists.
    """
    lp = build_hailperin_lp(inst)
    lo = lp_solve(lp, "min")
    if isinstance(lo, Infeasible):
        raise InfeasibleInstance("intersection probabilities are not realizable", lo.farkas_certificate)
    hi = lp_solve(lp, "max")
    # the feasible region is a polytope, so both optima exist
    assert isinstance(lo, Optimal) and isinstance(hi, Optimal)
    return BoundsResult(
        Interval(lo.value, hi.value),
        _distribution(inst.n, lo.point),
        _distribution(inst.n, hi.point),
    )


def realize_at(inst: BooleInstance, u: Fraction) -> AtomDistribution:
    """A realization whose union probability is exactly ``u``."""
    u = Fraction(u)
    if not 0 <= u <= 1:
        raise ValidationError(f"union probability {u} is outside [0, 1]")
    lp = build_hailperin_lp(inst)
    base = lp_solve(lp, "max")
    if isinstance(base, Infeasible):
        raise InfeasibleInstance("intersection probabilities are not realizable", base.farkas_certificate)
    pinned = lp.with_rows([Row(union_objective(inst.n), EQ, u)])
    out = lp_solve(pinned, "max")
    if not isinstance(out, Optimal):
        raise NotInUnionPolytope(f"no realization has union probability {u}")
    return _distribution(inst.n, out.point)


def check_bounds(inst: BooleInstance, result: BoundsResult) -> bool:
    """Re-verify both witnesses: exact marginals and endpoint attainment."""
    return (
        realizes(result.min_witness, inst)
        and realizes(result.max_witness, inst)
        and result.min_witness.union_probability == result.interval.lo
        and result.max_witness.union_probability == result.interval.hi
    )
