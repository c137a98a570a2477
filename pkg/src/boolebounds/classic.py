"""Closed-form union bounds: inclusion-exclusion, Boole-Fréchet, Bonferroni."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import IncompleteFamily, MissingSets, MissingSingletons, ValidationError
from .instance import BooleInstance, Interval, popcount


@dataclass(frozen=True)
class BonferroniTerm:
    k: int
    value: Fraction
    direction: str  # "upper" for odd k, "lower" for even k


def _alternating_sum(inst: BooleInstance, k: int) -> Fraction:
    total = Fraction(0)
    for s, p in inst.items():
        size = popcount(s)
        if size <= k:
            total += p if size % 2 else -p
    return total


def inclusion_exclusion(inst: BooleInstance) -> Fraction:
    if not inst.family.is_complete():
        raise IncompleteFamily("inclusion-exclusion needs every nonempty intersection")
    return _alternating_sum(inst, inst.n)


def boole_frechet(inst: BooleInstance) -> Interval:
    if not inst.family.has_all_singletons():
        raise MissingSingletons("Boole-Fréchet needs every singleton probability")
    single = [inst.prob(1 << i) for i in range(inst.n)]
    return Interval(max(single), min(Fraction(1), sum(single, Fraction(0))))


def bonferroni(inst: BooleInstance, k: int) -> Fraction:
    """Truncated alternating sum over sets of size at most ``k``; not clipped."""
    if not 1 <= k <= inst.n:
        raise ValidationError(f"truncation depth {k} outside [1, {inst.n}]")
    if not inst.family.covers_sizes_up_to(k):
        raise MissingSets(f"Bonferroni depth {k} needs every set of size <= {k}")
    return _alternating_sum(inst, k)


def bonferroni_report(inst: BooleInstance) -> list[BonferroniTerm]:
    """All depths the family supports, smallest first."""
    out = []
    for k in range(1, inst.n + 1):
        if not inst.family.covers_sizes_up_to(k):
            break
        out.append(BonferroniTerm(k, _alternating_sum(inst, k), "upper" if k % 2 else "lower"))
    return out
