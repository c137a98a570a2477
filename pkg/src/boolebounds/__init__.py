"""Exact best-possible bounds for the probability of a union of events.

Given intersection probabilities ``b_S`` for a family of index sets, the
tight interval for ``P(B_1 ∪ ... ∪ B_n)`` is the range of ``1 - x_{}``
over atom distributions ``x`` reproducing every ``b_S``. Everything is
computed in exact rational arithmetic.
"""

from .classic import bonferroni, boole_frechet, inclusion_exclusion
from .errors import (
    BooleError,
    DomainError,
    FormatError,
    InfeasibleInstance,
    NotInUnionPolytope,
    SizeGuardError,
    ValidationError,
)
from .hailperin import BoundsResult, build_hailperin_lp, is_feasible, realize_at, union_bounds
from .instance import (
    AtomDistribution,
    BooleInstance,
    Interval,
    SetFamily,
    check_monotone,
    full_family,
    marginal_of,
    parse_instance,
    singletons,
)

__version__ = "0.1.0"
