"""Exact two-phase simplex over the rationals.

Dense tableau, Bland's rule for both entering and leaving choices, one
artificial variable per row. Free variables are split into a difference of
two nonnegative columns. Infeasibility comes back with a Farkas certificate
read off the final phase-one tableau; unboundedness with an improving ray.

Certificate convention, per original row ``a_i . x REL b_i``: multiplier
``y_i >= 0`` on ``<=`` rows, ``y_i <= 0`` on ``>=`` rows, free on ``=`` rows.
Every feasible ``x`` then satisfies ``(sum_i y_i a_i) . x <= sum_i y_i b_i``.
A certificate is valid when the combined row has coefficients ``>= 0`` on
nonnegative variables and ``== 0`` on free ones while the right-hand side
is ``-1``: the combination reads ``nonnegative <= -1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from ..errors import ValidationError

try:  # exact C rationals for the tableau; Fraction everywhere else
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

EQ, LE, GE = "=", "<=", ">="
RELATIONS = (EQ, LE, GE)
SENSES = ("min", "max")

_ZERO = Fraction(0)


@dataclass(frozen=True)
class Row:
    coeffs: tuple[Fraction, ...]
    rel: str
    rhs: Fraction

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        object.__setattr__(self, "rhs", Fraction(self.rhs))
        if self.rel not in RELATIONS:
            raise ValidationError(f"unknown relation {self.rel!r}")


@dataclass(frozen=True)
class LinearProgram:
    """``num_vars`` variables, each ``>= 0`` unless listed in ``free_vars``."""

    num_vars: int
    objective: tuple[Fraction, ...]
    rows: tuple[Row, ...] = ()
    free_vars: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "objective", tuple(Fraction(c) for c in self.objective))
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "free_vars", frozenset(self.free_vars))
        if len(self.objective) != self.num_vars:
            raise ValidationError("objective length differs from num_vars")
        for i, row in enumerate(self.rows):
            if len(row.coeffs) != self.num_vars:
                raise ValidationError(f"row {i} has {len(row.coeffs)} coefficients, expected {self.num_vars}")
        if any(not 0 <= j < self.num_vars for j in self.free_vars):
            raise ValidationError("free variable index out of range")

    def with_rows(self, extra: Sequence[Row]) -> "LinearProgram":
        return LinearProgram(self.num_vars, self.objective, self.rows + tuple(extra), self.free_vars)


@dataclass(frozen=True)
class Optimal:
    value: Fraction
    point: tuple[Fraction, ...]


@dataclass(frozen=True)
class Infeasible:
    farkas_certificate: tuple[Fraction, ...]


@dataclass(frozen=True)
class Unbounded:
    ray: tuple[Fraction, ...]


LpOutcome = Union[Optimal, Infeasible, Unbounded]


def dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), _ZERO)


# -- verification --------------------------------------------------------


def check_point(lp: LinearProgram, point: Sequence[Fraction]) -> bool:
    """True iff ``point`` satisfies every row and sign restriction exactly."""
    if len(point) != lp.num_vars:
        return False
    for j, v in enumerate(point):
        if j not in lp.free_vars and v < 0:
            return False
    for row in lp.rows:
        lhs = dot(row.coeffs, point)
        if row.rel == EQ and lhs != row.rhs:
            return False
        if row.rel == LE and lhs > row.rhs:
            return False
        if row.rel == GE and lhs < row.rhs:
            return False
    return True


def check_farkas(lp: LinearProgram, y: Sequence[Fraction]) -> bool:
    """True iff ``y`` proves ``lp`` infeasible (see module docstring)."""
    if len(y) != len(lp.rows):
        return False
    for yi, row in zip(y, lp.rows):
        if row.rel == LE and yi < 0:
            return False
        if row.rel == GE and yi > 0:
            return False
    for j in range(lp.num_vars):
        cj = sum((yi * row.coeffs[j] for yi, row in zip(y, lp.rows)), _ZERO)
        if j in lp.free_vars:
            if cj != 0:
                return False
        elif cj < 0:
            return False
    return dot(y, [row.rhs for row in lp.rows]) < 0


def check_ray(lp: LinearProgram, ray: Sequence[Fraction], sense: str) -> bool:
    """True iff ``ray`` is a recession direction that strictly improves."""
    if len(ray) != lp.num_vars:
        return False
    for j, v in enumerate(ray):
        if j not in lp.free_vars and v < 0:
            return False
    for row in lp.rows:
        lhs = dot(row.coeffs, ray)
        if row.rel == EQ and lhs != 0:
            return False
        if row.rel == LE and lhs > 0:
            return False
        if row.rel == GE and lhs < 0:
            return False
    gain = dot(lp.objective, ray)
    return gain > 0 if sense == "max" else gain < 0


def check_outcome(lp: LinearProgram, outcome: LpOutcome, sense: str) -> bool:
    if isinstance(outcome, Optimal):
        return check_point(lp, outcome.point) and dot(lp.objective, outcome.point) == outcome.value
    if isinstance(outcome, Infeasible):
        return check_farkas(lp, outcome.farkas_certificate)
    return check_ray(lp, outcome.ray, sense)


# -- simplex -------------------------------------------------------------

_QZERO = _Q(0)
_QONE = _Q(1)


def _frac(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


class _Tableau:
    """Rows ``T[i]`` hold coefficients followed by the right-hand side."""

    def __init__(self, rows, basis):
        self.T = rows
        self.basis = basis
        self.obj: list[Fraction] = []

    def set_cost(self, cost):
        # reduced costs r_j = c_j - c_B B^-1 a_j; last entry is -(c_B x_B)
        ncols = len(cost)
        obj = list(cost) + [_QZERO]
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.T[i]
                for j in range(ncols + 1):
                    if row[j]:
                        obj[j] -= cb * row[j]
        self.obj = obj

    def pivot(self, r, c):
        prow = self.T[r]
        pv = prow[c]
        if pv != 1:
            prow = [v / pv for v in prow]
            self.T[r] = prow
        nz = [(j, v) for j, v in enumerate(prow) if v]
        for i, row in enumerate(self.T):
            if i != r:
                f = row[c]
                if f:
                    for j, v in nz:
                        row[j] -= f * v
        f = self.obj[c]
        if f:
            for j, v in nz:
                self.obj[j] -= f * v
        self.basis[r] = c

    def run(self, allowed: int) -> int | None:
        """Minimize with Bland's rule over columns ``< allowed``.

        Returns None at optimality, else the entering column of an
        unbounded direction.
        """
        while True:
            enter = next((j for j in range(allowed) if self.obj[j] < 0), None)
            if enter is None:
                return None
            best = None
            for i, row in enumerate(self.T):
                a = row[enter]
                if a > 0:
                    ratio = row[-1] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return enter
            self.pivot(best[1], enter)


def lp_solve(lp: LinearProgram, sense: str = "max") -> LpOutcome:
    if sense not in SENSES:
        raise ValueError(f"sense must be one of {SENSES}")
    n = lp.num_vars
    m = len(lp.rows)

    # column layout: one column per variable, then a negative part for each
    # free variable, then one slack per inequality row, then artificials
    free = sorted(lp.free_vars)
    neg_col = {j: n + k for k, j in enumerate(free)}
    ineq = [i for i, row in enumerate(lp.rows) if row.rel != EQ]
    slack_col = {i: n + len(free) + k for k, i in enumerate(ineq)}
    nstruct = n + len(free) + len(ineq)
    ncols = nstruct + m

    T = []
    signs: list[int] = []
    for i, row in enumerate(lp.rows):
        t = [_QZERO] * (ncols + 1)
        for j, a in enumerate(row.coeffs):
            if a:
                t[j] = _Q(a)
                if j in neg_col:
                    t[neg_col[j]] = -t[j]
        if i in slack_col:
            t[slack_col[i]] = _QONE if row.rel == LE else -_QONE
        t[-1] = _Q(row.rhs)
        s = 1
        if row.rhs < 0:
            t = [-v for v in t]
            s = -1
        t[nstruct + i] = _QONE
        T.append(t)
        signs.append(s)

    tab = _Tableau(T, [nstruct + i for i in range(m)])
    tab.set_cost([_QZERO] * nstruct + [_QONE] * m)
    tab.run(nstruct)

    if tab.obj[-1] != 0:  # -obj[-1] is the phase-one optimum
        pi = [_QZERO] * m
        for i, b in enumerate(tab.basis):
            if b >= nstruct:
                row = tab.T[i]
                for k in range(m):
                    pi[k] += row[nstruct + k]
        w = -tab.obj[-1]
        cert = tuple(_frac(-signs[k] * pi[k] / w) for k in range(m))
        return Infeasible(cert)

    # drive artificials out of the basis; a row with no structural entry is redundant
    i = 0
    while i < len(tab.T):
        if tab.basis[i] >= nstruct:
            row = tab.T[i]
            j = next((j for j in range(nstruct) if row[j] != 0), None)
            if j is None:
                del tab.T[i]
                del tab.basis[i]
                continue
            tab.pivot(i, j)
        i += 1
    tab.T = [row[:nstruct] + [row[-1]] for row in tab.T]

    flip = _QONE if sense == "min" else -_QONE
    cost = [_QZERO] * nstruct
    for j, c in enumerate(lp.objective):
        cost[j] = flip * _Q(c)
        if j in neg_col:
            cost[neg_col[j]] = -cost[j]
    tab.set_cost(cost)
    enter = tab.run(nstruct)

    if enter is not None:
        d = [_QZERO] * nstruct
        d[enter] = _QONE
        for i, b in enumerate(tab.basis):
            d[b] = -tab.T[i][enter]
        ray = tuple(_frac(d[j] - d[neg_col[j]] if j in neg_col else d[j]) for j in range(n))
        return Unbounded(ray)

    z = [_QZERO] * nstruct
    for i, b in enumerate(tab.basis):
        z[b] = tab.T[i][-1]
    point = tuple(_frac(z[j] - z[neg_col[j]] if j in neg_col else z[j]) for j in range(n))
    return Optimal(dot(lp.objective, point), point)
