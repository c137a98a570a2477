"""Brute-force LP oracle: enumerate every basic solution.

Shares no code path with the simplex in :mod:`.lp`. The program is put in
the form ``M z = r, z >= 0`` (free variables split, slacks added, dependent
rows dropped) and every choice of ``rank(M)`` columns is solved directly.
Since ``z >= 0`` the feasible region is pointed, so it is nonempty iff it
has a basic feasible solution; the same holds for the cone of improving
directions and for the Farkas system, which are enumerated the same way.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterator, Optional, Sequence

from ..errors import SizeGuardError
from .linalg import independent_rows, solve_unique
from .lp import EQ, GE, LE, SENSES, Infeasible, LinearProgram, LpOutcome, Optimal, Unbounded

MAX_VARS = 12
MAX_ROWS = 12

_ZERO = Fraction(0)


def basic_feasible_solutions(M: Sequence[Sequence[Fraction]], r: Sequence[Fraction]) -> Iterator[list[Fraction]]:
    """Yield each basic feasible solution of ``M z = r, z >= 0`` (with repeats)."""
    ncols = len(M[0]) if M else 0
    if not M:
        yield [_ZERO] * ncols
        return
    reduced = independent_rows(M, r)
    if reduced is None:
        return
    A, b = reduced
    m = len(A)
    if m == 0:
        yield [_ZERO] * ncols
        return
    for cols in combinations(range(ncols), m):
        sub = [[row[c] for c in cols] for row in A]
        zb = solve_unique(sub, b)
        if zb is None or any(v < 0 for v in zb):
            continue
        z = [_ZERO] * ncols
        for c, v in zip(cols, zb):
            z[c] = v
        yield z


def _standard_form(lp: LinearProgram):
    n = lp.num_vars
    free = sorted(lp.free_vars)
    ineq = [i for i, row in enumerate(lp.rows) if row.rel != EQ]
    ncols = n + len(free) + len(ineq)
    M, r = [], []
    for i, row in enumerate(lp.rows):
        z = list(row.coeffs) + [_ZERO] * (ncols - n)
        for k, j in enumerate(free):
            z[n + k] = -row.coeffs[j]
        if i in ineq:
            z[n + len(free) + ineq.index(i)] = Fraction(1 if row.rel == LE else -1)
        M.append(z)
        r.append(row.rhs)

    def to_x(z):
        x = list(z[:n])
        for k, j in enumerate(free):
            x[j] -= z[n + k]
        return tuple(x)

    cost = list(lp.objective) + [-lp.objective[j] for j in free] + [_ZERO] * len(ineq)
    return M, r, cost, ncols, to_x


def _farkas_by_enumeration(lp: LinearProgram) -> Optional[tuple[Fraction, ...]]:
    # unknowns: one nonnegative part per <=/>= row, two per = row, plus a
    # surplus per nonnegative primal variable for "combined coeff >= 0"
    parts: list[tuple[int, int]] = []  # (row, sign)
    for i, row in enumerate(lp.rows):
        if row.rel == LE:
            parts.append((i, 1))
        elif row.rel == GE:
            parts.append((i, -1))
        else:
            parts += [(i, 1), (i, -1)]
    nonneg = [j for j in range(lp.num_vars) if j not in lp.free_vars]
    ncols = len(parts) + len(nonneg)
    M, r = [], []
    for j in range(lp.num_vars):
        z = [s * lp.rows[i].coeffs[j] for i, s in parts] + [_ZERO] * len(nonneg)
        if j not in lp.free_vars:
            z[len(parts) + nonneg.index(j)] = Fraction(-1)
        M.append(z)
        r.append(_ZERO)
    M.append([s * lp.rows[i].rhs for i, s in parts] + [_ZERO] * len(nonneg))
    r.append(Fraction(-1))
    for z in basic_feasible_solutions(M, r):
        y = [_ZERO] * len(lp.rows)
        for (i, s), v in zip(parts, z):
            y[i] += s * v
        return tuple(y)
    return None


def lp_enumerate_basic(lp: LinearProgram, sense: str = "max") -> LpOutcome:
    if sense not in SENSES:
        raise ValueError(f"sense must be one of {SENSES}")
    if lp.num_vars > MAX_VARS or len(lp.rows) > MAX_ROWS:
        raise SizeGuardError(
            f"basic-solution enumeration limited to {MAX_VARS} variables and {MAX_ROWS} rows"
        )
    M, r, cost, ncols, to_x = _standard_form(lp)
    sign = 1 if sense == "max" else -1

    best = None
    for z in basic_feasible_solutions(M, r):
        val = sign * sum((c * v for c, v in zip(cost, z)), _ZERO)
        if best is None or val > best[0]:
            best = (val, z)
    if best is None:
        cert = _farkas_by_enumeration(lp)
        return Infeasible(cert if cert is not None else ())

    # improving direction: M d = 0, sign * cost . d = 1, d >= 0
    ray_M = [list(row) for row in M] + [[sign * c for c in cost]]
    ray_r = [_ZERO] * len(M) + [Fraction(1)]
    for d in basic_feasible_solutions(ray_M, ray_r):
        return Unbounded(to_x(d))

    point = to_x(best[1])
    return Optimal(sign * best[0], point)
