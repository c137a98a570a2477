from .linalg import rank, rref, solve_unique
from .lp import (
    EQ,
    GE,
    LE,
    Infeasible,
    LinearProgram,
    LpOutcome,
    Optimal,
    Row,
    Unbounded,
    check_farkas,
    check_outcome,
    check_point,
    check_ray,
    lp_solve,
)
from .oracle import lp_enumerate_basic
from .rational import Rat, rat_parse, rat_str

__all__ = [
    "EQ", "GE", "LE", "Infeasible", "LinearProgram", "LpOutcome", "Optimal",
    "Rat", "Row", "Unbounded", "check_farkas", "check_outcome", "check_point",
    "check_ray", "lp_enumerate_basic", "lp_solve", "rank", "rat_parse",
    "rat_str", "rref", "solve_unique",
]
