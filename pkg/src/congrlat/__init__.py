"""Solve, count and enumerate linear congruences and systems of them."""

from .congruence import (
    LinearCongruence,
    ParametricSolution,
    SolutionCount,
    SolutionSet,
    count_solutions,
    enumerate_solutions,
    general_solution,
    is_solvable,
    normalize,
    reduce_common_factor,
    scale_coprime,
    scale_full,
)
from .errors import CapacityError, ParseError, UsageError
from .intlinalg import (
    AffineLattice,
    BezoutCertificate,
    ext_gcd,
    gcd_vec,
    lcm_vec,
    solve_diophantine_system,
    solve_linear_diophantine,
)
from .oracle import OracleReport, brute_force, brute_force_system
from .parse import ParsedInput, parse_congruence, parse_system, render_congruence, render_system
from .system import (
    CongruenceSystem,
    SystemSolution,
    count_system,
    crt_compatible,
    is_solvable_system,
    solve_crt,
    solve_system,
    univariate_pair_compatible,
)

__all__ = [name for name in dir() if not name.startswith("_")]
