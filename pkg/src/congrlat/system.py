"""Systems of linear congruences, each row with its own modulus.

A system is solved by turning every row ``a_i.x = b_i (mod m_i)`` into the
integer equation ``a_i.x - m_i*y_i = b_i``, solving the whole thing over the
integers, dropping the slack unknowns and reading the remaining affine
lattice modulo ``L = lcm(m_i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .congruence import (
    DEFAULT_CAP,
    LinearCongruence,
    ParametricSolution,
    SolutionCount,
    SolutionSet,
)
from .errors import CapacityError, UsageError
from .intlinalg import (
    AffineLattice,
    divides,
    ext_gcd,
    gcd_vec,
    lattice_index,
    lcm_vec,
    solve_diophantine_system,
)


@dataclass(frozen=True)
class CongruenceSystem:
    variables: tuple[str, ...]
    rows: tuple[LinearCongruence, ...]

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "rows", tuple(self.rows))
        if not self.rows or not self.variables:
            raise UsageError("a system needs at least one row and one variable")
        n = len(self.variables)
        for i, row in enumerate(self.rows):
            if row.arity != n:
                raise UsageError(f"row {i + 1} has {row.arity} coefficients, expected {n}")

    @classmethod
    def from_rows(cls, rows: Sequence[LinearCongruence], variables: Optional[Sequence[str]] = None):
        rows = tuple(rows)
        if variables is None:
            n = rows[0].arity if rows else 0
            variables = tuple(f"x{i + 1}" for i in range(n))
        return cls(tuple(variables), rows)

    @property
    def arity(self) -> int:
        return len(self.variables)

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(r.modulus for r in self.rows)

    def holds(self, x: Sequence[int]) -> bool:
        return all(r.holds(x) for r in self.rows)


@dataclass(frozen=True)
class SystemSolution:
    modulus: int
    set: SolutionSet
    parametric: ParametricSolution


def _require_nonzero_moduli(sys: CongruenceSystem) -> None:
    if any(m == 0 for m in sys.moduli):
        raise UsageError("every row of a system needs a non-zero modulus")


def _lift(sys: CongruenceSystem) -> Optional[AffineLattice]:
    """Integer solutions of the slack-extended system, projected to the x coordinates."""
    n, r = sys.arity, len(sys.rows)
    matrix, rhs = [], []
    for i, row in enumerate(sys.rows):
        m = abs(row.modulus)
        slack = [0] * r
        slack[i] = -m
        if m:
            matrix.append([a % m for a in row.coeffs] + slack)
            rhs.append(row.rhs % m)
        else:
            matrix.append(list(row.coeffs) + slack)
            rhs.append(row.rhs)
    lattice = solve_diophantine_system(matrix, rhs)
    if lattice is None:
        return None
    return lattice.project(range(n))


def is_solvable_system(sys: CongruenceSystem) -> bool:
    return _lift(sys) is not None


def univariate_pair_compatible(sys: CongruenceSystem) -> bool:
    """Pairwise test for systems ``a_i*x = b_i (mod m_i)`` in one unknown.

    Each row must be solvable on its own and every pair must satisfy
    ``gcd(a_i*m_j, a_j*m_i) | a_i*b_j - a_j*b_i``. This is a diagnostic;
    :func:`solve_system` never relies on it.
    """
    if sys.arity != 1:
        raise UsageError("the pairwise test applies to systems in one unknown")
    _require_nonzero_moduli(sys)
    rows = [(r.coeffs[0], r.rhs, r.modulus) for r in sys.rows]
    for a, b, m in rows:
        if not divides(ext_gcd(a, m).gcd, b):
            return False
    for (ai, bi, mi), (aj, bj, mj) in combinations(rows, 2):
        if not divides(ext_gcd(ai * mj, aj * mi).gcd, ai * bj - aj * bi):
            return False
    return True


def _check_crt_args(residues: Sequence[int], moduli: Sequence[int]) -> None:
    if len(residues) != len(moduli) or not residues:
        raise UsageError("residues and moduli must be non-empty and of equal length")
    if any(m == 0 for m in moduli):
        raise UsageError("moduli must be non-zero")


def crt_compatible(residues: Sequence[int], moduli: Sequence[int]) -> bool:
    _check_crt_args(residues, moduli)
    pairs = list(zip(residues, moduli))
    return all(
        divides(ext_gcd(mi, mj).gcd, bi - bj) for (bi, mi), (bj, mj) in combinations(pairs, 2)
    )


def solve_crt(residues: Sequence[int], moduli: Sequence[int]) -> Optional[tuple[int, int]]:
    """Merge ``x = b_i (mod m_i)`` into a single class ``(x, lcm)``, moduli need not be coprime."""
    _check_crt_args(residues, moduli)
    x, L = 0, 1
    for b, m in zip(residues, moduli):
        m = abs(m)
        cert = ext_gcd(L, m)
        g = cert.gcd
        if (b - x) % g:
            return None
        u = cert.coefficients[0]
        # x + L*t = b (mod m)  =>  t = u*(b - x)/g (mod m/g)
        t = (u * ((b - x) // g)) % (m // g)
        x += L * t
        L = L // g * m
        x %= L
    return x, L


def system_parametric(sys: CongruenceSystem) -> Optional[ParametricSolution]:
    """General solution read modulo ``lcm(m_i)``, or None if unsolvable."""
    _require_nonzero_moduli(sys)
    lattice = _lift(sys)
    if lattice is None:
        return None
    L = lcm_vec(sys.moduli)
    return ParametricSolution(L, lattice.particular, lattice.basis)


def _distinct_count(param: ParametricSolution) -> int:
    # Solutions mod L form one coset of span(columns) + L*Z^n.
    L, n = param.modulus, param.arity
    gens = list(param.columns) + [tuple(L * (i == j) for i in range(n)) for j in range(n)]
    return L**n // lattice_index(gens, n)


def count_system(sys: CongruenceSystem) -> SolutionCount:
    """Number of distinct solutions modulo ``lcm(m_i)``."""
    param = system_parametric(sys)
    if param is None:
        return SolutionCount("none")
    return SolutionCount("finite", _distinct_count(param))


def solve_system(sys: CongruenceSystem, cap: int = DEFAULT_CAP) -> Optional[SystemSolution]:
    """Every distinct solution modulo ``L = lcm(m_i)``; None if there is none."""
    if cap < 1:
        raise UsageError("cap must be positive")
    param = system_parametric(sys)
    if param is None:
        return None
    count = _distinct_count(param)
    if count > cap:
        raise CapacityError(count, cap)
    seen = set(param.generate())
    bad = [v for v in seen if not sys.holds(v)]
    if bad or len(seen) != count:
        raise AssertionError(
            f"enumeration produced {len(seen)} vectors ({len(bad)} invalid), expected {count}"
        )
    L = param.modulus
    return SystemSolution(L, SolutionSet(L, sys.arity, tuple(seen)), param)


def which_predicates(sys: CongruenceSystem) -> dict[str, bool]:
    """Every applicable solvability test and its verdict, for diagnostics."""
    out = {"integer-system": is_solvable_system(sys)}
    if len(sys.rows) == 1:
        out["single-congruence"] = divides(
            gcd_vec(sys.rows[0].coeffs + (sys.rows[0].modulus,)).gcd, sys.rows[0].rhs
        )
    if sys.arity == 1 and all(m != 0 for m in sys.moduli):
        out["pairwise"] = univariate_pair_compatible(sys)
        if all(r.coeffs[0] == 1 for r in sys.rows):
            out["crt"] = crt_compatible([r.rhs for r in sys.rows], sys.moduli)
    return out
