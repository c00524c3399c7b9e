"""A single multivariate linear congruence ``a.x = b (mod m)``.

Solvability, exact counting, the parametric general solution read modulo
``m``, enumeration of all distinct solutions, and the scaling transforms that
either preserve, shrink or inflate the solution set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Iterator, Literal, Optional, Sequence

from .errors import CapacityError, UsageError
from .intlinalg import divides, gcd_vec, solve_linear_diophantine

Vector = tuple[int, ...]

DEFAULT_CAP = 100_000


@dataclass(frozen=True)
class LinearCongruence:
    """``sum(coeffs[i] * x[i]) = rhs (mod modulus)``.

    Stored verbatim: a zero modulus means plain equality over the integers and
    negative moduli are allowed.
    """

    coeffs: Vector
    rhs: int
    modulus: int

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        object.__setattr__(self, "rhs", int(self.rhs))
        object.__setattr__(self, "modulus", int(self.modulus))
        if not self.coeffs:
            raise UsageError("a congruence needs at least one variable")

    @property
    def arity(self) -> int:
        return len(self.coeffs)

    @property
    def d(self) -> int:
        """gcd of the coefficients together with the modulus."""
        return gcd_vec(self.coeffs + (self.modulus,)).gcd

    def holds(self, x: Sequence[int]) -> bool:
        lhs = sum(a * v for a, v in zip(self.coeffs, x))
        return divides(self.modulus, lhs - self.rhs)


@dataclass(frozen=True)
class SolutionCount:
    kind: Literal["none", "finite", "infinite"]
    value: int = 0

    def __str__(self) -> str:
        if self.kind == "infinite":
            return "infinite"
        return str(self.value)


@dataclass(frozen=True)
class SolutionSet:
    """Duplicate-free residue vectors modulo ``modulus``, in lexicographic order."""

    modulus: int
    arity: int
    vectors: tuple[Vector, ...] = ()

    def __post_init__(self):
        vecs = tuple(sorted(set(tuple(int(x) for x in v) for v in self.vectors)))
        for v in vecs:
            if len(v) != self.arity or any(not 0 <= x < self.modulus for x in v):
                raise UsageError(f"{v} is not a residue vector mod {self.modulus}")
        object.__setattr__(self, "vectors", vecs)

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self) -> Iterator[Vector]:
        return iter(self.vectors)

    def __contains__(self, v) -> bool:
        return tuple(v) in self.as_set()

    def as_set(self) -> frozenset[Vector]:
        return frozenset(self.vectors)


@dataclass(frozen=True)
class ParametricSolution:
    """``x = offset + sum_j k_j * basis[:, j] (mod modulus)``.

    ``basis`` is stored as a tuple of columns. Letting parameter ``j`` run over
    ``range(param_ranges[j])`` already generates every solution.
    """

    modulus: int
    offset: Vector
    columns: tuple[Vector, ...]
    param_ranges: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        m = self.modulus
        object.__setattr__(self, "offset", tuple(x % m for x in self.offset))
        cols = tuple(tuple(x % m for x in col) for col in self.columns)
        object.__setattr__(self, "columns", cols)
        object.__setattr__(
            self, "param_ranges", tuple(m // gcd_vec(col + (m,)).gcd for col in cols)
        )

    @property
    def arity(self) -> int:
        return len(self.offset)

    @property
    def basis(self) -> tuple[Vector, ...]:
        """Row-major view: ``basis[i][j]`` multiplies parameter ``j`` in row ``i``."""
        return tuple(zip(*self.columns)) if self.columns else tuple(() for _ in self.offset)

    def at(self, params: Sequence[int]) -> Vector:
        m = self.modulus
        out = list(self.offset)
        for k, col in zip(params, self.columns):
            for i, a in enumerate(col):
                out[i] += k * a
        return tuple(x % m for x in out)

    def search_size(self) -> int:
        size = 1
        for r in self.param_ranges:
            size *= r
        return size

    def generate(self) -> Iterator[Vector]:
        """Every parameter assignment, rightmost parameter fastest. May repeat."""
        for params in itertools.product(*(range(r) for r in self.param_ranges)):
            yield self.at(params)

    def render(self, names: Sequence[str]) -> list[str]:
        lines = []
        for name, row, c in zip(names, self.basis, self.offset):
            terms = [f"{a}*k{j + 1}" for j, a in enumerate(row) if a]
            if c or not terms:
                terms.append(str(c))
            lines.append(f"{name} = {' + '.join(terms)} (mod {self.modulus})")
        for j, r in enumerate(self.param_ranges):
            lines.append(f"k{j + 1} in 0..{r - 1}")
        return lines


def _require_nonzero_modulus(c: LinearCongruence) -> None:
    if c.modulus == 0:
        raise UsageError("modulus 0 means an equation over the integers; not supported here")


def normalize(c: LinearCongruence) -> LinearCongruence:
    """Positive modulus, coefficients and rhs reduced into ``[0, m-1]``."""
    _require_nonzero_modulus(c)
    m = abs(c.modulus)
    return LinearCongruence(tuple(a % m for a in c.coeffs), c.rhs % m, m)


def is_solvable(c: LinearCongruence) -> bool:
    return divides(c.d, c.rhs)


def count_solutions(c: LinearCongruence) -> SolutionCount:
    if not is_solvable(c):
        return SolutionCount("none")
    if c.modulus == 0:
        # One unknown: a*x = b has exactly one integer root (or every x when a = 0).
        if c.arity == 1 and c.coeffs[0] != 0:
            return SolutionCount("finite", 1)
        return SolutionCount("infinite")
    return SolutionCount("finite", c.d * abs(c.modulus) ** (c.arity - 1))


def general_solution(c: LinearCongruence) -> Optional[ParametricSolution]:
    _require_nonzero_modulus(c)
    c = normalize(c)
    m = c.modulus
    # a.x - m*y = b over Z; y is the slack unknown and is dropped afterwards.
    lattice = solve_linear_diophantine(c.coeffs + (-m,), c.rhs)
    if lattice is None:
        return None
    xs = lattice.project(range(c.arity))
    return ParametricSolution(m, xs.particular, xs.basis)


def enumerate_solutions(c: LinearCongruence, cap: int = DEFAULT_CAP) -> SolutionSet:
    """All distinct solutions modulo ``|m|``.

    Raises CapacityError (carrying the exact count) if there are more than
    ``cap`` of them.
    """
    _require_nonzero_modulus(c)
    if cap < 1:
        raise UsageError("cap must be positive")
    m = abs(c.modulus)
    count = count_solutions(c)
    if count.kind == "none":
        return SolutionSet(m, c.arity)
    if count.value > cap:
        raise CapacityError(count.value, cap)
    param = general_solution(c)
    seen = set(param.generate())
    if len(seen) != count.value:
        raise AssertionError(
            f"parametric enumeration produced {len(seen)} solutions, expected {count.value}"
        )
    return SolutionSet(m, c.arity, tuple(seen))


def scale_coprime(c: LinearCongruence, k: int) -> LinearCongruence:
    """Multiply both sides by ``k`` coprime to the modulus; the solution set is unchanged."""
    _require_nonzero_modulus(c)
    if k == 0 or gcd(k, c.modulus) != 1:
        raise UsageError(f"{k} is not coprime to the modulus {c.modulus}")
    return LinearCongruence(tuple(a * k for a in c.coeffs), c.rhs * k, c.modulus)


def scale_full(c: LinearCongruence, k: int) -> LinearCongruence:
    """Multiply coefficients, rhs and modulus by ``k``.

    Modulo ``k*m`` the new solutions are every lift of an old solution, so
    the set grows by a factor ``k**n``.
    """
    _require_nonzero_modulus(c)
    if k <= 0:
        raise UsageError("scale factor must be positive")
    return LinearCongruence(tuple(a * k for a in c.coeffs), c.rhs * k, c.modulus * k)


def reduce_common_factor(c: LinearCongruence, k: int) -> LinearCongruence:
    """Divide coefficients, rhs and modulus by a common factor ``k``."""
    _require_nonzero_modulus(c)
    if k <= 0:
        raise UsageError("factor must be positive")
    if any(x % k for x in c.coeffs + (c.rhs, c.modulus)):
        raise UsageError(f"{k} does not divide every coefficient, the rhs and the modulus")
    return LinearCongruence(tuple(a // k for a in c.coeffs), c.rhs // k, c.modulus // k)
