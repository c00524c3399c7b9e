"""Brute-force ground truth.

Tries every residue vector and keeps the ones that satisfy the constraints.
Deliberately dumb and independent of the solvers: it does its own
substitution and its own lcm, and uses nothing from ``intlinalg``.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass

from .congruence import LinearCongruence, SolutionSet
from .errors import CapacityError, UsageError
from .system import CongruenceSystem

SAFETY_BOUND = 10**7


@dataclass(frozen=True)
class OracleReport:
    set: SolutionSet
    elapsed: float
    search_space: int


def _satisfies(coeffs, rhs, modulus, x) -> bool:
    total = -rhs
    for a, v in zip(coeffs, x):
        total += a * v
    return total % modulus == 0


def _search(rows, n: int, modulus: int, bound: int) -> OracleReport:
    space = modulus**n
    if space > bound:
        raise CapacityError(space, bound, what="candidates")
    start = time.perf_counter()
    found = [
        x
        for x in itertools.product(range(modulus), repeat=n)
        if all(_satisfies(a, b, m, x) for a, b, m in rows)
    ]
    elapsed = time.perf_counter() - start
    return OracleReport(SolutionSet(modulus, n, tuple(found)), elapsed, space)


def brute_force(c: LinearCongruence, bound: int = SAFETY_BOUND) -> OracleReport:
    if c.modulus == 0:
        raise UsageError("cannot search residues modulo 0")
    m = abs(c.modulus)
    return _search([(c.coeffs, c.rhs, m)], len(c.coeffs), m, bound)


def brute_force_system(sys: CongruenceSystem, bound: int = SAFETY_BOUND) -> OracleReport:
    moduli = [abs(r.modulus) for r in sys.rows]
    if 0 in moduli:
        raise UsageError("cannot search residues modulo 0")
    L = math.lcm(*moduli)
    rows = [(r.coeffs, r.rhs, m) for r, m in zip(sys.rows, moduli)]
    return _search(rows, len(sys.variables), L, bound)
