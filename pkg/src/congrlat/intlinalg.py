"""Exact integer linear algebra.

Extended gcd with Bezout certificates, and general integer solutions of a
single linear Diophantine equation or of a system of them. Everything works
on Python ints, so there is no overflow to worry about.

Systems are solved by unimodular column operations: ``A @ U = H`` with ``H``
in lower column-echelon form and ``U`` unimodular. Solving ``H y = b`` is then
a forward substitution, and ``x = U y``. The columns of ``U`` that correspond
to zero columns of ``H`` span the integer null space of ``A``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Optional, Sequence

from .errors import UsageError

Vector = tuple[int, ...]


@dataclass(frozen=True)
class BezoutCertificate:
    gcd: int
    coefficients: Vector

    def check(self, values: Sequence[int]) -> bool:
        """True if the certificate is valid for ``values``."""
        if len(values) != len(self.coefficients) or self.gcd < 0:
            return False
        if sum(c * v for c, v in zip(self.coefficients, values)) != self.gcd:
            return False
        return all(divides(self.gcd, v) for v in values)


@dataclass(frozen=True)
class AffineLattice:
    """The set ``particular + span_Z(basis)``.

    Slack unknowns (such as the ``y`` in ``a.x - m*y = b``) are ordinary
    coordinates here; callers drop what they do not need.
    """

    arity: int
    particular: Vector
    basis: tuple[Vector, ...]

    def point(self, params: Sequence[int]) -> Vector:
        if len(params) != len(self.basis):
            raise UsageError(f"expected {len(self.basis)} parameters, got {len(params)}")
        out = list(self.particular)
        for k, vec in zip(params, self.basis):
            for i, v in enumerate(vec):
                out[i] += k * v
        return tuple(out)

    def __contains__(self, vec: Sequence[int]) -> bool:
        if len(vec) != self.arity:
            return False
        diff = [int(v) - p for v, p in zip(vec, self.particular)]
        if not self.basis:
            return not any(diff)
        # The basis columns may be written in any order; solve in the lattice
        # via the same echelon machinery used for systems.
        cols = [list(row) for row in zip(*self.basis)]
        return solve_diophantine_system(cols, diff) is not None

    def project(self, coords: Sequence[int]) -> "AffineLattice":
        """Keep only the coordinates listed in ``coords``."""
        return AffineLattice(
            arity=len(coords),
            particular=tuple(self.particular[i] for i in coords),
            basis=tuple(tuple(vec[i] for i in coords) for vec in self.basis),
        )


def divides(d: int, x: int) -> bool:
    """Divisibility with the convention ``0 | x`` iff ``x == 0``."""
    if d == 0:
        return x == 0
    return x % d == 0


def ext_gcd(a: int, b: int) -> BezoutCertificate:
    """Return ``g >= 0`` with ``u*a + v*b == g``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    if old_r == 0:
        # gcd(0, 0): any coefficients satisfy the identity, pick zeros.
        old_s, old_t = 0, 0
    return BezoutCertificate(old_r, (old_s, old_t))


def gcd_vec(values: Sequence[int]) -> BezoutCertificate:
    """Fold :func:`ext_gcd` over ``values``, keeping a certificate for all of them."""
    values = [int(v) for v in values]
    if not values:
        raise UsageError("gcd_vec needs at least one value")
    g = abs(values[0])
    coeffs = [(-1 if values[0] < 0 else 1) if values[0] else 0]
    for v in values[1:]:
        cert = ext_gcd(g, v)
        u, w = cert.coefficients
        coeffs = [c * u for c in coeffs]
        coeffs.append(w)
        g = cert.gcd
    return BezoutCertificate(g, tuple(coeffs))


def lcm_vec(values: Sequence[int]) -> int:
    values = [int(v) for v in values]
    if not values:
        raise UsageError("lcm_vec needs at least one value")
    if any(v == 0 for v in values):
        raise UsageError("lcm_vec is undefined for a zero value")
    return reduce(lambda x, y: abs(x * y) // gcd(x, y), values, 1)


def column_echelon(matrix: Sequence[Sequence[int]], ncols: Optional[int] = None):
    """Bring ``matrix`` to lower column-echelon form by unimodular column ops.

    Returns ``(H, U, pivots)`` where ``H == matrix @ U``, ``U`` is unimodular
    and ``pivots`` lists ``(row, col)`` for each non-zero pivot, with pivot
    columns ``0, 1, ..., rank-1`` in order. Entries of ``H`` right of a row's
    pivot are zero; pivots are positive.
    """
    rows = [list(map(int, r)) for r in matrix]
    n = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    H = rows
    U = [[int(i == j) for j in range(n)] for i in range(n)]

    def colop(p: int, j: int, a11: int, a12: int, a21: int, a22: int) -> None:
        # (col_p, col_j) <- (a11*col_p + a12*col_j, a21*col_p + a22*col_j)
        for M in (H, U):
            for row in M:
                x, y = row[p], row[j]
                row[p] = a11 * x + a12 * y
                row[j] = a21 * x + a22 * y

    pivots = []
    col = 0
    for i, row in enumerate(H):
        if col >= n:
            break
        for j in range(col + 1, n):
            b = row[j]
            if b == 0:
                continue
            a = row[col]
            cert = ext_gcd(a, b)
            g = cert.gcd
            u, v = cert.coefficients
            colop(col, j, u, v, -b // g, a // g)
        if row[col] == 0:
            continue
        if row[col] < 0:
            for M in (H, U):
                for r in M:
                    r[col] = -r[col]
        pivots.append((i, col))
        col += 1
    return H, U, pivots


def solve_diophantine_system(
    matrix: Sequence[Sequence[int]], rhs: Sequence[int]
) -> Optional[AffineLattice]:
    """General integer solution of ``matrix @ x == rhs``, or None if there is none."""
    if not matrix or not matrix[0]:
        raise UsageError("need at least one row and one column")
    n = len(matrix[0])
    if any(len(r) != n for r in matrix):
        raise UsageError("ragged matrix")
    if len(rhs) != len(matrix):
        raise UsageError("rhs length does not match the number of rows")

    H, U, pivots = column_echelon(matrix, n)
    pivot_of_row = dict(pivots)
    rank = len(pivots)
    y = [0] * n
    for i, row in enumerate(H):
        # Only columns < rank can be non-zero in H.
        acc = sum(row[c] * y[c] for c in range(rank))
        residual = int(rhs[i]) - acc
        c = pivot_of_row.get(i)
        if c is None:
            if residual != 0:
                return None
            continue
        q, r = divmod(residual, row[c])
        if r:
            return None
        y[c] = q
    particular = tuple(sum(U[i][c] * y[c] for c in range(rank)) for i in range(n))
    basis = tuple(tuple(U[i][c] for i in range(n)) for c in range(rank, n))
    return AffineLattice(n, particular, basis)


def solve_linear_diophantine(coeffs: Sequence[int], rhs: int) -> Optional[AffineLattice]:
    """General integer solution of ``sum(coeffs[i] * x[i]) == rhs``."""
    if not coeffs:
        raise UsageError("need at least one coefficient")
    return solve_diophantine_system([list(coeffs)], [rhs])


def lattice_index(vectors: Sequence[Sequence[int]], dim: int) -> int:
    """Index of the lattice spanned by ``vectors`` in ``Z^dim``; 0 if not full rank."""
    if dim == 0:
        return 1
    if not vectors:
        return 0
    cols = [list(r) for r in zip(*vectors)]
    H, _, pivots = column_echelon(cols, len(vectors))
    if len(pivots) < dim:
        return 0
    idx = 1
    for i, c in pivots:
        idx *= H[i][c]
    return idx
