"""Independent cross-checking machinery.

Everything here goes through the column-echelon form only, never the
diagonal reduction, so agreement between this module and the solver is
evidence from two separate routes.  The exhaustive search is a third
route for tiny integer instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import DimensionMismatch, TooLarge
from .matrix import Matrix, hstack
from .normal_forms import hermite_col
from .rings import ZZ

ENUMERATION_CEILING = 100_000


@dataclass(frozen=True)
class ColumnModule:
    """Canonical generator matrix of a column module.

    Two generator blocks span the same module exactly when their
    canonical matrices are entrywise equal.
    """

    canonical: Matrix


def hnf_solve(b: Matrix, a: Matrix) -> Matrix | None:
    """Some solution of b * X = a via column echelon form, or None.

    Each column of a is forward-substituted through the pivots of the
    echelon form of b with exact-division checks; free components are
    zero.  Unsolvable columns make the whole call return None.
    """
    if b.ring is not a.ring:
        raise ValueError("mixed rings")
    if b.rows != b.cols or a.rows != a.cols or b.rows != a.rows:
        raise DimensionMismatch("both matrices must be square of equal size")
    ring = b.ring
    n = b.rows
    dec = hermite_col(b)
    h = dec.h
    pivots = dec.pivots()
    y_cols = []
    for col in range(n):
        residual = [a[i, col] for i in range(n)]
        y = [ring.zero] * n
        for prow, pcol in pivots:
            val = residual[prow]
            if ring.is_zero(val):
                continue
            pivot = h[prow, pcol]
            if not ring.divides(pivot, val):
                return None
            coeff = ring.exact_div(val, pivot)
            y[pcol] = coeff
            for i in range(n):
                residual[i] = residual[i] - coeff * h[i, pcol]
        if any(not ring.is_zero(r) for r in residual):
            return None
        y_cols.append(y)
    y = Matrix(ring, list(zip(*y_cols)), cols=n)
    return dec.w * y


def column_module(generators: list) -> ColumnModule:
    """Canonical form of the module spanned by all columns of the generators."""
    if not generators:
        raise DimensionMismatch("at least one generator matrix is required")
    rows = generators[0].rows
    ring = generators[0].ring
    for g in generators:
        if g.ring is not ring:
            raise ValueError("mixed rings")
        if g.rows != rows:
            raise DimensionMismatch("generators must share their row count")
    h = hermite_col(hstack(list(generators))).h
    width = h.cols
    while width > 0 and all(ring.is_zero(h[i, width - 1]) for i in range(rows)):
        width -= 1
    return ColumnModule(canonical=h.submatrix(0, rows, 0, width))


def exhaustive_solutions(b: Matrix, a: Matrix, bound: int) -> list:
    """All integer solutions with entries in [-bound, bound], by enumeration."""
    if b.ring is not ZZ or a.ring is not ZZ:
        raise ValueError("enumeration is integer-only")
    if b.rows != b.cols or a.rows != a.cols or b.rows != a.rows:
        raise DimensionMismatch("both matrices must be square of equal size")
    n = b.rows
    states = (2 * bound + 1) ** (n * n)
    if states > ENUMERATION_CEILING:
        raise TooLarge(f"{states} candidates exceed the ceiling of {ENUMERATION_CEILING}")
    values = range(-bound, bound + 1)
    found = []
    for flat in product(values, repeat=n * n):
        x = Matrix(ZZ, [flat[i * n : (i + 1) * n] for i in range(n)], cols=n)
        if b * x == a:
            found.append(x)
    return found
