"""Diagonal and column-echelon canonical forms with invertible transforms.

The diagonal reduction alternates gcd-based row and column eliminations
around a pivot, fixes the divisor chain afterwards, and accumulates all
four transform matrices together with their inverses so no inversion is
ever needed after the fact.  Every diagonal reduction is re-checked
against its defining identities before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, ReductionInvariantError
from .matrix import Matrix

_VERIFIED_CALLS = 0


def verified_reduction_count() -> int:
    """How many diagonal reductions passed their built-in self-check."""
    return _VERIFIED_CALLS


@dataclass(frozen=True)
class SmithDecomposition:
    """Invertible p, q with p * a * q diagonal under the divisor chain.

    ``factors`` lists the nonzero diagonal entries in divisibility
    order, each the canonical associate, so factor lists from different
    matrices compare by plain equality.  ``pinv`` and ``qinv`` are exact
    inverses, giving a = pinv * diagonal * qinv.
    """

    p: Matrix
    pinv: Matrix
    factors: tuple
    q: Matrix
    qinv: Matrix
    rank: int

    @property
    def size(self) -> int:
        return self.p.rows

    def diagonal_matrix(self) -> Matrix:
        return Matrix.diagonal(self.p.ring, list(self.factors), self.size, self.size)


@dataclass(frozen=True)
class HermiteDecomposition:
    """Unimodular w with h = a * w in canonical column-echelon form."""

    h: Matrix
    w: Matrix

    def pivots(self) -> list:
        """(row, col) of each pivot, in column order."""
        ring = self.h.ring
        out = []
        for j in range(self.h.cols):
            for i in range(self.h.rows):
                if not ring.is_zero(self.h[i, j]):
                    out.append((i, j))
                    break
            else:
                break
        return out


class _WorkMatrix:
    """Mutable elimination buffer with paired transform accumulators.

    Every mutation keeps ``p * original * q == a`` while updating
    ``pinv``/``qinv`` with the inverse step, so both stay exact inverses
    throughout.  Transform tracking is optional per side.
    """

    def __init__(self, m: Matrix, track_rows: bool, track_cols: bool):
        self.ring = m.ring
        self.a = m.to_lists()
        self.rows = m.rows
        self.cols = m.cols
        eye = lambda n: Matrix.identity(self.ring, n).to_lists()
        self.p = eye(self.rows) if track_rows else None
        self.pinv = eye(self.rows) if track_rows else None
        self.q = eye(self.cols) if track_cols else None
        self.qinv = eye(self.cols) if track_cols else None

    # -- row operations ------------------------------------------------

    def swap_rows(self, i, j):
        self.a[i], self.a[j] = self.a[j], self.a[i]
        if self.p is not None:
            self.p[i], self.p[j] = self.p[j], self.p[i]
            for row in self.pinv:
                row[i], row[j] = row[j], row[i]

    def add_row_multiple(self, i, j, c):
        """row_i += c * row_j; inverse step subtracts on the pinv columns."""
        ri, rj = self.a[i], self.a[j]
        for col in range(self.cols):
            ri[col] = ri[col] + c * rj[col]
        if self.p is not None:
            pi, pj = self.p[i], self.p[j]
            for col in range(self.rows):
                pi[col] = pi[col] + c * pj[col]
            for row in self.pinv:
                row[j] = row[j] - c * row[i]

    def combine_rows(self, i, j, a, b, c, d):
        """(row_i, row_j) <- (a*ri + b*rj, c*ri + d*rj); needs a*d - b*c == 1."""
        ri, rj = self.a[i], self.a[j]
        for col in range(self.cols):
            e1, e2 = ri[col], rj[col]
            ri[col] = a * e1 + b * e2
            rj[col] = c * e1 + d * e2
        if self.p is not None:
            pi, pj = self.p[i], self.p[j]
            for col in range(self.rows):
                e1, e2 = pi[col], pj[col]
                pi[col] = a * e1 + b * e2
                pj[col] = c * e1 + d * e2
            for row in self.pinv:
                e1, e2 = row[i], row[j]
                row[i] = d * e1 - c * e2
                row[j] = a * e2 - b * e1

    def scale_row(self, i, u):
        """row_i *= u for a unit u; pinv column i picks up the inverse unit."""
        ri = self.a[i]
        for col in range(self.cols):
            ri[col] = u * ri[col]
        if self.p is not None:
            uinv = self.ring.unit_inverse(u)
            pi = self.p[i]
            for col in range(self.rows):
                pi[col] = u * pi[col]
            for row in self.pinv:
                row[i] = row[i] * uinv

    # -- column operations ----------------------------------------------

    def swap_cols(self, i, j):
        for row in self.a:
            row[i], row[j] = row[j], row[i]
        if self.q is not None:
            for row in self.q:
                row[i], row[j] = row[j], row[i]
            self.qinv[i], self.qinv[j] = self.qinv[j], self.qinv[i]

    def add_col_multiple(self, j, i, c):
        """col_j += c * col_i; inverse step subtracts on the qinv rows."""
        for row in self.a:
            row[j] = row[j] + c * row[i]
        if self.q is not None:
            for row in self.q:
                row[j] = row[j] + c * row[i]
            qi, qj = self.qinv[i], self.qinv[j]
            for col in range(self.cols):
                qi[col] = qi[col] - c * qj[col]

    def combine_cols(self, i, j, a, b, c, d):
        """(col_i, col_j) <- (a*ci + b*cj, c*ci + d*cj); needs a*d - b*c == 1."""
        for row in self.a:
            e1, e2 = row[i], row[j]
            row[i] = a * e1 + b * e2
            row[j] = c * e1 + d * e2
        if self.q is not None:
            for row in self.q:
                e1, e2 = row[i], row[j]
                row[i] = a * e1 + b * e2
                row[j] = c * e1 + d * e2
            qi, qj = self.qinv[i], self.qinv[j]
            for col in range(self.cols):
                e1, e2 = qi[col], qj[col]
                qi[col] = d * e1 - c * e2
                qj[col] = a * e2 - b * e1

    def scale_col(self, j, u):
        for row in self.a:
            row[j] = u * row[j]
        if self.q is not None:
            uinv = self.ring.unit_inverse(u)
            for row in self.q:
                row[j] = u * row[j]
            qj = self.qinv[j]
            for col in range(self.cols):
                qj[col] = uinv * qj[col]


def _pick_pivot(w: _WorkMatrix, d: int):
    """Smallest nonzero entry of the trailing block, ties by position."""
    ring = w.ring
    best = None
    for i in range(d, w.rows):
        row = w.a[i]
        for j in range(d, w.cols):
            if ring.is_zero(row[j]):
                continue
            key = (ring.pivot_key(row[j]), i, j)
            if best is None or key < best[0]:
                best = (key, i, j)
    if best is None:
        return None
    return best[1], best[2]


def _clear_cross(w: _WorkMatrix, d: int):
    """Zero row d and column d beyond the pivot.

    Entries the pivot divides are removed by plain transvections, which
    cannot disturb the pivot row or column; otherwise a gcd step shrinks
    the pivot in the divisor order, so the alternation terminates.
    """
    ring = w.ring
    while True:
        for i in range(d + 1, w.rows):
            b = w.a[i][d]
            if ring.is_zero(b):
                continue
            a = w.a[d][d]
            if ring.divides(a, b):
                w.add_row_multiple(i, d, -ring.exact_div(b, a))
            else:
                g, u, v = ring.ext_gcd(a, b)
                w.combine_rows(d, i, u, v, -ring.exact_div(b, g), ring.exact_div(a, g))
        for j in range(d + 1, w.cols):
            b = w.a[d][j]
            if ring.is_zero(b):
                continue
            a = w.a[d][d]
            if ring.divides(a, b):
                w.add_col_multiple(j, d, -ring.exact_div(b, a))
            else:
                g, u, v = ring.ext_gcd(a, b)
                w.combine_cols(d, j, u, v, -ring.exact_div(b, g), ring.exact_div(a, g))
        col_clear = all(ring.is_zero(w.a[i][d]) for i in range(d + 1, w.rows))
        row_clear = all(ring.is_zero(w.a[d][j]) for j in range(d + 1, w.cols))
        if col_clear and row_clear:
            return


def _diagonalize(w: _WorkMatrix) -> tuple:
    ring = w.ring
    limit = min(w.rows, w.cols)
    d = 0
    while d < limit:
        piv = _pick_pivot(w, d)
        if piv is None:
            break
        pi, pj = piv
        if pi != d:
            w.swap_rows(d, pi)
        if pj != d:
            w.swap_cols(d, pj)
        _clear_cross(w, d)
        d += 1
    rank = d

    # Repair the divisor chain: fold gcds leftward until every diagonal
    # entry divides its successor.
    changed = True
    while changed:
        changed = False
        for i in range(rank - 1):
            a = w.a[i][i]
            b = w.a[i + 1][i + 1]
            if ring.divides(a, b):
                continue
            w.add_row_multiple(i, i + 1, ring.one)
            g, u, v = ring.ext_gcd(a, b)
            w.combine_cols(i, i + 1, u, v, -ring.exact_div(b, g), ring.exact_div(a, g))
            resid = w.a[i + 1][i]
            if not ring.is_zero(resid):
                w.add_row_multiple(i + 1, i, -ring.exact_div(resid, g))
            changed = True

    for i in range(rank):
        canonical, unit = ring.normalize(w.a[i][i])
        if unit != ring.one:
            w.scale_row(i, ring.unit_inverse(unit))

    return rank, tuple(w.a[i][i] for i in range(rank))


def smith(m: Matrix) -> SmithDecomposition:
    """Diagonal reduction of a square matrix with all four transforms.

    The result satisfies p*m*q == diag(factors), p*pinv == I and
    q*qinv == I, with the factors canonical and each dividing the next;
    these identities are re-checked on every call.
    """
    if m.rows != m.cols:
        raise DimensionMismatch("diagonal reduction is defined for square input")
    w = _WorkMatrix(m, track_rows=True, track_cols=True)
    rank, factors = _diagonalize(w)
    ring = m.ring
    dec = SmithDecomposition(
        p=Matrix(ring, w.p, cols=m.rows),
        pinv=Matrix(ring, w.pinv, cols=m.rows),
        factors=factors,
        q=Matrix(ring, w.q, cols=m.cols),
        qinv=Matrix(ring, w.qinv, cols=m.cols),
        rank=rank,
    )
    _check_decomposition(m, dec)
    return dec


def _check_decomposition(m: Matrix, dec: SmithDecomposition):
    global _VERIFIED_CALLS
    ring = m.ring
    eye = Matrix.identity(ring, m.rows)
    if dec.p * m * dec.q != dec.diagonal_matrix():
        raise ReductionInvariantError("p*a*q does not equal the diagonal form")
    if dec.p * dec.pinv != eye:
        raise ReductionInvariantError("pinv is not the inverse of p")
    if dec.q * dec.qinv != eye:
        raise ReductionInvariantError("qinv is not the inverse of q")
    for f in dec.factors:
        if ring.is_zero(f) or ring.normalize(f)[0] != f:
            raise ReductionInvariantError("factor not canonical nonzero")
    for a, b in zip(dec.factors, dec.factors[1:]):
        if not ring.divides(a, b):
            raise ReductionInvariantError("divisor chain broken")
    _VERIFIED_CALLS += 1


def invariant_factors(m: Matrix) -> tuple:
    """Canonical nonzero invariant factors of any rectangular matrix."""
    w = _WorkMatrix(m, track_rows=False, track_cols=False)
    return _diagonalize(w)[1]


def hermite_col(m: Matrix) -> HermiteDecomposition:
    """Canonical column-echelon form h = m * w with w unimodular.

    Pivots are the first nonzero entry of each nonzero column, their
    rows strictly increase, each pivot is canonical, entries left of a
    pivot in its row are reduced remainders, and zero columns trail.
    The form is uniquely determined by the column module of m.
    """
    ring = m.ring
    w = _WorkMatrix(m, track_rows=False, track_cols=True)
    nextcol = 0
    for row in range(w.rows):
        if nextcol >= w.cols:
            break
        support = [j for j in range(nextcol, w.cols) if not ring.is_zero(w.a[row][j])]
        if not support:
            continue
        if support[0] != nextcol:
            w.swap_cols(nextcol, support[0])
        for j in range(nextcol + 1, w.cols):
            b = w.a[row][j]
            if ring.is_zero(b):
                continue
            a = w.a[row][nextcol]
            if ring.divides(a, b):
                w.add_col_multiple(j, nextcol, -ring.exact_div(b, a))
            else:
                g, u, v = ring.ext_gcd(a, b)
                w.combine_cols(nextcol, j, u, v, -ring.exact_div(b, g), ring.exact_div(a, g))
        canonical, unit = ring.normalize(w.a[row][nextcol])
        if unit != ring.one:
            w.scale_col(nextcol, ring.unit_inverse(unit))
        pivot = w.a[row][nextcol]
        for j in range(nextcol):
            q, _ = ring.reduce(w.a[row][j], pivot)
            if not ring.is_zero(q):
                w.add_col_multiple(j, nextcol, -q)
        nextcol += 1
    return HermiteDecomposition(
        h=Matrix(ring, w.a, cols=m.cols),
        w=Matrix(ring, w.q, cols=m.cols),
    )
