"""Dense matrices over an exact coefficient ring.

Entries live in one of the rings from :mod:`matquot.rings`; all
arithmetic is exact and every operation returns a fresh matrix.  Shapes
with zero rows or columns are first class, since several block formulas
degenerate to empty blocks at full rank.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DimensionMismatch


class Matrix:
    __slots__ = ("ring", "rows", "cols", "data")

    def __init__(self, ring, data: Iterable[Sequence], cols: int | None = None):
        rows = tuple(tuple(r) for r in data)
        if rows:
            width = len(rows[0])
            for r in rows:
                if len(r) != width:
                    raise DimensionMismatch("ragged rows")
            if cols is not None and cols != width:
                raise DimensionMismatch("cols does not match row width")
            cols = width
        elif cols is None:
            cols = 0
        self.ring = ring
        self.rows = len(rows)
        self.cols = cols
        self.data = rows

    @classmethod
    def zeros(cls, ring, rows: int, cols: int) -> "Matrix":
        z = ring.zero
        return cls(ring, [[z] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, ring, n: int) -> "Matrix":
        z, o = ring.zero, ring.one
        return cls(ring, [[o if i == j else z for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def diagonal(cls, ring, entries: Sequence, rows: int | None = None, cols: int | None = None) -> "Matrix":
        entries = list(entries)
        if rows is None:
            rows = len(entries)
        if cols is None:
            cols = rows
        if len(entries) > min(rows, cols):
            raise DimensionMismatch("too many diagonal entries")
        z = ring.zero
        data = [[z] * cols for _ in range(rows)]
        for i, e in enumerate(entries):
            data[i][i] = e
        return cls(ring, data, cols=cols)

    @classmethod
    def block(cls, grid: Sequence[Sequence["Matrix"]]) -> "Matrix":
        """Assemble a matrix from a grid of blocks.

        Blocks within a grid row must share a height and every grid row
        must have the same total width; the column splits may differ
        from row to row.  Zero-height and zero-width blocks are allowed.
        """
        if not grid or not grid[0]:
            raise DimensionMismatch("empty block grid")
        ring = grid[0][0].ring
        width = None
        out = []
        for blocks in grid:
            height = blocks[0].rows
            total = 0
            for b in blocks:
                if b.ring is not ring:
                    raise ValueError("mixed rings in block grid")
                if b.rows != height:
                    raise DimensionMismatch("block heights differ within a grid row")
                total += b.cols
            if width is None:
                width = total
            elif total != width:
                raise DimensionMismatch("grid rows have different total widths")
            for i in range(height):
                row = []
                for b in blocks:
                    row.extend(b.data[i])
                out.append(row)
        return cls(ring, out, cols=width)

    def __getitem__(self, key):
        i, j = key
        return self.data[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.ring is other.ring
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        return f"Matrix<{self.ring.name} {self.rows}x{self.cols}>"

    def to_lists(self):
        return [list(r) for r in self.data]

    def _require_same_shape(self, other):
        if self.ring is not other.ring:
            raise ValueError("mixed rings")
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch(f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __add__(self, other):
        self._require_same_shape(other)
        return Matrix(
            self.ring,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)],
            cols=self.cols,
        )

    def __sub__(self, other):
        self._require_same_shape(other)
        return Matrix(
            self.ring,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)],
            cols=self.cols,
        )

    def __neg__(self):
        return Matrix(self.ring, [[-a for a in r] for r in self.data], cols=self.cols)

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ring is not other.ring:
            raise ValueError("mixed rings")
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} times {other.rows}x{other.cols}")
        zero = self.ring.zero
        bt = list(zip(*other.data)) if other.data else [()] * other.cols
        out = []
        for ra in self.data:
            row = []
            for cb in bt:
                acc = zero
                for a, b in zip(ra, cb):
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix(self.ring, out, cols=other.cols)

    def scale(self, s):
        return Matrix(self.ring, [[s * a for a in r] for r in self.data], cols=self.cols)

    def transpose(self):
        return Matrix(self.ring, list(zip(*self.data)) if self.data else [], cols=self.rows)

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        """Rows r0..r1 and columns c0..c1, endpoints exclusive."""
        if not (0 <= r0 <= r1 <= self.rows and 0 <= c0 <= c1 <= self.cols):
            raise DimensionMismatch("submatrix bounds out of range")
        return Matrix(self.ring, [r[c0:c1] for r in self.data[r0:r1]], cols=c1 - c0)

    def is_zero(self) -> bool:
        z = self.ring.is_zero
        return all(z(a) for r in self.data for a in r)

    def determinant(self):
        """Exact determinant.

        Uses cofactor expansion for very small matrices and fraction-free
        elimination (only exact divisions) above that, so it is valid over
        both coefficient rings.
        """
        if self.rows != self.cols:
            raise DimensionMismatch("determinant of a non-square matrix")
        n = self.rows
        ring = self.ring
        if n == 0:
            return ring.one
        if n <= 3:
            return self._det_cofactor()
        m = self.to_lists()
        sign = False
        prev = ring.one
        for k in range(n - 1):
            if ring.is_zero(m[k][k]):
                for i in range(k + 1, n):
                    if not ring.is_zero(m[i][k]):
                        m[k], m[i] = m[i], m[k]
                        sign = not sign
                        break
                else:
                    return ring.zero
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = ring.exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
                m[i][k] = ring.zero
            prev = m[k][k]
        det = m[n - 1][n - 1]
        return -det if sign else det

    def _det_cofactor(self):
        d = self.data
        if self.rows == 1:
            return d[0][0]
        if self.rows == 2:
            return d[0][0] * d[1][1] - d[0][1] * d[1][0]
        return (
            d[0][0] * (d[1][1] * d[2][2] - d[1][2] * d[2][1])
            - d[0][1] * (d[1][0] * d[2][2] - d[1][2] * d[2][0])
            + d[0][2] * (d[1][0] * d[2][1] - d[1][1] * d[2][0])
        )

    def is_unimodular(self) -> bool:
        return self.ring.is_unit(self.determinant())


def hstack(mats: Sequence[Matrix]) -> Matrix:
    return Matrix.block([list(mats)])


def vstack(mats: Sequence[Matrix]) -> Matrix:
    return Matrix.block([[m] for m in mats])
