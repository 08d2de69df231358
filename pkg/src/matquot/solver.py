"""Solvability test and full solution parametrization for B * X = A.

Both sides are put in diagonal form, A = pinv_a * E * qinv_a and
B = pinv_b * Phi * qinv_b.  Writing link = p_b * pinv_a, the equation is
solvable exactly when every entry of link against the nonzero part of E
satisfies a divisibility pattern; the quotients of that pattern form the
core block of every solution, and the remaining freedom is an arbitrary
bottom block plus the right annihilator of B.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, NotSolvable, ReductionInvariantError
from .matrix import Matrix, hstack, vstack
from .normal_forms import SmithDecomposition, invariant_factors, smith


@dataclass(frozen=True)
class SolvabilityCertificate:
    """Outcome of the divisibility test, with everything used to decide it.

    ``failure`` is None when solvable, otherwise ``(i, j, reason)`` for
    the first cell of ``link`` that breaks the pattern (0-based).
    """

    snf_a: SmithDecomposition
    snf_b: SmithDecomposition
    link: Matrix
    n: int
    k: int
    t: int
    solvable: bool
    failure: tuple | None


@dataclass(frozen=True)
class SolutionSet:
    """Data needed to emit any solution of a solvable instance.

    ``m1`` (k x k) and ``m2`` ((t-k) x k) hold the forced quotient core;
    the transforms come from the two diagonal reductions, ``u``/``uinv``
    from the divisor side and ``q``/``qinv`` from the target side.
    """

    m1: Matrix
    m2: Matrix
    u: Matrix
    uinv: Matrix
    q: Matrix
    qinv: Matrix
    n: int
    k: int
    t: int

    @property
    def core(self) -> Matrix:
        return vstack([self.m1, self.m2])

    def inner(self, t3: Matrix, t4: Matrix) -> Matrix:
        """The n x n middle factor [core 0; t3 t4] of a solution."""
        ring = self.u.ring
        top = hstack([self.core, Matrix.zeros(ring, self.t, self.n - self.k)])
        bottom = hstack([t3, t4])
        return vstack([top, bottom])

    def contains(self, x: Matrix) -> bool:
        """Whether x lies in the emitted solution coset."""
        if x.rows != self.n or x.cols != self.n:
            raise DimensionMismatch("candidate has the wrong shape")
        ring = self.u.ring
        inner = self.uinv * x * self.q
        expected = hstack([self.core, Matrix.zeros(ring, self.t, self.n - self.k)])
        return inner.submatrix(0, self.t, 0, self.n) == expected


@dataclass(frozen=True)
class SolutionParameter:
    """Free bottom block of a solution, split at column t."""

    t3: Matrix
    t4: Matrix


@dataclass(frozen=True)
class AnnihilatorParameter:
    """Free block generating one element of the right annihilator."""

    d: Matrix


def divisibility_failure(link: Matrix, eps, phi, k: int, t: int) -> tuple | None:
    """First cell breaking the solvability pattern, or None.

    For columns j < k the entry times eps[j] must be divisible by phi[i]
    in the first t rows and zero below them.
    """
    ring = link.ring
    for j in range(k):
        for i in range(link.rows):
            entry = link[i, j]
            if i < t:
                if not ring.divides(phi[i], entry * eps[j]):
                    return (i, j, "indivisible")
            elif not ring.is_zero(entry):
                return (i, j, "nonzero-below-rank")
    return None


def certify(b: Matrix, a: Matrix) -> SolvabilityCertificate:
    """Decide solvability of b * X = a from fixed diagonal reductions.

    The test is independent of which reductions are produced; the
    certificate keeps the link matrix and dimensions for diagnostics
    even when the verdict is negative.
    """
    if b.ring is not a.ring:
        raise ValueError("mixed rings")
    if b.rows != b.cols or a.rows != a.cols or b.rows != a.rows:
        raise DimensionMismatch("both matrices must be square of equal size")
    snf_a = smith(a)
    snf_b = smith(b)
    link = snf_b.p * snf_a.pinv
    k = snf_a.rank
    t = snf_b.rank
    failure = divisibility_failure(link, snf_a.factors, snf_b.factors, k, t)
    solvable = failure is None
    if solvable:
        ring = b.ring
        if t < k:
            raise ReductionInvariantError("solvable instance with t < k")
        for i in range(k):
            if not ring.divides(snf_b.factors[i], snf_a.factors[i]):
                raise ReductionInvariantError("solvable instance without factor divisibility")
    return SolvabilityCertificate(
        snf_a=snf_a,
        snf_b=snf_b,
        link=link,
        n=b.rows,
        k=k,
        t=t,
        solvable=solvable,
        failure=failure,
    )


def check_solvable_augmented(b: Matrix, a: Matrix) -> bool:
    """Cross-check: solvable iff b and [a b] share their invariant factors."""
    if b.rows != b.cols or a.rows != a.cols or b.rows != a.rows:
        raise DimensionMismatch("both matrices must be square of equal size")
    return invariant_factors(b) == invariant_factors(hstack([a, b]))


def solution_core(link: Matrix, eps, phi, k: int, t: int) -> Matrix:
    """The forced t x k quotient block: entry (i, j) = link[i,j]*eps[j]/phi[i]."""
    ring = link.ring
    return Matrix(
        ring,
        [
            [ring.exact_div(link[i, j] * eps[j], phi[i]) for j in range(k)]
            for i in range(t)
        ],
        cols=k,
    )


def build_solution_set(cert: SolvabilityCertificate) -> SolutionSet:
    if not cert.solvable:
        raise NotSolvable("the equation has no solution")
    core = solution_core(cert.link, cert.snf_a.factors, cert.snf_b.factors, cert.k, cert.t)
    return SolutionSet(
        m1=core.submatrix(0, cert.k, 0, cert.k),
        m2=core.submatrix(cert.k, cert.t, 0, cert.k),
        u=cert.snf_b.q,
        uinv=cert.snf_b.qinv,
        q=cert.snf_a.q,
        qinv=cert.snf_a.qinv,
        n=cert.n,
        k=cert.k,
        t=cert.t,
    )


def general_solution(ss: SolutionSet, p: SolutionParameter) -> Matrix:
    """The solution with free bottom block [t3 t4]; exact for every choice."""
    free_rows = ss.n - ss.t
    if p.t3.rows != free_rows or p.t3.cols != ss.t:
        raise DimensionMismatch(f"t3 must be {free_rows}x{ss.t}")
    if p.t4.rows != free_rows or p.t4.cols != ss.n - ss.t:
        raise DimensionMismatch(f"t4 must be {free_rows}x{ss.n - ss.t}")
    return ss.u * ss.inner(p.t3, p.t4) * ss.qinv


def zero_parameter(ss: SolutionSet) -> SolutionParameter:
    ring = ss.u.ring
    free_rows = ss.n - ss.t
    return SolutionParameter(
        t3=Matrix.zeros(ring, free_rows, ss.t),
        t4=Matrix.zeros(ring, free_rows, free_rows),
    )


def particular_solution(ss: SolutionSet) -> Matrix:
    """The zero-free-block solution; by construction the minimal one."""
    return general_solution(ss, zero_parameter(ss))


def annihilator_element(snf_b: SmithDecomposition, d: AnnihilatorParameter) -> Matrix:
    """u * [0; d], a right annihilator element of the reduced matrix."""
    n = snf_b.size
    t = snf_b.rank
    if d.d.rows != n - t or d.d.cols != n:
        raise DimensionMismatch(f"d must be {n - t}x{n}")
    ring = snf_b.p.ring
    return snf_b.q * vstack([Matrix.zeros(ring, t, n), d.d])


def annihilator_generators(snf_b: SmithDecomposition) -> list:
    """The n - t canonical generators, one unit row in the free block each."""
    n = snf_b.size
    t = snf_b.rank
    ring = snf_b.p.ring
    out = []
    for i in range(n - t):
        rows = [[ring.zero] * n for _ in range(n - t)]
        rows[i][t + i] = ring.one
        out.append(annihilator_element(snf_b, AnnihilatorParameter(Matrix(ring, rows, cols=n))))
    return out
