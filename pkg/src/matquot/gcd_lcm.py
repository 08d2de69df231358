"""Left gcd and left lcm of the solution set of B * X = A.

The gcd closes the free block with an identity, the lcm with zeros; the
lcm is also the image of every solution under a fixed projector, which
is what makes both constructions checkable by plain multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch
from .matrix import Matrix
from .solver import (
    SolutionParameter,
    SolutionSet,
    build_solution_set,
    certify,
    general_solution,
    particular_solution,
)


@dataclass(frozen=True)
class GcdLcmPair:
    """Left gcd, left lcm, and the projector sending every solution to the lcm."""

    gcd: Matrix
    lcm: Matrix
    projector: Matrix


def _identity_parameter(ss: SolutionSet) -> SolutionParameter:
    ring = ss.u.ring
    free = ss.n - ss.t
    return SolutionParameter(
        t3=Matrix.zeros(ring, free, ss.t),
        t4=Matrix.identity(ring, free),
    )


def left_gcd(ss: SolutionSet) -> Matrix:
    """The solution whose free block is the identity; divides all solutions."""
    return general_solution(ss, _identity_parameter(ss))


def left_lcm(ss: SolutionSet) -> Matrix:
    """The solution whose free block is zero; a left multiple of all solutions."""
    return particular_solution(ss)


def lcm_projector(ss: SolutionSet) -> Matrix:
    ring = ss.u.ring
    middle = Matrix.diagonal(ring, [ring.one] * ss.t, ss.n, ss.n)
    return ss.u * middle * ss.uinv


def gcd_lcm_pair(ss: SolutionSet) -> GcdLcmPair:
    return GcdLcmPair(gcd=left_gcd(ss), lcm=left_lcm(ss), projector=lcm_projector(ss))


def cofactor(ss: SolutionSet, p: SolutionParameter) -> Matrix:
    """The witness m with left_gcd(ss) * m == general_solution(ss, p)."""
    free = ss.n - ss.t
    if p.t3.rows != free or p.t3.cols != ss.t:
        raise DimensionMismatch(f"t3 must be {free}x{ss.t}")
    if p.t4.rows != free or p.t4.cols != free:
        raise DimensionMismatch(f"t4 must be {free}x{free}")
    ring = ss.u.ring
    middle = Matrix.block(
        [
            [Matrix.identity(ring, ss.t), Matrix.zeros(ring, ss.t, free)],
            [p.t3, p.t4],
        ]
    )
    return ss.q * middle * ss.qinv


def left_divides(d: Matrix, a: Matrix):
    """Whether d * Y = a is solvable; returns (verdict, witness or None)."""
    cert = certify(d, a)
    if not cert.solvable:
        return False, None
    return True, particular_solution(build_solution_set(cert))


def right_divides(x: Matrix, n: Matrix):
    """Whether G * x = n is solvable; solved by transposing both sides."""
    ok, witness = left_divides(x.transpose(), n.transpose())
    if not ok:
        return False, None
    return True, witness.transpose()


def mutually_associate(m1: Matrix, m2: Matrix) -> bool:
    """Mutual left divisibility, the equivalence in which gcd answers live."""
    if m1.rows != m2.rows or m1.cols != m2.cols:
        raise DimensionMismatch("shapes differ")
    return left_divides(m1, m2)[0] and left_divides(m2, m1)[0]
