"""Exact scalar arithmetic for the supported coefficient domains.

Two domains are provided: arbitrary-precision integers and univariate
polynomials with exact rational coefficients.  Both support extended
gcd with Bezout coefficients, exact division, and a canonical associate
for every element, which is all the diagonal-reduction code relies on.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import NamedTuple

from .errors import DivisionByZero, NotDivisible


class BezoutTriple(NamedTuple):
    g: object
    u: object
    v: object


_INT_RE = re.compile(r"-?[0-9]+\Z")
_RAT_RE = re.compile(r"(-?[0-9]+)(?:/([0-9]+))?\Z")


class QPoly:
    """Univariate polynomial over the rationals.

    Coefficients are stored ascending by degree with trailing zeros
    stripped, so equal polynomials compare equal entrywise.  Instances
    are treated as immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return QPoly(-c for c in self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return QPoly(out)

    def __divmod__(self, other):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        div = other.coeffs
        lead = div[-1]
        qlen = len(rem) - len(div) + 1
        if qlen <= 0:
            return QPoly(), self
        quo = [Fraction(0)] * qlen
        for shift in range(qlen - 1, -1, -1):
            c = rem[shift + len(div) - 1] / lead
            if c:
                quo[shift] = c
                for i, dc in enumerate(div):
                    rem[shift + i] -= c * dc
        return QPoly(quo), QPoly(rem)

    def __repr__(self):
        return f"QPoly({list(self.coeffs)!r})"


class IntegerRing:
    """The integers with non-negative canonical associates."""

    name = "int"
    zero = 0
    one = 1

    def is_zero(self, a) -> bool:
        return a == 0

    def is_unit(self, a) -> bool:
        return a == 1 or a == -1

    def ext_gcd(self, a, b) -> BezoutTriple:
        """Extended Euclid; the gcd comes back canonical (non-negative)."""
        if a == 0 and b == 0:
            return BezoutTriple(0, 0, 0)
        old_r, r = a, b
        old_u, u = 1, 0
        old_v, v = 0, 1
        while r != 0:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_u, u = u, old_u - q * u
            old_v, v = v, old_v - q * v
        if old_r < 0:
            old_r, old_u, old_v = -old_r, -old_u, -old_v
        return BezoutTriple(old_r, old_u, old_v)

    def exact_div(self, a, b):
        if b == 0:
            raise DivisionByZero("integer division by zero")
        q, r = divmod(a, b)
        if r:
            raise NotDivisible(f"{b} does not divide {a}")
        return q

    def divides(self, b, a) -> bool:
        if b == 0:
            return a == 0
        return a % b == 0

    def normalize(self, a):
        """Split into (canonical associate, unit) with canonical*unit == a."""
        return (-a, -1) if a < 0 else (a, 1)

    def unit_inverse(self, u):
        return u

    def reduce(self, a, m):
        """Division with canonical remainder: a == q*m + r, 0 <= r < |m|."""
        if m < 0:
            q, r = divmod(a, -m)
            return -q, r
        return divmod(a, m)

    def pivot_key(self, a):
        return abs(a)

    def parse(self, text: str):
        if not _INT_RE.match(text):
            raise ValueError(f"not an integer literal: {text!r}")
        return int(text)

    def format(self, a) -> str:
        return str(a)

    def random_scalar(self, rng, bound=5, degree=2):
        return rng.randint(-bound, bound)


class RationalPolyRing:
    """Polynomials over the rationals with monic canonical associates."""

    name = "polyq"
    zero = QPoly()
    one = QPoly((1,))

    def is_zero(self, a) -> bool:
        return not a.coeffs

    def is_unit(self, a) -> bool:
        return a.degree == 0

    def ext_gcd(self, a, b) -> BezoutTriple:
        """Extended Euclid; the gcd comes back canonical (monic)."""
        if not a and not b:
            return BezoutTriple(self.zero, self.zero, self.zero)
        old_r, r = a, b
        old_u, u = self.one, self.zero
        old_v, v = self.zero, self.one
        while r:
            q, rem = divmod(old_r, r)
            old_r, r = r, rem
            old_u, u = u, old_u - q * u
            old_v, v = v, old_v - q * v
        lead = old_r.coeffs[-1]
        if lead != 1:
            scale = QPoly((1 / lead,))
            old_r, old_u, old_v = old_r * scale, old_u * scale, old_v * scale
        return BezoutTriple(old_r, old_u, old_v)

    def exact_div(self, a, b):
        if not b:
            raise DivisionByZero("polynomial division by zero")
        q, r = divmod(a, b)
        if r:
            raise NotDivisible(f"{self.format(b)} does not divide {self.format(a)}")
        return q

    def divides(self, b, a) -> bool:
        if not b:
            return not a
        return not divmod(a, b)[1]

    def normalize(self, a):
        if not a:
            return self.zero, self.one
        lead = a.coeffs[-1]
        if lead == 1:
            return a, self.one
        return a * QPoly((1 / lead,)), QPoly((lead,))

    def unit_inverse(self, u):
        return QPoly((1 / u.coeffs[0],))

    def reduce(self, a, m):
        return divmod(a, m)

    def pivot_key(self, a):
        return (a.degree, tuple(abs(c) for c in reversed(a.coeffs)))

    def parse(self, text: str):
        if len(text) < 2 or text[0] != "[" or text[-1] != "]":
            raise ValueError(f"not a polynomial literal: {text!r}")
        body = text[1:-1]
        if not body:
            raise ValueError("empty polynomial literal")
        coeffs = []
        for part in body.split(","):
            m = _RAT_RE.match(part)
            if not m:
                raise ValueError(f"bad rational coefficient: {part!r}")
            num = int(m.group(1))
            den = int(m.group(2)) if m.group(2) is not None else 1
            if den == 0:
                raise ValueError(f"zero denominator: {part!r}")
            coeffs.append(Fraction(num, den))
        return QPoly(coeffs)

    def format(self, a) -> str:
        if not a.coeffs:
            return "[0]"
        return "[" + ",".join(str(c) for c in a.coeffs) + "]"

    def random_scalar(self, rng, bound=3, degree=2):
        n_coeffs = rng.randint(0, degree) + 1
        return QPoly([Fraction(rng.randint(-bound, bound)) for _ in range(n_coeffs)])


ZZ = IntegerRing()
QX = RationalPolyRing()

RINGS = {"int": ZZ, "polyq": QX}
