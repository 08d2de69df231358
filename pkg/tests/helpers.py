"""Shared independent oracles and random builders for the test suite."""

from itertools import combinations

from matquot import Matrix
from matquot.randgen import random_matrix, random_unimodular  # noqa: F401  (re-export)


def determinantal_divisor(m: Matrix, k: int):
    """Gcd of all k x k minors, canonical; zero if every minor vanishes.

    Brute-force oracle, independent of the elimination code paths.
    """
    ring = m.ring
    g = ring.zero
    for rows in combinations(range(m.rows), k):
        for cols in combinations(range(m.cols), k):
            sub = Matrix(ring, [[m[i, j] for j in cols] for i in rows], cols=k)
            d = sub.determinant()
            if not ring.is_zero(d):
                g = ring.ext_gcd(g, d).g
    return g


def factors_from_minors(m: Matrix, max_k: int | None = None):
    """Invariant factors via quotients of successive minor gcds."""
    ring = m.ring
    out = []
    prev = ring.one
    k = 1
    limit = min(m.rows, m.cols)
    while k <= limit and (max_k is None or k <= max_k):
        d = determinantal_divisor(m, k)
        if ring.is_zero(d):
            break
        out.append(ring.exact_div(d, prev))
        prev = d
        k += 1
    return tuple(out)
