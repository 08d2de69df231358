"""Seeded random matrices for the verification battery and tests."""

from __future__ import annotations

import random

from .matrix import Matrix


def random_matrix(ring, rng: random.Random, rows: int, cols: int, **kwargs) -> Matrix:
    return Matrix(
        ring,
        [[ring.random_scalar(rng, **kwargs) for _ in range(cols)] for _ in range(rows)],
        cols=cols,
    )


def random_unimodular(ring, rng: random.Random, n: int, steps: int | None = None) -> Matrix:
    """Product of random elementary operations; determinant stays a unit."""
    if steps is None:
        steps = 2 * n
    m = Matrix.identity(ring, n).to_lists()
    for _ in range(steps):
        kind = rng.randrange(3)
        if n < 2 or kind == 0:
            i = rng.randrange(n) if n else 0
            if n:
                unit = -1 if rng.random() < 0.5 else 1
                if unit == -1:
                    m[i] = [-e for e in m[i]]
        elif kind == 1:
            i, j = rng.sample(range(n), 2)
            m[i], m[j] = m[j], m[i]
        else:
            i, j = rng.sample(range(n), 2)
            c = ring.random_scalar(rng, bound=2, degree=1)
            m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    return Matrix(ring, m, cols=n)
