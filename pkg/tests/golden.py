"""Frozen reference instance: the 7x7 integer equation used across the suite.

All expected values here were verified against independent computations
(minor-gcd divisors, echelon solving, explicit products) before being
frozen; tests must never rederive them from the code under test.
"""

from matquot import Matrix, ZZ

N_SIZE = 7
K_RANK = 3
T_RANK = 5

A_FACTORS = (1, 2, 6)
B_FACTORS = (1, 1, 2, 4, 12)

A_GOLD = Matrix.diagonal(ZZ, list(A_FACTORS), N_SIZE, N_SIZE)

B_GOLD = Matrix(ZZ, [
    [ 0,  1,   0, 0,  0, 0, 0],
    [ 0, -2,   2, 0,  0, 0, 0],
    [ 1,  0,   0, 0,  0, 0, 0],
    [ 0,  0,   0, 0,  0, 0, 0],
    [-2,  0, -12, 0, 12, 0, 0],
    [ 0,  0,   0, 0,  0, 0, 0],
    [-2,  0,  -4, 4,  0, 0, 0],
])

# A known unimodular row transform of B_GOLD belonging to the solvability
# pattern for the factor lists above.
L_GOLD = Matrix(ZZ, [
    [ 0, 0, 1, 0, 0, 0, 0],
    [ 1, 0, 0, 0, 0, 0, 0],
    [ 2, 1, 0, 0, 0, 0, 0],
    [ 4, 2, 2, 0, 0, 0, 1],
    [12, 6, 2, 0, 1, 0, 0],
    [ 0, 0, 0, 0, 0, 1, 0],
    [ 0, 0, 0, 1, 0, 0, 0],
])

# Quotient core induced by L_GOLD: entry (i, j) = L[i,j] * eps[j] / phi[i].
S_CORE_GOLD = Matrix(ZZ, [
    [0, 0, 6],
    [1, 0, 0],
    [1, 1, 0],
    [1, 1, 3],
    [1, 1, 1],
])

F_GOLD = Matrix(ZZ, [
    [0, 0, 6, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0],
    [1, 1, 3, 0, 0, 0, 0],
    [1, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 1],
])

N_GOLD = Matrix(ZZ, [
    [0, 0, 6, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0],
    [1, 1, 3, 0, 0, 0, 0],
    [1, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0],
])
