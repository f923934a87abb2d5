import random

import sympy
from hypothesis import given, strategies as st

from conftest import rand_ratt
from ppvkit.field import RatT
from ppvkit.linalg import MatT, nullspace, rank, solve, solve_with_unit_pivot


def rand_mat(rng, r, c, deg=1, sparse=0.3):
    rows = [[RatT(0) if rng.random() < sparse else rand_ratt(rng, deg) for _ in range(c)]
            for _ in range(r)]
    return MatT.from_rows(rows, c)


def _is_zero_vec(v):
    return all(x.is_zero() for x in v)


def test_nullspace_and_rank_nullity():
    rng = random.Random(3)
    for _ in range(25):
        r, c = rng.randint(1, 4), rng.randint(1, 5)
        A = rand_mat(rng, r, c)
        N = nullspace(A)
        for v in N:
            assert _is_zero_vec(A.mul_vec(v))
        assert rank(A) + len(N) == c


def test_rank_against_sympy_over_q():
    rng = random.Random(5)
    for _ in range(20):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        ints = [[rng.randint(-2, 2) for _ in range(c)] for _ in range(r)]
        # a dependent row now and then
        if r > 1 and rng.random() < 0.5:
            ints[-1] = [a + 2 * b for a, b in zip(ints[0], ints[1 % r])]
        A = MatT.from_rows([[RatT(v) for v in row] for row in ints], c)
        assert rank(A) == sympy.Matrix(ints).rank()


def test_solve_consistent_and_inconsistent():
    t = RatT.t()
    A = MatT.from_rows([[RatT(1), t], [t, t * t]], 2)
    assert solve(A, [RatT(1), t]) is not None
    assert solve(A, [RatT(1), RatT(0)]) is None


def test_unit_pivot():
    t = RatT.t()
    # columns: a, b ; equation a*t - b = 0
    A = MatT.from_rows([[t, RatT(-1)]], 2)
    v = solve_with_unit_pivot(A, 1)
    assert v[1] == RatT(1) and v[0] == 1 / t
    B = MatT.from_rows([[RatT(1), RatT(0)], [RatT(0), RatT(1)]], 2)
    assert solve_with_unit_pivot(B, 0) is None
