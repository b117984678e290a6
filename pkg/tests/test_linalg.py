import random
from fractions import Fraction

from pgshell import QQ, Field
from pgshell.linalg import (
    RowSpace,
    determinant,
    mat_mul,
    nullspace,
    rank,
    rref,
    solve,
)


def F(x):
    return Fraction(x)


def test_rref_and_rank():
    rows = [[F(1), F(2), F(3)], [F(2), F(4), F(6)], [F(1), F(0), F(1)]]
    ech, pivots = rref(rows, QQ)
    assert pivots == [0, 1]
    assert rank(rows, QQ) == 2


def test_nullspace_is_kernel():
    rng = random.Random(9)
    for _ in range(25):
        nrow, ncol = rng.randint(1, 5), rng.randint(1, 6)
        rows = [[F(rng.randint(-4, 4)) for _ in range(ncol)] for _ in range(nrow)]
        basis = nullspace(rows, ncol, QQ)
        assert len(basis) == ncol - rank(rows, QQ)
        for v in basis:
            for row in rows:
                assert sum(a * b for a, b in zip(row, v)) == 0


def test_determinant():
    assert determinant([[F(2)]], QQ) == 2
    assert determinant([[F(1), F(2)], [F(3), F(4)]], QQ) == -2
    assert determinant([[F(1), F(2)], [F(2), F(4)]], QQ) == 0
    # permutation parity
    assert determinant([[F(0), F(1)], [F(1), F(0)]], QQ) == -1


def test_solve():
    rows = [[F(1), F(1)], [F(1), F(-1)]]
    x = solve(rows, [F(3), F(1)], QQ)
    assert x == [F(2), F(1)]
    assert solve([[F(1), F(1)], [F(1), F(1)]], [F(0), F(1)], QQ) is None


def test_solve_prime_field():
    f = Field(7)
    rows = [[f.of(2), f.of(1)], [f.of(1), f.of(3)]]
    x = solve(rows, [f.of(1), f.of(2)], f)
    assert x is not None
    for row, b in zip(rows, [f.of(1), f.of(2)]):
        acc = f.zero
        for a, v in zip(row, x):
            acc = f.add(acc, f.mul(a, v))
        assert acc == b


def test_rowspace_membership():
    rs = RowSpace(3, QQ)
    assert rs.add([F(1), F(0), F(1)])
    assert rs.add([F(0), F(1), F(1)])
    assert not rs.add([F(1), F(1), F(2)])  # dependent
    assert rs.contains([F(2), F(-1), F(1)])
    assert not rs.contains([F(0), F(0), F(1)])
    assert rs.dim == 2


def test_mat_mul():
    a = [[F(1), F(2)], [F(0), F(1)]]
    b = [[F(1), F(0)], [F(3), F(1)]]
    assert mat_mul(a, b, QQ) == [[F(7), F(2)], [F(3), F(1)]]
