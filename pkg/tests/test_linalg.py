import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import leibniz_det
from wcomplexity.linalg import (
    SquareMatrix,
    adjugate,
    bareiss_determinant,
    berkowitz_charpoly,
    cofactor,
    determinant,
    matmul,
)
from wcomplexity.ring import LAMBDA, MU, BivarPoly, Jet1

LK3 = SquareMatrix([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])


def rand_matrix(rng, n, bound=9):
    return SquareMatrix(
        [[Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(n)] for _ in range(n)]
    )


def test_charpoly_2x2_closed_form():
    a, b, c, d = (Fraction(x) for x in (3, -2, 5, 7))
    assert berkowitz_charpoly(SquareMatrix([[a, b], [c, d]])) == [a * d - b * c, -(a + d), 1]


def test_charpoly_symbolic_2x2():
    # entries are polynomials, so the result is the generic closed form
    a, b, c, d = LAMBDA, MU, LAMBDA * MU, BivarPoly.const(2)
    cp = berkowitz_charpoly(SquareMatrix([[a, b], [c, d]]))
    assert cp == [a * d - b * c, -(a + d), 1]


def test_charpoly_laplacian_k3():
    # det(xI - L(K3)) = x^3 - 6x^2 + 9x; leading-coefficient and trace by hand, c_1 = sum of 2x2 principal minors
    assert berkowitz_charpoly(LK3) == [0, 9, -6, 1]
    assert determinant(LK3, method="berkowitz") == 0


def test_empty_matrix():
    e = SquareMatrix([])
    assert berkowitz_charpoly(e) == [1]
    assert determinant(e) == 1
    assert determinant(e, method="berkowitz") == 1


def test_identity_det():
    assert determinant(SquareMatrix.identity(5)) == 1


def test_jet_det():
    m = SquareMatrix([[Jet1(1, 1), 1], [1, 1]])
    assert determinant(m) == Jet1(0, 1)


def test_minor_of_laplacian_k3():
    assert determinant(LK3.minor(0, 0)) == 3


def test_adjugate_examples():
    a, b, c, d = (Fraction(x) for x in (2, 3, 5, 7))
    assert adjugate(SquareMatrix([[a, b], [c, d]])) == SquareMatrix([[d, -b], [-c, a]])
    assert adjugate(LK3) == SquareMatrix([[3] * 3] * 3)
    assert adjugate(SquareMatrix.identity(4)) == SquareMatrix.identity(4)
    assert adjugate(SquareMatrix([[Fraction(5)]])) == SquareMatrix([[1]])


def test_cofactor_examples():
    assert cofactor(LK3, 1, 1) == 3
    assert cofactor(LK3, 1, 2) == 3
    assert cofactor(SquareMatrix([[0]]), 1, 1) == 1


@pytest.mark.parametrize("i, j", [(0, 1), (1, 4), (4, 4)])
def test_cofactor_index_errors(i, j):
    with pytest.raises(IndexError):
        cofactor(LK3, i, j)


def test_non_square_rejected():
    with pytest.raises(ValueError):
        SquareMatrix([[1, 2], [3]])


def test_bareiss_needs_rationals():
    with pytest.raises(TypeError):
        determinant(SquareMatrix([[Jet1(1, 1)]]), method="bareiss")


def test_bareiss_pivoting_and_singular():
    assert bareiss_determinant(SquareMatrix([[0, 1], [1, 0]])) == -1
    assert bareiss_determinant(SquareMatrix([[1, 2], [2, 4]])) == 0
    assert bareiss_determinant(SquareMatrix([[0, 0, 1], [0, 2, 0], [3, 0, 0]])) == -6


@pytest.mark.parametrize("n", range(0, 6))
def test_determinants_match_leibniz(n):
    rng = random.Random(n)
    for _ in range(10):
        m = rand_matrix(rng, n)
        expect = leibniz_det(m.rows)
        assert bareiss_determinant(m) == expect
        assert determinant(m, method="berkowitz") == expect


@pytest.mark.parametrize("seed", range(40))
def test_bareiss_equals_berkowitz(seed):
    rng = random.Random(seed)
    m = rand_matrix(rng, rng.randint(0, 8))
    assert bareiss_determinant(m) == determinant(m, method="berkowitz")


def _check_adjugate(m):
    n = m.order
    adj = adjugate(m)
    d = determinant(m, method="berkowitz")
    prod = matmul(m.rows, adj.rows)
    for i in range(n):
        for j in range(n):
            assert prod[i][j] == (d if i == j else 0)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            assert cofactor(m, i, j, method="berkowitz") == adj[j - 1, i - 1]


@pytest.mark.parametrize("seed", range(12))
def test_adjugate_rational(seed):
    rng = random.Random(100 + seed)
    m = rand_matrix(rng, rng.randint(1, 6))
    _check_adjugate(m)


@pytest.mark.parametrize("seed", range(8))
def test_adjugate_jet(seed):
    rng = random.Random(200 + seed)
    n = rng.randint(1, 6)
    a, b = rand_matrix(rng, n), rand_matrix(rng, n)
    m = SquareMatrix([[Jet1(a[i, j], b[i, j]) for j in range(n)] for i in range(n)])
    _check_adjugate(m)


@pytest.mark.parametrize("seed", range(15))
def test_jacobi_formula(seed):
    rng = random.Random(300 + seed)
    n = rng.randint(1, 6)
    a, b = rand_matrix(rng, n), rand_matrix(rng, n)
    m = SquareMatrix([[Jet1(a[i, j], b[i, j]) for j in range(n)] for i in range(n)])
    d = determinant(m)
    assert d.a0 == determinant(a)
    assert d.a1 == (adjugate(a) @ b).trace()


@settings(max_examples=30)
@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=9, max_size=9))
def test_det_multiplicative(xs):
    a = SquareMatrix([xs[0:3], xs[3:6], xs[6:9]])
    b = a.transpose()
    assert determinant(a @ b) == determinant(a) * determinant(b)
    assert determinant(b) == determinant(a)
