from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from phimod3.tauvec import (
    TauVector,
    frobenius_shift,
    mat_diag,
    mat_identity,
    mat_mul,
    mat_shift,
    matrix_norm,
    norm,
    norm_valuation,
)

coords = st.fractions(min_value=-100, max_value=100, max_denominator=50)
vectors = st.integers(min_value=1, max_value=5).flatmap(
    lambda f: st.lists(coords, min_size=f, max_size=f).map(
        lambda cs: TauVector(tuple(cs))
    )
)


@given(vectors)
def test_shift_has_order_f(x):
    y = x
    for _ in range(x.f):
        y = frobenius_shift(y)
    assert y == x


@given(vectors)
def test_norm_is_shift_invariant(x):
    assert norm(frobenius_shift(x)) == norm(x)


@given(vectors, vectors)
def test_norm_multiplicative(x, y):
    if x.f == y.f:
        assert norm(x * y) == norm(x) * norm(y)


def test_norm_valuation():
    x = TauVector((Fraction(3), Fraction(1, 9), Fraction(5)))
    assert norm_valuation(x, 3) == -1


@given(vectors, vectors, vectors)
def test_matrix_norm_of_diagonal(a, b, c):
    if not (a.f == b.f == c.f):
        return
    Q = matrix_norm(mat_diag(a, b, c))
    for i, v in enumerate((a, b, c)):
        assert Q[i][i] == TauVector.constant(norm(v), v.f)
        for j in range(3):
            if j != i:
                assert Q[i][j].is_zero()


def test_matrix_norm_cocycle():
    # Nm(A) for A = I is I; and Nm respects the twisted product rule on
    # a simple non-diagonal example
    f = 2
    I = mat_identity(3, f)
    assert matrix_norm(I) == I
    A = mat_diag(
        TauVector((Fraction(2), Fraction(3))),
        TauVector((Fraction(1), Fraction(5))),
        TauVector((Fraction(7), Fraction(1))),
    )
    assert matrix_norm(A) == mat_mul(A, mat_shift(A))
