from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from phimod3.coeff import INF, format_scalar, is_odd_prime, parse_scalar, vp

rationals = st.fractions(
    min_value=-10**6, max_value=10**6, max_denominator=10**6
)


def test_is_odd_prime():
    assert [n for n in range(2, 30) if is_odd_prime(n)] == [3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_odd_prime(2)
    assert not is_odd_prime(1)
    assert not is_odd_prime(-3)


def test_vp_basics():
    assert vp(Fraction(9), 3) == 2
    assert vp(Fraction(1, 27), 3) == -3
    assert vp(Fraction(10), 3) == 0
    assert vp(Fraction(0), 3) == INF


@given(rationals, rationals, st.sampled_from([3, 5, 7]))
def test_vp_multiplicative(a, b, p):
    if a == 0 or b == 0:
        assert vp(a * b, p) == INF
    else:
        assert vp(a * b, p) == vp(a, p) + vp(b, p)


@given(rationals)
def test_scalar_round_trip(a):
    assert parse_scalar(format_scalar(a)) == a


def test_parse_rejects_garbage():
    import pytest

    for bad in ("", "1/0", "x", "1.5.2"):
        with pytest.raises(ValueError):
            parse_scalar(bad)
