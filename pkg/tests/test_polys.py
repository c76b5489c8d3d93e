"""Exact polynomial and Q(sqrt 2) arithmetic tests."""

from fractions import Fraction

import pytest

from hatgame.polys import (
    Poly,
    SQRT2,
    SQRT2_MINUS_1,
    Sqrt2Num,
    TWO_MINUS_SQRT2,
    decimal_str,
)


def F(a, b=1):
    return Fraction(a, b)


# ---------------------------------------------------------------------------
# Sqrt2Num
# ---------------------------------------------------------------------------


def test_sqrt2_squares_to_two():
    assert SQRT2 * SQRT2 == Sqrt2Num(2)
    assert SQRT2**2 == Sqrt2Num(2)


def test_breakpoint_identities():
    assert SQRT2_MINUS_1 + 1 == SQRT2
    assert TWO_MINUS_SQRT2 == 2 - SQRT2
    # the two breakpoints mirror around 1/2: (sqrt2-1) + (2-sqrt2) = 1
    assert SQRT2_MINUS_1 + TWO_MINUS_SQRT2 == Sqrt2Num(1)
    # minimal polynomial: x^2 - 4x + 2 vanishes at 2 - sqrt2
    poly = Poly.from_coeffs([2, -4, 1])
    assert poly(TWO_MINUS_SQRT2) == Sqrt2Num(0)


def test_exact_ordering():
    assert Sqrt2Num(F(14142, 10000)) < SQRT2 < Sqrt2Num(F(14143, 10000))
    assert SQRT2_MINUS_1 < Sqrt2Num(F(1, 2)) < TWO_MINUS_SQRT2
    assert Sqrt2Num(F(58578643, 10**8)) < TWO_MINUS_SQRT2
    assert TWO_MINUS_SQRT2 < Sqrt2Num(F(58578644, 10**8))
    assert sorted([Sqrt2Num(1), SQRT2_MINUS_1, Sqrt2Num(0)]) == [
        Sqrt2Num(0),
        SQRT2_MINUS_1,
        Sqrt2Num(1),
    ]


def test_division_and_sign():
    assert Sqrt2Num(F(3), F(-2)).sign() == 1  # 3 - 2 sqrt2 ~ 0.17
    x = Sqrt2Num(F(4), F(-3))  # 4 - 3 sqrt2 ~ -0.24
    assert x.sign() == -1
    assert (x / x) == Sqrt2Num(1)
    assert (Sqrt2Num(1) / SQRT2) * SQRT2 == Sqrt2Num(1)
    with pytest.raises(ZeroDivisionError):
        Sqrt2Num(1) / Sqrt2Num(0)


def test_rational_interop():
    assert Sqrt2Num(F(1, 2)).is_rational
    assert Sqrt2Num(F(1, 2)).as_fraction() == F(1, 2)
    assert not SQRT2.is_rational
    with pytest.raises(ValueError):
        SQRT2.as_fraction()
    assert Sqrt2Num(F(1, 3)) + F(2, 3) == Sqrt2Num(1)


# ---------------------------------------------------------------------------
# Poly ring operations
# ---------------------------------------------------------------------------


def test_poly_canonical_form():
    assert Poly.from_coeffs([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly.from_coeffs([0, 0]).is_zero
    assert Poly.from_coeffs([5]).degree == 0
    assert Poly(()).degree == -1


def test_poly_arithmetic():
    x = Poly.x()
    p = (x - 1) * (x - 2)
    assert p == Poly.from_coeffs([2, -3, 1])
    assert p(F(1)) == 0 and p(F(2)) == 0 and p(F(0)) == 2
    assert (p - p).is_zero
    assert p.derivative() == Poly.from_coeffs([-3, 2])
    assert (2 * x + 1) ** 2 == Poly.from_coeffs([1, 4, 4])


def test_poly_compose_one_minus_x():
    x = Poly.x()
    p = x**2 + 3 * x
    q = p.compose_one_minus_x()
    for v in (F(0), F(1, 3), F(7, 5)):
        assert q(v) == p(1 - v)


def test_poly_evaluation_in_quadratic_field():
    # (x^2 - 2) vanishes exactly at sqrt 2
    p = Poly.from_coeffs([-2, 0, 1])
    assert p(SQRT2) == Sqrt2Num(0)


def test_gcd_and_squarefree():
    x = Poly.x()
    p = (x - 1) ** 2 * (x + 2)
    g = p.gcd(p.derivative())
    assert g == Poly.from_coeffs([-1, 1])  # monic x - 1
    assert p.squarefree_part() == (x - 1) * (x + 2)


# ---------------------------------------------------------------------------
# Root counting, isolation, refinement
# ---------------------------------------------------------------------------


def test_count_roots_simple():
    x = Poly.x()
    p = (x - 1) * (x - 2) * (x - 3)
    assert p.count_roots_open(F(0), F(4)) == 3
    assert p.count_roots_open(F(1), F(4)) == 2  # open: root at 1 excluded
    assert p.count_roots_open(F(0), F(3)) == 2  # root at hi excluded
    assert p.count_roots_open(F(5, 2), F(4)) == 1
    assert p.count_roots_open(F(4), F(9)) == 0


def test_count_roots_with_multiplicity_collapses():
    x = Poly.x()
    p = (x - 1) ** 3 * (x - 2)
    assert p.count_roots_open(F(0), F(3)) == 2  # distinct roots only


def test_count_roots_algebraic_endpoints():
    # x^2 - 2 on intervals delimited by sqrt 2 itself
    p = Poly.from_coeffs([-2, 0, 1])
    assert p.count_roots_open(Sqrt2Num(0), SQRT2) == 0
    assert p.count_roots_open(Sqrt2Num(0), Sqrt2Num(2)) == 1
    assert p.count_roots_open(SQRT2, Sqrt2Num(2)) == 0


def test_isolate_roots():
    x = Poly.x()
    p = (x - 1) * (x - 2) * (2 * x - 5)
    intervals = p.isolate_roots_open(F(0), F(10))
    assert len(intervals) == 3
    roots = [F(1), F(2), F(5, 2)]
    for (lo, hi), r in zip(intervals, roots):
        assert lo <= r <= hi
    # exact rational root hit by a bisection midpoint -> degenerate interval
    q = (x - 1) * (x - 3)
    ivs = q.isolate_roots_open(F(0), F(4))
    assert len(ivs) == 2


def test_refine_root_width():
    p = Poly.from_coeffs([-2, 0, 1])  # sqrt 2
    (iv,) = p.isolate_roots_open(F(0), F(2))
    lo, hi = p.refine_root(*iv, width=F(1, 10**15))
    assert hi - lo < F(1, 10**15)
    assert Sqrt2Num(lo) < SQRT2 < Sqrt2Num(hi)


def test_sign_on_open_interval():
    x = Poly.x()
    p = (x - 1) * (x - 2)
    assert p.sign_on_open_interval(F(1), F(2)) == -1
    assert p.sign_on_open_interval(F(2), F(5)) == 1
    with pytest.raises(ValueError):
        p.sign_on_open_interval(F(0), F(3))
    # algebraic endpoints: p^3 (p^2 - 4p + 2) is positive on (1/2, 2 - sqrt2)
    step = Poly.from_coeffs([0, 0, 0, 2, -4, 1])
    assert step.sign_on_open_interval(F(1, 2), TWO_MINUS_SQRT2) == 1
    assert step.sign_on_open_interval(TWO_MINUS_SQRT2, F(1)) == -1


# ---------------------------------------------------------------------------
# Decimal rendering
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "value,expected",
    [
        (F(9, 100), "0.09"),
        (F(8199, 100000), "0.08199"),
        (F(25, 32), "0.78125"),
        (F(1, 2), "0.5"),
        (F(1), "1"),
        (F(0), "0"),
        (F(-3, 4), "-0.75"),
        (F(1, 3), "0.333333333333"),
        (F(2, 3), "0.666666666667"),
    ],
)
def test_decimal_str(value, expected):
    assert decimal_str(value) == expected


def test_decimal_str_irrational():
    # 2 - sqrt2 = 0.5857864376269..., rounded at 12 significant digits
    assert decimal_str(TWO_MINUS_SQRT2) == "0.585786437627"
    assert decimal_str(SQRT2_MINUS_1) == "0.414213562373"
