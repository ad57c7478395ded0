"""Symmetric generator families and their identities."""

import pytest
from hypothesis import given, settings, strategies as st

from citree.polyring import Polynomial, RingSpec, parse_polynomial
from citree.symfun import (
    boundary_polynomial,
    derivative_identity_check,
    derivative_vector,
    falling_factorial,
    newton_check,
    symmetric_generator,
    vanishing_sum_residual,
)


def test_e_signed_small():
    assert symmetric_generator("e_signed", 2, 1) == parse_polynomial("-x1 - x2", RingSpec(2))
    assert symmetric_generator("e_signed", 2, 2) == parse_polynomial("x1*x2", RingSpec(2))
    assert symmetric_generator("e_signed", 2, 0) == Polynomial.one(RingSpec(2))


def test_e_signed_beyond_range_is_zero():
    assert symmetric_generator("e_signed", 2, 3).is_zero()
    assert symmetric_generator("e_signed", 3, 7).is_zero()


def test_p_tilde():
    assert symmetric_generator("p_tilde", 2, 2) == parse_polynomial(
        "x1^2 + x2^2 + z^2", RingSpec(2, True)
    )
    # p_0 is the variable count, so p~_0 = n + 1
    assert symmetric_generator("p_tilde", 2, 0) == Polynomial.constant(RingSpec(2, True), 3)


def test_e_tilde_values():
    ring = RingSpec(2, True)
    assert symmetric_generator("e_tilde", 2, 3) == parse_polynomial("-x1*x2*z", ring)
    assert symmetric_generator("e_tilde", 2, 0) == Polynomial.one(ring)


def test_e_tilde_recurrence():
    # e~_i = e_i - z e_(i-1) for 1 <= i <= n, and e~_(n+1) = -z e_n
    for n in (1, 2, 3, 4):
        ring = RingSpec(n, True)
        z = Polynomial.variable(ring, "z")
        for i in range(1, n + 1):
            e_i = symmetric_generator("e_signed", n, i).extend(ring)
            e_prev = symmetric_generator("e_signed", n, i - 1).extend(ring)
            assert symmetric_generator("e_tilde", n, i) == e_i - z * e_prev
        e_n = symmetric_generator("e_signed", n, n).extend(ring)
        assert symmetric_generator("e_tilde", n, n + 1) == -(z * e_n)


def test_defining_product_identity():
    # sum_i e_i z^(n-i) equals prod (z - x_j)
    for n in range(1, 6):
        ring = RingSpec(n, True)
        z = Polynomial.variable(ring, "z")
        acc = Polynomial.zero(ring)
        for i in range(n + 1):
            acc = acc + symmetric_generator("e_signed", n, i).extend(ring) * z ** (n - i)
        prod = Polynomial.one(ring)
        for j in range(n):
            prod = prod * (z - Polynomial.variable(ring, j))
        assert acc == prod


def test_tilde_product_substituted_at_z_vanishes():
    # expanding prod over all n+1 variables and substituting the extra one
    # for z kills the polynomial: sum_i e~_i z^(n+1-i) = 0
    for n in (1, 2, 3):
        ring = RingSpec(n, True)
        z = Polynomial.variable(ring, "z")
        acc = Polynomial.zero(ring)
        for i in range(n + 2):
            acc = acc + symmetric_generator("e_tilde", n, i) * z ** (n + 1 - i)
        assert acc.is_zero()


def test_newton_examples():
    ok, _ = newton_check(2, 1)
    assert ok
    ok, _ = newton_check(2, 2)
    assert ok
    ok, _ = newton_check(3, 5)
    assert ok


def test_newton_grid():
    for n in range(1, 6):
        for k in range(1, 2 * n + 1):
            ok, residual = newton_check(n, k)
            assert ok, f"n={n} k={k}: residual {residual}"


def test_vanishing_sum_grid():
    for n in range(1, 6):
        for m in range(n, 2 * n + 1):
            assert vanishing_sum_residual(n, m).is_zero()


def test_boundary_f_examples():
    ring = RingSpec(2, True)
    f0 = boundary_polynomial("f", 2, None, 0)
    assert f0 == parse_polynomial("z^2 - x1*z - x2*z + x1*x2", ring)
    f2 = boundary_polynomial("f", 2, None, 2)
    assert f2 == Polynomial.constant(ring, 2)


def test_boundary_g_example():
    ring = RingSpec(3, True)
    g0 = boundary_polynomial("g", 3, 1, 0)
    assert g0 == parse_polynomial("z - x1 - x2 - x3", ring)


def test_boundary_matches_iterated_derivative():
    # construction by explicit falling-factorial coefficients vs repeated
    # formal differentiation
    for n in (2, 3, 4):
        base = boundary_polynomial("f", n, None, 0)
        expect = base
        for k in range(0, n + 1):
            assert boundary_polynomial("f", n, None, k) == expect
            expect = expect.partial_derivative("z")
        for b in range(n):
            base = boundary_polynomial("g", n, b, 0)
            expect = base
            for k in range(0, b + 1):
                assert boundary_polynomial("g", n, b, k) == expect
                expect = expect.partial_derivative("z")


def test_boundary_range_errors():
    with pytest.raises(ValueError):
        boundary_polynomial("f", 2, None, 3)
    with pytest.raises(ValueError):
        boundary_polynomial("g", 2, 2, 0)
    with pytest.raises(ValueError):
        boundary_polynomial("g", 3, 1, 2)


def test_derivative_identity_examples():
    assert derivative_identity_check("f", 4, None, 2)
    assert derivative_identity_check("f", 5, None, 3)
    assert derivative_identity_check("g", 5, 4, 2)


def test_derivative_identity_range_errors():
    with pytest.raises(ValueError):
        derivative_identity_check("f", 3, None, 3)
    with pytest.raises(ValueError):
        derivative_identity_check("g", 4, 3, 3)


def test_derivative_vector_entries():
    ring = RingSpec(3, True)
    z = Polynomial.variable(ring, "z")
    vec = derivative_vector(3, 3, 1)
    assert vec[0].is_zero()
    assert vec[1] == Polynomial.one(ring)
    assert vec[2] == 2 * z


def test_falling_factorial():
    assert falling_factorial(5, 0) == 1
    assert falling_factorial(5, 2) == 20
    assert falling_factorial(2, 3) == 0


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=1, max_value=4), st.integers(min_value=1, max_value=8))
def test_newton_property(n, k):
    ok, _ = newton_check(n, k)
    assert ok
