from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from biquadric.scalars import (
    NumberFieldElement,
    UniPoly,
    format_scalar,
    nf_arithmetic,
    parse_scalar,
    scalar_inv,
    uv_factorize,
    uv_gcd,
    uv_squarefree_decomposition,
)


def P(*coeffs):
    return UniPoly([Fraction(c) for c in coeffs])


class TestUvGcd:
    def test_shared_root(self):
        assert uv_gcd(P(-1, 0, 1), P(-1, 1)) == P(-1, 1)

    def test_coprime(self):
        assert uv_gcd(P(1, 0, 1), P(2, 0, 1)) == P(1)

    def test_gcd_of_zeros(self):
        assert uv_gcd(P(), P()).is_zero()

    def test_divides_both(self):
        a = P(-1, 0, 1) * P(1, 1, 1)
        b = P(-1, 0, 1) * P(2, 1)
        g = uv_gcd(a, b)
        assert a.divmod(g)[1].is_zero() and b.divmod(g)[1].is_zero()
        assert g == P(-1, 0, 1)


class TestSquarefree:
    def test_double_root(self):
        p = P(-1, 1) * P(-1, 1) * P(2, 1)
        assert uv_squarefree_decomposition(p) == [(P(2, 1), 1), (P(-1, 1), 2)]

    def test_pure_power(self):
        assert uv_squarefree_decomposition(P(0, 0, 0, 0, 0, 0, 1)) == [(P(0, 1), 6)]

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            uv_squarefree_decomposition(P())

    def test_random_cubic_squared(self):
        cubic = P(2, -1, 3, 1)
        parts = uv_squarefree_decomposition(cubic * cubic)
        assert parts == [(cubic.monic(), 2)]

    def test_parts_pairwise_coprime(self):
        p = P(-1, 1) * P(-1, 1) * P(1, 1) * P(1, 0, 1) * P(1, 0, 1) * P(1, 0, 1)
        parts = uv_squarefree_decomposition(p)
        for i, (a, _) in enumerate(parts):
            for b, _ in parts[i + 1:]:
                assert uv_gcd(a, b) == P(1)


class TestFactorize:
    def test_irreducible_quadratic(self):
        assert uv_factorize(P(-2, 0, 1)) == [(P(-2, 0, 1), 1)]

    def test_quartic(self):
        facs = uv_factorize(P(-1, 0, 0, 0, 1))
        assert sorted(facs, key=lambda t: (t[0].degree, str(t[0].coeffs))) == sorted(
            [(P(-1, 1), 1), (P(1, 1), 1), (P(1, 0, 1), 1)],
            key=lambda t: (t[0].degree, str(t[0].coeffs)),
        )

    def test_two_cubics_recovered(self):
        a, b = P(1, 0, 1, 1), P(1, 1, 0, 1)
        facs = uv_factorize(a * b)
        assert sorted(f.coeffs for f, _ in facs) == sorted([a.coeffs, b.coeffs])

    def test_remultiplies(self):
        p = P(6, -5, -2, 1)
        acc = P(1)
        for fac, mult in uv_factorize(p):
            for _ in range(mult):
                acc = acc * fac
        assert acc == p.monic()

    def test_degree_cap(self):
        with pytest.raises(ValueError):
            uv_factorize(P(*([1] + [0] * 12 + [1])))


class TestNumberField:
    def test_sqrt2_squares_to_two(self):
        t = NumberFieldElement.generator(P(-2, 0, 1))
        assert (t * t).as_fraction() == 2

    def test_inverse_in_gaussian_field(self):
        t = NumberFieldElement.generator(P(1, 0, 1))
        inv = scalar_inv(t + 1)
        # (1+i)^-1 = (1-i)/2
        expected = (NumberFieldElement(
            (Fraction(1), Fraction(0), Fraction(1)),
            [Fraction(1), Fraction(-1)],
        )) * Fraction(1, 2)
        assert inv == expected
        assert ((t + 1) * inv).as_fraction() == 1

    def test_modulus_mismatch(self):
        a = NumberFieldElement.generator(P(-2, 0, 1))
        b = NumberFieldElement.generator(P(-3, 0, 1))
        with pytest.raises(ValueError):
            nf_arithmetic(a, b, "+")

    def test_division_by_zero(self):
        t = NumberFieldElement.generator(P(-2, 0, 1))
        with pytest.raises(ZeroDivisionError):
            nf_arithmetic(t, t - t, "/")

    @given(st.fractions(min_value=-50, max_value=50, max_denominator=20),
           st.fractions(min_value=-50, max_value=50, max_denominator=20))
    def test_inverse_property(self, a, b):
        t = NumberFieldElement.generator(P(-2, 0, 1))
        x = t * a + b
        if x == t - t:
            return
        assert (x * scalar_inv(x)).as_fraction() == 1

    @given(*(st.fractions(min_value=-20, max_value=20, max_denominator=10) for _ in range(6)))
    def test_field_axioms(self, a0, a1, b0, b1, c0, c1):
        t = NumberFieldElement.generator(P(-1, -1, 0, 1))
        x, y, z = t * a1 + a0, t * b1 + b0, t * c1 + c0
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x and x * y == y * x


class TestFormatting:
    def test_rational_round_trip(self):
        assert parse_scalar(format_scalar(Fraction(-7, 3))) == Fraction(-7, 3)

    def test_number_field_round_trip(self):
        t = NumberFieldElement.generator(P(-2, 0, 1))
        x = t * Fraction(3, 2) + 5
        assert parse_scalar(format_scalar(x)) == x
