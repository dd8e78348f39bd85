"""Laurent polynomial arithmetic, the q -> q^r morphism, and series expansion."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from braidcable import LaurentPoly, TruncSeries, series_exp

q = LaurentPoly.q()
qi = LaurentPoly.monomial(-1)
one = LaurentPoly.one()


def rand_poly():
    coeff = st.integers(min_value=-9, max_value=9)
    return st.dictionaries(
        st.integers(min_value=-6, max_value=6), coeff, max_size=7
    ).map(LaurentPoly)


class TestRingStructure:
    @given(rand_poly(), rand_poly(), rand_poly())
    def test_mul_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(rand_poly(), rand_poly(), rand_poly())
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(rand_poly(), rand_poly())
    def test_add_commutative(self, a, b):
        assert a + b == b + a

    @given(rand_poly(), rand_poly())
    def test_mul_commutative(self, a, b):
        assert a * b == b * a

    @given(rand_poly())
    def test_neutral_elements(self, a):
        assert a + LaurentPoly.zero() == a
        assert a * one == a
        assert a - a == LaurentPoly.zero()

    def test_rational_coefficients(self):
        half = LaurentPoly({0: Fraction(1, 2)})
        assert half + half == one
        assert half.scale(2) == one

    def test_negative_power_of_unit(self):
        m = LaurentPoly.monomial(3, 2)
        assert m ** -1 == LaurentPoly.monomial(-3, Fraction(1, 2))
        with pytest.raises(ValueError):
            (q + one) ** -1

    def test_divexact(self):
        a = (q + one) * (q - qi)
        assert a.divexact(q + one) == q - qi
        assert a.divexact(q - qi) == q + one
        with pytest.raises(ValueError):
            (q + one).divexact(q - one)


class TestKroneckerPath:
    def test_wide_integer_product_matches_schoolbook(self):
        # both factors exceed the packing threshold, exercising the big-int path
        a = LaurentPoly({e: e * e - 40 for e in range(-15, 16)})
        b = LaurentPoly({e: 3 * e + 7 for e in range(-14, 17)})
        d = {}
        for ea, ca in a.coeffs.items():
            for eb, cb in b.coeffs.items():
                d[ea + eb] = d.get(ea + eb, 0) + ca * cb
        assert a * b == LaurentPoly(d)


class TestSubstitutePower:
    def test_doubling(self):
        assert (q - qi).substitute_power(2) == LaurentPoly({2: 1, -2: -1})

    def test_identity_morphism(self):
        p = q * q - qi + one
        assert p.substitute_power(1) == p

    def test_negation(self):
        assert (q + one).substitute_power(-1) == qi + one

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            q.substitute_power(0)

    @given(rand_poly(), rand_poly(), st.sampled_from([-3, -2, -1, 1, 2, 3]))
    def test_ring_morphism(self, a, b, r):
        assert (a + b).substitute_power(r) == a.substitute_power(r) + b.substitute_power(r)
        assert (a * b).substitute_power(r) == a.substitute_power(r) * b.substitute_power(r)


class TestSeriesExpansion:
    def test_q_to_order_4(self):
        s = q.to_series(4)
        assert s == TruncSeries(
            4, [1, Fraction(1, 2), Fraction(1, 8), Fraction(1, 48)]
        )

    def test_q_minus_qinv_is_h(self):
        assert (q - qi).to_series(2) == TruncSeries(2, [0, 1])

    def test_constant(self):
        assert one.to_series(3) == TruncSeries(3, [1, 0, 0])

    @given(rand_poly(), rand_poly())
    def test_multiplicative(self, a, b):
        assert (a * b).to_series(6) == a.to_series(6) * b.to_series(6)


class TestSeriesExp:
    def test_exp_zero(self):
        assert series_exp(TruncSeries.zero(3)) == TruncSeries.one(3)

    def test_exp_h(self):
        assert series_exp(TruncSeries.h(3)) == TruncSeries(3, [1, 1, Fraction(1, 2)])

    def test_exp_mixed(self):
        x = TruncSeries(3, [0, Fraction(1, 2), Fraction(1, 2)])
        assert series_exp(x) == TruncSeries(3, [1, Fraction(1, 2), Fraction(5, 8)])

    def test_nonzero_constant_rejected(self):
        with pytest.raises(ValueError):
            series_exp(TruncSeries.one(3))

    def test_exp_of_sum(self):
        a = TruncSeries(5, [0, 1, Fraction(1, 3)])
        b = TruncSeries(5, [0, Fraction(-1, 2), 0, 2])
        assert series_exp(a + b) == series_exp(a) * series_exp(b)


class TestSerialization:
    def test_json_shape(self):
        assert (q - qi).to_json() == {"1": "1", "-1": "-1"}

    @given(rand_poly())
    def test_round_trip(self, p):
        assert LaurentPoly.from_json(p.to_json()) == p

    def test_fractional_round_trip(self):
        p = LaurentPoly({-2: Fraction(3, 7), 5: Fraction(-1, 2)})
        assert LaurentPoly.from_json(p.to_json()) == p
