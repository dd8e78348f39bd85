"""Rational functions and exact matrix linear algebra: determinants,
inverses, nullspaces, and the intertwiner-space solver."""

import random
from fractions import Fraction

import pytest

from braidcable import (
    ExactMatrix,
    LaurentPoly,
    RatFunc,
    SingularMatrixError,
    burau_rep,
    matrix_determinant,
    matrix_from_json,
    matrix_inverse,
    solve_intertwiner_space,
    sym_rep,
)
from braidcable.infinitesimal import adjacent_transposition, permutation_matrix

q = LaurentPoly.q()
qi = LaurentPoly.monomial(-1)
one = LaurentPoly.one()
zero = LaurentPoly.zero()


class TestRatFunc:
    def test_canonical_equality(self):
        a = RatFunc(q * q - one, q + one)
        assert a == RatFunc.from_laurent(q - one)
        assert a.is_laurent()
        assert a.to_laurent() == q - one

    def test_field_axioms_spot(self):
        x = RatFunc(one, q + one)
        y = RatFunc(q, q - one)
        assert (x + y) - y == x
        assert (x * y) / y == x
        assert x * x.inverse() == RatFunc.one()

    def test_inverse_of_zero(self):
        with pytest.raises(ZeroDivisionError):
            RatFunc.zero().inverse()

    def test_substitute_power(self):
        x = RatFunc(q, q + one)
        assert x.substitute_power(2) == RatFunc(
            LaurentPoly.monomial(2), LaurentPoly.monomial(2) + one
        )

    def test_json_round_trip(self):
        x = RatFunc(q - qi, q * q + q + one)
        assert RatFunc.from_json(x.to_json()) == x


class TestDeterminant:
    def test_burau_generator_n3(self):
        assert matrix_determinant(burau_rep(3).image(1)) == LaurentPoly.monomial(1, -1)

    def test_identity(self):
        assert matrix_determinant(ExactMatrix.identity(4)) == Fraction(1)

    def test_sym_generator_n2(self):
        assert matrix_determinant(sym_rep(2).image(1)) == LaurentPoly.monomial(2, -1)

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            matrix_determinant(ExactMatrix.zeros(2, 3))

    def test_multiplicative_on_random_rational_pairs(self):
        rng = random.Random(5)
        for _ in range(10):
            n = rng.randrange(2, 6)
            a = ExactMatrix(
                [[Fraction(rng.randrange(-4, 5)) for _ in range(n)] for _ in range(n)]
            )
            b = ExactMatrix(
                [[Fraction(rng.randrange(-4, 5)) for _ in range(n)] for _ in range(n)]
            )
            assert matrix_determinant(a * b) == matrix_determinant(a) * matrix_determinant(b)

    def test_multiplicative_on_laurent_pair(self):
        a = burau_rep(4).image(1)
        b = burau_rep(4).image(3)
        assert matrix_determinant(a * b) == matrix_determinant(a) * matrix_determinant(b)


class TestInverse:
    def test_burau_sigma1_inverse(self):
        inv = matrix_inverse(burau_rep(2).image(1)).map_entries(lambda c: c.to_laurent())
        assert inv == ExactMatrix([[zero, q], [qi, qi - q]])

    def test_identity(self):
        ident = ExactMatrix.identity(3)
        assert matrix_inverse(ident) == ident

    def test_singular_reports_determinant(self):
        m = ExactMatrix([[q, zero], [zero, zero]])
        with pytest.raises(SingularMatrixError) as exc:
            matrix_inverse(m)
        assert exc.value.determinant.is_zero()

    def test_random_ratfunc_inverse(self):
        rng = random.Random(11)
        for n in (2, 3, 4, 5, 6):
            m = ExactMatrix(
                [
                    [
                        RatFunc.from_laurent(
                            LaurentPoly({rng.randrange(-2, 3): rng.randrange(-3, 4)})
                        )
                        for _ in range(n)
                    ]
                    for _ in range(n)
                ]
            )
            try:
                inv = matrix_inverse(m)
            except SingularMatrixError:
                continue
            assert (inv * m).is_identity()


class TestIntertwinerSpace:
    def test_sym_commutant_is_scalars(self):
        mats = list(sym_rep(3).images)
        basis = solve_intertwiner_space(mats, mats)
        assert len(basis) == 1

    def test_no_constraints(self):
        basis = solve_intertwiner_space([], [], dim_a=2, dim_b=2)
        assert len(basis) == 4

    def test_permutation_versus_identity(self):
        a = permutation_matrix(adjacent_transposition(2, 1))
        b = ExactMatrix.identity(2)
        basis = solve_intertwiner_space([a], [b])
        assert len(basis) == 2
        for m in basis:
            assert [m[0, 0], m[1, 0]] == [m[0, 1], m[1, 1]]

    def test_mismatched_lists_rejected(self):
        with pytest.raises(ValueError):
            solve_intertwiner_space([ExactMatrix.identity(2)], [])

    def test_basis_elements_satisfy_equations(self):
        left = list(burau_rep(3).images)
        right = list(sym_rep(3).images)
        for m in solve_intertwiner_space(left, right):
            for a, b in zip(left, right):
                assert m * a.to_ratfunc() == b.to_ratfunc() * m


class TestSerialization:
    def test_laurent_matrix_round_trip(self):
        m = burau_rep(3).image(2)
        assert matrix_from_json(m.to_json()) == m

    def test_rational_matrix_round_trip(self):
        m = ExactMatrix([[Fraction(1, 2), Fraction(3)], [Fraction(0), Fraction(-7, 5)]])
        assert matrix_from_json(m.to_json()) == m

    def test_series_matrix_round_trip(self):
        m = burau_rep(2).image(1).to_series(3)
        assert matrix_from_json(m.to_json()) == m

    def test_ratfunc_matrix_round_trip(self):
        m = ExactMatrix([[RatFunc(one, q + one), RatFunc.one()]])
        assert matrix_from_json(m.to_json()) == m
