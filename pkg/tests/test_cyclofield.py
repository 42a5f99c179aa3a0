from fractions import Fraction

import pytest

from gradedseries.cyclofield import (
    CyclotomicMatrix,
    CyclotomicNumber,
    FieldFraction,
    cyclo_one,
)
from gradedseries.exact import Poly, expand, normalize, one_minus_power


def P(*coeffs):
    return Poly(coeffs)


z3 = CyclotomicNumber.zeta(3)
z4 = CyclotomicNumber.zeta(4)


class TestCyclotomicNumber:
    def test_minimal_polynomial(self):
        assert z3 ** 3 == 1
        assert z3 * z3 + z3 + 1 == 0
        assert z4 * z4 == -1

    def test_rational_detection(self):
        assert (z3 + z3 ** 2).as_fraction() == -1
        assert (z4 ** 2).as_fraction() == -1
        assert not z3.is_rational()

    def test_inverse_and_division(self):
        assert z3.inverse() == z3 ** 2
        x = 2 * z3 - 1
        assert x * x.inverse() == 1
        assert (1 / z4) == -z4
        assert (z3 / z3) == 1

    def test_lift_and_cross_order_equality(self):
        z6 = CyclotomicNumber.zeta(6)
        assert z6 ** 2 == z3  # zeta_6^2 = zeta_3
        assert z3.lift(6) == z6 ** 2
        assert z3.lift(12) * z4.lift(12) == CyclotomicNumber.zeta(12, 7)

    def test_mixed_scalar_arithmetic(self):
        assert z3 + Fraction(1, 2) == Fraction(1, 2) + z3
        assert (2 * z3) * Fraction(1, 2) == z3
        assert z3 - z3 == 0

    def test_power_basis_reduction(self):
        # zeta_9^6 reduces against Phi_9 = 1 + t^3 + t^6
        z9 = CyclotomicNumber.zeta(9)
        assert z9 ** 6 + z9 ** 3 + 1 == 0


class TestCyclotomicMatrix:
    def test_identity_and_product(self):
        m = CyclotomicMatrix([[0, 1], [1, 0]])
        assert m * m == CyclotomicMatrix.identity(2)

    def test_order_lifting(self):
        d = CyclotomicMatrix([[z3, 0], [0, z3 ** 2]])
        p = CyclotomicMatrix([[0, 1], [1, 0]])
        prod = d * p
        assert prod.rows[0][1] == z3

    def test_inverse(self):
        m = CyclotomicMatrix([[1, z3], [0, 1]])
        inv = m.inverse()
        assert m * inv == CyclotomicMatrix.identity(2, 3)
        with pytest.raises(ZeroDivisionError):
            CyclotomicMatrix([[1, 1], [1, 1]]).inverse()

    def test_rank_of_difference(self):
        swap2 = CyclotomicMatrix([[0, 1, 0, 0], [1, 0, 0, 0],
                                  [0, 0, 0, 1], [0, 0, 1, 0]])
        assert swap2.rank_of_difference_with_identity() == 2
        assert CyclotomicMatrix.identity(3).rank_of_difference_with_identity() == 0

    def test_reciprocal_charpoly_identity(self):
        cp = CyclotomicMatrix.identity(3).reciprocal_charpoly()
        assert [c.as_fraction() for c in cp] == [1, -3, 3, -1]

    def test_reciprocal_charpoly_permutation(self):
        p = CyclotomicMatrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
        cp = p.reciprocal_charpoly()
        assert [c.as_fraction() for c in cp] == [1, 0, 0, -1]  # 1 - t^3

    def test_reciprocal_charpoly_scalar(self):
        s = CyclotomicMatrix([[z3, 0, 0], [0, z3, 0], [0, 0, z3]])
        cp = s.reciprocal_charpoly()
        # det(I - t z I) = (1 - z t)^3 = 1 - 3z t + 3z^2 t^2 - t^3
        assert cp[0] == 1
        assert cp[1] == -3 * z3
        assert cp[2] == 3 * z3 ** 2
        assert cp[3] == -1


class TestFieldFraction:
    def test_expand_matches_exact(self):
        f = normalize(P(1), P(1, -1) ** 2)
        ff = FieldFraction.from_rational_function(f)
        got = [c.as_fraction() for c in ff.expand(5)]
        assert got == list(expand(f, 5))

    def test_cyclotomic_sum_cancels(self):
        # (1/3) [1/(1-t)^3 + 1/(1-zt)^3 + 1/(1-z^2 t)^3] keeps degrees 0 mod 3
        total = None
        for k in range(3):
            lam = z3 ** k
            den = [cyclo_one(3), -3 * lam, 3 * lam ** 2, -(lam ** 3)]
            term = FieldFraction.reciprocal(den)
            total = term if total is None else total + term
        total = total.scaled(Fraction(1, 3))
        f = total.to_rational_function()
        assert f is not None
        want = normalize(P(1, 7, 1).inflated(3), one_minus_power(3) ** 3)
        assert f == want

    def test_pole_order(self):
        f = FieldFraction.from_rational_function(
            normalize(P(1), P(1, 1) * one_minus_power(2)))
        assert f.pole_order_at_one() == 1
        g = FieldFraction.reciprocal([cyclo_one(3), -z3, z3 ** 2 * 0, ])
        assert g.pole_order_at_one() == 0

    def test_reduction(self):
        # (1-t^2)/(1-t) reduces to 1+t
        a = FieldFraction([1, 0, -1], [1, -1])
        b = FieldFraction([1, 1], [1])
        assert a == b
        total = a + FieldFraction([0], [1])
        assert total == b

    def test_irrational_detected(self):
        g = FieldFraction.reciprocal([cyclo_one(3), -z3])
        assert g.to_rational_function() is None
