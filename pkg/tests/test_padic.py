"""Truncated 3-adic arithmetic."""
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tetraflect.padic import (DEFAULT_PRECISION, Padic3, PrecisionExhausted,
                              sqrt_hensel, sqrt_minus_two, val3)


class TestShapes:
    def test_from_int(self):
        x = Padic3.from_int(18, 6)
        assert (x.valuation, x.unit, x.precision) == (2, 2, 6)

    def test_from_rational_unit(self):
        x = Padic3.from_rational(Fraction(5, 2), 4)
        # 5/2 = 5 * inv(2) mod 81 = 5 * 41 = 205 = 43 mod 81
        assert (x.valuation, x.unit) == (0, 43)
        assert (x * Padic3.from_int(2, 4)).same(Padic3.from_int(5, 4))

    def test_from_rational_negative_valuation(self):
        x = Padic3.from_rational(Fraction(2, 9), 5)
        assert x.valuation == -2

    def test_exact_zero(self):
        z = Padic3.zero()
        assert z.is_exact_zero() and not z.known_nonzero()
        assert Padic3.from_int(0) == z

    def test_validation(self):
        with pytest.raises(ValueError):
            Padic3(0, 3, 4)  # unit divisible by 3
        with pytest.raises(ValueError):
            Padic3(0, 100, 4)  # unit out of range
        with pytest.raises(ValueError):
            Padic3(0, 5, 0)  # nonzero unit without precision
        with pytest.raises(ValueError):
            Padic3(2, 0, 7)  # zero unit in normal shape

    def test_val3(self):
        assert val3(54) == 3
        with pytest.raises(ValueError):
            val3(0)


class TestArithmetic:
    def test_add_units_carries(self):
        one = Padic3.from_int(1, 6)
        two = Padic3.from_int(2, 6)
        total = one + two
        assert total.valuation >= 1 and total.residue(1) == 0
        assert total.same(Padic3.from_int(3, 6))

    def test_add_mixed_valuations(self):
        total = Padic3.from_int(12, 5) + Padic3.from_int(15, 5)
        assert (total.valuation, total.unit) == (3, 1)

    def test_cancellation_is_indeterminate(self):
        x = Padic3.from_int(7, 6)
        gone = x + (-x)
        assert gone.is_indeterminate() and gone.valuation == 6
        assert not gone.known_nonzero()

    def test_exact_identity(self):
        x = Padic3.from_int(7, 6)
        assert x + Padic3.zero() == x
        assert x - x + x == x

    def test_invert_three(self):
        inv = Padic3.from_int(3).invert()
        assert (inv.valuation, inv.unit) == (-1, 1)

    def test_invert_roundtrip(self):
        x = Padic3.from_rational(Fraction(-7, 4), 8)
        assert (x * x.invert()).same(Padic3.from_int(1, 8))

    def test_invert_errors(self):
        with pytest.raises(ZeroDivisionError):
            Padic3.zero().invert()
        x = Padic3.from_int(5, 4)
        with pytest.raises(PrecisionExhausted):
            (x - x).invert()

    def test_mul_precision_clamps(self):
        x = Padic3.from_int(2, 3) * Padic3.from_int(5, 9)
        assert x.precision == 3

    def test_residue(self):
        assert Padic3.from_int(12).residue(2) == 3
        assert Padic3.from_int(-1).residue(1) == 2
        assert Padic3.zero().residue(3) == 0
        with pytest.raises(ValueError):
            Padic3.from_int(3).invert().residue(1)
        short = Padic3.from_int(5, 2)
        with pytest.raises(PrecisionExhausted):
            short.residue(3)

    def test_shift(self):
        x = Padic3.from_int(5, 4).shift(3)
        assert x.valuation == 3
        assert Padic3.zero().shift(2).is_exact_zero()


class TestSqrt:
    def test_minus_two_mod_nine(self):
        v = sqrt_minus_two()
        assert v.residue(2) == 4 and v.residue(1) == 1
        assert (v * v).same(Padic3.from_int(-2))

    def test_branch_is_one_mod_three(self):
        for target in (4, 7, 13, 22):
            root = sqrt_hensel(Padic3.from_int(target))
            assert root.residue(1) == 1
            assert (root * root).same(Padic3.from_int(target))

    def test_non_residue_rejected(self):
        with pytest.raises(ValueError):
            sqrt_hensel(Padic3.from_int(2))

    def test_needs_unit(self):
        with pytest.raises(ValueError):
            sqrt_hensel(Padic3.from_int(9))
        with pytest.raises(ValueError):
            sqrt_hensel(Padic3.from_int(7) - Padic3.from_int(7))


three_free = st.integers(min_value=1, max_value=120).filter(
    lambda n: n % 3 != 0)
rationals = st.builds(Fraction,
                      st.integers(min_value=-200, max_value=200), three_free)


class TestRingHomomorphism:
    @given(rationals, rationals)
    def test_add(self, x, y):
        lhs = Padic3.from_rational(x) + Padic3.from_rational(y)
        assert lhs.same(Padic3.from_rational(x + y))

    @given(rationals, rationals)
    def test_mul(self, x, y):
        lhs = Padic3.from_rational(x) * Padic3.from_rational(y)
        assert lhs.same(Padic3.from_rational(x * y))

    @given(rationals)
    def test_precision_refinement_agrees(self, x):
        coarse = Padic3.from_rational(x, DEFAULT_PRECISION)
        fine = Padic3.from_rational(x, DEFAULT_PRECISION + 8)
        assert coarse.same(fine)
        if coarse.known_nonzero():
            assert coarse.valuation == fine.valuation
