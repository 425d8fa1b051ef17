"""
Test Scalars

Tests for exact arithmetic in Q(v), printing and parsing.
"""
from fractions import Fraction

import pytest

from algebra.errors import ClassicalLimitPoleError, ScalarParseError, ZeroDenominatorError
from algebra.scalars import (ONE, Q, Q_INV, V, V_GEN, ZERO, as_scalar, evaluate_at_one, from_fraction, laurent,
                             normalize, parse_scalar, q_conjugate, q_number, q_power, v_power)


class TestArithmetic:
    """Field operations and canonical form."""

    def test_inverse_powers_cancel(self):
        """Test that q * q^-1 = 1."""
        assert Q * Q_INV == ONE
        assert V * V == Q

    def test_quantum_integer_division(self):
        """Test that (q^2 - q^-2)/(q - q^-1) reduces to q + q^-1."""
        value = (Q * Q - Q_INV * Q_INV) / (Q - Q_INV)
        assert value == Q + Q_INV
        assert value.is_laurent()

    def test_canonical_form_is_unique(self):
        """Test that equal values built differently compare and hash equal."""
        a = (Q + Q_INV) / (Q - Q_INV)
        b = (Q * Q + ONE) / (Q * Q - ONE)
        assert a == b
        assert hash(a) == hash(b)

    def test_integer_and_fraction_coercion(self):
        """Test mixing with int and Fraction."""
        assert ONE == 1
        assert ONE + 1 == as_scalar(2)
        assert from_fraction(Fraction(2, 4)) == as_scalar(Fraction(1, 2))
        assert 3 * Q == Q + Q + Q

    def test_division_by_zero(self):
        """Test that dividing by zero raises ZeroDenominatorError."""
        with pytest.raises(ZeroDenominatorError):
            ONE / ZERO
        with pytest.raises(ZeroDenominatorError):
            ZERO.inverse()

    def test_negative_power(self):
        """Test integer powers including negative exponents."""
        assert Q ** -2 == Q_INV * Q_INV
        assert (Q + ONE) ** 0 == ONE

    def test_half_integer_power(self):
        """Test q^(1/2) is v."""
        assert q_power(Fraction(1, 2)) == V
        with pytest.raises(ValueError):
            q_power(Fraction(1, 3))


class TestQuantumNumbers:
    """[k]_q, conjugation and the classical limit."""

    def test_q_numbers(self):
        """Test [2] and [3]."""
        assert q_number(2) == Q + Q_INV
        assert q_number(3) == Q * Q + ONE + Q_INV * Q_INV
        assert q_number(-2) == -(Q + Q_INV)
        assert q_number(0) == ZERO

    def test_q_conjugate(self):
        """Test v -> 1/v on Laurent polynomials and fractions."""
        assert q_conjugate(Q) == Q_INV
        assert q_conjugate(v_power(3) + ONE) == v_power(-3) + ONE
        assert q_conjugate(ONE / (Q - Q_INV)) == -ONE / (Q - Q_INV)

    def test_classical_limit(self):
        """Test evaluation at q = 1."""
        assert evaluate_at_one(Q + Q_INV) == 2
        assert evaluate_at_one((Q + Q_INV) / (Q * Q + ONE)) == 1
        assert evaluate_at_one(ZERO) == 0

    def test_classical_limit_pole(self):
        """Test that a pole at q = 1 is reported."""
        with pytest.raises(ClassicalLimitPoleError):
            evaluate_at_one(ONE / (Q - Q_INV))


class TestPrinting:
    """Canonical and compact strings."""

    def test_canonical_strings(self):
        """Test the canonical form used in exports."""
        assert (Q + Q_INV).to_string() == "q + q^{-1}"
        assert v_power(3).to_string() == "q^{3/2}"
        assert (2 * Q * Q).to_string() == "2*q^{2}"
        assert ZERO.to_string() == "0"
        assert as_scalar(Fraction(1, 2)).to_string() == "1/2"

    def test_compact_strings(self):
        """Test the compact form used in bracket tables."""
        assert (Q + Q_INV).to_string(compact=True) == "q+q^-1"
        assert v_power(3).to_string(compact=True) == "q^(3/2)"
        assert (-Q_INV).to_string(compact=True) == "-q^-1"
        assert (2 * Q * Q).to_string(compact=True) == "2q^2"

    def test_v_form(self):
        """Test printing in powers of v."""
        assert (V + ONE).to_string(form='v') == "v + 1"

    @pytest.mark.parametrize('value', [
        Q + Q_INV,
        v_power(-3),
        (Q * Q - ONE) / (Q * Q + ONE),
        -2 * v_power(5) + 7,
        as_scalar(Fraction(-3, 2)),
        ONE / (V + ONE),
    ])
    def test_parse_inverts_printing(self, value):
        """Test that both printed forms parse back to the same scalar."""
        assert parse_scalar(value.to_string()) == value
        assert parse_scalar(value.to_string(compact=True)) == value


class TestParsing:
    """Parser edge cases."""

    def test_accepts_spaces_and_stars(self):
        """Test loose input forms."""
        assert parse_scalar("2 * q^{2} - 1") == 2 * Q * Q - ONE
        assert parse_scalar("q^-1") == Q_INV
        assert parse_scalar("v^3 - 2") == laurent({3: 1, 0: -2})

    def test_rejects_third_powers(self):
        """Test that non half-integer exponents are rejected."""
        with pytest.raises(ScalarParseError):
            parse_scalar("q^{1/3}")

    def test_rejects_garbage(self):
        """Test malformed strings."""
        for text in ("", "x + 1", "q^{1}/q/q"):
            with pytest.raises(ScalarParseError):
                parse_scalar(text)

    def test_zero_denominator(self):
        """Test that a zero denominator is a ZeroDenominatorError."""
        with pytest.raises(ZeroDenominatorError):
            parse_scalar("1/(q - q)")


class TestFieldAxioms:
    """Field laws on seeded random Laurent quotients."""

    @staticmethod
    def draw(rng):
        top = laurent({int(k): int(rng.integers(-3, 4)) for k in rng.integers(-4, 5, size=3)})
        bottom = laurent({int(k): int(rng.integers(1, 4)) for k in rng.integers(-4, 5, size=2)})
        return top / bottom

    def test_ring_laws(self, rng):
        """Test associativity, commutativity and distributivity."""
        for _ in range(25):
            a, b, c = self.draw(rng), self.draw(rng), self.draw(rng)
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c
            assert a - a == ZERO

    def test_inverses(self, rng):
        """Test x * x^-1 = 1 for nonzero x."""
        for _ in range(25):
            a = self.draw(rng)
            if a:
                assert a * a.inverse() == ONE
                assert q_conjugate(q_conjugate(a)) == a


class TestNormalize:
    """normalize on raw polynomial pairs."""

    def test_polynomial_cancellation(self):
        """Test (v^2 - 1)/(v - 1) = v + 1."""
        value = normalize(V_GEN ** 2 - 1, V_GEN - 1)
        assert value == V + ONE
        assert value.is_laurent()

    def test_zero_numerator(self):
        """Test 0/v^3 = 0 with denominator 1."""
        value = normalize(0, V_GEN ** 3)
        assert value == ZERO
        assert value.is_laurent()

    def test_clears_negative_powers(self):
        """Test (q - q^-1)/(q + q^-1) = (v^4 - 1)/(v^4 + 1)."""
        value = (Q - Q_INV) / (Q + Q_INV)
        assert value.numerator_terms() == [(4, 1), (0, -1)]
        assert value.denominator_terms() == [(4, 1), (0, 1)]
        assert evaluate_at_one(value) == 0
        assert evaluate_at_one(q_number(3)) == 3

    def test_zero_polynomial_denominator(self):
        """Test that a zero denominator polynomial is refused."""
        with pytest.raises(ZeroDenominatorError):
            normalize(V_GEN, 0)
