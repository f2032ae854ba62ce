"""
Exact scalars: codec, q-numbers, specializations of q and seeded sampling
"""

import pytest

from src.frt_lab.algebra.scalar_field import (
    GAUSSIAN,
    RATIONAL,
    QSpecialization,
    ScalarSampler,
    format_scalar,
    inv,
    is_q_power,
    parse_scalar,
    q_binomial,
    q_factorial,
    q_int,
    spow,
)
from src.frt_lab.core.errors import BadEntry, DegenerateQ, DivisionByZero, FieldMismatch, SlotIndexError

pytestmark = pytest.mark.unit


class TestCodec:
    def test_rational_forms(self):
        assert parse_scalar("7") == RATIONAL.from_ints(7)
        assert parse_scalar("-5/3") == RATIONAL.from_ints(-5, 3)
        assert format_scalar(RATIONAL.from_ints(10, 4)) == "5/2"
        assert format_scalar(RATIONAL.from_ints(-4, 2)) == "-2"

    def test_lowest_terms_enforced_on_request(self):
        assert parse_scalar("4/6") == RATIONAL.from_ints(2, 3)
        with pytest.raises(BadEntry):
            parse_scalar("4/6", require_lowest_terms=True)

    def test_zero_denominator(self):
        with pytest.raises(DivisionByZero):
            parse_scalar("1/0")

    def test_gaussian_only_in_gaussian_mode(self):
        with pytest.raises(FieldMismatch):
            parse_scalar("1+2i", RATIONAL)
        z = parse_scalar("(1+2i)/3", GAUSSIAN)
        assert format_scalar(z) == "(1+2i)/3"
        assert format_scalar(parse_scalar("i", GAUSSIAN)) == "i"
        assert format_scalar(parse_scalar("-i", GAUSSIAN)) == "-i"

    def test_garbage_rejected(self):
        with pytest.raises(BadEntry):
            parse_scalar("three")


class TestQNumbers:
    def test_small_quantum_integers(self, q):
        assert q_int(0, q) == 0
        assert q_int(1, q) == 1
        assert q_int(2, q) == q + inv(q)
        assert q_int(3, q) == q * q + 1 + inv(q * q)

    def test_binomial_is_factorial_form(self, q):
        assert q_binomial(4, 2, q) == q_factorial(4, q) * inv(q_factorial(2, q) * q_factorial(2, q))
        assert q_binomial(3, 1, q) == q_int(3, q)

    def test_binomial_symmetry_and_pascal(self, q):
        for n in range(1, 6):
            assert q_binomial(n, 0, q) == 1
            for m in range(1, n):
                assert q_binomial(n, m, q) == q_binomial(n, n - m, q)
                assert q_binomial(n, m, q) == (
                    spow(q, -m) * q_binomial(n - 1, m, q) + spow(q, n - m) * q_binomial(n - 1, m - 1, q)
                )

    def test_binomial_range(self, q):
        with pytest.raises(SlotIndexError):
            q_binomial(2, 3, q)

    def test_degenerate_q(self):
        with pytest.raises(DegenerateQ):
            q_int(2, RATIONAL.from_ints(-1))

    def test_negative_power_of_zero(self):
        with pytest.raises(DivisionByZero):
            spow(RATIONAL.zero, -1)


class TestSpecialization:
    def test_generic_q(self):
        spec = QSpecialization.from_string("5/2")
        assert spec.generic
        assert str(spec) == "5/2"

    @pytest.mark.parametrize("text", ["1", "-1", "0"])
    def test_degenerate_values(self, text):
        with pytest.raises(DegenerateQ):
            QSpecialization.from_string(text)

    def test_root_of_unity_in_gaussian_mode(self):
        spec = QSpecialization.from_string("i", GAUSSIAN)
        assert not spec.generic
        assert spec.q * spec.q == -GAUSSIAN.one

    def test_free_fermionic_signs(self):
        plus = QSpecialization.free_fermionic(1)
        minus = QSpecialization.free_fermionic(-1)
        assert plus.q == -minus.q
        with pytest.raises(BadEntry):
            QSpecialization.free_fermionic(2)


class TestSampler:
    def test_seed_determinism(self, q):
        a = ScalarSampler(99, q=q).generics(10)
        b = ScalarSampler(99, q=q).generics(10)
        assert a == b

    def test_generic_values_avoid_q_powers(self, q):
        values = ScalarSampler(5, q=q).generics(40)
        assert len(set(values)) == 40
        for x in values:
            assert x and not is_q_power(x, q)

    def test_avoid_list_respected(self, q):
        sampler = ScalarSampler(11, q=q)
        first = sampler.generic()
        assert all(sampler.generic(avoid=[first]) != first for _ in range(20))
