import random
from fractions import Fraction

import pytest

from newton_forge import CyclotomicInteger, CyclotomicRational, ORD_INFINITY
from support import companion_product, norm_valuation

F = Fraction


def _rand_elem(rng, p, span=9):
    return CyclotomicInteger(p, [rng.randint(-span, span) for _ in range(p - 1)])


def test_canonical_form_facts():
    # 1 + zeta + ... + zeta^(p-1) = 0
    p = 5
    total = CyclotomicInteger.from_root_powers(p, [1] * p)
    assert total.is_zero()
    # zeta^(p-1) folds into the basis
    top = CyclotomicInteger.from_root_powers(p, [0, 0, 0, 0, 1])
    assert top.coeffs == (-1, -1, -1, -1)


def test_zeta_power_cycle():
    for p in (2, 3, 5, 7):
        zeta = CyclotomicInteger.from_root_powers(p, [0, 1] + [0] * (p - 2))
        acc = CyclotomicInteger.one(p)
        for _ in range(p):
            acc = acc * zeta
        assert acc == CyclotomicInteger.one(p)


def test_multiplication_against_companion_matrix():
    rng = random.Random(71)
    for p in (2, 3, 5, 7, 11):
        for _ in range(25):
            a, b = _rand_elem(rng, p), _rand_elem(rng, p)
            assert a * b == companion_product(a, b)
            assert a * b == b * a
            assert a * CyclotomicInteger.one(p) == a
            assert (a * CyclotomicInteger.zero(p)).is_zero()


def test_ring_axioms_random():
    rng = random.Random(73)
    for p in (3, 5):
        for _ in range(20):
            a, b, c = (_rand_elem(rng, p) for _ in range(3))
            assert (a + b) * c == a * c + b * c
            assert (a * b) * c == a * (b * c)
            assert a - a == CyclotomicInteger.zero(p)


def test_valuation_examples():
    assert CyclotomicInteger(3, (1, -1)).valuation() == F(1, 2)  # 1 - zeta
    assert CyclotomicInteger.from_integer(3, 3).valuation() == 1
    assert CyclotomicInteger(3, (-1, -1)).valuation() == 0  # zeta^2, a unit
    assert CyclotomicInteger.zero(7).valuation() == ORD_INFINITY
    # p = 2 degenerates to the 2-adic order of an integer
    assert CyclotomicInteger.from_integer(2, 2).valuation() == 1
    assert CyclotomicInteger.from_integer(2, -6).valuation() == 1
    assert CyclotomicInteger.from_integer(2, 7).valuation() == 0


def test_valuation_against_norm():
    rng = random.Random(79)
    for p in (2, 3, 5, 7):
        for _ in range(12):
            a = _rand_elem(rng, p, span=6)
            if a.is_zero():
                continue
            assert a.valuation() == norm_valuation(a)


def test_valuation_is_a_valuation():
    rng = random.Random(83)
    for p in (2, 3, 5, 7):
        one = CyclotomicInteger.from_integer(p, p)
        for _ in range(60):
            a, b = _rand_elem(rng, p), _rand_elem(rng, p)
            va, vb, vab = a.valuation(), b.valuation(), (a * b).valuation()
            assert vab == va + vb
            vsum = (a + b).valuation()
            assert vsum >= min(va, vb)
            if not a.is_zero():
                assert (one * a).valuation() == 1 + va


def test_rational_normalization():
    p = 3
    half = CyclotomicRational(CyclotomicInteger.from_integer(p, 2), 4)
    assert half.den == 2 and half.num == CyclotomicInteger.from_integer(p, 1)
    assert not half.is_integral
    whole = CyclotomicRational(CyclotomicInteger.from_integer(p, 6), 3)
    assert whole.is_integral and whole.to_integer() == CyclotomicInteger.from_integer(p, 2)
    with pytest.raises(ValueError):
        half.to_integer()
    assert CyclotomicRational.zero(p).is_zero()


def test_rational_arithmetic():
    p = 5
    a = CyclotomicRational(CyclotomicInteger.from_integer(p, 1), 2)
    b = CyclotomicRational(CyclotomicInteger.from_integer(p, 1), 3)
    total = a + b
    assert total.den == 6 and total.num == CyclotomicInteger.from_integer(p, 5)
    scaled = a.mul_integer(CyclotomicInteger.from_integer(p, 4))
    assert scaled.is_integral and scaled.to_integer() == CyclotomicInteger.from_integer(p, 2)
    assert a.div_int(2).den == 4


def test_text_rendering():
    assert str(CyclotomicInteger.from_integer(3, -1)) == "-1"
    assert str(CyclotomicInteger(3, (0, 1))) == "z"
    assert str(CyclotomicInteger(3, (2, -3))) == "2-3*z"
    assert str(CyclotomicInteger.zero(5)) == "0"
