import random

import pytest

from newton_forge import NotPrimeError, TraceNotInPrimeFieldError, absolute_trace, build_field
from newton_forge.finitefield import _is_irreducible


def test_modulus_selection_examples():
    assert build_field(2, 1).modulus == (0, 1)  # plain x
    assert build_field(2, 2).modulus == (1, 1, 1)  # x^2 + x + 1
    assert build_field(3, 2).modulus == (1, 0, 1)  # x^2 + 1
    assert build_field(2, 3).modulus == (1, 0, 1, 1)  # x^3 + x^2 + 1


def test_alternative_modulus_choice():
    first = build_field(3, 2, choice=0)
    second = build_field(3, 2, choice=1)
    assert first.modulus != second.modulus
    assert _is_irreducible(second.modulus, 3)


def test_build_field_rejects_composite_characteristic():
    with pytest.raises(NotPrimeError):
        build_field(6, 1)


def test_irreducibility_vs_root_search():
    # degree <= 3: irreducible over F_p iff no root in F_p
    import itertools

    for p in (2, 3, 5):
        for degree in (2, 3):
            for tail in itertools.product(range(p), repeat=degree):
                poly = tail + (1,)
                has_root = any(
                    sum(c * x**j for j, c in enumerate(poly)) % p == 0 for x in range(p)
                )
                assert _is_irreducible(poly, p) == (not has_root)


def test_field_arithmetic_small():
    fld = build_field(3, 2)
    elems = list(fld.elements())
    assert len(elems) == 9
    for a in elems:
        assert fld.add(a, fld.zero) == a
        assert fld.mul(a, fld.one) == a
        if a != fld.zero:
            assert fld.mul(a, fld.inverse(a)) == fld.one
            assert fld.pow(a, fld.size - 1) == fld.one
            assert fld.pow(a, -1) == fld.inverse(a)
            assert fld.pow(a, -2) == fld.mul(fld.inverse(a), fld.inverse(a))


def test_frobenius_fixes_prime_field():
    fld = build_field(5, 3)
    for c in range(5):
        elem = fld.element((c,))
        assert fld.pow(elem, 5) == elem


def test_absolute_trace_examples():
    f2 = build_field(2, 1)
    assert absolute_trace(f2, f2.one) == 1
    f4 = build_field(2, 2)
    assert absolute_trace(f4, f4.one) == 0
    g = f4.element((0, 1))  # satisfies g^2 = g + 1
    assert fld_sq_is_g_plus_one(f4, g)
    assert absolute_trace(f4, g) == 1


def fld_sq_is_g_plus_one(fld, g):
    return fld.mul(g, g) == fld.add(g, fld.one)


def test_trace_is_additive_and_surjective():
    for p, d in ((2, 3), (3, 2), (5, 2)):
        fld = build_field(p, d)
        elems = list(fld.elements())
        values = set()
        for a in elems:
            values.add(absolute_trace(fld, a))
        assert values == set(range(p))
        rng = random.Random(89)
        for _ in range(20):
            a, b = rng.choice(elems), rng.choice(elems)
            assert (
                absolute_trace(fld, fld.add(a, b))
                == (absolute_trace(fld, a) + absolute_trace(fld, b)) % p
            )


def test_generator_has_full_order():
    for p, d in ((2, 4), (3, 3), (7, 2)):
        fld = build_field(p, d)
        g = fld.generator()
        seen = set()
        cur = fld.one
        for _ in range(fld.size - 1):
            assert cur not in seen
            seen.add(cur)
            cur = fld.mul(cur, g)
        assert cur == fld.one


def test_trace_table_matches_direct_traces_sequential():
    fld = build_field(3, 4)  # 80 elements: sequential path
    table = fld.trace_of_powers()
    g = fld.generator()
    cur = fld.one
    for k in range(fld.size - 1):
        assert table[k] == absolute_trace(fld, cur)
        cur = fld.mul(cur, g)


def test_trace_table_matches_direct_traces_blockwise():
    fld = build_field(3, 9)  # 19682 elements: baby-step/giant-step path
    table = fld.trace_of_powers()
    assert len(table) == fld.size - 1
    rng = random.Random(97)
    g = fld.generator()
    for k in [0, 1, 2, fld.size - 2] + [rng.randrange(fld.size - 1) for _ in range(40)]:
        assert table[k] == absolute_trace(fld, fld.pow(g, k))


def test_trace_guard_raises_on_corrupt_input():
    fld = build_field(2, 2)

    class Broken:
        degree = 2
        p = 2
        zero = fld.zero

        def add(self, a, b):
            return (0, 1)  # constant non-prime-field output

        def pow(self, a, e):
            return a

    with pytest.raises(TraceNotInPrimeFieldError):
        absolute_trace(Broken(), (0, 1))
