"""Shared helpers for the test suite: samplers and independent oracles.

The oracles here deliberately avoid the library's own algorithms:
- cyclotomic products go through the companion matrix of the cyclotomic
  polynomial,
- valuations go through the p-adic order of the field norm,
- character sums go through literal per-point field arithmetic.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from newton_forge import (
    CyclotomicInteger,
    ExponentMatrix,
    PrimeContext,
    absolute_trace,
    build_field,
)
from newton_forge.errors import DetZeroError

SAMPLE_SEED = 20260809
ENTRY_RANGE = 3
MAX_DET = 10
SUITE_PRIMES = (2, 3, 5, 7, 11, 13)


def sample_matrices(count: int = 200, seed: int = SAMPLE_SEED) -> list[ExponentMatrix]:
    """Random square matrices with entries in [-3,3] and 0 < |det| <= 10."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, 3)
        rows = [[rng.randint(-ENTRY_RANGE, ENTRY_RANGE) for _ in range(n)] for _ in range(n)]
        try:
            matrix = ExponentMatrix(rows)
        except DetZeroError:
            continue
        if abs(matrix.det) <= MAX_DET:
            out.append(matrix)
    return out


def companion_product(a: CyclotomicInteger, b: CyclotomicInteger) -> CyclotomicInteger:
    """Product computed in the matrix representation zeta -> companion(Phi_p)."""
    p = a.p
    w = p - 1
    comp = [[0] * w for _ in range(w)]
    for i in range(1, w):
        comp[i][i - 1] = 1
    for i in range(w):
        comp[i][w - 1] = -1  # last column: -(1 + x + ... + x^(p-2))

    def mat_of(elem):
        acc = [[0] * w for _ in range(w)]
        power = [[int(i == j) for j in range(w)] for i in range(w)]
        for c in elem.coeffs:
            for i in range(w):
                for j in range(w):
                    acc[i][j] += c * power[i][j]
            power = [
                [sum(comp[i][k] * power[k][j] for k in range(w)) for j in range(w)]
                for i in range(w)
            ]
        return acc

    ma, mb = mat_of(a), mat_of(b)
    prod = [
        [sum(ma[i][k] * mb[k][j] for k in range(w)) for j in range(w)]
        for i in range(w)
    ]
    # first column = image of the basis element 1
    return CyclotomicInteger(p, tuple(prod[i][0] for i in range(w)))


def norm_valuation(a: CyclotomicInteger) -> Fraction:
    """ord(a) recovered from the field norm: ord_p(N(a)) / (p-1).

    N(a) is the resultant of the cyclotomic polynomial with the coefficient
    polynomial of a (both monic-in-the-right-sense integer polynomials, so
    the resultant is an exact integer).  The ramified prime is unique and
    the extension Galois, so every conjugate shares the valuation.
    """
    import sympy

    p = a.p
    x = sympy.symbols("x")
    phi = sum(x**k for k in range(p))
    poly = sum(sympy.Integer(c) * x**j for j, c in enumerate(a.coeffs))
    norm = int(sympy.resultant(phi, poly, x))
    assert norm != 0
    k = 0
    while norm % p == 0:
        norm //= p
        k += 1
    return Fraction(k, p - 1)


def charsum_bruteforce(ctx: PrimeContext, degree: int) -> CyclotomicInteger:
    """Character sum by literal enumeration with scalar field arithmetic."""
    p, n = ctx.p, ctx.matrix.n
    fld = build_field(p, degree)
    nonzero = [fld.from_index(k) for k in range(1, fld.size)]
    counts = [0] * p
    for xs in itertools.product(nonzero, repeat=n):
        total = fld.zero
        for col in ctx.matrix.columns:
            term = fld.one
            for x, e in zip(xs, col):
                term = fld.mul(term, fld.pow(x, e))
            total = fld.add(total, term)
        counts[absolute_trace(fld, total)] += 1
    return CyclotomicInteger.from_root_powers(p, counts)
