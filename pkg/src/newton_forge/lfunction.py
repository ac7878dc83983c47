"""Empirical route to the Newton polygon: exact character sums, then the
L-polynomial as a truncated power-series exponential over Q(zeta_p).

Nothing here uses the combinatorial weight/orbit machinery; agreement with
the predicted polygon is therefore a genuine end-to-end check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cyclotomic import CyclotomicInteger, CyclotomicRational
from .dynamics import PrimeContext
from .errors import BudgetExceededError, NotIntegralError, NotPolynomialError
from .finitefield import build_field
from .polygons import LowerPolygon, polygon_from_valuations

#: Default cap on the number of torus points enumerated per character sum.
DEFAULT_BUDGET = 10_000_000

# Target number of scalars touched per vectorized block.
_BLOCK_TARGET = 1 << 20


def torus_size(p: int, degree: int, n: int) -> int:
    """Number of points of the n-torus over F_{p^degree}."""
    return (p**degree - 1) ** n


def character_sum(
    ctx: PrimeContext,
    degree: int,
    budget: int = DEFAULT_BUDGET,
    modulus_choice: int = 0,
) -> CyclotomicInteger:
    """Additive character sum of the diagonal polynomial over the torus
    of the degree-`degree` extension.

    Enumerates torus points through the cyclic group: with generator g and
    exponent tuple k, each monomial evaluates to g^(k . w mod (q-1)), so the
    trace of the polynomial value is a sum of table lookups.  Tallies of the
    trace residues are combined blockwise (the reduction is commutative, so
    chunking cannot change the result) and assembled into sum_c N_c zeta^c.
    """
    p, n = ctx.p, ctx.matrix.n
    size = torus_size(p, degree, n)
    if size > budget:
        raise BudgetExceededError(size, budget)

    fld = build_field(p, degree, modulus_choice)
    m = fld.size - 1
    trace_table = fld.trace_of_powers()

    # contrib[i][j][k] = trace-table index contribution of coordinate j at
    # exponent k for monomial i; values stay below m, so sums of n of them
    # cannot overflow int64.
    ks = np.arange(m, dtype=np.int64)
    contrib = [
        [(ks * (ctx.matrix.columns[i][j] % m)) % m for j in range(n)]
        for i in range(n)
    ]

    inner = m ** (n - 1)
    step = max(1, _BLOCK_TARGET // max(inner, 1))
    counts = np.zeros(p, dtype=np.int64)
    for start in range(0, m, step):
        head = np.arange(start, min(start + step, m))
        block_shape = (len(head),) + (m,) * (n - 1)
        trace_sum = np.zeros(block_shape, dtype=np.int64)
        for i in range(n):
            exps = contrib[i][0][head].reshape((-1,) + (1,) * (n - 1))
            for j in range(1, n):
                shape = (1,) * j + (m,) + (1,) * (n - 1 - j)
                exps = exps + contrib[i][j].reshape(shape)
            exps %= m
            trace_sum += trace_table[exps]
        trace_sum %= p
        counts += np.bincount(trace_sum.ravel(), minlength=p)

    assert int(counts.sum()) == size, "tally lost torus points"
    return CyclotomicInteger.from_root_powers(p, [int(c) for c in counts])


def character_sums(
    ctx: PrimeContext,
    count: int,
    budget: int = DEFAULT_BUDGET,
    modulus_choice: int = 0,
) -> list[CyclotomicInteger]:
    """The sums for extension degrees 1..count."""
    return [
        character_sum(ctx, i, budget=budget, modulus_choice=modulus_choice)
        for i in range(1, count + 1)
    ]


@dataclass(frozen=True)
class LPolynomial:
    """The polynomial side of the L-function, with cyclotomic-integer
    coefficients and constant term 1.

    exponent_sign records which of L or 1/L the polynomial is: +1 for an odd
    number of variables, -1 for an even number.
    """

    p: int
    n: int
    degree: int
    coeffs: tuple[CyclotomicInteger, ...]
    exponent_sign: int


def l_polynomial(ctx: PrimeContext, sums, slack_required: int = 2) -> LPolynomial:
    """Assemble the degree-|det J| polynomial from power sums S_1, S_2, ...

    Expands exp(sign * sum_i S_i t^i / i) with the derivative recurrence
    k*c_k = sign * sum_j S_j c_{k-j}, entirely in exact cyclotomic rationals.
    The sums must extend at least `slack_required` degrees past |det J|;
    those extra coefficients must vanish identically and everything up to
    the degree must be integral, else the input was degenerate or wrong.
    """
    p, n = ctx.p, ctx.matrix.n
    degree = abs(ctx.matrix.det)
    sums = list(sums)
    if len(sums) < degree + slack_required:
        raise ValueError(
            f"need at least {degree + slack_required} power sums, got {len(sums)}"
        )
    sign = 1 if n % 2 == 1 else -1
    signed = [s.scale(sign) for s in sums]

    coeffs: list[CyclotomicRational] = [CyclotomicRational.one(p)]
    for k in range(1, len(sums) + 1):
        acc = CyclotomicRational.zero(p)
        for j in range(1, k + 1):
            acc = acc + coeffs[k - j].mul_integer(signed[j - 1])
        coeffs.append(acc.div_int(k))

    for k in range(degree + 1, len(coeffs)):
        if not coeffs[k].is_zero():
            raise NotPolynomialError(
                f"coefficient at degree {k} is nonzero: {coeffs[k]!r}"
            )
    for k in range(degree + 1):
        if not coeffs[k].is_integral:
            raise NotIntegralError(
                f"coefficient at degree {k} has denominator {coeffs[k].den}"
            )
    head = [c.to_integer() for c in coeffs[: degree + 1]]
    if head[0] != CyclotomicInteger.one(p):
        raise NotPolynomialError("constant coefficient is not 1")
    if head[degree].is_zero():
        raise NotPolynomialError(f"leading coefficient at degree {degree} vanishes")
    return LPolynomial(p=p, n=n, degree=degree, coeffs=tuple(head), exponent_sign=sign)


def newton_polygon_of_polynomial(poly: LPolynomial) -> LowerPolygon:
    """Lower hull of (i, valuation of coefficient i), ord normalized at p."""
    points = [(i, c.valuation()) for i, c in enumerate(poly.coeffs)]
    return polygon_from_valuations(points)
