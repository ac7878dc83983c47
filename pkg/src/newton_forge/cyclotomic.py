"""Exact arithmetic in Z[zeta_p] and the valuation at the prime above p.

Elements are integer coefficient vectors over the power basis
zeta^0..zeta^(p-2); the relation 1 + zeta + ... + zeta^(p-1) = 0 eliminates
zeta^(p-1).  For p = 2 the ring degenerates to Z with zeta = -1.

The valuation is normalized so that ord(p) = 1, which makes
ord(1 - zeta) = 1/(p-1).  Rewriting an element over the basis
(1-zeta)^0..(1-zeta)^(p-2) computes it exactly: the candidate values
ord_p(b_k) + k/(p-1) have pairwise distinct residues mod 1, so the
ultrametric minimum is attained by a single term and no cancellation can
hide it.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd
from typing import Sequence

from .primes import is_prime

#: Marker for the valuation of zero; only ever compared, never mixed into
#: exact arithmetic.
ORD_INFINITY = float("inf")


def _padic_ord(value: int, p: int) -> int:
    assert value != 0
    k = 0
    while value % p == 0:
        value //= p
        k += 1
    return k


class CyclotomicInteger:
    """An element of Z[zeta_p] in canonical power-basis form."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Sequence[int]):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != p - 1:
            raise ValueError(f"expected {p - 1} coefficients, got {len(coeffs)}")
        self.p = p
        self.coeffs = coeffs

    @classmethod
    def zero(cls, p: int) -> "CyclotomicInteger":
        return cls(p, (0,) * (p - 1))

    @classmethod
    def one(cls, p: int) -> "CyclotomicInteger":
        return cls(p, (1,) + (0,) * (p - 2))

    @classmethod
    def from_integer(cls, p: int, value: int) -> "CyclotomicInteger":
        return cls(p, (int(value),) + (0,) * (p - 2))

    @classmethod
    def from_root_powers(cls, p: int, counts: Sequence[int]) -> "CyclotomicInteger":
        """Canonical form of sum_c counts[c] * zeta^c over c = 0..p-1."""
        counts = [int(c) for c in counts]
        if len(counts) != p:
            raise ValueError(f"expected {p} tallies, got {len(counts)}")
        top = counts[p - 1]
        return cls(p, tuple(counts[j] - top for j in range(p - 1)))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, CyclotomicInteger):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def _check_compatible(self, other: "CyclotomicInteger") -> None:
        if self.p != other.p:
            raise ValueError(f"mixed cyclotomic rings: p={self.p} vs p={other.p}")

    def __add__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        self._check_compatible(other)
        return CyclotomicInteger(
            self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        self._check_compatible(other)
        return CyclotomicInteger(
            self.p, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "CyclotomicInteger":
        return CyclotomicInteger(self.p, tuple(-a for a in self.coeffs))

    def scale(self, k: int) -> "CyclotomicInteger":
        return CyclotomicInteger(self.p, tuple(k * a for a in self.coeffs))

    def __mul__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        self._check_compatible(other)
        p = self.p
        width = p - 1
        raw = [0] * (2 * width - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                raw[i + j] += a * b
        # zeta^p = 1 folds exponents >= p; zeta^(p-1) = -(1 + ... + zeta^(p-2)).
        folded = [0] * p
        for e, c in enumerate(raw):
            folded[e % p] += c
        top = folded[p - 1]
        return CyclotomicInteger(p, tuple(folded[j] - top for j in range(width)))

    def __repr__(self):
        return f"CyclotomicInteger(p={self.p}, {self.coeffs})"

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                terms.append(f"{c:+d}")
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                power = "z" if j == 1 else f"z^{j}"
                terms.append(("-" if c < 0 else "+") + mag + power)
        if not terms:
            return "0"
        return "".join(terms).lstrip("+")

    def uniformizer_coefficients(self) -> tuple[int, ...]:
        """Coefficients b_k with self = sum_k b_k * (1 - zeta)^k, k <= p-2."""
        width = self.p - 1
        out = []
        for k in range(width):
            acc = sum(comb(j, k) * self.coeffs[j] for j in range(k, width))
            out.append((-1) ** k * acc)
        return tuple(out)

    def valuation(self):
        """Valuation at the prime above p, normalized so ord(p) = 1.

        Returns an exact Fraction, or ORD_INFINITY for zero.
        """
        if self.is_zero():
            return ORD_INFINITY
        p = self.p
        return min(
            Fraction(_padic_ord(b, p)) + Fraction(k, p - 1)
            for k, b in enumerate(self.uniformizer_coefficients())
            if b != 0
        )


class CyclotomicRational:
    """A cyclotomic integer divided by a positive integer, kept in lowest terms.

    Just enough arithmetic for the power-series exponential: addition,
    multiplication by ring elements, and division by a positive integer.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: CyclotomicInteger, den: int = 1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        g = gcd(den, *(abs(c) for c in num.coeffs)) if num else den
        self.num = CyclotomicInteger(num.p, tuple(c // g for c in num.coeffs))
        self.den = den // g

    @classmethod
    def zero(cls, p: int) -> "CyclotomicRational":
        return cls(CyclotomicInteger.zero(p))

    @classmethod
    def one(cls, p: int) -> "CyclotomicRational":
        return cls(CyclotomicInteger.one(p))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    @property
    def is_integral(self) -> bool:
        return self.den == 1

    def to_integer(self) -> CyclotomicInteger:
        if not self.is_integral:
            raise ValueError(f"denominator {self.den} is not 1")
        return self.num

    def __eq__(self, other):
        if not isinstance(other, CyclotomicRational):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other: "CyclotomicRational") -> "CyclotomicRational":
        num = self.num.scale(other.den) + other.num.scale(self.den)
        return CyclotomicRational(num, self.den * other.den)

    def mul_integer(self, other: CyclotomicInteger) -> "CyclotomicRational":
        return CyclotomicRational(self.num * other, self.den)

    def div_int(self, k: int) -> "CyclotomicRational":
        return CyclotomicRational(self.num, self.den * k)

    def __repr__(self):
        return f"CyclotomicRational(({self.num!s})/{self.den})"
