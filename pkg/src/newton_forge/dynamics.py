"""The multiply-by-p action on the fundamental domain and its orbit structure.

When gcd(p, det J) = 1 multiplication by p permutes the fundamental domain;
the weight profile along the resulting cycles decides whether the Newton
polygon collapses onto the Hodge polygon.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import NotCoprimeError, NotInDomainError, NotPrimeError
from .lattice import DomainPoint, ExponentMatrix, fundamental_domain
from .primes import is_prime


@dataclass(frozen=True)
class PrimeContext:
    """A prime together with an exponent matrix it is coprime to."""

    p: int
    matrix: ExponentMatrix

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrimeError(f"{self.p} is not prime")
        if gcd(self.p, self.matrix.det) != 1:
            raise NotCoprimeError(
                f"gcd(p, det J) = {gcd(self.p, self.matrix.det)} != 1"
            )


@dataclass(frozen=True)
class Orbit:
    """One cycle of the p-action: points in visit order, starting at the
    lexicographically smallest member."""

    points: tuple[DomainPoint, ...]
    length: int
    slope_sum: Fraction  # sum of the weights around the cycle


def p_action(ctx: PrimeContext, point: DomainPoint) -> DomainPoint:
    """Image of a domain point: componentwise fractional part of p * coords."""
    if any(not (0 <= c < 1) for c in point.coords):
        raise NotInDomainError(f"coordinates {point.coords} are outside [0,1)^n")
    scaled = tuple(ctx.p * c for c in point.coords)
    frac = tuple(c - (c.numerator // c.denominator) for c in scaled)
    image = ctx.matrix.multiply(frac)
    assert all(x.denominator == 1 for x in image)
    return DomainPoint(tuple(int(x) for x in image), frac, sum(frac, Fraction(0)))


def orbit_decomposition(ctx: PrimeContext) -> tuple[Orbit, ...]:
    """Partition the fundamental domain into p-action cycles.

    Orbits are ordered by their lexicographically smallest point and each
    cycle starts there, so the decomposition is deterministic.
    """
    domain = fundamental_domain(ctx.matrix)
    seen: set[tuple[int, ...]] = set()
    orbits: list[Orbit] = []
    for start in domain:
        if start.u in seen:
            continue
        cycle = [start]
        current = p_action(ctx, start)
        while current.u != start.u:
            cycle.append(current)
            current = p_action(ctx, current)
        seen.update(pt.u for pt in cycle)
        orbits.append(
            Orbit(
                points=tuple(cycle),
                length=len(cycle),
                slope_sum=sum((pt.weight for pt in cycle), Fraction(0)),
            )
        )
    assert sum(o.length for o in orbits) == len(domain)
    return tuple(orbits)


def is_p_stable(ctx: PrimeContext) -> tuple[bool, DomainPoint | None]:
    """Whether the weight is invariant under the p-action.

    Returns (True, None) when every point keeps its weight, otherwise
    (False, witness) with the lexicographically first counterexample.
    """
    for pt in fundamental_domain(ctx.matrix):
        if p_action(ctx, pt).weight != pt.weight:
            return False, pt
    return True, None
