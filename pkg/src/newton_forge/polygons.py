"""Lower-convex polygons: Hodge polygon, predicted Newton polygon, comparison.

The Hodge side is computed twice on purpose — once through the
alternating-binomial count of graded dimensions and once straight from the
weight multiset of the fundamental domain — and the two must agree exactly.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .dynamics import PrimeContext, orbit_decomposition
from .errors import HodgeMismatchError, MissingEndpointError, RangeMismatchError
from .lattice import ExponentMatrix, fundamental_domain, in_cone, weight, weight_denominator

Vertex = tuple[Fraction, Fraction]


def _is_infinite(val) -> bool:
    return isinstance(val, float) and math.isinf(val)


@dataclass(frozen=True)
class LowerPolygon:
    """A lower-convex polygon with exact rational vertices, starting at (0,0).

    Vertices are strict corners: consecutive segment slopes strictly increase.
    """

    vertices: tuple[Vertex, ...]

    def __post_init__(self):
        if not self.vertices or self.vertices[0] != (0, 0):
            raise ValueError("polygon must start at (0, 0)")
        xs = [v[0] for v in self.vertices]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("vertex abscissas must strictly increase")
        slopes = [
            (y1 - y0) / (x1 - x0)
            for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:])
        ]
        if any(b <= a for a, b in zip(slopes, slopes[1:])):
            raise ValueError("segment slopes must strictly increase")

    @classmethod
    def from_slopes(cls, slopes) -> "LowerPolygon":
        """Polygon whose unit-width slope multiset is the given slopes."""
        ordered = sorted(Fraction(s) for s in slopes)
        vertices: list[Vertex] = [(Fraction(0), Fraction(0))]
        x, y = Fraction(0), Fraction(0)
        i = 0
        while i < len(ordered):
            j = i
            while j < len(ordered) and ordered[j] == ordered[i]:
                j += 1
            x += j - i
            y += ordered[i] * (j - i)
            vertices.append((x, y))
            i = j
        return cls(tuple(vertices))

    @property
    def end(self) -> Vertex:
        return self.vertices[-1]

    def slopes(self) -> tuple[Fraction, ...]:
        """Slope multiset; requires every segment to have integral width."""
        out: list[Fraction] = []
        for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:]):
            width = x1 - x0
            if width.denominator != 1:
                raise ValueError("segment width is not integral")
            out.extend([(y1 - y0) / width] * int(width))
        return tuple(out)

    def value_at(self, x) -> Fraction:
        """Height of the polygon at abscissa x (piecewise-linear, exact)."""
        x = Fraction(x)
        if not self.vertices[0][0] <= x <= self.vertices[-1][0]:
            raise RangeMismatchError(f"abscissa {x} outside polygon range")
        for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:]):
            if x0 <= x <= x1:
                return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
        return self.vertices[-1][1]


def polygon_from_valuations(points) -> LowerPolygon:
    """Lower convex hull of (index, valuation) pairs.

    Infinite valuations are skipped.  The index-0 point must be present with
    valuation 0 and the maximal index must carry a finite valuation.
    """
    table: dict[int, object] = {}
    for idx, val in points:
        idx = int(idx)
        if idx in table and table[idx] != val:
            raise ValueError(f"conflicting valuations at index {idx}")
        table[idx] = val
    if not table:
        raise MissingEndpointError("no points given")
    if table.get(0) != 0:
        raise MissingEndpointError("index 0 with valuation 0 is required")
    top = max(table)
    if _is_infinite(table[top]):
        raise MissingEndpointError(f"valuation at maximal index {top} is infinite")

    finite = sorted(
        (Fraction(i), Fraction(v)) for i, v in table.items() if not _is_infinite(v)
    )
    hull: list[Vertex] = []
    for pt in finite:
        while len(hull) >= 2:
            (x0, y0), (x1, y1) = hull[-2], hull[-1]
            # Pop while the middle point is on or above the new chord.
            if (x1 - x0) * (pt[1] - y0) - (y1 - y0) * (pt[0] - x0) <= 0:
                hull.pop()
            else:
                break
        hull.append(pt)
    return LowerPolygon(tuple(hull))


@dataclass(frozen=True)
class HodgeData:
    """Graded dimension counts H(0..nM) plus the weight denominator M."""

    weight_denominator: int
    counts: tuple[int, ...]
    levels: tuple[tuple[int, int], ...]  # (l, W(l)) for the levels used above

    def value(self, k: int) -> int:
        return self.counts[k] if 0 <= k < len(self.counts) else 0

    @property
    def total(self) -> int:
        return sum(self.counts)


@lru_cache(maxsize=None)
def count_monoid_points(matrix: ExponentMatrix, level: int) -> int:
    """Number of monoid points of weight level/M (M = weight denominator).

    Uses the decomposition of the monoid into translates of the fundamental
    domain: a point of weight level/M is a domain point s plus a nonnegative
    combination of columns of total degree t = level/M - w(s), and there are
    C(t+n-1, n-1) such combinations.
    """
    if level < 0:
        return 0
    m = weight_denominator(matrix)
    n = matrix.n
    target = Fraction(level, m)
    total = 0
    for pt in fundamental_domain(matrix):
        t = target - pt.weight
        if t < 0 or t.denominator != 1:
            continue
        total += comb(int(t) + n - 1, n - 1)
    return total


def count_monoid_points_bruteforce(matrix: ExponentMatrix, level: int) -> int:
    """Direct box enumeration of the same count; cross-check for small levels."""
    if level < 0:
        return 0
    import itertools

    m = weight_denominator(matrix)
    target = Fraction(level, m)
    max_norm = max(abs(x) for col in matrix.columns for x in col)
    bound = int(target * max_norm * matrix.n) + 1
    total = 0
    for u in itertools.product(range(-bound, bound + 1), repeat=matrix.n):
        if in_cone(matrix, u) and weight(matrix, u) == target:
            total += 1
    return total


@lru_cache(maxsize=None)
def hodge_numbers(matrix: ExponentMatrix) -> HodgeData:
    """H(i) for 0 <= i <= nM via the alternating-binomial formula.

    Independently recomputes the same numbers as the multiset of scaled
    weights over the fundamental domain and raises HodgeMismatchError if the
    two disagree (they cannot, short of an implementation bug).
    """
    m = weight_denominator(matrix)
    n = matrix.n
    counts = tuple(
        sum(
            (-1) ** l * comb(n, l) * count_monoid_points(matrix, i - l * m)
            for l in range(n + 1)
        )
        for i in range(n * m + 1)
    )

    scaled = Counter()
    for pt in fundamental_domain(matrix):
        k = pt.weight * m
        assert k.denominator == 1
        scaled[int(k)] += 1
    reference = tuple(scaled.get(i, 0) for i in range(n * m + 1))
    if counts != reference:
        raise HodgeMismatchError(
            f"formula gives {counts}, weight multiset gives {reference}"
        )
    if sum(counts) != abs(matrix.det) or any(c < 0 for c in counts):
        raise HodgeMismatchError(f"counts {counts} violate the total/sign checks")
    levels = tuple((l, count_monoid_points(matrix, l)) for l in range(n * m + 1))
    return HodgeData(weight_denominator=m, counts=counts, levels=levels)


@lru_cache(maxsize=None)
def hodge_polygon(matrix: ExponentMatrix) -> LowerPolygon:
    """Lower polygon with slope k/M repeated H(k) times.

    Built both from the cumulative H(k) vertices and from the sorted weight
    multiset of the fundamental domain; the constructions must coincide.
    """
    data = hodge_numbers(matrix)
    m = data.weight_denominator
    vertices: list[Vertex] = [(Fraction(0), Fraction(0))]
    x, y = Fraction(0), Fraction(0)
    for k, h in enumerate(data.counts):
        if h == 0:
            continue
        x += h
        y += Fraction(k * h, m)
        vertices.append((x, y))
    from_counts = LowerPolygon(tuple(vertices))

    from_weights = LowerPolygon.from_slopes(
        pt.weight for pt in fundamental_domain(matrix)
    )
    if from_counts != from_weights:
        raise HodgeMismatchError("count-based and weight-based polygons differ")
    return from_counts


def newton_polygon_from_orbits(ctx: PrimeContext) -> LowerPolygon:
    """Predicted Newton polygon: each orbit of length d and total slope s
    contributes d slopes equal to s/d."""
    slopes: list[Fraction] = []
    for orbit in orbit_decomposition(ctx):
        slopes.extend([orbit.slope_sum / orbit.length] * orbit.length)
    return LowerPolygon.from_slopes(slopes)


@dataclass(frozen=True)
class PolygonComparison:
    verdict: str  # "equal" | "strictly_above" | "incomparable"
    shared_endpoints: bool
    first_end: Vertex
    second_end: Vertex
    max_gap: Fraction


def compare_polygons(upper: LowerPolygon, lower: LowerPolygon) -> PolygonComparison:
    """Pointwise comparison of two polygons over their common integer abscissas.

    "equal" means identical heights everywhere; "strictly_above" means the
    first polygon dominates the second with the same endpoints and is higher
    somewhere; anything else is "incomparable".
    """
    if upper.vertices[0][0] != lower.vertices[0][0] or upper.end[0] != lower.end[0]:
        raise RangeMismatchError(
            f"x-ranges differ: {upper.end[0]} vs {lower.end[0]}"
        )
    top = upper.end[0]
    if top.denominator != 1:
        raise RangeMismatchError(f"polygon width {top} is not integral")
    gaps = [upper.value_at(x) - lower.value_at(x) for x in range(int(top) + 1)]
    max_gap = max(gaps)
    shared = upper.end == lower.end
    if all(g == 0 for g in gaps) and shared:
        verdict = "equal"
    elif all(g >= 0 for g in gaps) and shared:
        verdict = "strictly_above"
    else:
        verdict = "incomparable"
    return PolygonComparison(
        verdict=verdict,
        shared_endpoints=shared,
        first_end=upper.end,
        second_end=lower.end,
        max_gap=max_gap,
    )
