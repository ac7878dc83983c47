"""Exact linear algebra over the exponent lattice of a diagonal Laurent polynomial.

An invertible integer matrix J holds the exponent vectors w_1..w_n as columns.
Every lattice point u has unique rational coordinates r with J*r = u, a weight
sum(r), and a canonical representative inside the fundamental domain
[0,1)^n of coordinates.  All arithmetic is arbitrary-precision integer or
`fractions.Fraction`; no floating point enters this module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterator, Sequence

from .errors import DetZeroError, NotInConeError

IntMatrix = tuple[tuple[int, ...], ...]

# Size gate for the redundant grid enumeration inside fundamental_domain.
# 64**3 keeps the check exhaustive on the whole n <= 3 test range while
# protecting accidental large-n inputs from a D**n blowup.
_GRID_CHECK_MAX_DET = 64
_GRID_CHECK_MAX_POINTS = 64**3


def _as_int_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    out = tuple(tuple(int(x) for x in row) for row in rows)
    n = len(out)
    if n == 0 or any(len(row) != n for row in out):
        raise ValueError("matrix must be square and non-empty")
    return out


def _det_bareiss(rows: IntMatrix) -> int:
    """Fraction-free determinant (Bareiss elimination), exact over Z."""
    n = len(rows)
    a = [list(row) for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def _minor(rows: IntMatrix, drop_row: int, drop_col: int) -> IntMatrix:
    return tuple(
        tuple(x for j, x in enumerate(row) if j != drop_col)
        for i, row in enumerate(rows)
        if i != drop_row
    )


def _matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    n, m, k = len(a), len(b[0]), len(b)
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m))
        for i in range(n)
    )


def det_and_adjugate(rows: Sequence[Sequence[int]]) -> tuple[int, IntMatrix]:
    """Exact determinant and adjugate with J * adj(J) = det(J) * I.

    Raises DetZeroError on singular input.
    """
    mat = _as_int_matrix(rows)
    n = len(mat)
    det = _det_bareiss(mat)
    if det == 0:
        raise DetZeroError("matrix has determinant zero")
    if n == 1:
        return det, ((1,),)
    adj = tuple(
        tuple((-1) ** (i + j) * _det_bareiss(_minor(mat, j, i)) for j in range(n))
        for i in range(n)
    )
    prod = _matmul(mat, adj)
    assert all(
        prod[i][j] == (det if i == j else 0) for i in range(n) for j in range(n)
    ), "adjugate identity failed"
    return det, adj


class ExponentMatrix:
    """The n x n integer matrix whose columns are the exponent vectors.

    Immutable; determinant and adjugate are computed eagerly and cached on
    the instance so coordinate solves stay pure integer arithmetic.
    """

    __slots__ = ("n", "rows", "columns", "det", "adjugate")

    def __init__(self, rows: Sequence[Sequence[int]]):
        mat = _as_int_matrix(rows)
        det, adj = det_and_adjugate(mat)
        object.__setattr__(self, "rows", mat)
        object.__setattr__(self, "n", len(mat))
        object.__setattr__(self, "columns", tuple(zip(*mat)))
        object.__setattr__(self, "det", det)
        object.__setattr__(self, "adjugate", adj)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "ExponentMatrix":
        return cls(tuple(zip(*(tuple(col) for col in columns))))

    def __setattr__(self, name, value):
        raise AttributeError("ExponentMatrix is immutable")

    def __eq__(self, other):
        if not isinstance(other, ExponentMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"ExponentMatrix({[list(r) for r in self.rows]})"

    def multiply(self, vec: Sequence) -> tuple:
        """Matrix-vector product J * vec, entries exact (int or Fraction)."""
        return tuple(
            sum(self.rows[i][j] * vec[j] for j in range(self.n))
            for i in range(self.n)
        )


@dataclass(frozen=True)
class DomainPoint:
    """A lattice point inside the fundamental domain, with exact coordinates.

    Satisfies J * coords = u, 0 <= coords[i] < 1, weight = sum(coords).
    """

    u: tuple[int, ...]
    coords: tuple[Fraction, ...]
    weight: Fraction


@dataclass(frozen=True)
class FundamentalDomain:
    """All |det J| lattice points with coordinates in [0,1)^n, sorted by u."""

    matrix: ExponentMatrix
    points: tuple[DomainPoint, ...]

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[DomainPoint]:
        return iter(self.points)

    def point_at(self, u: Sequence[int]) -> DomainPoint:
        key = tuple(int(x) for x in u)
        for pt in self.points:
            if pt.u == key:
                return pt
        raise KeyError(f"{key} is not in the fundamental domain")


def coordinates(matrix: ExponentMatrix, u: Sequence[int]) -> tuple[Fraction, ...]:
    """Unique rational coordinates r with J * r = u, via adj(J) * u / det(J)."""
    if len(u) != matrix.n:
        raise ValueError(f"vector has length {len(u)}, expected {matrix.n}")
    uu = tuple(int(x) for x in u)
    adj, det = matrix.adjugate, matrix.det
    return tuple(
        Fraction(sum(adj[i][j] * uu[j] for j in range(matrix.n)), det)
        for i in range(matrix.n)
    )


def in_cone(matrix: ExponentMatrix, u: Sequence[int]) -> bool:
    """Whether u lies in the monoid spanned by the columns (all coords >= 0)."""
    return all(c >= 0 for c in coordinates(matrix, u))


def weight(matrix: ExponentMatrix, u: Sequence[int], *, require_cone: bool = False) -> Fraction:
    """Sum of the coordinates of u in the column basis.

    With require_cone=True a point outside the nonnegative span raises
    NotInConeError; otherwise the (possibly negative) sum is returned so
    callers can inspect arbitrary vectors.
    """
    r = coordinates(matrix, u)
    if require_cone and any(c < 0 for c in r):
        raise NotInConeError(f"{tuple(u)} has a negative coordinate")
    return sum(r, Fraction(0))


def weight_denominator(matrix: ExponentMatrix) -> int:
    """Minimal positive M with all weights in (1/M)Z.

    The weight is the linear form (1,..,1) * J^{-1}, and the monoid generates
    Z^n as a group, so M is the common denominator of that row vector.
    """
    sums = (
        Fraction(sum(matrix.adjugate[i][j] for i in range(matrix.n)), matrix.det)
        for j in range(matrix.n)
    )
    return lcm(*(f.denominator for f in sums))


def smith_normal_form(rows: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form U * J * V = S of a nonsingular integer matrix.

    U and V are unimodular, S is diagonal with positive entries forming a
    divisibility chain s_1 | s_2 | ... | s_n.  The factorization is verified
    before returning.
    """
    mat = _as_int_matrix(rows)
    n = len(mat)
    if _det_bareiss(mat) == 0:
        raise DetZeroError("matrix has determinant zero")

    s = [list(row) for row in mat]
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(a, b):
        s[a], s[b] = s[b], s[a]
        u[a], u[b] = u[b], u[a]

    def swap_cols(a, b):
        for i in range(n):
            s[i][a], s[i][b] = s[i][b], s[i][a]
            v[i][a], v[i][b] = v[i][b], v[i][a]

    for t in range(n):
        while True:
            pivot_pos = min(
                ((abs(s[i][j]), i, j) for i in range(t, n) for j in range(t, n) if s[i][j]),
            )
            _, bi, bj = pivot_pos
            if bi != t:
                swap_rows(t, bi)
            if bj != t:
                swap_cols(t, bj)
            pivot = s[t][t]
            clean = True
            for i in range(t + 1, n):
                q = s[i][t] // pivot
                if q:
                    for j in range(n):
                        s[i][j] -= q * s[t][j]
                        u[i][j] -= q * u[t][j]
                if s[i][t]:
                    clean = False
            for j in range(t + 1, n):
                q = s[t][j] // pivot
                if q:
                    for i in range(n):
                        s[i][j] -= q * s[i][t]
                        v[i][j] -= q * v[i][t]
                if s[t][j]:
                    clean = False
            if not clean:
                continue
            offender = next(
                (i for i in range(t + 1, n) for j in range(t + 1, n) if s[i][j] % pivot),
                None,
            )
            if offender is None:
                break
            # Fold a non-divisible row into the pivot row and keep reducing.
            for j in range(n):
                s[t][j] += s[offender][j]
                u[t][j] += u[offender][j]

    for t in range(n):
        if s[t][t] < 0:
            for j in range(n):
                s[t][j] = -s[t][j]
                u[t][j] = -u[t][j]

    ut = tuple(tuple(row) for row in u)
    st = tuple(tuple(row) for row in s)
    vt = tuple(tuple(row) for row in v)
    assert _matmul(_matmul(ut, mat), vt) == st, "SNF factorization failed"
    assert abs(_det_bareiss(ut)) == 1 and abs(_det_bareiss(vt)) == 1
    diag = [st[i][i] for i in range(n)]
    assert all(d > 0 for d in diag)
    assert all(diag[i + 1] % diag[i] == 0 for i in range(n - 1)), "divisibility chain broken"
    return ut, st, vt


def reduce_to_domain(matrix: ExponentMatrix, u: Sequence[int]) -> DomainPoint:
    """Canonical representative of u modulo the column lattice of J.

    Takes the componentwise fractional part of the coordinates into [0,1)
    and maps back; the result is always an integer point.
    """
    r = coordinates(matrix, u)
    frac = tuple(c - (c.numerator // c.denominator) for c in r)
    image = matrix.multiply(frac)
    assert all(x.denominator == 1 for x in image), "reduction left the lattice"
    point = tuple(int(x) for x in image)
    return DomainPoint(point, frac, sum(frac, Fraction(0)))


def _grid_crosscheck(matrix: ExponentMatrix, found: set[tuple[int, ...]]) -> None:
    # Independent enumeration: every domain coordinate has denominator
    # dividing |det|, so scanning the full (k/D) grid and keeping integral
    # images must reproduce exactly the coset-enumerated point set.
    d = abs(matrix.det)
    expected = set()
    for combo in itertools.product(range(d), repeat=matrix.n):
        r = tuple(Fraction(c, d) for c in combo)
        image = matrix.multiply(r)
        if all(x.denominator == 1 for x in image):
            expected.add(tuple(int(x) for x in image))
    if expected != found:
        raise AssertionError("grid enumeration disagrees with coset enumeration")


@lru_cache(maxsize=None)
def fundamental_domain(matrix: ExponentMatrix) -> FundamentalDomain:
    """Enumerate the fundamental domain of Z^n modulo the column lattice.

    Coset representatives come from the Smith normal form: with U*J*V = S the
    quotient is the direct product of Z/s_i, and U^{-1} maps its canonical
    representatives back to Z^n.  Each is then reduced into [0,1)^n
    coordinates.  For small determinants the result is cross-checked against
    a naive grid enumeration.
    """
    umat, smat, _ = smith_normal_form(matrix.rows)
    det_u, adj_u = det_and_adjugate(umat)
    inv_u = tuple(tuple(det_u * x for x in row) for row in adj_u)  # det_u is +-1
    diag = [smat[i][i] for i in range(matrix.n)]

    by_u: dict[tuple[int, ...], DomainPoint] = {}
    for combo in itertools.product(*(range(d) for d in diag)):
        rep = tuple(
            sum(inv_u[i][k] * combo[k] for k in range(matrix.n))
            for i in range(matrix.n)
        )
        pt = reduce_to_domain(matrix, rep)
        by_u[pt.u] = pt

    size = abs(matrix.det)
    assert len(by_u) == size, "coset enumeration produced the wrong count"
    origin = (0,) * matrix.n
    assert origin in by_u and by_u[origin].weight == 0

    if size <= _GRID_CHECK_MAX_DET and size**matrix.n <= _GRID_CHECK_MAX_POINTS:
        _grid_crosscheck(matrix, set(by_u))

    points = tuple(sorted(by_u.values(), key=lambda pt: pt.u))
    return FundamentalDomain(matrix=matrix, points=points)
