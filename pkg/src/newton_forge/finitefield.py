"""Finite field extensions F_{p^i} with deterministic modulus selection.

Elements are little-endian coefficient tuples modulo a monic irreducible
polynomial.  The modulus is the lexicographically smallest irreducible of the
requested degree (constant coefficient compared first), so builds are
reproducible; an alternative `choice` index selects later candidates for
representation-independence checks.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import NotPrimeError, TraceNotInPrimeFieldError
from .primes import is_prime, prime_factors

Poly = tuple[int, ...]

# Below this group order the trace table is built by plain sequential
# multiplication; above it a baby-step/giant-step bilinear form is cheaper.
_SEQUENTIAL_TABLE_LIMIT = 4096


def _trim(c: list[int]) -> list[int]:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    return _trim(
        [(x - y) % p for x, y in itertools.zip_longest(a, b, fillvalue=0)]
    )


def _pdivmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    """Quotient and remainder in F_p[x]; b must be nonzero."""
    b = _trim(list(b))
    assert any(b), "division by zero polynomial"
    inv_lead = pow(b[-1], p - 2, p)
    r = _trim(list(a))
    q = [0] * max(1, len(r) - len(b) + 1)
    while any(r) and len(r) >= len(b):
        shift = len(r) - len(b)
        coef = (r[-1] * inv_lead) % p
        q[shift] = coef
        for j in range(len(b)):
            r[shift + j] = (r[shift + j] - coef * b[j]) % p
        r = _trim(r)
    return _trim(q), r


def _pmod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    return _pdivmod(a, f, p)[1]


def _ppowmod(base: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    acc = _pmod(base, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, acc, p), f, p)
        acc = _pmod(_pmul(acc, acc, p), f, p)
        e >>= 1
    return result


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while any(b):
        a, b = b, _pmod(a, b, p)
    return a


def _is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial of degree >= 1 over F_p."""
    d = len(poly) - 1
    x = [0, 1]
    # x^(p^d) must reduce to x ...
    r = _pmod(x, poly, p)
    for _ in range(d):
        r = _ppowmod(r, p, poly, p)
    if r != _pmod(x, poly, p):
        return False
    # ... and x^(p^(d/l)) - x must be coprime to the modulus for prime l | d.
    for ell in prime_factors(d):
        r = _pmod(x, poly, p)
        for _ in range(d // ell):
            r = _ppowmod(r, p, poly, p)
        diff = _psub(r, x, p)
        if len(_pgcd(diff, poly, p)) > 1:
            return False
    return True


class FieldTower:
    """Arithmetic in F_{p^degree} modulo a fixed monic irreducible polynomial."""

    def __init__(self, p: int, degree: int, modulus: Sequence[int]):
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != degree + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of the stated degree")
        if not _is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.degree = degree
        self.modulus = modulus
        self.size = p**degree
        self.zero = (0,) * degree
        self.one = (1,) + (0,) * (degree - 1)
        self._generator: Poly | None = None
        self._trace_basis: tuple[int, ...] | None = None
        self._trace_table: np.ndarray | None = None

    def __repr__(self):
        return f"FieldTower(p={self.p}, degree={self.degree}, modulus={self.modulus})"

    def _pad(self, coeffs: Sequence[int]) -> Poly:
        c = [x % self.p for x in coeffs]
        c += [0] * (self.degree - len(c))
        return tuple(c[: self.degree])

    def element(self, coeffs: Sequence[int]) -> Poly:
        return self._pad(coeffs)

    def from_index(self, k: int) -> Poly:
        """Element with base-p digit expansion k (0 <= k < size)."""
        digits = []
        for _ in range(self.degree):
            digits.append(k % self.p)
            k //= self.p
        return tuple(digits)

    def elements(self):
        return (self.from_index(k) for k in range(self.size))

    def add(self, a: Poly, b: Poly) -> Poly:
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a: Poly, b: Poly) -> Poly:
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def mul(self, a: Poly, b: Poly) -> Poly:
        return self._pad(_pmod(_pmul(a, b, self.p), self.modulus, self.p))

    def inverse(self, a: Poly) -> Poly:
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if not any(a):
            raise ZeroDivisionError("zero has no inverse")
        p = self.p
        r0, r1 = list(self.modulus), _trim(list(a))
        t0, t1 = [0], [1]
        while any(r1):
            q, r = _pdivmod(r0, r1, p)
            r0, r1 = r1, r
            t0, t1 = t1, _psub(t0, _pmul(q, t1, p), p)
        assert len(r0) == 1 and r0[0] != 0  # gcd is a unit: modulus irreducible
        scale = pow(r0[0], p - 2, p)
        return self._pad([(c * scale) % p for c in t0])

    def pow(self, a: Poly, e: int) -> Poly:
        if e < 0:
            return self.pow(self.inverse(a), -e)
        result = self.one
        acc = a
        while e:
            if e & 1:
                result = self.mul(result, acc)
            acc = self.mul(acc, acc)
            e >>= 1
        return result

    def generator(self) -> Poly:
        """Smallest-index generator of the multiplicative group."""
        if self._generator is not None:
            return self._generator
        m = self.size - 1
        if m == 1:
            self._generator = self.one
            return self.one
        factors = prime_factors(m)
        for k in range(1, self.size):
            cand = self.from_index(k)
            if all(self.pow(cand, m // ell) != self.one for ell in factors):
                self._generator = cand
                return cand
        raise AssertionError("no generator found (unreachable)")

    def trace_basis(self) -> tuple[int, ...]:
        """Absolute traces of the basis monomials x^0..x^(degree-1)."""
        if self._trace_basis is None:
            basis = []
            for j in range(self.degree):
                mono = self._pad([0] * j + [1])
                basis.append(absolute_trace(self, mono))
            self._trace_basis = tuple(basis)
        return self._trace_basis

    def _trace_dot(self, a: Poly) -> int:
        basis = self.trace_basis()
        return sum(c * t for c, t in zip(a, basis)) % self.p

    def trace_of_powers(self) -> np.ndarray:
        """Table T with T[k] = Tr(g^k) for the fixed generator g, k < size-1.

        Small groups walk the powers directly; larger ones split k = a + B*b
        and evaluate the bilinear form Tr(g^a * (g^B)^b) with one integer
        matrix product, which stays exact.
        """
        if self._trace_table is not None:
            return self._trace_table
        m = self.size - 1
        g = self.generator()
        if m <= _SEQUENTIAL_TABLE_LIMIT:
            table = np.empty(m, dtype=np.int64)
            cur = self.one
            for k in range(m):
                table[k] = self._trace_dot(cur)
                cur = self.mul(cur, g)
        else:
            b = int(m**0.5) + 1
            giant_count = (m + b - 1) // b
            baby = np.empty((b, self.degree), dtype=np.int64)
            cur = self.one
            for a in range(b):
                baby[a] = cur
                cur = self.mul(cur, g)
            stride = self.pow(g, b)
            giant = np.empty((giant_count, self.degree), dtype=np.int64)
            cur = self.one
            for idx in range(giant_count):
                giant[idx] = cur
                cur = self.mul(cur, stride)
            # pair[i][j] = Tr(x^i * x^j)
            pair = np.empty((self.degree, self.degree), dtype=np.int64)
            for i in range(self.degree):
                for j in range(self.degree):
                    mono = self._pad(_pmod([0] * (i + j) + [1], self.modulus, self.p))
                    pair[i, j] = self._trace_dot(mono)
            grid = (baby @ pair @ giant.T) % self.p
            table = grid.ravel(order="F")[:m]
        self._trace_table = table
        return table


def absolute_trace(fld: FieldTower, a: Poly) -> int:
    """Trace down to F_p as the Frobenius orbit sum a + a^p + ... + a^(p^(i-1))."""
    acc = fld.zero
    cur = a
    for _ in range(fld.degree):
        acc = fld.add(acc, cur)
        cur = fld.pow(cur, fld.p)
    if any(acc[1:]):
        raise TraceNotInPrimeFieldError(f"trace of {a} is {acc}")
    return acc[0]


def _monic_candidates(p: int, degree: int):
    # Lexicographic on (c_0, ..., c_{degree-1}), constant coefficient first.
    for tail in itertools.product(range(p), repeat=degree):
        yield tuple(tail) + (1,)


@lru_cache(maxsize=None)
def build_field(p: int, degree: int, choice: int = 0) -> FieldTower:
    """Field of size p^degree over the (choice+1)-th smallest irreducible modulus."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if degree < 1:
        raise ValueError("degree must be positive")
    seen = 0
    for cand in _monic_candidates(p, degree):
        if _is_irreducible(cand, p):
            if seen == choice:
                return FieldTower(p, degree, cand)
            seen += 1
    raise AssertionError("ran out of monic polynomials (unreachable)")
