"""Exact arithmetic for bracket evaluations.

Two rings:

* ``LaurentPoly`` -- integer Laurent polynomials in the bracket variable A.
* ``CyclotomicNumber`` -- the specialization A -> zeta, where zeta is the
  primitive 4k-th root of unity exp(i*pi/2k), so that A^4 realizes
  q = exp(2*pi*i/k).  Elements live in Z[x]/(Phi_{4k}(x)) in the power basis
  1, zeta, ..., zeta^{phi(4k)-1}, which gives decidable equality.

Coefficients are plain Python ints (arbitrary precision); bracket coefficients
grow exponentially with crossing number, so this is not optional.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache


class LevelMismatchError(ValueError):
    """Raised when combining cyclotomic numbers of different levels."""


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _poly_divmod_exact(num: list[int], den: list[int]) -> list[int]:
    """Divide integer polynomials known to divide exactly (den monic±)."""
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        assert c % lead == 0
        q = c // lead
        quot[i - dd] = q
        for j, b in enumerate(den):
            num[i - dd + j] -= q * b
    assert all(c == 0 for c in num), "inexact polynomial division"
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the m-th cyclotomic polynomial.

    Computed by exact division of x^m - 1 by the product of the cyclotomic
    polynomials of the proper divisors of m.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if m == 1:
        return (-1, 1)
    num = [0] * (m + 1)
    num[0], num[m] = -1, 1
    den = [1]
    for d in _divisors(m)[:-1]:
        den = _poly_mul(den, list(cyclotomic_polynomial(d)))
    return tuple(_poly_divmod_exact(num, den))


@dataclass(frozen=True)
class Level:
    """The integer parameter k >= 2 of the theory; zeta = exp(i*pi/2k)."""

    k: int

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 2:
            raise ValueError(f"level must be an integer >= 2, got {self.k!r}")

    @property
    def order(self) -> int:
        """Multiplicative order of zeta, i.e. 4k."""
        return 4 * self.k

    @property
    def degree(self) -> int:
        """Degree of the power basis, phi(4k)."""
        return len(cyclotomic_polynomial(self.order)) - 1

    def zeta_complex(self) -> complex:
        return cmath.exp(1j * cmath.pi / (2 * self.k))


@lru_cache(maxsize=None)
def _zeta_power_table(k: int) -> tuple[tuple[int, ...], ...]:
    """Reduced power-basis coordinates of zeta^e for e = 0 .. 4k-1."""
    order = 4 * k
    phi = cyclotomic_polynomial(order)
    deg = len(phi) - 1
    table = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(order):
        table.append(tuple(cur))
        # multiply by x, reduce via x^deg = -(phi[0] + ... + phi[deg-1] x^{deg-1})
        top = cur[deg - 1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(deg):
                cur[j] -= top * phi[j]
    return tuple(table)


@dataclass(frozen=True)
class CyclotomicNumber:
    """Element of Z[zeta], zeta = exp(i*pi/2k), in canonical power-basis form."""

    level: Level
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.level.degree:
            raise ValueError("coefficient vector has wrong length for level")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_int(cls, level: Level, n: int) -> CyclotomicNumber:
        c = [0] * level.degree
        c[0] = n
        return cls(level, tuple(c))

    @classmethod
    def zero(cls, level: Level) -> CyclotomicNumber:
        return cls.from_int(level, 0)

    @classmethod
    def one(cls, level: Level) -> CyclotomicNumber:
        return cls.from_int(level, 1)

    @classmethod
    def zeta_pow(cls, level: Level, e: int) -> CyclotomicNumber:
        """The exact value zeta^e (any integer e)."""
        table = _zeta_power_table(level.k)
        return cls(level, table[e % level.order])

    # -- ring structure ----------------------------------------------------

    def _check(self, other: CyclotomicNumber) -> None:
        if not isinstance(other, CyclotomicNumber):
            raise TypeError(f"expected CyclotomicNumber, got {type(other).__name__}")
        if other.level != self.level:
            raise LevelMismatchError(
                f"level mismatch: k={self.level.k} vs k={other.level.k}")

    def __add__(self, other: CyclotomicNumber) -> CyclotomicNumber:
        self._check(other)
        return CyclotomicNumber(
            self.level, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: CyclotomicNumber) -> CyclotomicNumber:
        self._check(other)
        return CyclotomicNumber(
            self.level, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> CyclotomicNumber:
        return CyclotomicNumber(self.level, tuple(-a for a in self.coeffs))

    def __mul__(self, other: CyclotomicNumber | int) -> CyclotomicNumber:
        if isinstance(other, int):
            return CyclotomicNumber(self.level, tuple(a * other for a in self.coeffs))
        self._check(other)
        deg = self.level.degree
        prod = [0] * (2 * deg - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                prod[i + j] += a * b
        phi = cyclotomic_polynomial(self.level.order)
        for i in range(len(prod) - 1, deg - 1, -1):
            c = prod[i]
            if c == 0:
                continue
            prod[i] = 0
            for j in range(deg):
                prod[i - deg + j] -= c * phi[j]
        return CyclotomicNumber(self.level, tuple(prod[:deg]))

    def __rmul__(self, other: int) -> CyclotomicNumber:
        return self * other

    def __pow__(self, n: int) -> CyclotomicNumber:
        if n < 0:
            raise ValueError("negative powers are not defined in this ring")
        acc = CyclotomicNumber.one(self.level)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def conj(self) -> CyclotomicNumber:
        """Complex conjugation, the ring automorphism zeta -> zeta^{-1}."""
        table = _zeta_power_table(self.level.k)
        order = self.level.order
        out = [0] * self.level.degree
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, t in enumerate(table[(-i) % order]):
                out[j] += a * t
        return CyclotomicNumber(self.level, tuple(out))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def complex_approx(self) -> complex:
        z = self.level.zeta_complex()
        total = 0j
        p = 1 + 0j
        for c in self.coeffs:
            if c:
                total += c * p
            p *= z
        return total

    def __repr__(self) -> str:
        return f"CyclotomicNumber(k={self.level.k}, {list(self.coeffs)})"


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial in A; terms sorted by exponent, no zeros."""

    terms: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, coeffs: dict[int, int]) -> LaurentPoly:
        return cls(tuple(sorted((e, c) for e, c in coeffs.items() if c != 0)))

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls(())

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls(((0, 1),))

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> LaurentPoly:
        return cls.from_dict({e: c})

    @classmethod
    def loop_value(cls) -> LaurentPoly:
        """delta = -A^2 - A^{-2}, the value of a closed loop."""
        return cls(((-2, -1), (2, -1)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        out = self.as_dict()
        for e, c in other.terms:
            out[e] = out.get(e, 0) + c
        return LaurentPoly.from_dict(out)

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly.from_dict({e: c * other for e, c in self.terms})
        out: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly.from_dict(out)

    def __rmul__(self, other: int) -> LaurentPoly:
        return self * other

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers of a Laurent polynomial")
        acc = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def shift(self, s: int) -> LaurentPoly:
        """Multiply by A^s."""
        return LaurentPoly(tuple((e + s, c) for e, c in self.terms))

    def conj(self) -> LaurentPoly:
        """The substitution A -> A^{-1} (mirror image of diagrams)."""
        return LaurentPoly(tuple(sorted((-e, c) for e, c in self.terms)))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def evaluate(self, a: complex) -> complex:
        return sum(c * a ** e for e, c in self.terms) if self.terms else 0j

    def complex_approx(self, k: Level) -> complex:
        return self.evaluate(k.zeta_complex())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            mono = "1" if e == 0 else ("A" if e == 1 else f"A^{e}")
            if e == 0:
                parts.append(f"{c:+}")
            elif c == 1:
                parts.append(f"+{mono}")
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c:+}*{mono}")
        return " ".join(parts)


def specialize(p: LaurentPoly, k: Level) -> CyclotomicNumber:
    """Evaluate a Laurent polynomial at A = zeta, the level-k root of unity."""
    table = _zeta_power_table(k.k)
    order = k.order
    out = [0] * k.degree
    for e, c in p.terms:
        for j, t in enumerate(table[e % order]):
            out[j] += c * t
    return CyclotomicNumber(k, tuple(out))
