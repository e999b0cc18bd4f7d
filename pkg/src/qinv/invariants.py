"""Normalized surgery invariants of 3- and 4-manifolds.

``rtw`` evaluates every component with the full surgery element and divides by
powers of the +1/-1-framed unknot evaluations according to the inertia of the
linking matrix; that normalization makes blow-up invariance an algebraic
identity and fixes the value 1 on the 3-sphere.

``broda`` takes a special framed link (ordinary components = 2-handles, with
the even-graded element; special components = 1-handles, with the full one),
divides by the even unknot evaluation to the power of the nullity of the
extended linking matrix and by the mixed Hopf pairing to the power
(N_total - nullity)/2.  The half power is kept exact: denominators store twice
the exponent, and only the complex display takes a principal square root.

Values are never divided in the ring; equality of two invariants is decided by
cross-multiplication (``compare``).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache

from .colored import Color, Omega, SkeinLabel, evaluate_labeled_link
from .diagram import FramedLinkDiagram, braid_closure, parse_braid, unknot
from .quadform import inertia, linking_matrix
from .ring import CyclotomicNumber, Level


class DegenerateLevelError(ArithmeticError):
    """A normalization base evaluates to zero at this level."""


class SpecialLinkError(ValueError):
    """The declared special components violate the special-link conditions."""


@dataclass(frozen=True)
class SpecialFramedLink:
    """A framed link partitioned into ordinary and special components.

    Special components must be 0-framed and pairwise unlinked; that they are
    honestly unknotted split circles is the caller's responsibility (no unknot
    recognition is attempted).
    """

    diagram: FramedLinkDiagram
    special: frozenset[int] = frozenset()

    def __post_init__(self):
        n = self.diagram.n_components
        for c in self.special:
            if not 0 <= c < n:
                raise SpecialLinkError(f"special component {c} does not exist")

    @property
    def ordinary(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.diagram.n_components)
                     if i not in self.special)

    def validate(self) -> None:
        lk = self.diagram.linking
        for c in sorted(self.special):
            if self.diagram.framings[c] != 0:
                raise SpecialLinkError(
                    f"special component {c} has framing "
                    f"{self.diagram.framings[c]}, must be 0")
            for c2 in sorted(self.special):
                if c2 > c and lk[c][c2] != 0:
                    raise SpecialLinkError(
                        f"special components {c}, {c2} have linking number "
                        f"{lk[c][c2]}, must be 0")

    def labels(self) -> tuple[SkeinLabel, ...]:
        return tuple(Omega("all") if i in self.special else Omega("even")
                     for i in range(self.diagram.n_components))


@dataclass(frozen=True)
class Denominator:
    """One normalization factor base^(power2/2); odd power2 = half-integer."""

    label: str
    base: CyclotomicNumber
    power2: int

    @property
    def is_half(self) -> bool:
        return self.power2 % 2 != 0

    def complex_approx(self) -> complex:
        return cmath.sqrt(self.base.complex_approx()) ** self.power2


@dataclass(frozen=True, eq=False)
class InvariantValue:
    """Exact numerator with normalization exponents, plus a complex shadow."""

    level: Level
    kind: str                     # "rtw" or "broda"
    numerator: CyclotomicNumber
    denominators: tuple[Denominator, ...]
    info: tuple[tuple[str, int], ...] = ()

    def complex_approx(self) -> complex:
        den = 1 + 0j
        for f in self.denominators:
            den *= f.complex_approx()
        return self.numerator.complex_approx() / den

    @property
    def has_half_exponent(self) -> bool:
        return any(f.is_half for f in self.denominators)

    def __repr__(self) -> str:
        expos = ", ".join(f"{f.label}^{f.power2}/2" for f in self.denominators)
        return (f"InvariantValue({self.kind}, k={self.level.k}, "
                f"approx={self.complex_approx():.6g}, denom=[{expos}])")


@dataclass(frozen=True)
class CompareResult:
    equal: bool
    sign_ambiguous: bool = False

    def __bool__(self) -> bool:
        return self.equal


def compare(v1: InvariantValue, v2: InvariantValue) -> CompareResult:
    """Exact equality by clearing denominators via cross-multiplication.

    If the two half-exponents have different parities the squares are compared
    instead and the result is flagged sign-ambiguous.
    """
    if v1.level != v2.level:
        raise ValueError("cannot compare invariants at different levels")
    if v1.kind != v2.kind or [f.label for f in v1.denominators] != \
            [f.label for f in v2.denominators]:
        raise ValueError("incommensurable invariant values")
    for f1, f2 in zip(v1.denominators, v2.denominators):
        if f1.base != f2.base:
            raise ValueError(f"denominator base mismatch for {f1.label}")

    diffs = [(f1.base, f2.power2 - f1.power2)
             for f1, f2 in zip(v1.denominators, v2.denominators)]
    if all(d % 2 == 0 for _, d in diffs):
        lhs, rhs = v1.numerator, v2.numerator
        for base, d in diffs:
            if d > 0:
                lhs = lhs * base ** (d // 2)
            elif d < 0:
                rhs = rhs * base ** (-d // 2)
        return CompareResult(lhs == rhs)
    lhs, rhs = v1.numerator * v1.numerator, v2.numerator * v2.numerator
    for base, d in diffs:
        if d > 0:
            lhs = lhs * base ** d
        elif d < 0:
            rhs = rhs * base ** (-d)
    return CompareResult(lhs == rhs, sign_ambiguous=True)


@lru_cache(maxsize=None)
def _unknot_base(k: int, framing: int, parity: str) -> CyclotomicNumber:
    return evaluate_labeled_link(unknot(framing), (Omega(parity),), Level(k))


@lru_cache(maxsize=None)
def _hopf_base(k: int) -> CyclotomicNumber:
    """Mixed Hopf pairing: 0-framed Hopf pair, even on the ordinary component,
    full element on the special one."""
    hopf = FramedLinkDiagram(
        braid_closure(parse_braid("braid 2 : s1 s1")).word, (0, 0))
    return evaluate_labeled_link(hopf, (Omega("even"), Omega("all")), Level(k))


def rtw(d: FramedLinkDiagram, k: int | Level) -> InvariantValue:
    """The level-k 3-manifold invariant of the surgery presentation d."""
    level = k if isinstance(k, Level) else Level(k)
    base_plus = _unknot_base(level.k, +1, "all")
    base_minus = _unknot_base(level.k, -1, "all")
    if base_plus.is_zero() or base_minus.is_zero():
        raise DegenerateLevelError(
            f"unknot normalization base vanishes at k={level.k}")
    numerator = evaluate_labeled_link(
        d, tuple(Omega("all") for _ in range(d.n_components)), level)
    it = inertia(linking_matrix(d))
    return InvariantValue(
        level, "rtw", numerator,
        (Denominator("omega_unknot_plus", base_plus, 2 * it.b_plus),
         Denominator("omega_unknot_minus", base_minus, 2 * it.b_minus)),
        (("b_plus", it.b_plus), ("b_minus", it.b_minus),
         ("nullity", it.nullity), ("n_components", d.n_components)))


def broda(sl: SpecialFramedLink, k: int | Level) -> InvariantValue:
    """The level-k 4-manifold invariant of the special framed link sl."""
    level = k if isinstance(k, Level) else Level(k)
    sl.validate()
    base_unknot = _unknot_base(level.k, 0, "even")
    base_hopf = _hopf_base(level.k)
    if base_unknot.is_zero() or base_hopf.is_zero():
        raise DegenerateLevelError(
            f"normalization base vanishes at k={level.k}")
    d = sl.diagram
    numerator = evaluate_labeled_link(d, sl.labels(), level)
    nu = inertia(linking_matrix(d)).nullity
    total = d.n_components
    return InvariantValue(
        level, "broda", numerator,
        (Denominator("omega_even_unknot", base_unknot, 2 * nu),
         Denominator("special_hopf_pairing", base_hopf, total - nu)),
        (("nullity", nu), ("n_ordinary", len(sl.ordinary)),
         ("n_special", len(sl.special)),
         ("half_exponent", (total - nu) % 2)))
