"""Linking matrices and their exact inertia.

The (extended) linking matrix of a framed link has the framings on the
diagonal and the pairwise linking numbers off it; special components enter
like any other (their framing is 0 by definition).  The inertia
(b_plus, b_minus, nullity) is computed by symmetric congruence diagonalization
over the rationals -- floating-point pivots near zero are exactly the failure
mode this avoids.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import FramedLinkDiagram

IntSymMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Inertia:
    b_plus: int
    b_minus: int
    nullity: int

    @property
    def dimension(self) -> int:
        return self.b_plus + self.b_minus + self.nullity

    @property
    def signature(self) -> int:
        return self.b_plus - self.b_minus


def linking_matrix(d: FramedLinkDiagram) -> IntSymMatrix:
    """Framings on the diagonal, linking numbers off it; all components kept."""
    n = d.n_components
    lk = d.linking
    return tuple(
        tuple(d.framings[i] if i == j else lk[i][j] for j in range(n))
        for i in range(n))


def inertia(m: IntSymMatrix) -> Inertia:
    """Counts of positive/negative/zero eigenvalue signs, exactly.

    Symmetric congruence elimination with Fraction arithmetic.  Nonzero
    diagonal entries pivot directly; if the active diagonal is all zero but
    some off-diagonal entry b = m[i][j] is not, the 2x2 hyperbolic block on
    {i, j} contributes (1, 1) and is split off by a congruence.
    """
    n = len(m)
    for i, row in enumerate(m):
        if len(row) != n:
            raise ValueError("matrix is not square")
        for j in range(n):
            if m[i][j] != m[j][i]:
                raise ValueError("matrix is not symmetric")
    a = [[Fraction(x) for x in row] for row in m]
    active = list(range(n))
    b_plus = b_minus = 0

    def eliminate_against(idx: int, coeffs: dict[int, Fraction]) -> None:
        # congruence: row/col r -= coeffs[r] * row/col idx
        for r, f in coeffs.items():
            if f == 0:
                continue
            for l in range(n):
                a[r][l] -= f * a[idx][l]
            for l in range(n):
                a[l][r] -= f * a[l][idx]

    while active:
        pivot = next((i for i in active if a[i][i] != 0), None)
        if pivot is not None:
            p = a[pivot][pivot]
            if p > 0:
                b_plus += 1
            else:
                b_minus += 1
            eliminate_against(
                pivot, {r: a[r][pivot] / p for r in active if r != pivot})
            active.remove(pivot)
            continue
        off = next(((i, j) for i in active for j in active
                    if i < j and a[i][j] != 0), None)
        if off is None:
            break  # all-zero active block
        i, j = off
        b = a[i][j]
        b_plus += 1
        b_minus += 1
        rest = [r for r in active if r not in (i, j)]
        eliminate_against(i, {r: a[r][j] / b for r in rest})
        eliminate_against(j, {r: a[r][i] / b for r in rest})
        active.remove(i)
        active.remove(j)

    return Inertia(b_plus, b_minus, len(active))
