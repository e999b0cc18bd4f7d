"""Fully floating-point re-evaluation of every invariant.

An independent complex-arithmetic path used to cross-check the exact engine:
the sweep runs on complex coefficients, quantum dimensions come from the
closed sine form rather than the division-free sum, and the normalization is
ordinary complex division.  Shares only the combinatorics (diagrams, Chebyshev
integers, inertia) with the exact path.
"""

from __future__ import annotations

import cmath
import math
from itertools import product

from .colored import Color, Omega, SkeinLabel, adjust_framings, chebyshev_table
from .diagram import (
    CAP,
    CUP,
    FramedLinkDiagram,
    MorseWord,
    XPOS,
    braid_closure,
    cable,
    parse_braid,
    unknot,
)
from .invariants import SpecialFramedLink
from .quadform import inertia, linking_matrix


def bracket_complex(word: MorseWord, a: complex) -> complex:
    """Sweep evaluation of the bracket at a numeric value of A."""
    delta = -a * a - 1 / (a * a)
    states: dict[tuple[int, ...], complex] = {(): 1.0 + 0j}
    for kind, p in word.events:
        new: dict[tuple[int, ...], complex] = {}

        def add(key, val):
            new[key] = new.get(key, 0j) + val

        for m, c in states.items():
            if kind == CUP:
                mm = [x + 2 if x >= p else x for x in m]
                mm[p:p] = [p + 1, p]
                add(tuple(mm), c)
                continue
            x, y = m[p], m[p + 1]
            if kind == CAP:
                mm = list(m)
                if x == p + 1:
                    c *= delta
                else:
                    mm[x], mm[y] = y, x
                del mm[p:p + 2]
                add(tuple(v - 2 if v >= p else v for v in mm), c)
            else:
                ca, cb = (a, 1 / a) if kind == XPOS else (1 / a, a)
                add(m, c * ca)
                if x == p + 1:
                    add(m, c * cb * delta)
                else:
                    mm = list(m)
                    mm[x], mm[y] = y, x
                    mm[p], mm[p + 1] = p + 1, p
                    add(tuple(mm), c * cb)
        states = new
    return states.get((), 0j)


def quantum_dim_complex(n: int, k: int) -> complex:
    return (-1) ** n * math.sin((n + 1) * math.pi / k) / math.sin(math.pi / k)


def _label_coeffs_complex(label: SkeinLabel, k: int) -> dict[int, complex]:
    if isinstance(label, Color):
        row = chebyshev_table(label.n)[label.n]
        return {m: complex(c) for m, c in enumerate(row) if c != 0}
    keep = {"all": (0, 1), "even": (0,), "odd": (1,)}[label.parity]
    out: dict[int, complex] = {}
    for n in range(k - 1):
        if n % 2 not in keep:
            continue
        dn = quantum_dim_complex(n, k)
        for m, c in enumerate(chebyshev_table(n)[n]):
            if c:
                out[m] = out.get(m, 0j) + dn * c
    return out


def evaluate_labeled_link_complex(d: FramedLinkDiagram,
                                  labels: tuple[SkeinLabel, ...],
                                  k: int) -> complex:
    a = cmath.exp(1j * cmath.pi / (2 * k))
    adjusted = adjust_framings(d)
    maps = [_label_coeffs_complex(lab, k) for lab in labels]
    total = 0j
    for combo in product(*(sorted(m.items()) for m in maps)):
        coeff = 1 + 0j
        for _, c in combo:
            coeff *= c
        total += coeff * bracket_complex(
            cable(adjusted, [m for m, _ in combo]).word, a)
    return total


def rtw_complex(d: FramedLinkDiagram, k: int) -> complex:
    num = evaluate_labeled_link_complex(
        d, tuple(Omega("all") for _ in range(d.n_components)), k)
    it = inertia(linking_matrix(d))
    base_plus = evaluate_labeled_link_complex(unknot(1), (Omega("all"),), k)
    base_minus = evaluate_labeled_link_complex(unknot(-1), (Omega("all"),), k)
    return num / (base_plus ** it.b_plus * base_minus ** it.b_minus)


def broda_complex(sl: SpecialFramedLink, k: int) -> complex:
    num = evaluate_labeled_link_complex(sl.diagram, sl.labels(), k)
    nu = inertia(linking_matrix(sl.diagram)).nullity
    total = sl.diagram.n_components
    base_unknot = evaluate_labeled_link_complex(unknot(0), (Omega("even"),), k)
    hopf = FramedLinkDiagram(
        braid_closure(parse_braid("braid 2 : s1 s1")).word, (0, 0))
    base_hopf = evaluate_labeled_link_complex(
        hopf, (Omega("even"), Omega("all")), k)
    return num / (base_unknot ** nu
                  * cmath.sqrt(base_hopf) ** (total - nu))
