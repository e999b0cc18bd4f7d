"""Kauffman bracket of a closed Morse diagram, by two independent engines.

* ``bracket_statesum`` -- reference engine: sums over all 2^c crossing
  smoothings, counting the loops of each state with a union-find over arcs.
  Exponential, capped (default 22 crossings).
* ``bracket_sweep`` -- production engine: sweeps the word left to right
  carrying a sparse map from non-crossing matchings of the open endpoints to
  Laurent polynomials.  Cost is bounded by the Catalan number of half the
  maximal width (default cap 16 strands).

Both return the same exact value: ``<empty> = 1`` and every closed loop
contributes ``delta = -A^2 - A^{-2}``, so ``<unknot> = delta``.  A positive
kink multiplies the bracket by ``-A^3``, a negative one by ``-A^{-3}``.

The sweep kernel is the compiled extension when available, else the
pure-Python fallback; set ``QINV_FORCE_PY_SWEEP=1`` to force the fallback.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import comb

from . import _sweep_py
from .diagram import CAP, CUP, XPOS, FramedLinkDiagram, MorseWord
from .ring import CyclotomicNumber, LaurentPoly, Level, specialize

try:
    if os.environ.get("QINV_FORCE_PY_SWEEP"):
        raise ImportError
    from . import _sweepcore as _kernel
    SWEEP_KERNEL = "compiled"
except ImportError:
    _kernel = _sweep_py
    SWEEP_KERNEL = "python"

DEFAULT_MAX_CROSSINGS = 22
DEFAULT_MAX_WIDTH = 16

_CODE = {CUP: 0, CAP: 1, XPOS: 2}


class CapacityError(RuntimeError):
    """An evaluation cap was exceeded; caps fail loudly rather than run forever."""

    def __init__(self, engine: str, needed: int, cap: int, hint: str = ""):
        self.engine = engine
        self.needed = needed
        self.cap = cap
        msg = f"{engine} engine: needs {needed}, cap is {cap}"
        super().__init__(msg + (f"; {hint}" if hint else ""))


def max_crossings() -> int:
    return int(os.environ.get("QINV_MAX_CROSSINGS", DEFAULT_MAX_CROSSINGS))


def max_width() -> int:
    return int(os.environ.get("QINV_MAX_WIDTH", DEFAULT_MAX_WIDTH))


@dataclass(frozen=True)
class BracketValue:
    """A bracket: generic Laurent polynomial, optionally specialized."""

    generic: LaurentPoly
    level: Level | None = None
    specialized: CyclotomicNumber | None = None

    def at_level(self, k: Level) -> BracketValue:
        return BracketValue(self.generic, k, specialize(self.generic, k))


def _as_word(d: MorseWord | FramedLinkDiagram) -> MorseWord:
    return d.word if isinstance(d, FramedLinkDiagram) else d


def bracket_sweep(d: MorseWord | FramedLinkDiagram) -> BracketValue:
    """Temperley-Lieb sweep evaluation; exact, width-capped."""
    word = _as_word(d)
    cap = max_width()
    if word.max_width > cap:
        raise CapacityError("sweep", word.max_width, cap,
                            "raise QINV_MAX_WIDTH to allow wider diagrams")
    events = [(_CODE.get(k, 3), p) for k, p in word.events]
    return BracketValue(LaurentPoly.from_dict(_kernel.sweep_bracket(events)))


def bracket_statesum(d: MorseWord | FramedLinkDiagram) -> BracketValue:
    """Reference state sum over all crossing smoothings.

    Depth-first over the crossings with a rollback union-find; every union of
    two already-joined arcs closes a loop.
    """
    word = _as_word(d)
    cap = max_crossings()
    if word.crossing_count > cap:
        raise CapacityError(
            "statesum", word.crossing_count, cap,
            "use the sweep engine for large diagrams")

    # Arc ports: cups/caps contribute fixed joins, each crossing four fresh
    # ports whose joins depend on the chosen smoothing.
    open_ids: list[int] = []
    base_edges: list[tuple[int, int]] = []
    crossings: list[tuple[int, int, int, int, int]] = []  # a, b, c, d, sign
    nxt = 0
    for kind, p in word.events:
        if kind == CUP:
            u, v = nxt, nxt + 1
            nxt += 2
            base_edges.append((u, v))
            open_ids[p:p] = [u, v]
        elif kind == CAP:
            base_edges.append((open_ids[p], open_ids[p + 1]))
            del open_ids[p:p + 2]
        else:
            a, b = open_ids[p], open_ids[p + 1]
            c, d = nxt, nxt + 1
            nxt += 2
            crossings.append((a, b, c, d, +1 if kind == XPOS else -1))
            open_ids[p], open_ids[p + 1] = c, d

    parent = list(range(nxt))
    size = [1] * nxt
    trail: list[int] = []

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def union(x: int, y: int) -> int:
        """Union; returns 1 if x and y were already joined (a loop closed)."""
        rx, ry = find(x), find(y)
        if rx == ry:
            trail.append(-1)
            return 1
        if size[rx] < size[ry]:
            rx, ry = ry, rx
        parent[ry] = rx
        size[rx] += size[ry]
        trail.append(ry)
        return 0

    def rollback(mark: int) -> None:
        while len(trail) > mark:
            ry = trail.pop()
            if ry >= 0:
                size[parent[ry]] -= size[ry]
                parent[ry] = ry

    base_loops = 0
    for x, y in base_edges:
        base_loops += union(x, y)

    counts: dict[tuple[int, int], int] = {}

    def dfs(i: int, exp: int, loops: int) -> None:
        if i == len(crossings):
            key = (exp, loops)
            counts[key] = counts.get(key, 0) + 1
            return
        a, b, c, d, s = crossings[i]
        for e1, e2, w in ((a, c), (b, d), s), ((a, b), (c, d), -s):
            mark = len(trail)
            closed = union(*e1) + union(*e2)
            dfs(i + 1, exp + w, loops + closed)
            rollback(mark)

    dfs(0, 0, base_loops)

    # total = sum counts * A^exp * delta^loops, delta^L expanded binomially.
    out: dict[int, int] = {}
    for (exp, loops), n in counts.items():
        sign = n if loops % 2 == 0 else -n
        for j in range(loops + 1):
            e = exp + 2 * loops - 4 * j
            out[e] = out.get(e, 0) + sign * comb(loops, j)
    return BracketValue(LaurentPoly.from_dict(out))


def bracket_auto(d: MorseWord | FramedLinkDiagram) -> BracketValue:
    """Sweep when the width fits, else state sum, else a capacity error."""
    word = _as_word(d)
    if word.max_width <= max_width():
        return bracket_sweep(word)
    if word.crossing_count <= max_crossings():
        return bracket_statesum(word)
    raise CapacityError("sweep", word.max_width, max_width(),
                        "diagram exceeds both engine caps")
