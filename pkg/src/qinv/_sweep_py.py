"""Pure-Python Temperley-Lieb sweep kernel.

Reference implementation of the hot loop; `qinv._sweepcore` is the compiled
twin with the same contract.  States are non-crossing perfect matchings of the
open strand endpoints, keyed by their balanced-parenthesis encoding; values
are Laurent coefficient dicts {exponent of A: int}.

Event codes: 0 cup, 1 cap, 2 positive crossing, 3 negative crossing.
A positive crossing expands as A*(uncrossed) + A^{-1}*(cup-cap), a negative
one with the inverse weights; a closed loop contributes -A^2 - A^{-2}.
"""

from __future__ import annotations

OPEN, CLOSE = ord("("), ord(")")


def _partners(key: bytes) -> list[int]:
    partner = [0] * len(key)
    stack: list[int] = []
    for i, ch in enumerate(key):
        if ch == OPEN:
            stack.append(i)
        else:
            j = stack.pop()
            partner[i] = j
            partner[j] = i
    return partner


def _accumulate(states: dict, key: bytes, poly: dict, shift: int, loop: bool) -> None:
    tgt = states.get(key)
    if tgt is None:
        tgt = states[key] = {}
    if loop:
        # multiply by delta = -A^2 - A^{-2} while shifting
        for e, c in poly.items():
            for ee in (e + shift + 2, e + shift - 2):
                v = tgt.get(ee, 0) - c
                if v:
                    tgt[ee] = v
                elif ee in tgt:
                    del tgt[ee]
    else:
        for e, c in poly.items():
            ee = e + shift
            v = tgt.get(ee, 0) + c
            if v:
                tgt[ee] = v
            elif ee in tgt:
                del tgt[ee]


def sweep_bracket(events: list[tuple[int, int]]) -> dict[int, int]:
    """Bracket of a closed Morse word as {exponent: coefficient}."""
    states: dict[bytes, dict[int, int]] = {b"": {0: 1}}
    for kind, p in events:
        new: dict[bytes, dict[int, int]] = {}
        for key, poly in states.items():
            if kind == 0:
                _accumulate(new, key[:p] + b"()" + key[p:], poly, 0, False)
                continue
            partner = _partners(key)
            a, b = partner[p], partner[p + 1]
            if kind == 1:
                if a == p + 1:
                    _accumulate(new, key[:p] + key[p + 2:], poly, 0, True)
                else:
                    buf = bytearray(key)
                    buf[min(a, b)], buf[max(a, b)] = OPEN, CLOSE
                    del buf[p:p + 2]
                    _accumulate(new, bytes(buf), poly, 0, False)
            else:
                s_id, s_e = (1, -1) if kind == 2 else (-1, 1)
                _accumulate(new, key, poly, s_id, False)
                if a == p + 1:
                    _accumulate(new, key, poly, s_e, True)
                else:
                    buf = bytearray(key)
                    buf[min(a, b)], buf[max(a, b)] = OPEN, CLOSE
                    buf[p], buf[p + 1] = OPEN, CLOSE
                    _accumulate(new, bytes(buf), poly, s_e, False)
        states = {k: v for k, v in new.items() if v}
    if not states:
        return {}
    assert set(states) == {b""}
    return states[b""]
