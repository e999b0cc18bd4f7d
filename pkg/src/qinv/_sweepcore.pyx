# cython: language_level=3
# cython: boundscheck=False, wraparound=False
"""Compiled Temperley-Lieb sweep kernel.

Same contract as qinv._sweep_py.sweep_bracket; the matching bookkeeping runs
on C buffers, coefficients stay arbitrary-precision Python ints.
"""

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize

DEF MAXW = 128

cdef int OPEN = 40    # '('
cdef int CLOSE = 41   # ')'


cdef inline void _accumulate(dict states, object key, dict poly,
                             int shift, bint loop):
    cdef dict tgt = states.get(key)
    if tgt is None:
        tgt = {}
        states[key] = tgt
    cdef object e, c, v
    if loop:
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


def sweep_bracket(list events):
    """Bracket of a closed Morse word as {exponent: coefficient}."""
    cdef dict states = {b"": {0: 1}}
    cdef dict new, poly
    cdef bytes key
    cdef int kind, p, n, i, a, b, x, y, top, s_id, s_e
    cdef const char* s
    cdef int partner[MAXW]
    cdef int stack[MAXW]
    cdef char buf[MAXW]

    for kind, p in events:
        new = {}
        for key, poly in states.items():
            n = len(key)
            if n > MAXW - 2:
                raise OverflowError("sweep width exceeds compiled kernel limit")
            s = PyBytes_AS_STRING(key)
            if kind == 0:
                _accumulate(new, key[:p] + b"()" + key[p:], poly, 0, False)
                continue
            top = 0
            for i in range(n):
                if s[i] == OPEN:
                    stack[top] = i
                    top += 1
                else:
                    top -= 1
                    a = stack[top]
                    partner[a] = i
                    partner[i] = a
            a = partner[p]
            b = partner[p + 1]
            if kind == 1:
                if a == p + 1:
                    _accumulate(new, key[:p] + key[p + 2:], poly, 0, True)
                else:
                    x = a if a < b else b
                    y = b if a < b else a
                    for i in range(p):
                        buf[i] = s[i]
                    for i in range(p + 2, n):
                        buf[i - 2] = s[i]
                    if x > p:
                        x -= 2
                    if y > p:
                        y -= 2
                    buf[x] = OPEN
                    buf[y] = CLOSE
                    _accumulate(new, PyBytes_FromStringAndSize(buf, n - 2),
                                poly, 0, False)
            else:
                if kind == 2:
                    s_id, s_e = 1, -1
                else:
                    s_id, s_e = -1, 1
                _accumulate(new, key, poly, s_id, False)
                if a == p + 1:
                    _accumulate(new, key, poly, s_e, True)
                else:
                    for i in range(n):
                        buf[i] = s[i]
                    x = a if a < b else b
                    y = b if a < b else a
                    buf[x] = OPEN
                    buf[y] = CLOSE
                    buf[p] = OPEN
                    buf[p + 1] = CLOSE
                    _accumulate(new, PyBytes_FromStringAndSize(buf, n),
                                poly, s_e, False)
        states = {k: v for k, v in new.items() if v}
    if not states:
        return {}
    assert set(states) == {b""}
    return states[b""]
