# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for the character arithmetic hot loops.

Coefficient arithmetic stays in Python integers (the engine is exact), the
speedup over the pure fallback comes from typed loops and fewer temporaries.
"""


def convolve(dict a, dict b):
    """Convolution product of two sparse exponent->coefficient dicts."""
    cdef dict out = {}
    cdef long xa, ya, xb, yb
    cdef tuple key
    if len(a) < len(b):
        a, b = b, a
    cdef list b_items = list(b.items())
    cdef Py_ssize_t nb = len(b_items)
    cdef Py_ssize_t j
    for ka, ca in a.items():
        xa = ka[0]
        ya = ka[1]
        for j in range(nb):
            kb, cb = <tuple> b_items[j]
            xb = (<tuple> kb)[0]
            yb = (<tuple> kb)[1]
            key = (xa + xb, ya + yb)
            c = out.get(key, 0) + ca * cb
            if c:
                out[key] = c
            elif key in out:
                del out[key]
    return out


def ssyt_weight_counts(long p, long q):
    """Weight multiplicities of the two-row shape (p, q) in three letters."""
    cdef dict out = {}
    cdef long x1, x2, x3, y2, y3, y2_hi, m1, m2, m3
    cdef tuple key
    for x1 in range(p + 1):
        for x2 in range(p - x1 + 1):
            x3 = p - x1 - x2
            if x1 + x2 < q:
                continue
            y2_hi = x1 if x1 < q else q
            for y2 in range(y2_hi + 1):
                y3 = q - y2
                m1 = x1
                m2 = x2 + y2
                m3 = x3 + y3
                key = (m1 - m2, m2 - m3)
                out[key] = out.get(key, 0) + 1
    return out
