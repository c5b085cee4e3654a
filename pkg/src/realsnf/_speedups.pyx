# cython: language_level=3
"""Compiled twin of ``_pure``: same kernels, same exact big-integer semantics.

Values stay Python ints (arbitrary precision); Cython removes the interpreter
dispatch around the inner loops.  Results must be bit-identical to ``_pure``.
"""


def eval_sign_int(coeffs, u, v):
    """Sign of p(u/v) for integer coefficients (constant first), v > 0."""
    cdef Py_ssize_t d = len(coeffs) - 1
    cdef Py_ssize_t i, k
    if d < 0:
        return 0
    vp = [1] * (d + 1)
    for k in range(1, d + 1):
        vp[k] = vp[k - 1] * v
    acc = 0
    for i in range(d, -1, -1):
        acc = acc * u + coeffs[i] * vp[d - i]
    return (acc > 0) - (acc < 0)


def batch_eval_signs(coeffs, numerators, denominator):
    """Signs of p(u/denominator) for every u in numerators (denominator > 0)."""
    cdef Py_ssize_t d = len(coeffs) - 1
    cdef Py_ssize_t i, k
    if d < 0:
        return [0] * len(numerators)
    vp = [1] * (d + 1)
    for k in range(1, d + 1):
        vp[k] = vp[k - 1] * denominator
    scaled = [coeffs[i] * vp[d - i] for i in range(d + 1)]
    out = []
    for u in numerators:
        acc = 0
        for i in range(d, -1, -1):
            acc = acc * u + scaled[i]
        out.append((acc > 0) - (acc < 0))
    return out


def sign_variations(signs):
    """Number of sign changes in a sequence, zeros skipped."""
    cdef long long count = 0
    cdef long long prev = 0
    cdef long long s
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            count += 1
        prev = s
    return count
