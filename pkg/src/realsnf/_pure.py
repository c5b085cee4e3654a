"""Pure-Python hot-loop kernels.

These are the inner loops of the polynomial sampling oracles: sign of an
integer-coefficient polynomial at a rational point, evaluated homogeneously so
that no Fraction objects are created.  The compiled twin in ``_speedups.pyx``
implements the same functions and must return bit-identical results;
``_kernels`` picks whichever imports.
"""

from __future__ import annotations


def eval_sign_int(coeffs: list[int], u: int, v: int) -> int:
    """Sign of p(u/v) where p has the given integer coefficients, constant first.

    Requires v > 0.  Computed as the sign of sum(c[i] * u**i * v**(d-i)),
    which equals v**d * p(u/v) and shares its sign.
    """
    d = len(coeffs) - 1
    if d < 0:
        return 0
    vp = [1] * (d + 1)
    for k in range(1, d + 1):
        vp[k] = vp[k - 1] * v
    acc = 0
    for i in range(d, -1, -1):
        acc = acc * u + coeffs[i] * vp[d - i]
    return (acc > 0) - (acc < 0)


def batch_eval_signs(coeffs: list[int], numerators: list[int], denominator: int) -> list[int]:
    """Signs of p(u/denominator) for every u in numerators (denominator > 0)."""
    d = len(coeffs) - 1
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


def sign_variations(signs: list[int]) -> int:
    """Number of sign changes in a sequence, zeros skipped."""
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            count += 1
        prev = s
    return count
