"""Exact positivity on the real spectrum of the active ring.

For Z there is a single ordering; for Q[x] positivity means pointwise
nonnegativity of polynomial functions on R; for a real quadratic ring it
means nonnegativity under both real embeddings.  A symmetric matrix is
positive semidefinite when every principal minor is nonnegative in that
sense, and every minor is computed exactly in the ring, so no embedding is
ever evaluated with floating point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import polynomials, rings
from .errors import NotSymmetricError, SizeLimitError
from .matrices import Matrix, determinant, determinant_fractions
from .rings import Element
from .ringspec import RingFamily, RingSpec

PSD_SIZE_LIMIT = 8


def element_is_nonneg(a: Element, ring: RingSpec) -> bool:
    """a >= 0 at every point of the real spectrum."""
    a = rings.coerce(a, ring)
    if ring.family is RingFamily.INTEGERS:
        return a >= 0
    if ring.family is RingFamily.RATIONAL_POLYNOMIALS:
        return polynomials.is_nonneg_on_reals(a)
    return a.sign_pattern().is_nonneg


@dataclass(frozen=True)
class PsdWitness:
    """A principal minor that goes negative; rows are 1-based indices.

    ``embedding`` ("plus"/"minus") is set for quadratic rings, ``point`` for
    Q[x]; neither is needed over Z.
    """

    minor_rows: tuple[int, ...]
    embedding: str | None = None
    point: Fraction | None = None

    def to_json(self) -> dict:
        return {
            "minor_rows": list(self.minor_rows),
            "embedding": self.embedding,
            "point": None if self.point is None else str(self.point),
        }


@dataclass(frozen=True)
class PsdReport:
    is_psd: bool
    witness: PsdWitness | None

    def to_json(self) -> dict:
        return {
            "is_psd": self.is_psd,
            "witness": None if self.witness is None else self.witness.to_json(),
        }


def _principal_index_sets(n: int):
    for k in range(1, n + 1):
        yield from itertools.combinations(range(n), k)


def is_psd_on_spectrum(m: Matrix) -> PsdReport:
    """Positive semidefiniteness over the whole real spectrum, exactly.

    Checks every principal minor; the first violating one (smallest size,
    then lexicographic) is reported as the witness.
    """
    if not m.is_symmetric():
        raise NotSymmetricError("the matrix is not symmetric")
    if m.n_rows > PSD_SIZE_LIMIT:
        raise SizeLimitError(f"PSD test is capped at {PSD_SIZE_LIMIT}x{PSD_SIZE_LIMIT}")
    ring = m.ring
    for idx in _principal_index_sets(m.n_rows):
        minor = determinant(m.submatrix(idx, idx))
        rows = tuple(i + 1 for i in idx)
        if ring.family is RingFamily.INTEGERS:
            if minor < 0:
                return PsdReport(False, PsdWitness(rows))
        elif ring.family is RingFamily.RATIONAL_POLYNOMIALS:
            if not polynomials.is_nonneg_on_reals(minor):
                point = polynomials.find_negative_point(minor)
                return PsdReport(False, PsdWitness(rows, point=point))
        else:
            pattern = minor.sign_pattern()
            if pattern.at_plus < 0:
                return PsdReport(False, PsdWitness(rows, embedding="plus"))
            if pattern.at_minus < 0:
                return PsdReport(False, PsdWitness(rows, embedding="minus"))
    return PsdReport(True, None)


def psd_exact_ordered(rows: list[list[Fraction | int]]) -> bool:
    """PSD test for a symmetric matrix over an ordered exact field (Q here).

    All 2**n - 1 principal minors must be nonnegative; n is capped at 8.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise NotSymmetricError("matrix is not square")
    mat = [[Fraction(v) for v in row] for row in rows]
    for i in range(n):
        for j in range(i + 1, n):
            if mat[i][j] != mat[j][i]:
                raise NotSymmetricError(f"entries ({i},{j}) and ({j},{i}) differ")
    if n > PSD_SIZE_LIMIT:
        raise SizeLimitError(f"PSD test is capped at {PSD_SIZE_LIMIT}x{PSD_SIZE_LIMIT}")
    for idx in _principal_index_sets(n):
        sub = [[mat[i][j] for j in idx] for i in idx]
        if determinant_fractions(sub) < 0:
            return False
    return True


def evaluate_poly_matrix(m: Matrix, t: Fraction) -> list[list[Fraction]]:
    """Evaluate a Q[x] matrix entrywise at a rational point."""
    if m.ring.family is not RingFamily.RATIONAL_POLYNOMIALS:
        raise ValueError("entrywise evaluation needs a Q[x] matrix")
    return [[entry(t) for entry in row] for row in m.entries]
