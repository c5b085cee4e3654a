"""Ring selection: the rational integers, Q[x], or a real quadratic integer ring.

The quadratic rings are restricted to norm-Euclidean discriminants so that the
division-based algorithms (gcd, Smith reduction) terminate:

    Zsqrt:<d>   Z[sqrt(d)]          with d in {2, 3, 6, 7, 11}
    Zhalf:<d>   Z[(1+sqrt(d))/2]    with d in {5, 13}

Anything outside the allowlist fails loudly instead of silently running
non-Euclidean arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import ParseError, UnsupportedRingError

SQRT_FORM_ALLOWED = frozenset({2, 3, 6, 7, 11})
HALF_FORM_ALLOWED = frozenset({5, 13})


class RingFamily(Enum):
    INTEGERS = "Z"
    RATIONAL_POLYNOMIALS = "Q[x]"
    QUADRATIC_INTEGERS = "quadratic"


@dataclass(frozen=True)
class RingSpec:
    family: RingFamily
    d: int | None = None

    def __post_init__(self) -> None:
        if self.family is RingFamily.QUADRATIC_INTEGERS:
            if self.d is None:
                raise UnsupportedRingError("quadratic ring requires a parameter d")
            if self.d not in SQRT_FORM_ALLOWED and self.d not in HALF_FORM_ALLOWED:
                raise UnsupportedRingError(
                    f"d={self.d} is outside the norm-Euclidean allowlist "
                    f"{sorted(SQRT_FORM_ALLOWED)} (sqrt form) / "
                    f"{sorted(HALF_FORM_ALLOWED)} (half-integer form)"
                )
        elif self.d is not None:
            raise UnsupportedRingError(f"{self.family.value} takes no parameter d")

    @property
    def uses_half_basis(self) -> bool:
        """True when the integral basis is {1, (1+sqrt(d))/2} (d = 1 mod 4)."""
        return self.family is RingFamily.QUADRATIC_INTEGERS and self.d % 4 == 1

    @property
    def omega_symbol(self) -> str:
        if self.uses_half_basis:
            return f"(1+sqrt({self.d}))/2"
        return f"sqrt({self.d})"

    def __str__(self) -> str:
        if self.family is RingFamily.INTEGERS:
            return "Z"
        if self.family is RingFamily.RATIONAL_POLYNOMIALS:
            return "Q[x]"
        if self.uses_half_basis:
            return f"Zhalf:{self.d}"
        return f"Zsqrt:{self.d}"


INTEGERS = RingSpec(RingFamily.INTEGERS)
RATIONAL_POLYNOMIALS = RingSpec(RingFamily.RATIONAL_POLYNOMIALS)


def quadratic_ring(d: int) -> RingSpec:
    return RingSpec(RingFamily.QUADRATIC_INTEGERS, d)


def parse_ring(text: str) -> RingSpec:
    """Parse "Z", "Q[x]", "Zsqrt:<d>" or "Zhalf:<d>"."""
    text = text.strip()
    if text == "Z":
        return INTEGERS
    if text == "Q[x]":
        return RATIONAL_POLYNOMIALS
    for prefix, half in (("Zsqrt:", False), ("Zhalf:", True)):
        if text.startswith(prefix):
            body = text[len(prefix):]
            try:
                d = int(body)
            except ValueError:
                raise ParseError(f"ring parameter {body!r} is not an integer") from None
            if half != (d % 4 == 1):
                form = "Zhalf" if d % 4 == 1 else "Zsqrt"
                raise UnsupportedRingError(
                    f"d={d} belongs to the {form} form, not {prefix[:-1]}"
                )
            return quadratic_ring(d)
    raise ParseError(f"unknown ring {text!r}; expected Z, Q[x], Zsqrt:<d> or Zhalf:<d>")
