"""Ring-generic Euclidean algorithms over the three supported families.

Elements are plain ``int`` for Z, :class:`RatPoly` for Q[x], and
:class:`QuadElem` for the quadratic rings.  The functions here dispatch on a
:class:`RingSpec` and supply the shared contracts: Euclidean division with a
strictly shrinking remainder, gcd with a canonical representative, testing
association, and p-adic valuations by repeated exact division.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import polynomials, quadratic
from .errors import (
    BothZeroError,
    ParseError,
    UnitInputError,
    UnsupportedRingError,
    ZeroElementError,
)
from .polynomials import RatPoly
from .quadratic import QuadElem
from .ringspec import RingFamily, RingSpec

Element = Union[int, RatPoly, QuadElem]


@dataclass(frozen=True)
class DivResult:
    """a = b * quotient + remainder, remainder strictly smaller or zero."""

    quotient: Element
    remainder: Element


def zero(ring: RingSpec) -> Element:
    return coerce(0, ring)


def one(ring: RingSpec) -> Element:
    return coerce(1, ring)


def coerce(value: "Element | Fraction", ring: RingSpec) -> Element:
    """Bring an int (or an element of the right type) into the ring."""
    if ring.family is RingFamily.INTEGERS:
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction) and value.denominator == 1:
            return int(value)
    elif ring.family is RingFamily.RATIONAL_POLYNOMIALS:
        if isinstance(value, RatPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return RatPoly.constant(value)
    else:
        if isinstance(value, QuadElem):
            if value.ring != ring:
                raise UnsupportedRingError(f"element of {value.ring} used in {ring}")
            return value
        if isinstance(value, int):
            return QuadElem(value, 0, ring)
        if isinstance(value, Fraction) and value.denominator == 1:
            return QuadElem(int(value), 0, ring)
    raise UnsupportedRingError(f"cannot interpret {value!r} as an element of {ring}")


def is_zero(a: Element) -> bool:
    if isinstance(a, int):
        return a == 0
    if isinstance(a, RatPoly):
        return a.is_zero()
    return a.is_zero()


def is_unit(a: Element, ring: RingSpec) -> bool:
    if ring.family is RingFamily.INTEGERS:
        return a in (1, -1)
    if ring.family is RingFamily.RATIONAL_POLYNOMIALS:
        return not a.is_zero() and a.degree == 0
    return a.is_unit()


def euclidean_size(a: Element, ring: RingSpec) -> int:
    """|a| for Z, degree for Q[x], |N(a)| for quadratic rings.  a must be nonzero."""
    if is_zero(a):
        raise ZeroElementError("the zero element has no Euclidean size")
    if ring.family is RingFamily.INTEGERS:
        return abs(a)
    if ring.family is RingFamily.RATIONAL_POLYNOMIALS:
        return a.degree
    return abs(a.norm())


def euclidean_div(a: Element, b: Element, ring: RingSpec) -> DivResult:
    """Division with remainder; the remainder is zero or strictly smaller than b."""
    a, b = coerce(a, ring), coerce(b, ring)
    if is_zero(b):
        raise ZeroDivisionError(f"division by zero over {ring}")
    q, r = divmod(a, b)
    return DivResult(q, r)


def exact_divide(a: Element, b: Element, ring: RingSpec) -> Element | None:
    """a / b when b | a exactly, else None."""
    a, b = coerce(a, ring), coerce(b, ring)
    if is_zero(b):
        raise ZeroDivisionError(f"division by zero over {ring}")
    if ring.family is RingFamily.QUADRATIC_INTEGERS:
        return quadratic.exact_divide(a, b)
    q, r = divmod(a, b)
    return q if is_zero(r) else None


def divides(b: Element, a: Element, ring: RingSpec) -> bool:
    """True when b | a (everything divides zero)."""
    if is_zero(a):
        return True
    return exact_divide(a, b, ring) is not None


def canonicalize(a: Element, ring: RingSpec) -> Element:
    """Canonical representative of the associate class of a.

    Nonnegative for Z, monic for Q[x]; for quadratic rings, positive at the
    plus embedding with minimal coordinate height.
    """
    a = coerce(a, ring)
    if is_zero(a):
        return a
    if ring.family is RingFamily.INTEGERS:
        return abs(a)
    if ring.family is RingFamily.RATIONAL_POLYNOMIALS:
        return a.monic()
    return quadratic.canonical_associate(a)


def gcd(a: Element, b: Element, ring: RingSpec) -> Element:
    """Canonical generator of the ideal (a, b); raises when both are zero."""
    a, b = coerce(a, ring), coerce(b, ring)
    if is_zero(a) and is_zero(b):
        raise BothZeroError("gcd(0, 0) is undefined")
    while not is_zero(b):
        a, b = b, euclidean_div(a, b, ring).remainder
    return canonicalize(a, ring)


def xgcd(a: Element, b: Element, ring: RingSpec) -> tuple[Element, Element, Element]:
    """(g, s, t) with s*a + t*b = g; g is some generator of (a, b)."""
    a, b = coerce(a, ring), coerce(b, ring)
    if is_zero(a) and is_zero(b):
        raise BothZeroError("gcd(0, 0) is undefined")
    s0, s1 = one(ring), zero(ring)
    t0, t1 = zero(ring), one(ring)
    while not is_zero(b):
        step = euclidean_div(a, b, ring)
        a, b = b, step.remainder
        s0, s1 = s1, s0 - step.quotient * s1
        t0, t1 = t1, t0 - step.quotient * t1
    return a, s0, t0


def are_associated(a: Element, b: Element, ring: RingSpec) -> bool:
    """True when a = u * b for a unit u; (0, 0) counts."""
    a, b = coerce(a, ring), coerce(b, ring)
    if is_zero(a) or is_zero(b):
        return is_zero(a) and is_zero(b)
    return exact_divide(a, b, ring) is not None and exact_divide(b, a, ring) is not None


def valuation(p: Element, a: Element, ring: RingSpec) -> int:
    """Largest k with p**k | a; p irreducible (caller-asserted), a nonzero."""
    p, a = coerce(p, ring), coerce(a, ring)
    if is_zero(a):
        raise ZeroElementError("valuation of zero is not defined")
    if is_zero(p) or is_unit(p, ring):
        raise UnitInputError("valuation base must be a nonzero non-unit")
    k = 0
    while True:
        q = exact_divide(a, p, ring)
        if q is None:
            return k
        a = q
        k += 1


def unit_inverse(u: Element, ring: RingSpec) -> Element:
    if not is_unit(u, ring):
        raise UnitInputError(f"{element_to_text(u, ring)} is not a unit of {ring}")
    if ring.family is RingFamily.INTEGERS:
        return u
    if ring.family is RingFamily.RATIONAL_POLYNOMIALS:
        return RatPoly.constant(1 / u.leading)
    return u.inverse()


def pnri(ring: RingSpec) -> bool:
    """Whether every non-real irreducible owns a strictly positive associate.

    Automatic for Z and Q[x] (negate, respectively normalize monic and use
    that a rootless polynomial keeps one sign); for quadratic rings it is
    equivalent to the fundamental unit having norm -1.
    """
    if ring.family is RingFamily.QUADRATIC_INTEGERS:
        return quadratic.pnri_holds(ring)
    return True


def factor_element(a: Element, ring: RingSpec) -> list[tuple[Element, int]]:
    """Factor into canonical irreducibles times a unit (Z and quadratic only)."""
    a = coerce(a, ring)
    if is_zero(a):
        raise ZeroElementError("cannot factor zero")
    if is_unit(a, ring):
        raise UnitInputError("cannot factor a unit")
    if ring.family is RingFamily.INTEGERS:
        out: list[tuple[Element, int]] = []
        n = abs(a)
        f = 2
        while f * f <= n:
            if n % f == 0:
                m = 0
                while n % f == 0:
                    n //= f
                    m += 1
                out.append((f, m))
            f += 1 if f == 2 else 2
        if n > 1:
            out.append((n, 1))
        return out
    if ring.family is RingFamily.QUADRATIC_INTEGERS:
        return quadratic.factor(a)
    raise UnsupportedRingError("factorization over Q[x] is out of scope")


# -- textual and JSON element forms -------------------------------------------


def element_to_text(a: Element, ring: RingSpec) -> str:
    a = coerce(a, ring)
    if ring.family is RingFamily.INTEGERS:
        return str(a)
    if ring.family is RingFamily.RATIONAL_POLYNOMIALS:
        return polynomials.format_poly(a)
    return str(a)


_QUAD_TEXT = re.compile(r"^(?P<x>[+-]?\d+)(?P<y>[+-]\d+)w$")


def parse_element(data: object, ring: RingSpec) -> Element:
    """Parse the per-ring textual / JSON form of one element."""
    if ring.family is RingFamily.INTEGERS:
        if isinstance(data, bool):
            raise ParseError(f"bad integer {data!r}")
        if isinstance(data, int):
            return data
        if isinstance(data, str):
            try:
                return int(data.strip())
            except ValueError:
                raise ParseError(f"bad integer {data!r}") from None
        raise ParseError(f"bad integer {data!r}")
    if ring.family is RingFamily.RATIONAL_POLYNOMIALS:
        if isinstance(data, bool):
            raise ParseError(f"bad polynomial {data!r}")
        if isinstance(data, int):
            return RatPoly.constant(data)
        return polynomials.poly_from_json(data)
    if isinstance(data, bool):
        raise ParseError(f"bad quadratic element {data!r}")
    if isinstance(data, int):
        return QuadElem(data, 0, ring)
    if isinstance(data, dict):
        try:
            return QuadElem(int(str(data["x"])), int(str(data["y"])), ring)
        except (KeyError, ValueError) as exc:
            raise ParseError(f"bad quadratic element {data!r}: {exc}") from None
    if isinstance(data, str):
        text = data.replace(" ", "")
        m = _QUAD_TEXT.match(text)
        if m:
            return QuadElem(int(m.group("x")), int(m.group("y")), ring)
        try:
            return QuadElem(int(text), 0, ring)
        except ValueError:
            raise ParseError(
                f"bad quadratic element {data!r}; expected '<x>+<y>w' or an integer"
            ) from None
    raise ParseError(f"bad quadratic element {data!r}")


def element_to_json(a: Element, ring: RingSpec) -> object:
    """JSON value for one element; always strings, never native numbers."""
    return element_to_text(a, ring)
