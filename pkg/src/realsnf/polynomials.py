"""Dense univariate polynomials with exact rational coefficients.

Sign questions on the real line are decided without any numerics: Sturm
chains count distinct real roots, a square-free (Yun) decomposition splits
off the odd-multiplicity part, and nonnegativity on all of R reduces to
"even degree, positive leading coefficient, no real root of the odd part".
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from . import _kernels
from .errors import (
    NotCertifiedIrreducibleError,
    NotSquareFreeError,
    ParseError,
    ZeroPolynomialError,
)

Coefficient = Fraction | int


class RatPoly:
    """Polynomial over Q, stored dense with the constant term first."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: "list[Coefficient] | tuple[Coefficient, ...]" = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    # -- structure -----------------------------------------------------------

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @classmethod
    def zero(cls) -> "RatPoly":
        return cls(())

    @classmethod
    def constant(cls, c: Coefficient) -> "RatPoly":
        return cls((Fraction(c),))

    @classmethod
    def x(cls) -> "RatPoly":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: "list[Coefficient]") -> "RatPoly":
        p = cls.constant(1)
        for r in roots:
            p = p * cls((-Fraction(r), 1))
        return p

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with the convention that the zero polynomial has degree -1."""
        return len(self._coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if self.is_zero():
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatPoly((other,))
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic ------------------------------------------------------------

    def _coerce(self, other: "RatPoly | Coefficient") -> "RatPoly":
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RatPoly((other,))
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: "RatPoly | Coefficient") -> "RatPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return RatPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "RatPoly":
        return RatPoly([-c for c in self._coeffs])

    def __sub__(self, other: "RatPoly | Coefficient") -> "RatPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "RatPoly | Coefficient") -> "RatPoly":
        return (-self) + other

    def __mul__(self, other: "RatPoly | Coefficient") -> "RatPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatPoly.zero()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RatPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = RatPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "RatPoly | Coefficient") -> tuple["RatPoly", "RatPoly"]:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        quot = [Fraction(0)] * max(len(self._coeffs) - len(other._coeffs) + 1, 0)
        rem = list(self._coeffs)
        dlead = other.leading
        dd = other.degree
        while len(rem) - 1 >= dd and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < dd:
                break
            shift = len(rem) - 1 - dd
            factor = rem[-1] / dlead
            quot[shift] = factor
            for i in range(dd + 1):
                rem[shift + i] -= factor * other._coeffs[i]
        return RatPoly(quot), RatPoly(rem)

    def __floordiv__(self, other: "RatPoly | Coefficient") -> "RatPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "RatPoly | Coefficient") -> "RatPoly":
        return divmod(self, other)[1]

    def derivative(self) -> "RatPoly":
        return RatPoly([i * c for i, c in enumerate(self._coeffs)][1:])

    def monic(self) -> "RatPoly":
        if self.is_zero():
            return self
        lead = self.leading
        return RatPoly([c / lead for c in self._coeffs])

    # -- evaluation --------------------------------------------------------------

    def __call__(self, t: Coefficient) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * t + c
        return acc

    def int_coefficients(self) -> tuple[list[int], int]:
        """(c, scale) with scale > 0 and self = (1/scale) * sum(c[i] x**i)."""
        if self.is_zero():
            return [], 1
        scale = math.lcm(*(c.denominator for c in self._coeffs))
        return [int(c * scale) for c in self._coeffs], scale

    def sign_at(self, t: Coefficient) -> int:
        t = Fraction(t)
        coeffs, _ = self.int_coefficients()
        return _kernels.eval_sign_int(coeffs, t.numerator, t.denominator)

    def signs_at(self, numerators: list[int], denominator: int) -> list[int]:
        """Signs at the rational points numerators[i] / denominator (> 0)."""
        coeffs, _ = self.int_coefficients()
        return _kernels.batch_eval_signs(coeffs, numerators, denominator)

    def sign_at_infinity(self, direction: int) -> int:
        """Sign of p(t) as t -> +oo (direction=+1) or t -> -oo (direction=-1)."""
        if self.is_zero():
            return 0
        s = 1 if self.leading > 0 else -1
        if direction < 0 and self.degree % 2 == 1:
            s = -s
        return s

    # -- presentation ---------------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"RatPoly({list(self._coeffs)!r})"


def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic gcd over Q; poly_gcd(0, 0) is the zero polynomial."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


# -- Sturm chains -------------------------------------------------------------


@dataclass(frozen=True)
class SturmChain:
    """p, p', then successive negated Euclidean remainders until a constant."""

    chain: tuple[RatPoly, ...]

    @property
    def polynomial(self) -> RatPoly:
        return self.chain[0]


def sturm_chain(p: RatPoly) -> SturmChain:
    if p.is_zero():
        raise ZeroPolynomialError("Sturm chain of the zero polynomial")
    chain = [p]
    if p.degree >= 1:
        chain.append(p.derivative())
        while chain[-1].degree >= 1:
            rem = chain[-2] % chain[-1]
            if rem.is_zero():
                break
            chain.append(-rem)
    return SturmChain(tuple(chain))


def _variations_at_infinity(chain: SturmChain, direction: int) -> int:
    return _kernels.sign_variations([q.sign_at_infinity(direction) for q in chain.chain])


def _variations_at(chain: SturmChain, t: Fraction) -> int:
    return _kernels.sign_variations([q.sign_at(t) for q in chain.chain])


def is_squarefree(p: RatPoly) -> bool:
    if p.is_zero():
        return False
    if p.degree <= 1:
        return True
    return poly_gcd(p, p.derivative()).is_constant()


def count_real_roots(p: RatPoly) -> int:
    """Distinct real roots of a square-free polynomial, by Sturm's theorem."""
    if p.is_zero():
        raise ZeroPolynomialError("root count of the zero polynomial")
    if not is_squarefree(p):
        raise NotSquareFreeError("polynomial shares a factor with its derivative")
    if p.degree == 0:
        return 0
    chain = sturm_chain(p)
    return _variations_at_infinity(chain, -1) - _variations_at_infinity(chain, +1)


def _count_roots_between(chain: SturmChain, a: Fraction, b: Fraction) -> int:
    """Roots of the square-free chain polynomial in (a, b]; endpoints nonzero."""
    return _variations_at(chain, a) - _variations_at(chain, b)


# -- square-free decomposition ----------------------------------------------------


def squarefree_decomposition(p: RatPoly) -> tuple[Fraction, list[tuple[RatPoly, int]]]:
    """Yun decomposition p = c * prod(q_i ** m_i), q_i monic square-free, coprime."""
    if p.is_zero():
        raise ZeroPolynomialError("decomposition of the zero polynomial")
    if p.degree == 0:
        return p.leading, []
    work = p.monic()
    g = poly_gcd(work, work.derivative())
    factors: list[tuple[RatPoly, int]] = []
    if g.is_constant():
        factors.append((work, 1))
    else:
        c = work // g
        d = work.derivative() // g - c.derivative()
        i = 1
        while not c.is_constant():
            q = poly_gcd(c, d)
            if q.degree >= 1:
                factors.append((q, i))
            c = c // q
            d = d // q - c.derivative()
            i += 1
    constant = p.leading
    return constant, factors


def odd_multiplicity_part(p: RatPoly) -> RatPoly:
    """Monic product of the square-free factors of odd multiplicity."""
    _, factors = squarefree_decomposition(p)
    out = RatPoly.constant(1)
    for q, m in factors:
        if m % 2 == 1:
            out = out * q
    return out


# -- positivity on the real line ------------------------------------------------


def is_nonneg_on_reals(p: RatPoly) -> bool:
    """Exact test of p(t) >= 0 for every real t."""
    if p.is_zero():
        return True
    if p.degree % 2 == 1 or p.leading < 0:
        return False
    if p.degree == 0:
        return p.leading > 0
    odd = odd_multiplicity_part(p)
    if odd.is_constant():
        return True
    return count_real_roots(odd) == 0


def positive_associate(p: RatPoly) -> RatPoly | None:
    """c * p nonnegative on R for some rational c != 0, if that is possible."""
    if p.is_zero():
        raise ZeroPolynomialError("zero polynomial has no positive associate")
    if is_nonneg_on_reals(p):
        return p
    if is_nonneg_on_reals(-p):
        return -p
    return None


def cauchy_root_bound(p: RatPoly) -> Fraction:
    """B with every real root of p inside (-B, B)."""
    if p.is_zero() or p.degree == 0:
        return Fraction(1)
    lead = abs(p.leading)
    return 1 + max(abs(c) for c in p.coefficients[:-1]) / lead


def _perturb_to_sign(p: RatPoly, t: Fraction, want: int, lo: Fraction, hi: Fraction) -> Fraction | None:
    step = (hi - lo) / 4
    for _ in range(200):
        for cand in (t + step, t - step):
            if lo < cand < hi and p.sign_at(cand) == want:
                return cand
        step /= 2
    return None


def _point_with_sign(h: RatPoly, want: int) -> Fraction:
    """A rational t with sign(h(t)) == want; h square-free and known to attain it."""
    bound = cauchy_root_bound(h) + 1
    if h.sign_at_infinity(+1) == want:
        return bound
    if h.sign_at_infinity(-1) == want:
        return -bound
    # Both tails have the other sign, so the wanted region is interior and h
    # has at least two roots.  Bisect, descending into halves that still hold
    # at least two sign changes.
    chain = sturm_chain(h)
    lo, hi = -bound, bound
    for _ in range(10_000):
        mid = (lo + hi) / 2
        s = h.sign_at(mid)
        if s == want:
            return mid
        if s == 0:
            # mid is a simple root: the wanted sign appears right next to it
            found = _perturb_to_sign(h, mid, want, lo, hi)
            if found is not None:
                return found
            raise ArithmeticError("sign search failed to escape a root")
        if _count_roots_between(chain, lo, mid) >= 2:
            hi = mid
        else:
            lo = mid
    raise ArithmeticError("sign search did not converge")


def find_negative_point(p: RatPoly) -> Fraction | None:
    """Some rational t with p(t) < 0, or None when p is nonnegative on R."""
    if is_nonneg_on_reals(p):
        return None
    bound = cauchy_root_bound(p) + 1
    if p.sign_at_infinity(+1) < 0:
        return bound
    if p.sign_at_infinity(-1) < 0:
        return -bound
    # Even degree, positive lead: p dips negative where its odd part crosses.
    odd = odd_multiplicity_part(p)
    even_cofactor_sign = (p // odd).sign_at_infinity(+1)
    t = _point_with_sign(odd, -even_cofactor_sign)
    if p.sign_at(t) < 0:
        return t
    # The even cofactor vanished exactly at t; nudge while staying on the
    # same side of the odd part's root.
    step = Fraction(1, 2)
    for _ in range(200):
        for cand in (t + step, t - step):
            if p.sign_at(cand) < 0:
                return cand
        step /= 2
    raise ArithmeticError("failed to certify a negative value")


# -- irreducibility ----------------------------------------------------------------


def _rational_roots_exist(p: RatPoly) -> bool:
    """Rational root test on the integer-cleared form."""
    if p(0) == 0:
        return True
    coeffs, _ = p.int_coefficients()
    a0, an = abs(coeffs[0]), abs(coeffs[-1])
    for r in _divisors(a0):
        for s in _divisors(an):
            for num in (r, -r):
                if p(Fraction(num, s)) == 0:
                    return True
    return False


def _divisors(n: int) -> list[int]:
    out = []
    for k in range(1, math.isqrt(n) + 1):
        if n % k == 0:
            out.append(k)
            if k != n // k:
                out.append(n // k)
    return sorted(out)


def _eisenstein_applies(p: RatPoly) -> bool:
    coeffs, _ = p.int_coefficients()
    content = math.gcd(*(abs(c) for c in coeffs))
    coeffs = [c // content for c in coeffs]
    a0 = abs(coeffs[0])
    if a0 == 0:
        return False
    f = 2
    while f * f <= a0:
        if a0 % f == 0:
            if _eisenstein_at(coeffs, f):
                return True
            while a0 % f == 0:
                a0 //= f
        f += 1
    if a0 > 1 and _eisenstein_at(coeffs, a0):
        return True
    return False


def _eisenstein_at(coeffs: list[int], q: int) -> bool:
    if coeffs[-1] % q == 0:
        return False
    if any(c % q for c in coeffs[:-1]):
        return False
    return coeffs[0] % (q * q) != 0


def certify_irreducible(p: RatPoly) -> bool | None:
    """True / False when decidable cheaply, None when the caller must assert.

    Degrees 1 to 3 are settled by the rational root test; higher degrees only
    get an Eisenstein check, which can certify but never refute.
    """
    if p.is_zero() or p.degree < 1:
        return False
    if p.degree == 1:
        return True
    if p.degree <= 3:
        return not _rational_roots_exist(p)
    if _rational_roots_exist(p):
        return False
    if _eisenstein_applies(p):
        return True
    return None


def is_real_irreducible(p: RatPoly, certify: bool = False) -> bool:
    """Whether an irreducible polynomial has a real root (changes sign on R).

    Irreducibility is the caller's responsibility unless ``certify`` is set,
    in which case a failed certification raises.
    """
    if p.is_zero() or p.degree < 1:
        raise ZeroPolynomialError("irreducibles have degree at least 1")
    if certify and certify_irreducible(p) is not True:
        raise NotCertifiedIrreducibleError(
            f"cannot certify irreducibility of {p} (degree {p.degree})"
        )
    if p.degree == 1:
        return True
    # an irreducible of degree >= 2 is automatically square-free
    return count_real_roots(p) > 0


def valuation(p: RatPoly, a: RatPoly) -> int:
    """Largest k with p**k dividing a; p irreducible (caller-asserted), a != 0."""
    if a.is_zero():
        raise ZeroPolynomialError("valuation of the zero polynomial")
    if p.is_zero() or p.degree < 1:
        raise ZeroPolynomialError("valuation base must have degree at least 1")
    k = 0
    while True:
        q, r = divmod(a, p)
        if not r.is_zero():
            return k
        a = q
        k += 1
        if a.is_zero():
            return k


# -- text and JSON forms ---------------------------------------------------------


def format_poly(p: RatPoly) -> str:
    """Render like "3/2*x^2 - x + 1", highest power first."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for i in range(p.degree, -1, -1):
        c = p[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            xpow = "x" if i == 1 else f"x^{i}"
            body = xpow if mag == 1 else f"{mag}*{xpow}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


_TERM_RE = re.compile(
    r"^(?P<coef>\d+(?:/\d+)?)?(?P<star>\*)?(?P<var>x(?:\^(?P<exp>\d+))?)?$"
)


def parse_poly(text: str) -> RatPoly:
    """Parse the textual form; accepts e.g. "3/2*x^2 - x + 1", "x", "-7"."""
    stripped = text.replace(" ", "")
    if not stripped:
        raise ParseError("empty polynomial")
    if stripped == "0":
        return RatPoly.zero()
    terms = re.findall(r"[+-]?[^+-]+", stripped)
    if "".join(terms) != stripped:
        raise ParseError(f"cannot tokenize polynomial {text!r}")
    coeffs: dict[int, Fraction] = {}
    for term in terms:
        body = term
        sign = 1
        if body and body[0] in "+-":
            sign = -1 if body[0] == "-" else 1
            body = body[1:]
        m = _TERM_RE.match(body) if body else None
        if not m:
            raise ParseError(f"bad polynomial term {term!r} in {text!r}")
        coef_text, star, var = m.group("coef"), m.group("star"), m.group("var")
        if coef_text is None and var is None:
            raise ParseError(f"bad polynomial term {term!r} in {text!r}")
        if star and (coef_text is None or var is None):
            raise ParseError(f"bad polynomial term {term!r} in {text!r}")
        coef = sign * (Fraction(coef_text) if coef_text else Fraction(1))
        exp = int(m.group("exp") or 1) if var else 0
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + coef
    out = [Fraction(0)] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return RatPoly(out)


def poly_to_json(p: RatPoly) -> list[str]:
    """Array of coefficient strings, constant term first."""
    return [str(c) for c in p.coefficients]


def poly_from_json(data: object) -> RatPoly:
    if isinstance(data, str):
        return parse_poly(data)
    if isinstance(data, list):
        try:
            return RatPoly([Fraction(str(c)) for c in data])
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad polynomial coefficient list {data!r}: {exc}") from None
    raise ParseError(f"polynomial must be a string or coefficient array, got {data!r}")
