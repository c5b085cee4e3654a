"""End-to-end positivity verification and the randomized falsification harness.

The pipeline for a symmetric matrix is: decide positive semidefiniteness on
the real spectrum, compute the Smith Normal Form, try to replace every
nonzero diagonal by a totally positive associate, and combine that with the
ring's unit-sign capability (see :func:`realsnf.rings.pnri`) into a verdict:

* ``TheoremHolds``            PSD input and every diagonal positivizable;
* ``TheoremFailsPnriFails``   PSD input, some diagonal stuck with mixed
                              signs, and the ring's units cannot fix signs;
* ``NotApplicableNotPsd``     the input was not PSD to begin with.

A PSD input over a ring whose units do realize all sign patterns must always
land in ``TheoremHolds``; anything else raises
:class:`TheoremConsistencyError`, because it would mean this library is
broken, not the input.

Randomness is a splitmix64 stream (documented in :class:`SplitMix64`), so
trial data is reproducible across platforms and implementations.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import polynomials, quadratic, rings, spectrum
from .errors import (
    CounterexampleConditionError,
    NotSymmetricError,
    PreconditionFailedError,
    TheoremConsistencyError,
    ZeroElementError,
)
from .matrices import Matrix, SnfResult, smith_normal_form
from .polynomials import RatPoly
from .quadratic import QuadElem
from .rings import Element
from .ringspec import RingFamily, RingSpec, quadratic_ring


class Conclusion(str, Enum):
    THEOREM_HOLDS = "TheoremHolds"
    THEOREM_FAILS_PNRI_FAILS = "TheoremFailsPnriFails"
    NOT_APPLICABLE_NOT_PSD = "NotApplicableNotPsd"


def _positive_associate(a: Element, ring: RingSpec) -> Element | None:
    if ring.family is RingFamily.INTEGERS:
        return abs(a)
    if ring.family is RingFamily.RATIONAL_POLYNOMIALS:
        return polynomials.positive_associate(a)
    return quadratic.positive_associate(a)


def _sign_info(a: Element, ring: RingSpec) -> dict:
    if ring.family is RingFamily.INTEGERS:
        return {"sign": str((a > 0) - (a < 0))}
    if ring.family is RingFamily.RATIONAL_POLYNOMIALS:
        return {
            "nonneg_on_reals": polynomials.is_nonneg_on_reals(a),
            "negation_nonneg": polynomials.is_nonneg_on_reals(-a),
        }
    pattern = a.sign_pattern()
    return {"at_plus": str(pattern.at_plus), "at_minus": str(pattern.at_minus)}


@dataclass(frozen=True)
class TheoremReport:
    """Per-matrix verdict of the positivity pipeline."""

    ring: RingSpec
    input_psd: bool
    snf_diagonals: tuple[Element, ...]
    sign_data: tuple[dict, ...]
    positivizable: tuple[bool, ...]
    positive_associates: tuple[Element | None, ...]
    pnri: bool
    conclusion: Conclusion

    def to_json(self) -> dict:
        return {
            "ring": str(self.ring),
            "input_psd": self.input_psd,
            "snf_diagonals": [
                rings.element_to_json(d, self.ring) for d in self.snf_diagonals
            ],
            "sign_data": list(self.sign_data),
            "positivizable": list(self.positivizable),
            "positive_associates": [
                None if a is None else rings.element_to_json(a, self.ring)
                for a in self.positive_associates
            ],
            "pnri": self.pnri,
            "conclusion": self.conclusion.value,
        }


def verify_main_theorem(m: Matrix, snf: SnfResult | None = None) -> TheoremReport:
    """Run the full pipeline on a symmetric matrix and assemble the verdict."""
    if not m.is_symmetric():
        raise NotSymmetricError("the statement concerns symmetric matrices")
    ring = m.ring
    psd = spectrum.is_psd_on_spectrum(m).is_psd
    if snf is None:
        snf = smith_normal_form(m)
    diagonals = snf.diagonals
    associates = tuple(_positive_associate(d, ring) for d in diagonals)
    positivizable = tuple(a is not None for a in associates)
    sign_data = tuple(_sign_info(d, ring) for d in diagonals)
    has_pnri = rings.pnri(ring)

    if not psd:
        conclusion = Conclusion.NOT_APPLICABLE_NOT_PSD
    elif all(positivizable):
        conclusion = Conclusion.THEOREM_HOLDS
    elif not has_pnri:
        conclusion = Conclusion.THEOREM_FAILS_PNRI_FAILS
    else:
        raise TheoremConsistencyError(
            f"PSD input over {ring} (units realize every sign pattern) produced "
            f"a diagonal with no totally positive associate: "
            f"{[rings.element_to_text(d, ring) for d in diagonals]}"
        )
    return TheoremReport(
        ring=ring,
        input_psd=psd,
        snf_diagonals=diagonals,
        sign_data=sign_data,
        positivizable=positivizable,
        positive_associates=associates,
        pnri=has_pnri,
        conclusion=conclusion,
    )


# -- the 2x2 counterexample template ---------------------------------------------


@dataclass(frozen=True)
class CounterexampleRecipe:
    """Ingredients a, b, c, d1, e1, epsilon for the 2x2 construction.

    Valid recipes satisfy a*c - b**2*e1 = epsilon with epsilon a unit, and
    a*d1 >= 0, c*d1*e1 >= 0, d1**2*e1 >= 0 on the whole real spectrum.  The
    resulting matrix [[a*d1, b*d1*e1], [b*d1*e1, c*d1*e1]] is then PSD while
    its first Smith diagonal is an associate of d1 * gcd(a, b).
    """

    ring: RingSpec
    a: Element
    b: Element
    c: Element
    d1: Element
    e1: Element
    epsilon: Element

    def to_json(self) -> dict:
        return {
            "ring": str(self.ring),
            **{
                name: rings.element_to_json(getattr(self, name), self.ring)
                for name in ("a", "b", "c", "d1", "e1", "epsilon")
            },
        }


def builtin_counterexample_recipe(ring: RingSpec | None = None) -> CounterexampleRecipe:
    """The stock failing configuration over Z[sqrt(3)].

    d1 = a = c = 1+sqrt(3) changes sign at the two embeddings, e1 = epsilon
    = 2+sqrt(3) is the (totally positive) fundamental unit, and the identity
    (1+sqrt(3))**2 - (2+sqrt(3)) = 2+sqrt(3) makes the determinant condition
    hold with a genuine unit.
    """
    ring = ring or quadratic_ring(3)
    q = QuadElem(1, 1, ring)
    u = QuadElem(2, 1, ring)
    return CounterexampleRecipe(
        ring=ring, a=q, b=rings.one(ring), c=q, d1=q, e1=u, epsilon=u
    )


def recipe_from_json(data: dict, ring: RingSpec) -> CounterexampleRecipe:
    values = {}
    for name in ("a", "b", "c", "d1", "e1", "epsilon"):
        if name not in data:
            raise CounterexampleConditionError(f"recipe field {name!r} is missing")
        try:
            values[name] = rings.parse_element(data[name], ring)
        except Exception as exc:
            raise CounterexampleConditionError(
                f"recipe field {name!r} is not an element of {ring}: {exc}"
            ) from None
    return CounterexampleRecipe(ring=ring, **values)


def build_counterexample(recipe: CounterexampleRecipe) -> Matrix:
    """Validate the recipe conditions and return the 2x2 symmetric matrix."""
    ring = recipe.ring
    a, b, c = recipe.a, recipe.b, recipe.c
    d1, e1, eps = recipe.d1, recipe.e1, recipe.epsilon

    if a * c - b * b * e1 != eps:
        raise CounterexampleConditionError("a*c - b^2*e1 does not equal epsilon")
    if not rings.is_unit(eps, ring):
        raise CounterexampleConditionError(
            f"epsilon = {rings.element_to_text(eps, ring)} is not a unit of {ring}"
        )
    conditions = {
        "a*d1": a * d1,
        "c*d1*e1": c * d1 * e1,
        "d1^2*e1": d1 * d1 * e1,
    }
    for label, value in conditions.items():
        if not spectrum.element_is_nonneg(value, ring):
            raise CounterexampleConditionError(
                f"{label} is not nonnegative on the real spectrum"
            )
    off = b * d1 * e1
    return Matrix.from_rows([[a * d1, off], [off, c * d1 * e1]], ring)


# -- the rational identity behind the stock counterexample -------------------------


@dataclass(frozen=True)
class FieldIdentityReport:
    """Expansion of (1+sqrt(3))^2 = 1/2 + (r + sqrt(3)/r)^2 + residual in Q(sqrt(3)).

    ``residual`` is 7/2 - (r^4+3)/r^2; the identity itself holds for every
    nonzero rational r, but only r close enough to 3**(1/4) keeps the
    residual nonnegative (and then the right side is a sum of squares plus
    the non-unit constant 1/2).
    """

    holds: bool
    residual: Fraction

    @property
    def residual_nonneg(self) -> bool:
        return self.residual >= 0

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "residual": str(self.residual),
            "residual_nonneg": self.residual_nonneg,
        }


def _field_mul(p: tuple[Fraction, Fraction], q: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    """Product of a + b*sqrt(3) pairs in Q(sqrt(3))."""
    return (p[0] * q[0] + 3 * p[1] * q[1], p[0] * q[1] + p[1] * q[0])


def verify_field_identity(r: Fraction | int) -> FieldIdentityReport:
    r = Fraction(r)
    if r == 0:
        raise ZeroElementError("r must be a nonzero rational")
    # Expand both sides exactly in Q(sqrt(3)), as (rational, sqrt(3)) pairs.
    one_plus = (Fraction(1), Fraction(1))
    lhs = _field_mul(one_plus, one_plus)
    inner = (r, 1 / r)  # r + sqrt(3)/r
    square = _field_mul(inner, inner)
    residual = Fraction(7, 2) - (r**4 + 3) / (r * r)
    rhs = (Fraction(1, 2) + square[0] + residual, square[1])
    return FieldIdentityReport(holds=lhs == rhs, residual=residual)


# -- valuation inequality check -----------------------------------------------------


def check_valuation_lemma(a: RatPoly, b: RatPoly, p: RatPoly) -> bool:
    """For a - b^2 >= 0 on R and p a real irreducible: nu_p(a) <= 2*nu_p(b).

    Both preconditions are checked and reported.  The inequality holds
    vacuously when a or b is zero, since nu_p of the zero polynomial is
    +infinity.
    """
    diff = a - b * b
    if not polynomials.is_nonneg_on_reals(diff):
        point = polynomials.find_negative_point(diff)
        raise PreconditionFailedError(
            f"a - b^2 is negative at t = {point} (it must be nonnegative on R)"
        )
    if p.is_zero() or p.degree < 1 or not polynomials.is_real_irreducible(p):
        raise PreconditionFailedError(
            f"p = {p} is not a real irreducible (it needs a real root)"
        )
    if a.is_zero() or b.is_zero():
        return True
    return polynomials.valuation(p, a) <= 2 * polynomials.valuation(p, b)


# -- seeded pseudo-random generation -----------------------------------------------


_GOLDEN = 0x9E3779B97F4A7C15
_MASK = (1 << 64) - 1


def _mix64(z: int) -> int:
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """The splitmix64 generator, fixed here as the cross-language random source.

    state <- state + 0x9E3779B97F4A7C15 (mod 2^64), then the output is
    mix(state) with mix(z): z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
    z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31 (all mod 2^64).
    Bounded draws are lo + next_u64() % (hi - lo + 1).
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        return _mix64(self._state)

    def next_int(self, lo: int, hi: int) -> int:
        if lo > hi:
            raise ValueError("empty range")
        return lo + self.next_u64() % (hi - lo + 1)


def derive_seed(master_seed: int, index: int) -> int:
    """Per-trial seed: mix(master + (index+1) * golden), documented and fixed."""
    return _mix64((master_seed + (index + 1) * _GOLDEN) & _MASK)


@dataclass(frozen=True)
class TrialConfig:
    """Deterministic generation parameters; equal configs give equal data.

    ``matrix_size`` is the maximum size (each trial draws 1..matrix_size);
    ``max_degree`` only matters over Q[x].
    """

    ring: RingSpec
    matrix_size: int = 4
    entry_height_bound: int = 3
    trial_count: int = 100
    seed: int = 0
    max_degree: int = 2

    def __post_init__(self) -> None:
        if not (1 <= self.matrix_size <= 5):
            raise ValueError("matrix_size must be between 1 and 5")
        if self.entry_height_bound < 1 or self.trial_count < 0:
            raise ValueError("bad trial configuration")


def _random_entry(rng: SplitMix64, cfg: TrialConfig) -> Element:
    h = cfg.entry_height_bound
    family = cfg.ring.family
    if family is RingFamily.INTEGERS:
        return rng.next_int(-h, h)
    if family is RingFamily.RATIONAL_POLYNOMIALS:
        degree = rng.next_int(0, cfg.max_degree)
        return RatPoly([rng.next_int(-h, h) for _ in range(degree + 1)])
    return QuadElem(rng.next_int(-h, h), rng.next_int(-h, h), cfg.ring)


def random_matrix(cfg: TrialConfig) -> Matrix:
    """Square matrix from the documented stream: size first, then row-major entries."""
    rng = SplitMix64(cfg.seed)
    size = rng.next_int(1, cfg.matrix_size)
    rows = [[_random_entry(rng, cfg) for _ in range(size)] for _ in range(size)]
    return Matrix.from_rows(rows, cfg.ring)


def random_psd_matrix(cfg: TrialConfig) -> Matrix:
    """N * N^T for a seeded random N: symmetric and PSD by construction."""
    n = random_matrix(cfg)
    return n @ n.transpose()


@dataclass(frozen=True)
class SuiteSummary:
    """Aggregate of a falsification run; any breach means the library is broken."""

    trials: int
    conclusion_counts: dict
    breaches: tuple[str, ...]
    reports: tuple[TheoremReport, ...]

    @property
    def ok(self) -> bool:
        return not self.breaches

    def to_json(self) -> dict:
        return {
            "trials": self.trials,
            "conclusions": dict(self.conclusion_counts),
            "breaches": list(self.breaches),
            "ok": self.ok,
        }


def run_property_suite(cfg: TrialConfig) -> SuiteSummary:
    """Generate PSD matrices, run the pipeline, and count verdicts.

    Consistency breaches are collected rather than raised so a run always
    produces a summary.
    """
    counts: dict[str, int] = {}
    breaches: list[str] = []
    reports: list[TheoremReport] = []
    for index in range(cfg.trial_count):
        trial_cfg = dataclasses.replace(cfg, seed=derive_seed(cfg.seed, index))
        matrix = random_psd_matrix(trial_cfg)
        try:
            report = verify_main_theorem(matrix)
        except TheoremConsistencyError as exc:
            breaches.append(f"trial {index}: {exc}")
            continue
        reports.append(report)
        counts[report.conclusion.value] = counts.get(report.conclusion.value, 0) + 1
    return SuiteSummary(
        trials=cfg.trial_count,
        conclusion_counts=counts,
        breaches=tuple(breaches),
        reports=tuple(reports),
    )
