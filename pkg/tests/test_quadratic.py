import math
import random

import pytest

from realsnf import quadratic_ring
from realsnf.errors import UnitInputError, ZeroElementError
from realsnf.quadratic import (
    QuadElem,
    SignPattern,
    achievable_sign_patterns,
    canonical_associate,
    certify_irreducible,
    exact_divide,
    factor,
    fundamental_unit,
    is_real_prime,
    pnri_holds,
    positive_associate,
)

R2 = quadratic_ring(2)
R3 = quadratic_ring(3)
R5 = quadratic_ring(5)
R13 = quadratic_ring(13)
ALL_RINGS = [quadratic_ring(d) for d in (2, 3, 5, 6, 7, 11, 13)]


def rand_elem(rng, ring, h=8):
    return QuadElem(rng.randint(-h, h), rng.randint(-h, h), ring)


class TestBasicArithmetic:
    def test_conjugate(self):
        assert QuadElem(1, 1, R3).conjugate() == QuadElem(1, -1, R3)
        assert QuadElem(5, 0, R3).conjugate() == QuadElem(5, 0, R3)
        # half form: conj((1+sqrt5)/2) = (1-sqrt5)/2 = 1 - w
        assert QuadElem(0, 1, R5).conjugate() == QuadElem(1, -1, R5)

    def test_norm(self):
        assert QuadElem(1, 1, R3).norm() == -2
        assert QuadElem(2, 1, R3).norm() == 1
        assert QuadElem(1, 1, R2).norm() == -1

    def test_norm_is_product_with_conjugate(self):
        rng = random.Random(1)
        for ring in ALL_RINGS:
            for _ in range(50):
                a = rand_elem(rng, ring)
                assert a * a.conjugate() == QuadElem(a.norm(), 0, ring)

    def test_norm_multiplicative(self):
        rng = random.Random(2)
        for ring in ALL_RINGS:
            for _ in range(50):
                a, b = rand_elem(rng, ring), rand_elem(rng, ring)
                assert (a * b).norm() == a.norm() * b.norm()

    def test_half_form_multiplication_table(self):
        # w^2 = w + (d-1)/4 in the half-integer basis
        for ring in (R5, R13):
            w = QuadElem(0, 1, ring)
            assert w * w == QuadElem((ring.d - 1) // 4, 1, ring)


class TestSignPattern:
    def test_examples(self):
        assert QuadElem(1, 1, R3).sign_pattern() == SignPattern(1, -1)
        assert QuadElem(2, 1, R3).sign_pattern() == SignPattern(1, 1)
        assert QuadElem(0, 0, R3).sign_pattern() == SignPattern(0, 0)

    def test_half_form_golden_ratio(self):
        # (1+sqrt5)/2 > 0, (1-sqrt5)/2 < 0
        assert QuadElem(0, 1, R5).sign_pattern() == SignPattern(1, -1)

    def test_multiplicative(self):
        rng = random.Random(3)
        for ring in ALL_RINGS:
            for _ in range(60):
                a, b = rand_elem(rng, ring), rand_elem(rng, ring)
                if a.is_zero() or b.is_zero():
                    continue
                assert (a * b).sign_pattern() == a.sign_pattern() * b.sign_pattern()

    def test_nonzero_elements_have_nonzero_signs(self):
        rng = random.Random(4)
        for ring in ALL_RINGS:
            for _ in range(40):
                a = rand_elem(rng, ring)
                if a.is_zero():
                    continue
                pattern = a.sign_pattern()
                assert pattern.at_plus != 0 and pattern.at_minus != 0


class TestFundamentalUnit:
    EXPECTED = {
        2: (1, 1, -1),
        3: (2, 1, 1),
        5: (0, 1, -1),
        6: (5, 2, 1),
        7: (8, 3, 1),
        11: (10, 3, 1),
        13: (1, 1, -1),
    }

    @pytest.mark.parametrize("d", sorted(EXPECTED))
    def test_values(self, d):
        x, y, norm = self.EXPECTED[d]
        ring = quadratic_ring(d)
        fu = fundamental_unit(ring)
        assert fu.unit == QuadElem(x, y, ring)
        assert fu.norm == norm
        assert abs(fu.unit.norm()) == 1

    @pytest.mark.parametrize("d", [2, 3, 6, 7, 11])
    def test_minimality_against_brute_pell(self, d):
        # independent check: no Pell solution with smaller y
        ring = quadratic_ring(d)
        y0 = fundamental_unit(ring).unit.y
        for y in range(1, y0):
            for delta in (-1, 1):
                x2 = d * y * y + delta
                assert x2 < 0 or math.isqrt(x2) ** 2 != x2

    def test_unit_exceeds_one_at_plus_embedding(self):
        for ring in ALL_RINGS:
            u = fundamental_unit(ring).unit
            assert (u - 1).sign_pattern().at_plus > 0


class TestUnitSigns:
    def test_pnri(self):
        assert pnri_holds(R2)
        assert pnri_holds(R5)
        assert pnri_holds(R13)
        for d in (3, 6, 7, 11):
            assert not pnri_holds(quadratic_ring(d))

    def test_achievable_patterns(self):
        assert achievable_sign_patterns(R2) == frozenset(
            {SignPattern(1, 1), SignPattern(-1, -1), SignPattern(1, -1), SignPattern(-1, 1)}
        )
        assert achievable_sign_patterns(R3) == frozenset(
            {SignPattern(1, 1), SignPattern(-1, -1)}
        )
        for ring in ALL_RINGS:
            assert SignPattern(1, 1) in achievable_sign_patterns(ring)

    def test_unit_pattern_law(self):
        # sign_pattern(u) = (s, s * norm(u)) for any unit
        for ring in ALL_RINGS:
            u0 = fundamental_unit(ring).unit
            for k in range(-3, 4):
                for sign in (1, -1):
                    u = u0**k * sign
                    pattern = u.sign_pattern()
                    assert pattern.at_minus == pattern.at_plus * u.norm()

    def test_unit_pattern_periodicity(self):
        for ring in ALL_RINGS:
            u0 = fundamental_unit(ring).unit
            for k in range(-3, 2):
                assert (u0**k).sign_pattern() == (u0 ** (k + 2)).sign_pattern()


class TestPositiveAssociate:
    def test_negative_rational(self):
        assert positive_associate(QuadElem(-5, 0, R3)) == QuadElem(5, 0, R3)

    def test_mixed_without_pnri_is_stuck(self):
        assert positive_associate(QuadElem(1, 1, R3)) is None

    def test_mixed_with_pnri(self):
        a = QuadElem(1, -1, R2)  # 1 - sqrt(2) < 0 at plus, > 0 at minus
        result = positive_associate(a)
        assert result is not None
        assert result.sign_pattern() == SignPattern(1, 1)
        assert exact_divide(result, a) is not None  # unit multiple

    def test_zero_rejected(self):
        with pytest.raises(ZeroElementError):
            positive_associate(QuadElem(0, 0, R3))

    def test_absence_is_exhaustive_over_unit_patterns(self):
        # when no positive associate exists, +-a*u0^k never reaches (+,+)
        a = QuadElem(1, 1, R3)
        u0 = fundamental_unit(R3).unit
        for k in range(-3, 4):
            for sign in (1, -1):
                assert (a * u0**k * sign).sign_pattern() != SignPattern(1, 1)


class TestCanonicalAssociate:
    def test_counterexample_diagonal_representative(self):
        q = QuadElem(1, 1, R3)
        u = QuadElem(2, 1, R3)
        for variant in (q, -q, q * u, -(q * u), q * u * u):
            assert canonical_associate(variant) == q

    def test_rational_integer_class(self):
        assert canonical_associate(QuadElem(-5, 0, R3)) == QuadElem(5, 0, R3)

    def test_unit_class_is_one(self):
        for ring in ALL_RINGS:
            u0 = fundamental_unit(ring).unit
            assert canonical_associate(u0 * u0 * -1) == QuadElem(1, 0, ring)

    def test_invariant_under_unit_multiplication(self):
        rng = random.Random(9)
        for ring in (R2, R3, R13):
            u0 = fundamental_unit(ring).unit
            for _ in range(25):
                a = rand_elem(rng, ring, 5)
                if a.is_zero():
                    continue
                assert canonical_associate(a * u0) == canonical_associate(a)
                assert canonical_associate(-a) == canonical_associate(a)


class TestFactor:
    def test_two_over_sqrt2_ramifies(self):
        two = QuadElem(2, 0, R2)
        [(p, mult)] = factor(two)
        assert mult == 2
        # the prime above 2 is an associate of sqrt(2); the canonical
        # representative is its totally positive associate 2+w
        assert exact_divide(p, QuadElem(0, 1, R2)) is not None
        assert p.sign_pattern() == SignPattern(1, 1)

    def test_irreducible_stays_whole(self):
        q = QuadElem(1, 1, R3)
        assert factor(q) == [(q, 1)]

    def test_rejects_zero_and_units(self):
        with pytest.raises(ZeroElementError):
            factor(QuadElem(0, 0, R3))
        with pytest.raises(UnitInputError):
            factor(QuadElem(2, 1, R3))

    @pytest.mark.parametrize("ring", ALL_RINGS, ids=str)
    def test_recombination_and_irreducibility(self, ring):
        rng = random.Random(13)
        done = 0
        while done < 15:
            a = rand_elem(rng, ring, 9)
            if a.is_zero() or a.is_unit():
                continue
            done += 1
            parts = factor(a)
            product = QuadElem(1, 0, ring)
            for p, mult in parts:
                assert certify_irreducible(p), (ring, a, p)
                product = product * p**mult
            cofactor = exact_divide(a, product)
            assert cofactor is not None and cofactor.is_unit()

    def test_inert_prime(self):
        # 2 is inert in the half form for d = 5: x^2 - x - 1 is irreducible mod 2
        [(p, mult)] = factor(QuadElem(2, 0, R5))
        assert mult == 1
        assert abs(p.norm()) == 4


class TestRealPrimes:
    def test_always_false(self):
        assert not is_real_prime(QuadElem(1, 1, R3))
        assert not is_real_prime(QuadElem(0, 1, R2))

    def test_zero_rejected(self):
        with pytest.raises(ZeroElementError):
            is_real_prime(QuadElem(0, 0, R3))


class TestSignAgainstFloats:
    def test_float_embedding_never_contradicts_exact_sign(self):
        # floats are a refutation-only oracle: skip near-zero values where
        # rounding could lie
        rng = random.Random(21)
        for ring in ALL_RINGS:
            root = math.sqrt(ring.d)
            for _ in range(300):
                a = rand_elem(rng, ring, 50)
                if a.is_zero():
                    continue
                if ring.uses_half_basis:
                    plus = a.x + a.y * (1 + root) / 2
                    minus = a.x + a.y * (1 - root) / 2
                else:
                    plus = a.x + a.y * root
                    minus = a.x - a.y * root
                pattern = a.sign_pattern()
                if abs(plus) > 1e-6:
                    assert pattern.at_plus == (1 if plus > 0 else -1)
                if abs(minus) > 1e-6:
                    assert pattern.at_minus == (1 if minus > 0 else -1)


class TestCanonicalScaling:
    def test_huge_coordinates_stay_fast_and_stable(self):
        q = QuadElem(1, 1, R3)
        u = QuadElem(2, 1, R3)
        big = q * u**40  # coordinates with dozens of digits
        assert big.height() > 10**20
        assert canonical_associate(big) == q
        assert canonical_associate(-big * u**3) == q


class TestEuclideanShells:
    def test_sqrt11_needs_wide_offsets(self):
        # fractional part (0, 1/2): the valid quotient sits 5 steps away in x
        ring = quadratic_ring(11)
        b = QuadElem(2, 0, ring)
        a = QuadElem(0, 1, ring)  # a/b = (0, 1/2)
        q, r = divmod(a, b)
        assert a == b * q + r
        assert r.is_zero() or abs(r.norm()) < abs(b.norm())

    @pytest.mark.parametrize("ring", ALL_RINGS, ids=str)
    def test_division_contract_random(self, ring):
        rng = random.Random(ring.d)
        for _ in range(800):
            a = rand_elem(rng, ring, 60)
            b = rand_elem(rng, ring, 60)
            if b.is_zero():
                continue
            q, r = divmod(a, b)
            assert a == b * q + r
            assert r.is_zero() or abs(r.norm()) < abs(b.norm())
