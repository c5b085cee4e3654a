import random
from fractions import Fraction

import pytest

from realsnf.errors import (
    NotCertifiedIrreducibleError,
    NotSquareFreeError,
    ParseError,
    ZeroPolynomialError,
)
from realsnf.polynomials import (
    RatPoly,
    certify_irreducible,
    count_real_roots,
    find_negative_point,
    format_poly,
    is_nonneg_on_reals,
    is_real_irreducible,
    parse_poly,
    poly_gcd,
    positive_associate,
    squarefree_decomposition,
    sturm_chain,
    valuation,
)

X = RatPoly.x()


def rand_poly(rng, max_degree=6, height=5, nonzero=False):
    while True:
        coeffs = [rng.randint(-height, height) for _ in range(rng.randint(0, max_degree) + 1)]
        p = RatPoly(coeffs)
        if not nonzero or not p.is_zero():
            return p


class TestArithmetic:
    def test_divmod_round_trip(self):
        rng = random.Random(1)
        for _ in range(200):
            a = rand_poly(rng)
            b = rand_poly(rng, nonzero=True)
            q, r = divmod(a, b)
            assert q * b + r == a
            assert r.is_zero() or r.degree < b.degree

    def test_degree_conventions(self):
        assert RatPoly([]).degree == -1
        assert RatPoly([3]).degree == 0
        assert RatPoly([0, 0, 1]).degree == 2
        assert RatPoly([1, 0, 0]).degree == 0  # trailing zeros dropped

    def test_evaluation_matches_sign_kernel(self):
        rng = random.Random(2)
        for _ in range(100):
            p = rand_poly(rng)
            t = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
            value = p(t)
            sign = (value > 0) - (value < 0)
            assert p.sign_at(t) == sign


class TestSturm:
    def test_chain_for_quadratic(self):
        chain = sturm_chain(parse_poly("x^2 - 2")).chain
        assert list(chain) == [parse_poly("x^2-2"), parse_poly("2*x"), RatPoly([2])]

    def test_chain_for_linear_and_constant(self):
        assert list(sturm_chain(X).chain) == [X, RatPoly([1])]
        assert list(sturm_chain(RatPoly([5])).chain) == [RatPoly([5])]

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomialError):
            sturm_chain(RatPoly([]))

    def test_root_counts(self):
        assert count_real_roots(parse_poly("x^2-2")) == 2
        assert count_real_roots(parse_poly("x^2+1")) == 0
        assert count_real_roots(X) == 1

    def test_square_free_enforced(self):
        with pytest.raises(NotSquareFreeError):
            count_real_roots(parse_poly("x^2"))

    def test_root_counts_against_constructions(self):
        rng = random.Random(3)
        for _ in range(60):
            roots = rng.sample(range(-12, 13), rng.randint(0, 4))
            p = RatPoly.from_roots(roots)
            for _ in range(rng.randint(0, 2)):
                # strictly positive definite quadratic factor adds no roots
                b = rng.randint(-3, 3)
                c = rng.randint(1, 6) + b * b  # discriminant 4b^2-4c < 0
                p = p * RatPoly([c, 2 * b, 1])
            if not poly_gcd(p, p.derivative()).is_constant():
                continue
            assert count_real_roots(p) == len(roots)


class TestSquarefreeDecomposition:
    def test_example(self):
        p = parse_poly("x-1") ** 2 * parse_poly("x+2")
        constant, factors = squarefree_decomposition(p)
        assert constant == 1
        assert sorted((str(q), m) for q, m in factors) == [("x + 2", 1), ("x - 1", 2)]

    def test_trivial_and_power(self):
        _, factors = squarefree_decomposition(parse_poly("x^2+1"))
        assert factors == [(parse_poly("x^2+1"), 1)]
        _, factors = squarefree_decomposition(parse_poly("x^2-2") ** 3)
        assert factors == [(parse_poly("x^2-2"), 3)]

    def test_re_expansion_exact(self):
        rng = random.Random(4)
        for _ in range(60):
            p = rand_poly(rng, max_degree=4, nonzero=True)
            if p.degree < 1:
                continue
            constant, factors = squarefree_decomposition(p)
            rebuilt = RatPoly([constant])
            for q, m in factors:
                assert poly_gcd(q, q.derivative()).is_constant()
                rebuilt = rebuilt * q**m
            assert rebuilt == p


class TestNonnegativity:
    def test_examples(self):
        assert is_nonneg_on_reals(parse_poly("x^2+1"))
        assert not is_nonneg_on_reals(parse_poly("x^3-x"))
        assert not is_nonneg_on_reals(parse_poly("x-1") ** 2 * X)

    def test_zero_and_constants(self):
        assert is_nonneg_on_reals(RatPoly([]))
        assert is_nonneg_on_reals(RatPoly([Fraction(3, 7)]))
        assert not is_nonneg_on_reals(RatPoly([-1]))

    def test_squares_are_nonneg(self):
        rng = random.Random(5)
        for _ in range(40):
            p = rand_poly(rng, max_degree=3)
            assert is_nonneg_on_reals(p * p)

    def test_agrees_with_sampling(self):
        rng = random.Random(6)
        numerators = list(range(-40, 41))
        for _ in range(150):
            p = rand_poly(rng, max_degree=6)
            verdict = is_nonneg_on_reals(p)
            sampled = p.signs_at(numerators, 4)
            if verdict:
                assert all(s >= 0 for s in sampled)
                assert p.sign_at_infinity(1) >= 0 and p.sign_at_infinity(-1) >= 0

    def test_positive_associate(self):
        assert positive_associate(-parse_poly("x^2+1")) == parse_poly("x^2+1")
        assert positive_associate(parse_poly("x^2-2")) is None
        assert positive_associate(RatPoly([7])) == RatPoly([7])
        with pytest.raises(ZeroPolynomialError):
            positive_associate(RatPoly([]))

    def test_find_negative_point(self):
        rng = random.Random(7)
        found = 0
        for _ in range(400):
            p = rand_poly(rng, max_degree=6)
            if p.is_zero() or is_nonneg_on_reals(p):
                continue
            t = find_negative_point(p)
            assert p(t) < 0
            found += 1
        assert found > 100

    def test_find_negative_point_interior_dip(self):
        # positive leading coefficient, even degree, dips below zero inside
        p = parse_poly("x^2-2") * parse_poly("x^2-3") * parse_poly("x^2+1")
        t = find_negative_point(p)
        assert p(t) < 0


class TestIrreducibility:
    def test_real_irreducible(self):
        assert not is_real_irreducible(parse_poly("x^2+1"))
        assert is_real_irreducible(parse_poly("x^2-2"))
        assert is_real_irreducible(parse_poly("x-5"))

    def test_non_real_irreducibles_are_positivizable(self):
        # an irreducible with no real root keeps one sign, so a constant
        # multiple is nonnegative on all of R
        rng = random.Random(77)
        for _ in range(60):
            b = rng.randint(-6, 6)
            c = rng.randint(1, 9) + b * b  # discriminant 4b^2 - 4c < 0
            lead = rng.choice([-3, -1, 1, 2])
            q = RatPoly([c * lead, 2 * b * lead, lead])
            assert not is_real_irreducible(q.monic())
            assert positive_associate(q) is not None

    def test_certification_low_degree(self):
        assert certify_irreducible(parse_poly("x^2-2")) is True
        assert certify_irreducible(parse_poly("x^2-1")) is False
        assert certify_irreducible(parse_poly("x^3-x")) is False
        assert certify_irreducible(parse_poly("x^3+x+1")) is True

    def test_certification_eisenstein(self):
        assert certify_irreducible(parse_poly("x^4+2")) is True
        assert certify_irreducible(parse_poly("x^5 - 4*x + 2")) is True
        # x^4+4 factors as (x^2+2x+2)(x^2-2x+2): no certificate either way
        assert certify_irreducible(parse_poly("x^4+4")) is None

    def test_certified_mode_raises_when_unknown(self):
        with pytest.raises(NotCertifiedIrreducibleError):
            is_real_irreducible(parse_poly("x^4+4"), certify=True)
        assert is_real_irreducible(parse_poly("x^2-2"), certify=True)


class TestValuation:
    def test_examples(self):
        assert valuation(X, parse_poly("x^3+x^2")) == 2
        assert valuation(parse_poly("x^2+1"), parse_poly("x^2+1") ** 3 * X) == 3
        assert valuation(X, RatPoly([5])) == 0

    def test_errors(self):
        with pytest.raises(ZeroPolynomialError):
            valuation(X, RatPoly([]))
        with pytest.raises(ZeroPolynomialError):
            valuation(RatPoly([3]), X)


class TestTextForms:
    def test_format(self):
        assert format_poly(parse_poly("3/2*x^2 - x + 1")) == "3/2*x^2 - x + 1"
        assert format_poly(RatPoly([])) == "0"
        assert format_poly(RatPoly([0, -1])) == "-x"
        assert format_poly(RatPoly([2, 0, 0, 1])) == "x^3 + 2"

    def test_parse_variants(self):
        assert parse_poly("x") == X
        assert parse_poly("-x") == -X
        assert parse_poly("2x") == RatPoly([0, 2])
        assert parse_poly("-7") == RatPoly([-7])
        assert parse_poly("x^2 + x + x") == RatPoly([0, 2, 1])

    def test_round_trip(self):
        rng = random.Random(8)
        for _ in range(100):
            p = RatPoly(
                [
                    Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                    for _ in range(rng.randint(1, 6))
                ]
            )
            assert parse_poly(format_poly(p)) == p

    def test_parse_errors(self):
        for bad in ("", "x^-1", "3*", "x**2", "2//3", "y+1"):
            with pytest.raises(ParseError):
                parse_poly(bad)
