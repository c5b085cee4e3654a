import random
from fractions import Fraction

import pytest

from realsnf import INTEGERS, RATIONAL_POLYNOMIALS, quadratic_ring
from realsnf.errors import NotSymmetricError, SizeLimitError
from realsnf.matrices import Matrix, determinant
from realsnf.polynomials import RatPoly, parse_poly
from realsnf.quadratic import QuadElem
from helpers import rand_matrix, random_unimodular
from realsnf.spectrum import (
    element_is_nonneg,
    evaluate_poly_matrix,
    is_psd_on_spectrum,
    psd_exact_ordered,
)

R2 = quadratic_ring(2)
R3 = quadratic_ring(3)


class TestElementNonneg:
    def test_examples(self):
        assert element_is_nonneg(QuadElem(2, 1, R3), R3)
        assert not element_is_nonneg(QuadElem(1, 1, R3), R3)
        assert element_is_nonneg(parse_poly("x^2+1"), RATIONAL_POLYNOMIALS)

    def test_integers(self):
        assert element_is_nonneg(0, INTEGERS)
        assert element_is_nonneg(7, INTEGERS)
        assert not element_is_nonneg(-1, INTEGERS)

    def test_squares_random(self):
        rng = random.Random(1)
        for ring in (INTEGERS, RATIONAL_POLYNOMIALS, R2, R3):
            for _ in range(40):
                if ring is INTEGERS:
                    a = rng.randint(-9, 9)
                elif ring is RATIONAL_POLYNOMIALS:
                    a = RatPoly([rng.randint(-4, 4) for _ in range(3)])
                else:
                    a = QuadElem(rng.randint(-6, 6), rng.randint(-6, 6), ring)
                assert element_is_nonneg(a * a, ring)


class TestPsdOnSpectrum:
    def test_diagonal_integers(self):
        report = is_psd_on_spectrum(Matrix.from_rows([[2, 0], [0, 3]], INTEGERS))
        assert report.is_psd and report.witness is None

    def test_poly_gram(self):
        m = Matrix.from_rows(
            [[parse_poly("x^2"), parse_poly("x")], [parse_poly("x"), RatPoly([1])]],
            RATIONAL_POLYNOMIALS,
        )
        assert is_psd_on_spectrum(m).is_psd

    def test_quadratic_counterexample_matrix_is_psd(self):
        q = QuadElem(1, 1, R3)
        e = QuadElem(2, 1, R3)
        m = Matrix.from_rows([[q * q, q * e], [q * e, q * q * e]], R3)
        assert is_psd_on_spectrum(m).is_psd

    def test_sign_change_witness(self):
        m = Matrix.from_rows([[QuadElem(1, 1, R3), QuadElem(0, 0, R3)],
                              [QuadElem(0, 0, R3), QuadElem(1, 0, R3)]], R3)
        report = is_psd_on_spectrum(m)
        assert not report.is_psd
        assert report.witness.minor_rows == (1,)  # 1-based
        assert report.witness.embedding == "minus"

    def test_poly_witness_point_reevaluates_negative(self):
        m = Matrix.from_rows(
            [[parse_poly("x"), RatPoly([])], [RatPoly([]), RatPoly([1])]],
            RATIONAL_POLYNOMIALS,
        )
        report = is_psd_on_spectrum(m)
        assert not report.is_psd
        rows = [i - 1 for i in report.witness.minor_rows]
        minor = determinant(m.submatrix(rows, rows))
        assert minor(report.witness.point) < 0

    def test_not_symmetric(self):
        with pytest.raises(NotSymmetricError):
            is_psd_on_spectrum(Matrix.from_rows([[1, 2], [3, 4]], INTEGERS))

    def test_congruence_invariance_quadratic(self):
        rng = random.Random(2)
        for _ in range(15):
            n = rng.randint(1, 3)
            m = rand_matrix(rng, R3, n, n, height=3)
            sym = m @ m.transpose()
            s = random_unimodular(rng, R3, n)
            congruent = s.transpose() @ sym @ s
            assert is_psd_on_spectrum(sym).is_psd == is_psd_on_spectrum(congruent).is_psd

    def test_gram_always_psd(self):
        rng = random.Random(3)
        for ring in (INTEGERS, RATIONAL_POLYNOMIALS, R2, R3, quadratic_ring(13)):
            for _ in range(10):
                n = rng.randint(1, 3)
                m = rand_matrix(rng, ring, n, n, height=3)
                assert is_psd_on_spectrum(m @ m.transpose()).is_psd


class TestExactOrderedPsd:
    def test_examples(self):
        assert not psd_exact_ordered([[1, 2], [2, 1]])  # det = -3
        assert psd_exact_ordered([[0, 0], [0, 0]])
        assert psd_exact_ordered([[2, 1], [1, 2]])

    def test_fractions(self):
        assert psd_exact_ordered([[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 3), Fraction(1, 2)]])

    def test_guards(self):
        with pytest.raises(NotSymmetricError):
            psd_exact_ordered([[1, 2], [1, 1]])
        with pytest.raises(NotSymmetricError):
            psd_exact_ordered([[1, 2, 3], [1, 2, 3]])
        with pytest.raises(SizeLimitError):
            psd_exact_ordered([[1 if i == j else 0 for j in range(9)] for i in range(9)])

    def test_needs_all_principal_minors(self):
        # leading minors alone would pass this one: PSD fails only on the
        # trailing 1x1 minor
        assert not psd_exact_ordered([[0, 0], [0, -1]])


class TestSamplingAgreement:
    def test_poly_psd_never_contradicted_by_evaluation(self):
        # 200 rational points; evaluation can refute a PSD verdict, never
        # certify one, so any sampled violation is a failure here
        rng = random.Random(4)
        points = [Fraction(k, 10) for k in range(-100, 100)]
        assert len(points) == 200
        for _ in range(25):
            n = rng.randint(1, 3)
            m = rand_matrix(rng, RATIONAL_POLYNOMIALS, n, n, height=3)
            sym = m @ m.transpose()
            verdict = is_psd_on_spectrum(sym).is_psd
            if verdict:
                for t in points:
                    assert psd_exact_ordered(evaluate_poly_matrix(sym, t))

    def test_non_psd_matrices_get_refuted_somewhere(self):
        m = Matrix.from_rows(
            [[parse_poly("x"), RatPoly([])], [RatPoly([]), RatPoly([1])]],
            RATIONAL_POLYNOMIALS,
        )
        report = is_psd_on_spectrum(m)
        assert not report.is_psd
        assert not psd_exact_ordered(evaluate_poly_matrix(m, report.witness.point))
