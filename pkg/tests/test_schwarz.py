import random
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from schwarz_spectra.classify import Kind, classify, self_interlacing
from schwarz_spectra.errors import InvalidPattern
from schwarz_spectra.polynomial import Poly, Spectrum, even_odd_parts, proposition_q
from schwarz_spectra.schwarz import (SchwarzMatrix, SnView, auxiliary_zero_corner, bebiano_matrix,
                                     charpoly, classify_by_sign_pattern, cumulative_products,
                                     rhp_count_by_signs, sign_flip_dual, sn_claim, sn_direct,
                                     tridiagonal_charpoly, trailing_charpolys)
from schwarz_spectra.wall import cf_evaluate, wall_from_euclid

from conftest import b_vectors, positive_rationals

Z = sympy.Symbol("z")


def sympy_charpoly(m):
    M = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in m])
    cp = M.charpoly(Z).all_coeffs()
    return Poly(tuple(Fraction(int(c.p), int(c.q)) for c in cp))


@pytest.mark.parametrize("b, coeffs", [
    ((-2, -2, -3), (1, -2, -5, 6)),
    ((5,), (1, 5)),
    ((2, 2), (1, 2, 2)),
    ((6, 10, 1), (1, 6, 11, 6)),
])
def test_charpoly_examples(b, coeffs):
    assert charpoly(SchwarzMatrix(b)) == Poly(coeffs)


def test_trailing_examples():
    fs = trailing_charpolys(SchwarzMatrix((6, 10, 1)))
    assert fs[1] == Poly((1, 0, 1)) and fs[2] == Poly((1, 0))
    fs = trailing_charpolys(SchwarzMatrix((-2, -2, -3)))
    assert fs[1] == Poly((1, 0, -3)) and fs[2] == Poly((1, 0))
    assert trailing_charpolys(SchwarzMatrix((5,))) == [Poly((1, 5))]


@given(b_vectors(max_size=8))
def test_charpoly_matches_sympy_and_cf(b):
    J = SchwarzMatrix(b)
    p = charpoly(J)
    assert p == sympy_charpoly(J.dense())
    assert p == cf_evaluate(b)[1]
    assert trailing_charpolys(J) == list(wall_from_euclid(p).polys)


def test_cumulative_examples():
    assert cumulative_products(SchwarzMatrix((-2, -2, -3))).prods == (-2, 4, -12)
    assert cumulative_products(SchwarzMatrix((6, 10, 1))).prods == (6, 60, 60)
    assert cumulative_products(SchwarzMatrix((1,))).prods == (1,)
    assert rhp_count_by_signs(SchwarzMatrix((-2, -2, -3))) == 2
    assert rhp_count_by_signs(SchwarzMatrix((6, 10, 1))) == 0
    assert rhp_count_by_signs(SchwarzMatrix((-5,))) == 1


def test_cumulative_count_against_eigenvalues():
    rng = random.Random(11)
    done = 0
    while done < 300:
        n = rng.randint(1, 8)
        b = [Fraction(rng.choice((-1, 1)) * rng.randint(1, 10), rng.randint(1, 3)) for _ in range(n)]
        J = SchwarzMatrix(b)
        eig = np.linalg.eigvals(np.array(J.dense(), dtype=float))
        if np.any(np.abs(eig.real) <= 1e-6):
            continue
        assert rhp_count_by_signs(J) == int(np.sum(eig.real > 0))
        done += 1


def test_sign_flip_examples():
    M, q = sign_flip_dual(SchwarzMatrix((5,)))
    assert M == [[5]] and q == Poly((1, -5))
    M, q = sign_flip_dual(SchwarzMatrix((2, 2)))
    assert M == [[2, 1], [2, 0]] and q == Poly((1, -2, -2))
    M, q = sign_flip_dual(SchwarzMatrix((-2, -2, -3)))
    assert q == proposition_q(Poly((1, -2, -5, 6)), 3) == sympy_charpoly(M)


@given(b_vectors(max_size=10))
def test_sign_flip_charpoly(b):
    J = SchwarzMatrix(b)
    M, q = sign_flip_dual(J)
    assert tridiagonal_charpoly(M) == q


@given(b_vectors(min_size=2, max_size=10).filter(lambda b: len(b) % 2 == 0))
def test_even_part_is_zero_corner_charpoly(b):
    J = SchwarzMatrix(b)
    p0 = even_odd_parts(charpoly(J)).p0
    assert tridiagonal_charpoly(auxiliary_zero_corner(J)) == p0.of_square(1)


def test_sign_pattern_examples():
    assert classify_by_sign_pattern(SchwarzMatrix((6, 10, 1))).kind is Kind.HURWITZ_STABLE
    v = classify_by_sign_pattern(SchwarzMatrix((-2, -2, -3)))
    assert (v.kind, v.hw_type, v.order) == (Kind.SELF_INTERLACING, "I", 2)
    v = classify_by_sign_pattern(SchwarzMatrix((-1, 1, -1)))
    assert (v.kind, v.hw_type, v.order) == (Kind.GENERALIZED, "II", 1)


@given(b_vectors(max_size=10))
def test_sign_pattern_agrees_with_determinants(b):
    J = SchwarzMatrix(b)
    v = classify_by_sign_pattern(J)
    if v.kind is not Kind.NOT_CLASSIFIED:
        assert v.key() == classify(charpoly(J)).key()


@given(st.lists(positive_rationals, min_size=1, max_size=10))
def test_all_positive_is_stable(b):
    assert classify_by_sign_pattern(SchwarzMatrix(b)).kind is Kind.HURWITZ_STABLE


@given(st.lists(positive_rationals, min_size=1, max_size=10))
def test_all_negative_is_self_interlacing(b):
    v = classify_by_sign_pattern(SchwarzMatrix([-x for x in b]))
    assert v.kind is Kind.SELF_INTERLACING
    assert v.hw_type == ("I" if len(b) % 2 == 1 else "II")


def test_sn_view_examples():
    v = SnView(2, (2, 3), 0)
    assert v.matrix().b == (2, -2, -3)
    assert sn_claim(v) == ("AGH", "I", 1)
    # order [n/2] almost generalized forces strict interlacing
    assert sn_direct(v).key() == ("SelfInterlacing", "II", 2)
    assert self_interlacing(Spectrum.of(np.roots([float(x) for x in charpoly(v.matrix()).coeffs]))) == "II"
    v = SnView(2, (2, 3), 1)
    assert sn_claim(v) == ("GH", "I", 1)
    assert sn_direct(v).key() == ("GeneralizedHurwitz", "I", 1)
    with pytest.raises(InvalidPattern):
        SnView(2, (2, 3), 3)
    with pytest.raises(InvalidPattern):
        SnView(2, (2, -3), 1)
    assert SnView.of(SchwarzMatrix((3, 1, 2, -4))) == SnView(3, (1, 2, 4), 2)
    with pytest.raises(InvalidPattern):
        SnView.of(SchwarzMatrix((3, -1, 2)))


@given(st.integers(1, 9).flatmap(lambda n: st.tuples(
    st.builds(Fraction, st.integers(-10, 10).filter(bool), st.integers(1, 3)),
    st.lists(positive_rationals, min_size=n - 1, max_size=n - 1),
    st.integers(0, n - 1))))
def test_sn_direct_agrees_with_determinants(args):
    a, c, k = args
    v = SnView(a, tuple(c), k)
    assert sn_direct(v).key() == classify(charpoly(v.matrix())).key()


def test_bebiano_matrix_shape():
    J = bebiano_matrix(1, (1, 1))
    assert J.b == (-1, 1, -1)
    assert charpoly(J) == Poly((1, -1, 0, 1))
    with pytest.raises(InvalidPattern):
        bebiano_matrix(-1, (1,))
