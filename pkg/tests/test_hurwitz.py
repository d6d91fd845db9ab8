import random
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from schwarz_spectra import config
from schwarz_spectra.errors import BoundaryZero, DegenerateHurwitz, ZeroEntry
from schwarz_spectra.hurwitz import (frobenius_sign_changes, frobenius_signs, hurwitz_determinants,
                                     is_hurwitz_stable, rhp_root_count, sign_changes)
from schwarz_spectra.polynomial import Poly

from conftest import small_rationals


def sympy_minors(coeffs):
    """Leading minors of the Hurwitz matrix, built straight from the definition."""
    a = [sympy.Rational(c.numerator, c.denominator) for c in coeffs]
    n = len(a) - 1
    H = sympy.Matrix(n, n, lambda r, c: a[2 * c - r + 1] if 0 <= 2 * c - r + 1 <= n else 0)
    return [H[:j, :j].det() for j in range(1, n + 1)]


monic = st.lists(small_rationals, min_size=1, max_size=8).map(lambda c: Poly((1, *c)))


@pytest.mark.parametrize("coeffs, deltas", [
    ((1, 6, 11, 6), (6, 60, 360)),
    ((1, -2, -5, 6), (-2, 4, 24)),
    ((1, 5), (5,)),
])
def test_determinant_examples(coeffs, deltas):
    assert hurwitz_determinants(Poly(coeffs)).deltas == deltas


@given(monic)
def test_minors_match_sympy(p):
    got = hurwitz_determinants(p).deltas
    assert [sympy.Rational(d.numerator, d.denominator) for d in got] == sympy_minors(p.coeffs)


@given(st.lists(small_rationals, min_size=1, max_size=12))
def test_last_minor_identity(c):
    p = Poly((1, *c))
    t = hurwitz_determinants(p)
    assert t.delta(t.n) == p.a(t.n) * t.delta(t.n - 1)


def test_conventions():
    t = hurwitz_determinants(Poly((1, 6, 11, 6)))
    assert t.delta(0) == t.delta(-1) == t.delta(-2) == 1


def test_non_monic_is_normalized():
    assert hurwitz_determinants(Poly((2, 12, 22, 12))).deltas == (6, 60, 360)


@pytest.mark.parametrize("seq, count", [((1, -2, -2, 6), 2), ((1, 1, 1), 0), ((1, -1, 1, -1), 3)])
def test_sign_changes(seq, count):
    assert sign_changes(seq) == count


def test_sign_changes_rejects_zero():
    with pytest.raises(ZeroEntry):
        sign_changes((1, 0, 2))


def test_frobenius_examples():
    assert frobenius_signs((1, 2, 0, 0, -3)) == [1, 1, 1, -1, -1]
    assert frobenius_sign_changes((1, 2, 0, 0, -3)) == 1
    assert frobenius_sign_changes((1, 0, -1)) == 1
    assert frobenius_sign_changes((1, 1)) == 0
    with pytest.raises(BoundaryZero):
        frobenius_sign_changes((0, 1))
    with pytest.raises(BoundaryZero):
        frobenius_sign_changes((1, 0))


@given(st.lists(st.integers(-5, 5).filter(bool), min_size=1, max_size=10))
def test_frobenius_equals_standard_without_zeros(seq):
    assert frobenius_sign_changes(seq) == sign_changes(seq)


def test_rhp_examples():
    assert rhp_root_count(Poly((1, -2, -5, 6))) == 2
    assert rhp_root_count(Poly((1, 6, 11, 6))) == 0
    with pytest.raises(DegenerateHurwitz) as err:
        rhp_root_count(Poly((1, 0, 1)))
    assert err.value.j == 1


def test_stability_examples():
    assert is_hurwitz_stable(Poly((1, 6, 11, 6)))
    assert not is_hurwitz_stable(Poly((1, -2, -5, 6)))
    assert is_hurwitz_stable(Poly((1, 2, 2)))
    assert not is_hurwitz_stable(Poly((1, 0, 1)))


def test_rhp_count_against_numpy_roots():
    rng = random.Random(7)
    checked = 0
    while checked < 1000:
        n = rng.randint(1, 8)
        p = Poly((1, *(Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(n))))
        t = hurwitz_determinants(p)
        if t.first_zero() is not None:
            continue
        roots = np.roots([float(c) for c in p.coeffs])
        if np.any(np.abs(roots.real) < 1e-7):
            continue
        assert rhp_root_count(p, t) == int(np.sum(roots.real > 0))
        assert is_hurwitz_stable(p) == bool(np.all(roots.real < 0))
        checked += 1


def test_float_near_zero_raises():
    p = Poly((1.0, 1e-13, 1.0), exact=False)
    t = hurwitz_determinants(p)
    with pytest.raises(DegenerateHurwitz):
        t.sign(1)
    with config.tolerances(eps_zero=1e-15):
        assert t.sign(1) == 1


def test_float_well_conditioned_signs():
    p = Poly((1.0, -2.0, -5.0, 6.0), exact=False)
    t = hurwitz_determinants(p)
    assert [t.sign(j) for j in (1, 2, 3)] == [-1, 1, 1]
    assert rhp_root_count(p) == 2
