from fractions import Fraction

import numpy as np
import pytest

from schwarz_spectra.oracle import eigenvalues, half_plane_counts, match_error, roots
from schwarz_spectra.polynomial import Poly
from schwarz_spectra.schwarz import SchwarzMatrix, charpoly

from conftest import rand_nonzero


def test_roots_examples():
    r = roots(Poly((1, 6, 11, 6)))
    assert match_error(r.roots, [-1, -2, -3]) < 1e-9
    assert match_error(roots(Poly((1, 0, 1))).roots, [1j, -1j]) < 1e-12
    r = roots(Poly((1, -1, 0, 1)))
    real = [z for z in r.roots if abs(z.imag) < 1e-12]
    assert len(real) == 1 and abs(real[0].real + 0.754878) < 1e-6
    assert abs(sum(r.roots) - 1) < 1e-12 and abs(np.prod(r.roots) + 1) < 1e-12


def test_eigenvalue_examples():
    assert match_error(eigenvalues(SchwarzMatrix((-2, -2, -3))).roots, [1, -2, 3]) < 1e-9
    assert match_error(eigenvalues(SchwarzMatrix((5,))).roots, [-5]) < 1e-12
    assert match_error(eigenvalues(SchwarzMatrix((2, 2))).roots, [-1 + 1j, -1 - 1j]) < 1e-12


def test_half_plane_examples():
    class R:
        def __init__(self, zs):
            self.roots = tuple(complex(z) for z in zs)
    assert half_plane_counts(R([1, -2, 3]), 1e-9) == (1, 2, 0)
    assert half_plane_counts(R([1j, -1j]), 1e-9) == (0, 0, 2)
    assert half_plane_counts(R([-1 + 1j, -1 - 1j]), 1e-9) == (2, 0, 0)


def test_dual_witness_and_vieta(rng):
    for _ in range(200):
        n = rng.randint(1, 10)
        J = SchwarzMatrix([rand_nonzero(rng) for _ in range(n)])
        p = charpoly(J)
        r = roots(p)
        assert match_error(r.roots, eigenvalues(J).roots) < 1e-6
        a1, an = float(p.a(1)), float(p.a(n))
        assert abs(sum(r.roots) + a1) <= 1e-8 * max(1, abs(a1))
        assert abs(np.prod(r.roots) - (-1) ** n * an) <= 1e-8 * max(1, abs(an))
        for z, res in zip(r.roots, r.residuals):
            c = np.abs(np.array(p.to_floats()))
            assert res <= 1e-8 * (1 + c.max() * (1 + abs(z)) ** n)


def test_roots_needs_degree():
    with pytest.raises(ValueError):
        roots(Poly((Fraction(3),)))
