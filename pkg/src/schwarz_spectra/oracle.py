"""Numerical ground truth: polished polynomial roots and dense eigenvalues.

Everything here runs in IEEE doubles through numpy and is deliberately
independent of the exact machinery it is used to check.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceFailure
from .polynomial import Poly

MAX_POLISH = 200


@dataclass(frozen=True)
class RootSet:
    roots: tuple
    residuals: tuple = ()

    def __len__(self):
        return len(self.roots)

    def sorted(self) -> list[complex]:
        return sorted(self.roots, key=lambda z: (round(z.real, 9), round(z.imag, 9)))

    @property
    def real_parts(self) -> list[float]:
        return [z.real for z in self.roots]


def _horner(c: np.ndarray, z: complex) -> tuple[complex, complex]:
    """p(z) and p'(z) for highest-first coefficients."""
    val, der = 0j, 0j
    for a in c:
        der = der * z + val
        val = val * z + a
    return val, der


def _bound(c: np.ndarray, z: complex) -> float:
    n = len(c) - 1
    return 1e-8 * (1 + np.max(np.abs(c)) * (1 + abs(z)) ** n)


def _polish(c: np.ndarray, z: complex) -> tuple[complex, float]:
    val, der = _horner(c, z)
    res = abs(val)
    for _ in range(MAX_POLISH):
        if res == 0 or der == 0:
            break
        cand = z - val / der
        v2, d2 = _horner(c, cand)
        if not abs(v2) < res:
            break
        z, val, der, res = cand, v2, d2, abs(v2)
    return z, res


def roots(p: Poly) -> RootSet:
    if p.degree < 1:
        raise ValueError("roots need degree >= 1")
    c = np.array(p.monic().to_floats(), dtype=float)
    raw = np.roots(c)
    out, res = [], []
    for z in raw:
        z, r = _polish(c, complex(z))
        if r > _bound(c, z):
            raise ConvergenceFailure(f"residual {r:.3e} at {z} after {MAX_POLISH} polishing steps")
        out.append(z)
        res.append(r)
    return RootSet(tuple(out), tuple(res))


def eigenvalues(J) -> RootSet:
    """Eigenvalues of the dense Schwarz matrix, a second witness next to ``roots(charpoly(J))``."""
    m = np.array([[float(x) for x in row] for row in J.dense()])
    try:
        vals = np.linalg.eigvals(m)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from None
    return RootSet(tuple(complex(z) for z in vals))


def half_plane_counts(r: RootSet, eps: float = 1e-9) -> tuple[int, int, int]:
    lhp = rhp = boundary = 0
    for z in r.roots:
        if abs(z.real) <= eps:
            boundary += 1
        elif z.real < 0:
            lhp += 1
        else:
            rhp += 1
    return lhp, rhp, boundary


def match_error(a, b) -> float:
    """Largest distance after optimally matching two equal-size complex multisets."""
    from scipy.optimize import linear_sum_assignment

    a = np.asarray(list(a), dtype=complex)
    b = np.asarray(list(b), dtype=complex)
    if a.shape != b.shape:
        return float("inf")
    cost = np.abs(a[:, None] - b[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max()) if len(a) else 0.0
