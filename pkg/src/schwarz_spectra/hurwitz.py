"""Hurwitz determinants, sign-change counters and Routh-Hurwitz counting."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import config
from .errors import BoundaryZero, DegenerateHurwitz, ZeroEntry
from .polynomial import Poly


def hurwitz_matrix(p: Poly, size: int | None = None) -> list[list[Fraction]]:
    """Rows a1 a3 a5 ... / 1 a2 a4 ... / 0 a1 a3 ... of a monic p."""
    p = p.monic()
    n = p.degree
    size = n if size is None else size
    return [[p.a(2 * c - r + 1) if 0 <= 2 * c - r + 1 <= n else Fraction(0)
             for c in range(size)] for r in range(size)]


def _det_int(m: list[list[int]]) -> int:
    """Bareiss determinant with row pivoting (integer entries)."""
    m = [row[:] for row in m]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        piv = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (piv * m[i][j] - m[i][k] * m[k][j]) // prev
        prev = piv
    return sign * m[n - 1][n - 1] if n else 1


def leading_minors(m: list[list[int]]) -> list[int]:
    """All leading principal minors of an integer matrix in one Bareiss pass.

    Without pivoting the k-th pivot is the k-th leading minor; after a zero
    pivot the remaining minors fall back to independent determinants.
    """
    n = len(m)
    work = [row[:] for row in m]
    out: list[int] = []
    prev = 1
    for k in range(n):
        piv = work[k][k]
        out.append(piv)
        if piv == 0:
            for j in range(k + 2, n + 1):
                out.append(_det_int([row[:j] for row in m[:j]]))
            return out
        for i in range(k + 1, n):
            wik = work[i][k]
            row_i = work[i]
            row_k = work[k]
            for j in range(k + 1, n):
                row_i[j] = (piv * row_i[j] - wik * row_k[j]) // prev
        prev = piv
    return out


@dataclass(frozen=True)
class HurwitzTable:
    """Delta_1..Delta_n of a monic polynomial; ``delta(j)`` is 1 for j <= 0."""

    deltas: tuple
    exact: bool = True
    scales: tuple = ()

    @property
    def n(self) -> int:
        return len(self.deltas)

    def delta(self, j: int) -> Fraction:
        if j <= 0:
            return Fraction(1)
        return self.deltas[j - 1]

    def sign(self, j: int) -> int:
        """Sign of Delta_j; raises DegenerateHurwitz on a float-backend near-zero."""
        d = self.delta(j)
        if j <= 0 or self.exact:
            return (d > 0) - (d < 0)
        eps = config.current().eps_zero
        if abs(float(d)) <= eps * self.scales[j - 1] or d == 0:
            raise DegenerateHurwitz(j, f"Delta_{j} = {float(d):.3e} is numerically zero")
        return 1 if d > 0 else -1

    def is_zero(self, j: int) -> bool:
        if j <= 0:
            return False
        if self.exact:
            return self.deltas[j - 1] == 0
        try:
            self.sign(j)
        except DegenerateHurwitz:
            return True
        return False

    def first_zero(self) -> int | None:
        return next((j for j in range(1, self.n + 1) if self.is_zero(j)), None)

    def require_nonzero(self) -> None:
        j = self.first_zero()
        if j is not None:
            if not self.exact:
                self.sign(j)  # raises with the numeric detail
            raise DegenerateHurwitz(j)

    def as_floats(self) -> list[float]:
        return [float(d) for d in self.deltas]


def hurwitz_determinants(p: Poly) -> HurwitzTable:
    p = p.monic()
    n = p.degree
    if n < 1:
        raise ValueError("Hurwitz determinants need degree >= 1")
    h = hurwitz_matrix(p)
    den = math.lcm(*(c.denominator for c in p.coeffs))
    ints = [[int(x * den) for x in row] for row in h]
    minors = leading_minors(ints)
    deltas = tuple(Fraction(m, den ** (j + 1)) for j, m in enumerate(minors))
    scales: tuple = ()
    if not p.exact:
        scales = tuple(_sensitivity(p, j, deltas[j - 1]) for j in range(1, n + 1))
    return HurwitzTable(deltas, p.exact, scales)


def _sensitivity(p: Poly, j: int, delta: Fraction) -> float:
    """First-order change in Delta_j when every a_i moves by its natural size.

    The natural size of a_i is max(|a_i|, rho^i) with rho = max |a_i|^(1/i),
    a root-size estimate, so a coefficient that is small only through
    cancellation is not mistaken for a precise one. Partials come from the cofactors Delta_j * inv(H_j)^T; a
    singular block counts as infinitely sensitive.
    """
    if delta == 0:
        return math.inf
    n = p.degree
    top = max(n, 2 * j)
    coeffs = np.array([float(p.a(i)) if i <= n else 0.0 for i in range(top + 1)])
    rho = max(abs(coeffs[i]) ** (1.0 / i) for i in range(1, n + 1))
    idx = np.array([[2 * c - r + 1 for c in range(j)] for r in range(j)])
    block = np.where((idx >= 0) & (idx <= n), coeffs[np.clip(idx, 0, top)], 0.0)
    try:
        inv = np.linalg.inv(block)
    except np.linalg.LinAlgError:
        return math.inf
    grad = float(delta) * inv.T
    total = 0.0
    for i in range(1, n + 1):
        mask = idx == i
        if mask.any():
            total += max(abs(coeffs[i]), rho ** i) * abs(grad[mask].sum())
    return total if math.isfinite(total) else math.inf


# ---------------------------------------------------------------- sign changes

def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def sign_changes(seq: Sequence) -> int:
    """Number of adjacent sign flips; every entry must be nonzero."""
    signs = []
    for i, x in enumerate(seq):
        s = _sgn(x)
        if s == 0:
            raise ZeroEntry(i)
        signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def frobenius_signs(seq: Sequence) -> list[int]:
    """Signs with interior zero runs filled in by the Frobenius rule."""
    if not seq:
        return []
    if _sgn(seq[0]) == 0:
        raise BoundaryZero(0)
    if _sgn(seq[-1]) == 0:
        raise BoundaryZero(len(seq) - 1)
    out = []
    anchor = 0
    nu = 0
    for x in seq:
        s = _sgn(x)
        if s != 0:
            anchor, nu = s, 0
            out.append(s)
        else:
            nu += 1
            out.append((-1) ** (nu * (nu - 1) // 2) * anchor)
    return out


def frobenius_sign_changes(seq: Sequence) -> int:
    signs = frobenius_signs(seq)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


# ---------------------------------------------------------------- Routh-Hurwitz

def _table_signs(t: HurwitzTable) -> list[int]:
    t.require_nonzero()
    return [t.sign(j) for j in range(1, t.n + 1)]


def rhp_root_count(p: Poly, table: HurwitzTable | None = None) -> int:
    """Number of roots in the open right half-plane (all Delta_j must be nonzero)."""
    t = table or hurwitz_determinants(p)
    s = _table_signs(t)
    ratio_form = [1, s[0]] + [s[j] * s[j - 1] for j in range(1, t.n)]
    m = sign_changes(ratio_form)
    odd = [1] + s[0::2]
    even = [1] + s[1::2]
    split = sign_changes(odd) + sign_changes(even)
    if split != m:
        raise RuntimeError(f"Routh-Hurwitz forms disagree: {m} vs {split}")
    return m


def is_hurwitz_stable(p: Poly) -> bool:
    t = hurwitz_determinants(p)
    try:
        return all(t.sign(j) > 0 for j in range(1, t.n + 1))
    except DegenerateHurwitz:
        return False
