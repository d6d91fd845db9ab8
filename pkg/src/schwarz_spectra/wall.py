"""Wall continued fractions: q/p = b0 / (z + b0 + b1 / (z + b2 / (... + b_{n-1} / z))).

Two independent routes produce b0..b_{n-1} from p: ratios of Hurwitz
determinants, and a Sturm-type recursion on even/odd polynomials. The
recursion is the default; the determinant route is the cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateHurwitz, DegreeCollapse
from .hurwitz import HurwitzTable, hurwitz_determinants
from .polynomial import Poly, assoc_q


@dataclass(frozen=True)
class WallCoefficients:
    b: tuple
    exact: bool = True

    def __post_init__(self):
        if not self.b:
            raise ValueError("empty coefficient vector")
        if any(x == 0 for x in self.b):
            raise ValueError("Wall coefficients must be nonzero")

    def __len__(self):
        return len(self.b)


@dataclass(frozen=True)
class SturmTrace:
    polys: tuple            # f_0 .. f_{n-1}
    b: WallCoefficients


def wall_from_determinants(p: Poly, table: HurwitzTable | None = None) -> WallCoefficients:
    p = p.monic()
    t = table or hurwitz_determinants(p)
    t.require_nonzero()
    d = t.delta
    b = [d(1)]
    for k in range(1, t.n):
        b.append(d(k - 2) * d(k + 1) / (d(k - 1) * d(k)))
    return WallCoefficients(tuple(b), p.exact)


def _part(f: Poly, top: int) -> Poly:
    """Keep only the coefficients of z^top and below."""
    low = f.low[: top + 1]
    low += [Fraction(0)] * (top + 1 - len(low))
    return Poly.from_low(low, f.exact)


def wall_from_euclid(p: Poly) -> SturmTrace:
    p = p.monic()
    n = p.degree
    if n < 1:
        raise ValueError("degree must be at least 1")
    z = Poly.z()
    q = _part(assoc_q(p), n - 1)
    b0 = q.coeffs[0]
    if b0 == 0:
        raise DegreeCollapse(1)
    fs = [p, q / b0]
    bs = [b0]
    for k in range(1, n):
        shift = z + b0 if k == 1 else z
        rem = fs[k - 1] - shift * fs[k]
        top = n - k - 1
        # the two leading orders cancel identically; anything left there is a bug
        if rem.degree > top:
            raise RuntimeError(f"Sturm step {k} failed to cancel: {rem}")
        rem = _part(rem, top)
        bk = rem.coeffs[0]
        if bk == 0:
            raise DegreeCollapse(k + 1)
        bs.append(bk)
        if k < n - 1:
            fs.append(rem / bk)
    return SturmTrace(tuple(Poly(f.coeffs, p.exact) for f in fs[:n]), WallCoefficients(tuple(bs), p.exact))


def wall_coefficients(p: Poly) -> WallCoefficients:
    """Default public route. Float-backend inputs also pass the tolerance check."""
    if not p.exact:
        hurwitz_determinants(p).require_nonzero()
    return wall_from_euclid(p).b


def cf_evaluate(b) -> tuple[Poly, Poly]:
    """Collapse the finite continued fraction bottom-up into (numerator, denominator)."""
    if isinstance(b, WallCoefficients):
        exact, b = b.exact, list(b.b)
    else:
        b = list(b)
        exact = True
    if not b or any(x == 0 for x in b):
        raise ValueError("need a nonempty vector of nonzero coefficients")
    z = Poly.z()
    n = len(b)
    if n == 1:
        num, den = Poly((b[0],)), z + b[0]
        return Poly(num.coeffs, exact), Poly(den.coeffs, exact)
    # innermost tail b_{n-1} / z
    num, den = Poly((b[n - 1],)), z
    for k in range(n - 2, 0, -1):
        # b_k / (z + num/den) = b_k den / (z den + num)
        num, den = den * b[k], z * den + num
    num, den = den * b[0], (z + b[0]) * den + num
    return Poly(num.coeffs, exact), Poly(den.coeffs, exact)


__all__ = [
    "WallCoefficients", "SturmTrace", "wall_from_determinants", "wall_from_euclid",
    "wall_coefficients", "cf_evaluate", "DegenerateHurwitz",
]
