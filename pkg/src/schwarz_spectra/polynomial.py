"""Dense real polynomials over exact rationals, plus spectra.

Coefficients are stored highest degree first as :class:`fractions.Fraction`.
A polynomial built from floating-point data keeps ``exact=False``: its
coefficients are still the exact binary values of those floats, so all
arithmetic stays exact, but zero tests downstream switch to tolerances.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, NamedTuple, Sequence

from . import config
from .errors import ConjugationViolation, ParseError

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


def to_scalar(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"non-finite coefficient {x}")
        return Fraction(x)
    if isinstance(x, str):
        return parse_literal(x, exact=False)
    raise TypeError(f"cannot use {type(x).__name__} as a scalar")


def is_exact_value(x) -> bool:
    if isinstance(x, str):
        return bool(_RATIONAL.match(x.strip()))
    return isinstance(x, (int, Rational)) and not isinstance(x, bool)


def parse_literal(text: str, exact: bool = True) -> Fraction:
    """Parse ``"-3/4"``-style literals; decimals are accepted only when ``exact`` is false."""
    s = str(text).strip()
    if _RATIONAL.match(s):
        value = Fraction(s)
        return value
    if exact:
        raise ParseError(f"not a rational literal: {text!r}")
    try:
        f = float(s)
    except ValueError:
        raise ParseError(f"not a number: {text!r}") from None
    if not math.isfinite(f):
        raise ParseError(f"non-finite literal: {text!r}")
    return Fraction(f)


def format_scalar(x: Fraction, exact: bool = True) -> str:
    if not exact:
        return repr(float(x))
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True, eq=False)
class Poly:
    """Real polynomial, coefficients highest degree first.

    Leading zeros are allowed (formal length is kept, see ``formal_degree``);
    ``degree`` always refers to the trimmed polynomial and is -1 for zero.
    """

    coeffs: tuple
    exact: bool = True

    def __post_init__(self):
        raw = tuple(self.coeffs)
        exact = self.exact and all(is_exact_value(c) or isinstance(c, Fraction) for c in raw)
        object.__setattr__(self, "coeffs", tuple(to_scalar(c) for c in raw))
        object.__setattr__(self, "exact", exact)

    # construction helpers
    @classmethod
    def from_low(cls, low: Sequence, exact: bool = True) -> "Poly":
        return cls(tuple(reversed(list(low))), exact)

    @classmethod
    def z(cls) -> "Poly":
        return cls((1, 0))

    @classmethod
    def const(cls, c, exact: bool = True) -> "Poly":
        return cls((c,), exact)

    # structure
    def trimmed(self) -> "Poly":
        c = self.coeffs
        i = 0
        while i < len(c) and c[i] == 0:
            i += 1
        return self if i == 0 else Poly(c[i:], self.exact)

    @property
    def degree(self) -> int:
        return len(self.trimmed().coeffs) - 1

    @property
    def formal_degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        t = self.trimmed().coeffs
        return t[0] if t else Fraction(0)

    @property
    def low(self) -> list:
        return list(reversed(self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_monic(self) -> bool:
        return self.lead == 1

    def monic_with_scale(self) -> tuple["Poly", Fraction]:
        t = self.trimmed()
        if not t.coeffs:
            raise ValueError("zero polynomial has no monic normalization")
        lead = t.coeffs[0]
        if lead == 1:
            return t, lead
        return Poly(tuple(c / lead for c in t.coeffs), self.exact), lead

    def monic(self) -> "Poly":
        return self.monic_with_scale()[0]

    def a(self, j: int) -> Fraction:
        """Coefficient a_j of z^(n-j) for the trimmed polynomial, zero outside 0..n."""
        t = self.trimmed().coeffs
        return t[j] if 0 <= j < len(t) else Fraction(0)

    def constant_term(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def to_floats(self) -> list[float]:
        return [float(c) for c in self.trimmed().coeffs]

    # arithmetic
    def __call__(self, x):
        acc = 0
        for c in self.coeffs:
            acc = acc * x + (c if isinstance(x, (int, Fraction)) else _as_number(c, x))
        return acc

    def __add__(self, other):
        other = _lift(other)
        a, b = self.low, other.low
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly.from_low(out, self.exact and other.exact).trimmed()

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs), self.exact)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            s = to_scalar(other)
            return Poly(tuple(c * s for c in self.coeffs), self.exact and is_exact_value(other)).trimmed()
        a, b = self.low, other.low
        if not a or not b:
            return Poly((0,), self.exact and other.exact)
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly.from_low(out, self.exact and other.exact).trimmed()

    __rmul__ = __mul__

    def __truediv__(self, s):
        s = to_scalar(s)
        return Poly(tuple(c / s for c in self.coeffs), self.exact)

    def shift(self, k: int = 1) -> "Poly":
        """Multiply by z**k."""
        return Poly(self.coeffs + (Fraction(0),) * k, self.exact)

    def of_square(self, sign: int = 1) -> "Poly":
        """The polynomial z -> P(sign * z**2)."""
        low = self.low
        out = [Fraction(0)] * max(1, 2 * len(low) - 1)
        for i, c in enumerate(low):
            out[2 * i] = c * (sign ** i)
        return Poly.from_low(out, self.exact)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.trimmed().coeffs == other.trimmed().coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.trimmed().coeffs)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        t = self.trimmed().coeffs
        if not t:
            return "0"
        n = len(t) - 1
        parts = []
        for i, c in enumerate(t):
            if c == 0:
                continue
            k = n - i
            mag = abs(c)
            mag_s = format_scalar(mag, self.exact)
            if k == 0:
                body = mag_s
            else:
                body = ("" if mag == 1 else mag_s) + ("z" if k == 1 else f"z^{k}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _lift(x) -> Poly:
    return x if isinstance(x, Poly) else Poly((x,))


def _as_number(c: Fraction, x):
    return float(c) if isinstance(x, (float, complex)) else c


@dataclass(frozen=True)
class EvenOddPair:
    p0: Poly
    p1: Poly

    def reassemble(self) -> Poly:
        return self.p0.of_square() + self.p1.of_square().shift(1)


def even_odd_parts(p: Poly) -> EvenOddPair:
    """Split p(z) = p0(z^2) + z p1(z^2), keeping the formal lengths."""
    low = p.trimmed().low
    return EvenOddPair(Poly.from_low(low[0::2] or [0], p.exact),
                       Poly.from_low(low[1::2] or [0], p.exact))


def assoc_q(p: Poly) -> Poly:
    p = p.monic()
    n = p.degree
    parts = even_odd_parts(p)
    if n % 2 == 1:
        return parts.p0.of_square().trimmed()
    return parts.p1.of_square().shift(1).trimmed()


def reflect(p: Poly) -> Poly:
    """Monic normalization of p(-z)."""
    t = p.monic()
    return Poly(tuple(c if j % 2 == 0 else -c for j, c in enumerate(t.coeffs)), t.exact)


def hurwitz_dual_raw(p: Poly) -> Poly:
    """p0(-z^2) - z p1(-z^2) without normalization; leading coefficient is +-1."""
    parts = even_odd_parts(p.monic())
    return (parts.p0.of_square(-1) - parts.p1.of_square(-1).shift(1)).trimmed()


def hurwitz_dual(p: Poly) -> Poly:
    return hurwitz_dual_raw(p).monic()


def dual_sign(n: int) -> int:
    """Leading coefficient of the raw dual of a monic degree-n polynomial."""
    l = n // 2
    return (-1) ** l if n % 2 == 0 else (-1) ** (l + 1)


def proposition_q(p: Poly, n: int) -> Poly:
    """(-1)^[(n+1)/2] [p0(-z^2) + (-1)^n z p1(-z^2)], no normalization."""
    p = p.monic()
    if p.degree != n:
        raise ValueError(f"degree {p.degree} does not match n={n}")
    parts = even_odd_parts(p)
    inner = parts.p0.of_square(-1) + parts.p1.of_square(-1).shift(1) * ((-1) ** n)
    return (inner * ((-1) ** ((n + 1) // 2))).trimmed()


# ---------------------------------------------------------------- spectra

class Root(NamedTuple):
    re: Fraction
    im: Fraction

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def conj(self) -> "Root":
        return Root(self.re, -self.im)


def _root_of(x) -> tuple[Root, bool]:
    if isinstance(x, Root):
        return x, True
    if isinstance(x, complex):
        return Root(to_scalar(x.real), to_scalar(x.imag)), False
    if isinstance(x, tuple) and len(x) == 2:
        return Root(to_scalar(x[0]), to_scalar(x[1])), is_exact_value(x[0]) and is_exact_value(x[1])
    return Root(to_scalar(x), Fraction(0)), is_exact_value(x)


@dataclass(frozen=True)
class Spectrum:
    """A multiset of roots; order is not significant."""

    roots: tuple
    exact: bool = True

    @classmethod
    def of(cls, values: Iterable, exact: bool | None = None) -> "Spectrum":
        roots, flags = [], []
        for v in values:
            r, e = _root_of(v)
            roots.append(r)
            flags.append(e)
        if exact is None:
            exact = all(flags)
        return cls(tuple(roots), exact)

    def __len__(self):
        return len(self.roots)

    def sorted(self) -> tuple:
        return tuple(sorted(self.roots, key=lambda r: (r.re, r.im)))

    def as_complex(self) -> list[complex]:
        return [complex(r) for r in self.roots]

    def is_real_root(self, r: Root) -> bool:
        if self.exact:
            return r.im == 0
        tol = config.current().eps_im
        return abs(float(r.im)) <= tol * (1 + abs(complex(r)))

    def total(self) -> Fraction:
        return sum((r.re for r in self.roots), Fraction(0))


def from_roots(s: Spectrum) -> Poly:
    """Monic real polynomial with the given roots."""
    reals, upper, lower = [], [], []
    for r in s.sorted():
        if s.is_real_root(r):
            reals.append(r.re)
        elif r.im > 0:
            upper.append(r)
        else:
            lower.append(r)
    factors = [Poly((1, -x)) for x in reals]
    if s.exact:
        pool = list(lower)
        for r in upper:
            try:
                pool.remove(r.conj())
            except ValueError:
                raise ConjugationViolation(complex(r)) from None
            factors.append(Poly((1, -2 * r.re, r.re * r.re + r.im * r.im)))
        if pool:
            raise ConjugationViolation(complex(pool[0]))
    else:
        eps = config.current().eps_conj
        pool = list(lower)
        for r in upper:
            zr = complex(r)
            if not pool:
                raise ConjugationViolation(zr)
            best = min(range(len(pool)), key=lambda i: abs(complex(pool[i]) - zr.conjugate()))
            partner = pool[best]
            if abs(complex(partner) - zr.conjugate()) > eps * (1 + abs(zr)):
                raise ConjugationViolation(zr)
            pool.pop(best)
            re_ = (r.re + partner.re) / 2
            im_ = (r.im - partner.im) / 2
            factors.append(Poly((1, -2 * re_, re_ * re_ + im_ * im_)))
        if pool:
            raise ConjugationViolation(complex(pool[0]))
    out = Poly((1,))
    for f in factors:
        out = out * f
    return Poly(out.coeffs, s.exact)
