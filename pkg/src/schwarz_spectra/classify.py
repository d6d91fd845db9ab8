"""Generalized-Hurwitz classification from Hurwitz determinants and from roots.

The determinant side reads the order from Frobenius sign changes of every
other Hurwitz determinant. The root side checks the zero-distribution
definition clause by clause and serves as an independent witness.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from . import config
from .errors import (BoundaryZero, DegenerateHurwitz, PreconditionFailed, ToleranceAmbiguity,
                     VanishesAtZero)
from .hurwitz import HurwitzTable, frobenius_sign_changes, hurwitz_determinants
from .polynomial import Poly, Root, Spectrum, hurwitz_dual, reflect


class Kind(str, enum.Enum):
    HURWITZ_STABLE = "HurwitzStable"
    GENERALIZED = "GeneralizedHurwitz"
    ALMOST = "AlmostGeneralizedHurwitz"
    SELF_INTERLACING = "SelfInterlacing"
    NOT_CLASSIFIED = "NotClassified"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    hw_type: str | None = None
    order: int | None = None
    notes: tuple = field(default=(), compare=False)

    @property
    def kappa(self) -> int | None:
        """Order with the stable case read as type I of order 0."""
        if self.kind is Kind.HURWITZ_STABLE:
            return 0
        return self.order

    @property
    def effective_type(self) -> str | None:
        return "I" if self.kind is Kind.HURWITZ_STABLE else self.hw_type

    def key(self) -> tuple:
        return (self.kind.value, self.hw_type, self.order)

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "type": self.hw_type, "order": self.order,
                "notes": list(self.notes)}

    def __str__(self):
        if self.kind in (Kind.HURWITZ_STABLE, Kind.NOT_CLASSIFIED):
            return self.kind.value
        if self.kind is Kind.SELF_INTERLACING:
            return f"SelfInterlacing type {self.hw_type}"
        return f"{self.kind.value} type {self.hw_type}, order {self.order}"


NOT_CLASSIFIED = Classification(Kind.NOT_CLASSIFIED)


class Membership(NamedTuple):
    family: str      # "GH" or "AGH"
    hw_type: str     # "I" or "II"
    order: int


def make_verdict(family: str, hw_type: str, order: int, n: int, vanishes_at_zero: bool = False,
                 notes=()) -> Classification:
    """Turn one membership into the reported verdict, promoting the named special cases."""
    d = (n + 1) // 2
    notes = tuple(notes)
    if family == "GH":
        if hw_type == "I" and order == 0:
            return Classification(Kind.HURWITZ_STABLE, notes=notes)
        if order == d and not vanishes_at_zero:
            return Classification(Kind.SELF_INTERLACING, hw_type, d, notes)
        return Classification(Kind.GENERALIZED, hw_type, order, notes)
    if hw_type == "I" and order == 0:
        return Classification(Kind.HURWITZ_STABLE, notes=notes)
    if order == n // 2:
        # z p(z) then has the largest possible order, which forces strict interlacing
        return Classification(Kind.SELF_INTERLACING, "II" if hw_type == "I" else "I", d, notes)
    if order == 0:
        # a reflected-stable polynomial is generalized of order 0 as well
        return Classification(Kind.GENERALIZED, "II", 0, notes)
    return Classification(Kind.ALMOST, hw_type, order, notes)


# ---------------------------------------------------------------- determinant side

class _Test(NamedTuple):
    member: bool
    order: int | None
    note: str | None = None


def _signs(t: HurwitzTable, indices) -> list[int]:
    """Signs of Delta_j; exact zeros stay 0, float near-zeros raise."""
    return [t.sign(j) for j in indices]


def _gh_type_one(p: Poly, t: HurwitzTable | None = None) -> _Test:
    t = t or hurwitz_determinants(p)
    n = t.n
    try:
        crit = _signs(t, range(n - 1, 0, -2))
        if any(s == 0 for s in crit):
            j = n - 1 - 2 * crit.index(0)
            return _Test(False, None, f"Delta_{j} = 0 in the criterion entries")
        if any(s < 0 for s in crit):
            return _Test(False, None)
        if p.monic().constant_term() != 0:
            seq = _signs(t, range(n, 0, -2)) + [1]
            return _Test(True, frobenius_sign_changes(seq))
        seq = _signs(t, range(n - 2, 0, -2)) + [1]
        return _Test(True, frobenius_sign_changes(seq) + 1)
    except DegenerateHurwitz as exc:
        return _Test(False, None, str(exc))
    except BoundaryZero:
        return _Test(False, None, "leading entry of the order sequence vanishes")


def _agh_type_one(p: Poly, t: HurwitzTable | None = None) -> _Test:
    t = t or hurwitz_determinants(p)
    n = t.n
    try:
        crit = _signs(t, range(n, 0, -2))
        if any(s == 0 for s in crit):
            j = n - 2 * crit.index(0)
            return _Test(False, None, f"Delta_{j} = 0 in the criterion entries")
        if any(s < 0 for s in crit):
            return _Test(False, None)
        seq = _signs(t, range(n - 1, 0, -2)) + [1]
        return _Test(True, frobenius_sign_changes(seq))
    except DegenerateHurwitz as exc:
        return _Test(False, None, str(exc))
    except BoundaryZero:
        return _Test(False, None, "leading entry of the order sequence vanishes")


def _vanishes_at_zero(p: Poly) -> bool:
    return p.monic().constant_term() == 0


def generalized_hurwitz(p: Poly) -> Classification:
    p = p.monic()
    n = p.degree
    notes = []
    for hw_type, poly in (("I", p), ("II", reflect(p))):
        test = _gh_type_one(poly)
        if test.member:
            return make_verdict("GH", hw_type, test.order, n, _vanishes_at_zero(p))
        if test.note:
            notes.append(f"type {hw_type}: {test.note}")
    return Classification(Kind.NOT_CLASSIFIED, notes=tuple(notes))


def almost_generalized_hurwitz(p: Poly) -> Classification:
    p = p.monic()
    if _vanishes_at_zero(p):
        raise VanishesAtZero()
    n = p.degree
    notes = []
    for hw_type, poly in (("I", p), ("II", reflect(p))):
        test = _agh_type_one(poly)
        if test.member:
            if p.exact:
                # z p(z) must be generalized Hurwitz of order one higher
                shifted = _gh_type_one(poly.shift(1))
                if not (shifted.member and shifted.order == test.order + 1):
                    raise RuntimeError(f"z*p(z) check failed for {p}: {shifted}")
            return make_verdict("AGH", hw_type, test.order, n)
        if test.note:
            notes.append(f"type {hw_type}: {test.note}")
    return Classification(Kind.NOT_CLASSIFIED, notes=tuple(notes))


def memberships(p: Poly) -> list[Membership]:
    """Every (family, type, order) the determinant criteria certify."""
    p = p.monic()
    out = []
    for hw_type, poly in (("I", p), ("II", reflect(p))):
        t = hurwitz_determinants(poly)
        g = _gh_type_one(poly, t)
        if g.member:
            out.append(Membership("GH", hw_type, g.order))
        if not _vanishes_at_zero(p):
            a = _agh_type_one(poly, t)
            if a.member:
                out.append(Membership("AGH", hw_type, a.order))
    return out


def _combine(n: int, zero_root: bool, tests) -> Classification:
    """Shared decision order: type I before type II, generalized before almost."""
    notes = []
    for hw_type, g, a in tests:
        if g.member and a is not None and a.member:
            if g.order != 0 or a.order != 0:
                raise RuntimeError(f"generalized and almost generalized with orders {g.order}, {a.order}")
            if hw_type == "I":
                return Classification(Kind.HURWITZ_STABLE, notes=("generalized and almost generalized",))
            return Classification(Kind.GENERALIZED, "II", 0, ("generalized and almost generalized",))
        if g.member:
            return make_verdict("GH", hw_type, g.order, n, zero_root)
        if a is not None and a.member:
            return make_verdict("AGH", hw_type, a.order, n)
        for t in (g, a):
            if t is not None and t.note:
                notes.append(f"type {hw_type}: {t.note}")
    return Classification(Kind.NOT_CLASSIFIED, notes=tuple(dict.fromkeys(notes)))


def classify(p: Poly) -> Classification:
    """Full verdict for a polynomial from its Hurwitz determinants."""
    p = p.monic()
    n = p.degree
    zero_root = _vanishes_at_zero(p)
    tests = []
    for hw_type, poly in (("I", p), ("II", reflect(p))):
        t = hurwitz_determinants(poly)
        tests.append((hw_type, _gh_type_one(poly, t), None if zero_root else _agh_type_one(poly, t)))
    return _combine(n, zero_root, tests)


# ---------------------------------------------------------------- root side

@dataclass(frozen=True)
class RootCertificate:
    """Outcome of checking the type I zero-distribution definition."""

    order: int | None
    mu: tuple = ()
    failed: str | None = None

    @property
    def ok(self) -> bool:
        return self.failed is None


class _RealRoots:
    """Distinct real roots with multiplicities, exact or clustered."""

    def __init__(self, values, exact: bool):
        self.exact = exact
        tol = config.current().cluster
        vals = sorted(values)
        groups: list[list] = []
        for v in vals:
            if groups and (v == groups[-1][-1] if exact
                           else abs(float(v) - float(groups[-1][-1])) <= tol * (1 + abs(float(v)))):
                groups[-1].append(v)
            else:
                groups.append([v])
        self.points = [(g[len(g) // 2], len(g)) for g in groups]

    def is_zero(self, x) -> bool:
        if self.exact:
            return x == 0
        return abs(float(x)) <= config.current().cluster

    def near(self, x, y) -> bool:
        if self.exact:
            return x == y
        return abs(float(x) - float(y)) <= config.current().cluster * (1 + abs(float(y)))


def _split(s: Spectrum):
    reals, nonreal = [], []
    for r in s.roots:
        if s.is_real_root(r):
            reals.append(r.re)
        else:
            nonreal.append(r)
    return reals, nonreal


def verify_root_distribution(s: Spectrum, n: int | None = None) -> RootCertificate:
    """Check the type I generalized-Hurwitz definition on a root multiset.

    Returns the certified order, or the first failing clause.
    """
    n = len(s) if n is None else n
    if n != len(s):
        raise ValueError("root count does not match the degree")
    reals, nonreal = _split(s)
    for r in nonreal:
        if r.re >= 0:
            return RootCertificate(None, failed="nonreal zero outside the open left half-plane")
    rr = _RealRoots(reals, s.exact)
    pts = [(0 if rr.is_zero(x) else x, m) for x, m in rr.points]
    nonneg = [(x, m) for x, m in pts if x >= 0]
    negative = [(x, m) for x, m in pts if x < 0]
    if any(m > 1 for _, m in nonneg):
        return RootCertificate(None, failed="zero in the closed right half-plane is not simple")
    mu = tuple(x for x, _ in nonneg)
    kappa = len(mu)
    if kappa == 0:
        return RootCertificate(0, mu)
    if kappa > (n + 1) // 2:
        return RootCertificate(None, mu, "more than [(n+1)/2] zeros in the closed right half-plane")
    for i, m_i in enumerate(mu):
        if i == 0 and m_i == 0:
            continue
        for x, _ in negative:
            if rr.near(x, -m_i):
                if not s.exact and x != -m_i:
                    raise ToleranceAmbiguity(f"root {float(x)} sits on the boundary -mu_{i + 1}")
                return RootCertificate(None, mu, f"p(-mu_{i + 1}) = 0")

    def count(lo, hi):
        return sum(m for x, m in negative if lo < x < hi)

    for i in range(kappa - 1):
        if count(-mu[i + 1], -mu[i]) % 2 != 1:
            return RootCertificate(None, mu, f"even number of zeros on (-mu_{i + 2}, -mu_{i + 1})")
    if count(-mu[0], 0) % 2 != 0:
        return RootCertificate(None, mu, "odd number of zeros on (-mu_1, 0)")
    tail = sum(m for x, m in negative if x < -mu[-1])
    if tail % 2 != (1 if n % 2 == 0 else 0):
        return RootCertificate(None, mu, "wrong parity of zeros on (-inf, -mu_kappa)")
    return RootCertificate(kappa, mu)


def _negated(s: Spectrum) -> Spectrum:
    return Spectrum(tuple(Root(-r.re, -r.im) for r in s.roots), s.exact)


def _with_zero(s: Spectrum) -> Spectrum:
    return Spectrum(s.roots + (Root(Fraction(0), Fraction(0)),), s.exact)


def classify_roots(s: Spectrum) -> Classification:
    """Verdict computed from the roots alone, mirroring :func:`classify`."""
    n = len(s)
    reals, _ = _split(s)
    rr = _RealRoots(reals, s.exact)
    zero_root = any(rr.is_zero(x) for x, _ in rr.points)
    tests = []
    for hw_type, roots in (("I", s), ("II", _negated(s))):
        g = verify_root_distribution(roots)
        gt = _Test(g.ok, g.order)
        at = None
        if not zero_root:
            a = verify_root_distribution(_with_zero(roots))
            at = _Test(a.ok, a.order - 1 if a.ok else None)
        tests.append((hw_type, gt, at))
    return _combine(n, zero_root, tests)


def self_interlacing(s: Spectrum) -> str | None:
    """'I' for 0 < l1 < -l2 < l3 < ..., 'II' for 0 < -l1 < l2 < ..., else None."""
    reals, nonreal = _split(s)
    if nonreal or not reals:
        return None
    ordered = sorted(reals, key=lambda x: (abs(x), x))
    if any(x == 0 for x in ordered):
        return None
    if any(not abs(a) < abs(b) for a, b in zip(ordered, ordered[1:])):
        return None
    signs = [1 if x > 0 else -1 for x in ordered]
    if any(a == b for a, b in zip(signs, signs[1:])):
        return None
    return "I" if signs[0] > 0 else "II"


def _gh_membership(p: Poly, hw_type: str) -> _Test:
    return _gh_type_one(p if hw_type == "I" else reflect(p))


def duality_order_check(p: Poly) -> tuple[int, int]:
    """Orders of p and of p0(-z^2) - z p1(-z^2); they must sum to [(n+1)/2]."""
    p = p.monic()
    if _vanishes_at_zero(p):
        raise VanishesAtZero()
    n = p.degree
    verdict = generalized_hurwitz(p)
    if verdict.kind is Kind.NOT_CLASSIFIED:
        raise PreconditionFailed(f"{p} is not generalized Hurwitz")
    hw_type, kp = verdict.effective_type, verdict.kappa
    q = hurwitz_dual(p)
    dual = _gh_membership(q, hw_type)
    kq = (n + 1) // 2 - kp
    if not dual.member or dual.order != kq:
        raise AssertionError(f"duality violated for {p}: dual {q} gives {dual}, expected order {kq}")
    return kp, kq


# ---------------------------------------------------------------- Bebiano spectra

def bebiano_case(s: Spectrum, n: int | None = None) -> int | None:
    """Which of the four admissible eigenvalue layouts of the Bebiano matrix s follows.

    Real roots are read in order of increasing modulus. Counted from the
    largest, they alternate negative, positive, ...; cases 2-4 have exactly one
    of the negative slots taken by an extra positive root (first slot: case 2,
    last slot: case 4, interior: case 3), with non-strict order against its
    positive neighbours. Case 1 keeps the pure alternation and adds one
    conjugate pair with positive real part.
    """
    n = len(s) if n is None else n
    if n != len(s) or n == 0:
        return None
    reals, nonreal = _split(s)
    if any(x == 0 for x in reals):
        return None
    if nonreal:
        if len(nonreal) != 2 or not (nonreal[0].re > 0 and nonreal[1].re > 0):
            return None
        z0, z1 = complex(nonreal[0]), complex(nonreal[1])
        if s.exact and nonreal[0] != nonreal[1].conj():
            return None
        if not s.exact and abs(z0 - z1.conjugate()) > config.current().eps_conj * (1 + abs(z0)):
            return None
    ordered = sorted(reals, key=lambda x: (abs(x), x))
    m = len(ordered)
    base = [(-1) ** (m - j + 1) for j in range(1, m + 1)]
    actual = [1 if x > 0 else -1 for x in ordered]
    flips = [j for j in range(m) if actual[j] != base[j]]
    if any(base[j] > 0 for j in flips):
        return None
    if nonreal:
        if flips:
            return None
        weak: set = set()
        slot = None
    else:
        if len(flips) != 1:
            return None
        slot = flips[0]
        weak = {slot - 1, slot}     # relation index i compares entries i and i+1
    mags = [abs(x) for x in ordered]
    for i in range(m - 1):
        if i in weak:
            if not mags[i] <= mags[i + 1]:
                return None
        elif not mags[i] < mags[i + 1]:
            return None
    if slot is None:
        return 1
    if slot == m - 1:
        return 4
    first_negative = 0 if n % 2 == 1 else 1
    return 2 if slot == first_negative else 3
