"""Reconstruct the unique Schwarz matrix with a given polynomial or spectrum.

Every solver funnels into ``schwarz_from_polynomial``; the specialised ones
only add their own precondition checks up front and sign checks at the end.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import config
from .classify import Classification, bebiano_case, classify
from .errors import (CaseMismatch, PatternMismatch, SignPatternPreconditionFailed,
                     SpectrumNotStable, SumNotPositive)
from .hurwitz import hurwitz_determinants
from .polynomial import Poly, Spectrum, from_roots
from .schwarz import SchwarzMatrix, SnView, charpoly, cumulative_products
from .wall import wall_from_determinants, wall_from_euclid


@dataclass(frozen=True)
class InverseReport:
    matrix: SchwarzMatrix
    verdict: Classification
    checked: tuple = ()            # (name, passed) pairs
    view: SnView | None = field(default=None)

    @property
    def b(self) -> tuple:
        return self.matrix.b


def _charpoly_matches(J: SchwarzMatrix, p: Poly) -> bool:
    got, want = charpoly(J).coeffs, p.monic().coeffs
    if len(got) != len(want):
        return False
    if J.exact and p.exact:
        return got == want
    return all(abs(float(g - w)) <= 1e-9 * max(1.0, abs(float(w))) for g, w in zip(got, want))


def schwarz_from_polynomial(p: Poly, checked=()) -> InverseReport:
    p = p.monic()
    t = hurwitz_determinants(p)
    t.require_nonzero()
    wall = wall_from_determinants(p, t)
    J = SchwarzMatrix(wall.b, p.exact)
    checks = list(checked) + [("hurwitz determinants nonzero", True)]
    if p.exact:
        checks.append(("determinant and Euclid routes agree", wall_from_euclid(p).b.b == wall.b))
    checks.append(("charpoly reproduces input", _charpoly_matches(J, p)))
    if not all(ok for _, ok in checks):
        raise RuntimeError(f"inverse postcondition failed: {checks}")
    return InverseReport(J, classify(p), tuple(checks))


def _sorted_spectrum(s: Spectrum) -> Spectrum:
    return Spectrum(s.sorted(), s.exact)


def _require_signs(report: InverseReport, want: str, label: str) -> InverseReport:
    """Postcondition on the sign pattern of b, written as a string of '+'/'-'."""
    got = "".join("+" if x > 0 else "-" for x in report.b)
    ok = got == want
    if not ok:
        raise RuntimeError(f"{label}: expected signs {want}, got {got}")
    return InverseReport(report.matrix, report.verdict, report.checked + ((label, ok),), report.view)


def stable_from_spectrum(s: Spectrum) -> InverseReport:
    s = _sorted_spectrum(s)
    bad = [complex(r) for r in s.roots if not r.re < 0]
    if bad:
        raise SpectrumNotStable(bad)
    report = schwarz_from_polynomial(from_roots(s), [("all roots in open left half-plane", True)])
    return _require_signs(report, "+" * len(s), "all b positive")


def holtz_ladder_violation(s: Spectrum) -> str | None:
    """First failure of l1 > -l2 > l3 > ... > (-1)^(n-1) l_n > 0, or None."""
    for r in s.roots:
        if not s.is_real_root(r):
            return f"nonreal root {complex(r)}"
    lam = sorted((r.re for r in s.roots), key=lambda x: -abs(x))
    terms = [(-1) ** i * x for i, x in enumerate(lam)]
    for i in range(len(terms) - 1):
        if not terms[i] > terms[i + 1]:
            return f"term {i + 1} > term {i + 2} fails ({float(terms[i])} vs {float(terms[i + 1])})"
    if not terms[-1] > 0:
        return f"last term {float(terms[-1])} is not positive"
    return None


def holtz_from_spectrum(s: Spectrum) -> InverseReport:
    s = _sorted_spectrum(s)
    why = holtz_ladder_violation(s)
    if why is not None:
        raise PatternMismatch(why)
    report = schwarz_from_polynomial(from_roots(s), [("alternating ladder", True)])
    return _require_signs(report, "-" * len(s), "all b negative")


def general_from_spectrum(s: Spectrum) -> InverseReport:
    s = _sorted_spectrum(s)
    report = schwarz_from_polynomial(from_roots(s))
    rhp = sum(1 for r in s.roots if r.re > 0)
    ok = cumulative_products(report.matrix).negatives() == rhp
    if not ok:
        raise RuntimeError("negative cumulative products differ from the right half-plane count")
    return InverseReport(report.matrix, report.verdict,
                         report.checked + (("negative products = right half-plane roots", ok),))


# ---------------------------------------------------------------- S_n

def sn_negative_positions(n: int, kappa: int, flavor: str) -> set[int]:
    """Indices j with Delta_j < 0 for an S_n polynomial of the given order."""
    start = n - 2 * kappa + (2 if flavor == "gh" else 1)
    return {start + 4 * i for i in range((kappa - 1) // 2 + 1) if 1 <= start + 4 * i <= n} if kappa else set()


def _flavor(flavor: str) -> str:
    f = flavor.lower().replace("-", "").replace("_", "")
    if f in ("gh", "generalized"):
        return "gh"
    if f in ("almost", "almostgh", "agh"):
        return "almost"
    raise ValueError(f"unknown flavor {flavor!r}")


def sn_from_polynomial(p: Poly, flavor: str = "gh") -> InverseReport:
    p = p.monic()
    n = p.degree
    flavor = _flavor(flavor)
    t = hurwitz_determinants(p)
    t.require_nonzero()
    signs = [t.sign(j) for j in range(1, n + 1)]
    top = (n + 1) // 2 if flavor == "gh" else n // 2
    best = None
    for kappa in range(top + 1):
        neg = sn_negative_positions(n, kappa, flavor)
        wrong = [j for j in range(1, n + 1) if (signs[j - 1] < 0) != (j in neg)]
        if best is None or len(wrong) < len(best[1]):
            best = (kappa, wrong)
    kappa, wrong = best
    if wrong:
        raise SignPatternPreconditionFailed(wrong, f"closest order {kappa}: Delta_{wrong} have the wrong sign")
    k = n - 2 * kappa if flavor == "gh" else n - 2 * kappa - 1
    checks = [(f"determinant sign pattern for order {kappa}", True)]
    report = schwarz_from_polynomial(p, checks)
    if k >= n:
        return _require_signs(report, "+" * n, "stable endpoint: all b positive")
    if k < 0:
        return _require_signs(report, "-" * n, "alternating endpoint: all b negative")
    view = SnView.of(report.matrix)
    ok = view.k == k and view.a > 0
    if not ok:
        raise RuntimeError(f"expected S_n with k={k} and a>0, got k={view.k}, a={view.a}")
    return InverseReport(report.matrix, report.verdict, report.checked + ((f"S_n shape with k={k}", ok),), view)


def sn_from_spectrum(s: Spectrum, flavor: str = "gh") -> InverseReport:
    return sn_from_polynomial(from_roots(_sorted_spectrum(s)), flavor)


# ---------------------------------------------------------------- Bebiano

def bebiano_from_spectrum(s: Spectrum) -> InverseReport:
    s = _sorted_spectrum(s)
    n = len(s)
    case = bebiano_case(s, n)
    if case is None:
        raise CaseMismatch("spectrum matches none of the four admissible distributions")
    a = s.total()
    tol = 0 if s.exact else config.current().eps_zero * (1 + sum(abs(complex(r)) for r in s.roots))
    if a <= tol:
        raise SumNotPositive(f"sum of eigenvalues is {float(a)}")
    checks = [(f"distribution case {case}", True), ("positive eigenvalue sum", True)]
    report = schwarz_from_polynomial(from_roots(s), checks)
    report = _require_signs(report, "-+" + "-" * (n - 2) if n > 1 else "-", "Bebiano sign pattern")
    view = SnView(report.b[0], tuple(abs(x) for x in report.b[1:]), 1 if n > 1 else 0, report.matrix.exact)
    return InverseReport(report.matrix, report.verdict, report.checked, view)


def bebiano_parameters(report: InverseReport) -> tuple[Fraction, tuple]:
    """(a, c) with b = (-a, c_1, -c_2, ..., -c_{n-1})."""
    b = report.b
    return -b[0], tuple(abs(x) for x in b[1:])
