"""Schwarz matrices and the sign-pattern theorems for their spectra.

J has -b0 in the (1,1) corner, ones on the superdiagonal and -b1..-b_{n-1}
on the subdiagonal. Its characteristic polynomial only depends on the
products of opposite off-diagonal entries, which is what every recurrence
below relies on.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classify import NOT_CLASSIFIED, Classification, Kind, make_verdict
from .errors import InvalidPattern
from .polynomial import Poly, is_exact_value, proposition_q, to_scalar


@dataclass(frozen=True)
class SchwarzMatrix:
    b: tuple
    exact: bool = True

    def __post_init__(self):
        raw = tuple(self.b)
        if not raw:
            raise ValueError("empty Schwarz matrix")
        exact = self.exact and all(is_exact_value(x) for x in raw)
        vals = tuple(to_scalar(x) for x in raw)
        if any(x == 0 for x in vals):
            raise ValueError("Schwarz matrix entries b_k must be nonzero")
        object.__setattr__(self, "b", vals)
        object.__setattr__(self, "exact", exact)

    @property
    def n(self) -> int:
        return len(self.b)

    def dense(self) -> list[list[Fraction]]:
        n = self.n
        m = [[Fraction(0)] * n for _ in range(n)]
        m[0][0] = -self.b[0]
        for i in range(n - 1):
            m[i][i + 1] = Fraction(1)
            m[i + 1][i] = -self.b[i + 1]
        return m

    def negated(self) -> "SchwarzMatrix":
        """Schwarz form of -J: only b0 changes sign."""
        return SchwarzMatrix((-self.b[0],) + self.b[1:], self.exact)


def _tridiagonal_charpolys(diag, offprod, exact=True) -> list[Poly]:
    """det(zE - T_k) for all trailing blocks T_k of a tridiagonal T.

    ``offprod[i]`` is T[i][i+1] * T[i+1][i]. Returns f_0..f_n with f_n = 1.
    """
    n = len(diag)
    z = Poly.z()
    f = [None] * (n + 1)
    f[n] = Poly((1,))
    f[n - 1] = z - diag[n - 1]
    for k in range(n - 2, -1, -1):
        f[k] = (z - diag[k]) * f[k + 1] - f[k + 2] * offprod[k]
    return [Poly(g.coeffs, exact) for g in f]


def trailing_charpolys(J: SchwarzMatrix) -> list[Poly]:
    """f_0..f_{n-1}: characteristic polynomials after deleting the first k rows and columns."""
    diag = [-J.b[0]] + [Fraction(0)] * (J.n - 1)
    # (i, i+1) entry 1 times (i+1, i) entry -b_{i+1}
    offprod = [-J.b[i + 1] for i in range(J.n - 1)]
    return _tridiagonal_charpolys(diag, offprod, J.exact)[: J.n]


def charpoly(J: SchwarzMatrix) -> Poly:
    return trailing_charpolys(J)[0]


@dataclass(frozen=True)
class CumulativeProducts:
    prods: tuple

    def negatives(self, indices=None) -> int:
        idx = range(len(self.prods)) if indices is None else indices
        return sum(1 for i in idx if self.prods[i] < 0)


def cumulative_products(J: SchwarzMatrix) -> CumulativeProducts:
    out, acc = [], Fraction(1)
    for x in J.b:
        acc *= x
        out.append(acc)
    return CumulativeProducts(tuple(out))


def rhp_count_by_signs(J: SchwarzMatrix) -> int:
    """Eigenvalues in the open right half-plane = negative cumulative products."""
    return cumulative_products(J).negatives()


def sign_flip_matrix(J: SchwarzMatrix) -> list[list[Fraction]]:
    """The matrix with +b0 in the corner and +b_k on the subdiagonal."""
    n = J.n
    m = [[Fraction(0)] * n for _ in range(n)]
    m[0][0] = J.b[0]
    for i in range(n - 1):
        m[i][i + 1] = Fraction(1)
        m[i + 1][i] = J.b[i + 1]
    return m


def tridiagonal_charpoly(m) -> Poly:
    """Characteristic polynomial of a tridiagonal dense matrix via the three-term recurrence."""
    n = len(m)
    diag = [to_scalar(m[i][i]) for i in range(n)]
    offprod = [to_scalar(m[i][i + 1]) * to_scalar(m[i + 1][i]) for i in range(n - 1)]
    return _tridiagonal_charpolys(diag, offprod)[0]


def sign_flip_dual(J: SchwarzMatrix) -> tuple[list[list[Fraction]], Poly]:
    M = sign_flip_matrix(J)
    q = proposition_q(charpoly(J), J.n)
    return M, Poly(q.coeffs, J.exact)


def auxiliary_zero_corner(J: SchwarzMatrix) -> list[list[Fraction]]:
    """J with its (1,1) entry replaced by zero."""
    m = J.dense()
    m[0][0] = Fraction(0)
    return m


# ---------------------------------------------------------------- sign patterns

def _pairs_positive(b, start: int, stop: int) -> bool:
    """b_start b_{start+1} > 0, b_{start+2} b_{start+3} > 0, ... for pairs ending before ``stop``."""
    return all(b[i] * b[i + 1] > 0 for i in range(start, stop - 1, 2))


def _type_one_patterns(b) -> list[tuple[str, int, str]]:
    """Applicable (family, order, label) for the type I sign-pattern theorems."""
    n = len(b)
    P = cumulative_products(SchwarzMatrix(b))
    out = []
    if n % 2 == 0:
        if b[0] > 0 and _pairs_positive(b, 1, n - 1):
            out.append(("GH", P.negatives(range(1, n, 2)), "generalized, n even"))
        if _pairs_positive(b, 0, n):
            out.append(("AGH", P.negatives(range(0, n - 1, 2)), "almost generalized, n even"))
    else:
        if _pairs_positive(b, 0, n - 1):
            out.append(("GH", P.negatives(range(0, n, 2)), "generalized, n odd"))
        if b[0] > 0 and _pairs_positive(b, 1, n):
            out.append(("AGH", P.negatives(range(1, n - 1, 2)), "almost generalized, n odd"))
    return out


def classify_by_sign_pattern(J: SchwarzMatrix) -> Classification:
    """Verdict read off the signs of b alone.

    Type I patterns are tried on J; when none applies they are tried on the
    Schwarz form of -J (b0 negated) and reported as type II.
    """
    n = J.n
    for hw_type, b in (("I", J.b), ("II", J.negated().b)):
        hits = _type_one_patterns(b)
        if not hits:
            continue
        notes = tuple(label + (" (applied to -J)" if hw_type == "II" else "") for _, _, label in hits)
        if len(hits) == 2:
            if hw_type == "I":
                return Classification(Kind.HURWITZ_STABLE, notes=notes)
            return Classification(Kind.GENERALIZED, "II", 0, notes)
        family, order, _ = hits[0]
        return make_verdict(family, hw_type, order, n, notes=notes)
    return NOT_CLASSIFIED


# ---------------------------------------------------------------- S_n view

@dataclass(frozen=True)
class SnView:
    """b0 = a, b_1..b_k = c_1..c_k, b_{k+1}..b_{n-1} = -c_{k+1}..-c_{n-1}."""

    a: Fraction
    c: tuple
    k: int
    exact: bool = True

    def __post_init__(self):
        a = to_scalar(self.a)
        c = tuple(to_scalar(x) for x in self.c)
        exact = self.exact and is_exact_value(self.a) and all(is_exact_value(x) for x in self.c)
        if a == 0:
            raise InvalidPattern("a must be nonzero")
        if any(x <= 0 for x in c):
            raise InvalidPattern("all c_j must be positive")
        if not 0 <= self.k <= len(c):
            raise InvalidPattern(f"k={self.k} outside 0..{len(c)}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "exact", exact)

    @property
    def n(self) -> int:
        return len(self.c) + 1

    def matrix(self) -> SchwarzMatrix:
        b = (self.a,) + tuple(x if j < self.k else -x for j, x in enumerate(self.c))
        return SchwarzMatrix(b, self.exact)

    @classmethod
    def of(cls, J: SchwarzMatrix) -> "SnView":
        tail = J.b[1:]
        k = 0
        while k < len(tail) and tail[k] > 0:
            k += 1
        if any(x > 0 for x in tail[k:]):
            raise InvalidPattern("b_1.. must be a positive block followed by a negative block")
        return cls(J.b[0], tuple(abs(x) for x in tail), k, J.exact)


def sn_direct(view: SnView) -> Classification:
    """Verdict from the parity of n and k and the sign of a."""
    n, k = view.n, view.k
    hw_type = "I" if view.a > 0 else "II"
    l = n // 2
    if n % 2 == 1:
        family = "GH" if k % 2 == 1 else "AGH"
        m = (k - 1) // 2 if k % 2 == 1 else k // 2
    else:
        family = "GH" if k % 2 == 0 else "AGH"
        m = k // 2 if k % 2 == 0 else (k + 1) // 2
    order = l - m
    note = f"S_n with n={n}, k={k}: {'generalized' if family == 'GH' else 'almost generalized'} order {order} type {hw_type}"
    return make_verdict(family, hw_type, order, n, notes=(note,))


def sn_claim(view: SnView) -> tuple[str, str, int]:
    """The raw (family, type, order) asserted for an S_n matrix, before promotions."""
    n, k = view.n, view.k
    hw_type = "I" if view.a > 0 else "II"
    if n % 2 == 1:
        family, m = ("GH", (k - 1) // 2) if k % 2 == 1 else ("AGH", k // 2)
    else:
        family, m = ("GH", k // 2) if k % 2 == 0 else ("AGH", (k + 1) // 2)
    return family, hw_type, n // 2 - m


def bebiano_matrix(a, c) -> SchwarzMatrix:
    """Corner +a, then -c_1, +c_2, ..., +c_{n-1} on the subdiagonal (a, c_j > 0)."""
    exact = is_exact_value(a) and all(is_exact_value(x) for x in c)
    a = to_scalar(a)
    c = [to_scalar(x) for x in c]
    if a <= 0 or any(x <= 0 for x in c):
        raise InvalidPattern("Bebiano matrices need a > 0 and c_j > 0")
    b = (-a,) + tuple(x if j == 0 else -x for j, x in enumerate(c))
    return SchwarzMatrix(b, exact)
