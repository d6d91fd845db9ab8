"""Exception hierarchy shared by every module."""


class SchwarzError(Exception):
    """Base class for all library errors."""


class ParseError(SchwarzError, ValueError):
    pass


class ConjugationViolation(SchwarzError, ValueError):
    """A nonreal root has no conjugate partner."""

    def __init__(self, root):
        self.root = root
        super().__init__(f"unpaired nonreal root {root}")


class ZeroEntry(SchwarzError, ValueError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"entry {index} is zero; standard sign counting needs nonzero entries")


class BoundaryZero(SchwarzError, ValueError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"entry {index} is zero; the Frobenius rule needs nonzero first and last entries")


class DegenerateHurwitz(SchwarzError):
    """A Hurwitz determinant vanishes (or is numerically indistinguishable from zero)."""

    def __init__(self, j, message=None):
        self.j = j
        super().__init__(message or f"degenerate Hurwitz determinant: Delta_{j} = 0")


class DegreeCollapse(DegenerateHurwitz):
    """The Sturm recursion lost more than one degree at ``f_step``.

    ``step`` is the index of the polynomial f_k that failed to have degree n - k,
    which is also the index of the vanishing Hurwitz determinant.
    """

    def __init__(self, step):
        self.step = step
        super().__init__(step, f"degree collapse at f_{step} (Delta_{step} = 0)")


class VanishesAtZero(SchwarzError, ValueError):
    def __init__(self):
        super().__init__("polynomial vanishes at z = 0")


class ToleranceAmbiguity(SchwarzError):
    pass


class InvalidPattern(SchwarzError, ValueError):
    pass


class ConvergenceFailure(SchwarzError, RuntimeError):
    pass


class PreconditionFailed(SchwarzError, ValueError):
    """Base for inverse-solver precondition failures."""


class SpectrumNotStable(PreconditionFailed):
    def __init__(self, offending):
        self.offending = tuple(offending)
        super().__init__(f"roots not in the open left half-plane: {list(self.offending)}")


class PatternMismatch(PreconditionFailed):
    pass


class SignPatternPreconditionFailed(PreconditionFailed):
    def __init__(self, wrong, message=None):
        self.wrong = tuple(wrong)
        super().__init__(message or f"Hurwitz determinants with the wrong sign: {list(self.wrong)}")


class SumNotPositive(PreconditionFailed):
    pass


class CaseMismatch(PreconditionFailed):
    pass
