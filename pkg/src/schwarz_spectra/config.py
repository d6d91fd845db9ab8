"""Numerical tolerances for the floating-point backend.

The exact backend never consults these. Overrides are scoped with
:func:`tolerances`, which is safe across threads and async tasks.
"""
from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    eps_zero: float = 1e-9   # Hurwitz determinant counts as zero below eps_zero * scale
    eps_im: float = 1e-8     # root counts as real when |Im| <= eps_im * (1 + |root|)
    eps_conj: float = 1e-8   # conjugate pairing radius (relative)
    cluster: float = 1e-7    # multiplicity clustering radius for float roots

    def __post_init__(self):
        for name in ("eps_zero", "eps_im", "eps_conj", "cluster"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")


_current = contextvars.ContextVar("schwarz_tolerances", default=Tolerances())


def current() -> Tolerances:
    return _current.get()


@contextlib.contextmanager
def tolerances(**overrides):
    token = _current.set(replace(_current.get(), **overrides))
    try:
        yield _current.get()
    finally:
        _current.reset(token)
