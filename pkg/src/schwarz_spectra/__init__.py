"""Schwarz tridiagonal matrices, Hurwitz determinants and their spectra."""
from .classify import (Classification, Kind, almost_generalized_hurwitz, bebiano_case, classify,
                       classify_roots, duality_order_check, generalized_hurwitz, self_interlacing,
                       verify_root_distribution)
from .config import Tolerances, tolerances
from .errors import *  # noqa: F401,F403
from .hurwitz import (HurwitzTable, frobenius_sign_changes, hurwitz_determinants, is_hurwitz_stable,
                      rhp_root_count, sign_changes)
from .inverse import (InverseReport, bebiano_from_spectrum, general_from_spectrum, holtz_from_spectrum,
                      schwarz_from_polynomial, sn_from_polynomial, sn_from_spectrum,
                      stable_from_spectrum)
from .polynomial import (Poly, Root, Spectrum, assoc_q, even_odd_parts, from_roots, hurwitz_dual,
                         proposition_q, reflect)
from .schwarz import (CumulativeProducts, SchwarzMatrix, SnView, bebiano_matrix, charpoly,
                      classify_by_sign_pattern, cumulative_products, rhp_count_by_signs, sign_flip_dual,
                      sn_direct, trailing_charpolys)
from .wall import (SturmTrace, WallCoefficients, cf_evaluate, wall_coefficients, wall_from_determinants,
                   wall_from_euclid)

__version__ = "0.1.0"
