"""Exact star orders on matrix *-rings.

Matrices over the Gaussian rationals or a prime field, with conjugate
transpose as involution. The package computes Moore-Penrose inverses and
the Rickart prime projections, decides the one-sided star orders in five
equivalent ways, builds the segment lattices below an element, and ships a
property harness that checks all of it exhaustively on small finite rings.
"""

from .errors import *  # noqa: F401,F403
from .matrix import Matrix, nullspace, rank, rref, solve
from .orders import (
    OrderFormulation,
    OrderReport,
    equivalence_report,
    left_star_le,
    range_le,
    right_star_le,
    star_eq,
    star_le,
    witness_check,
)
from .projections import Projection, certify_projection, proj_join, proj_le, proj_meet, proj_ortho, projection_onto
from .scalars import QI, GaussianRational, PrimeField, PrimeFieldElement, conjugate, invert_scalar
from .star_ring import RingDescriptor, check_proper, pinv, primes, rank_factorize, star
from .structure import (
    bounded_meet,
    initial_segment,
    is_maximal,
    phi,
    psi,
    segment_join,
    segment_meet,
    segment_ortho,
    upper_bound_exists,
)

__version__ = "0.1.0"
