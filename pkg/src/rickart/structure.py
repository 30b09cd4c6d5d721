"""Order structure of a *-regular matrix ring under the right star order.

Throughout, ``a <= b`` means b a″ = a = a b″. For any x the maps

    phi(a) = a″           from [0, x] into P
    psi(x, e) = x e       from [0, x″] into the ring

are mutually inverse order isomorphisms, which transports the orthomodular
lattice structure of [0, x″] onto [0, x].
"""

from __future__ import annotations

from functools import lru_cache

from .errors import NotEnumerable, PreconditionViolated, ShapeMismatch
from .matrix import Matrix, rank
from .orders import right_star_le
from .projections import Projection, certify_projection, proj_join, proj_le, proj_meet
from .star_ring import RingDescriptor, primes

__all__ = [
    "phi",
    "psi",
    "segment_meet",
    "segment_join",
    "segment_ortho",
    "bounded_meet",
    "upper_bound_exists",
    "is_maximal",
    "initial_segment",
    "ring_projections",
]


def _le(a: Matrix, b: Matrix) -> bool:
    return right_star_le(a, b)


def phi(a: Matrix) -> Projection:
    return primes(a).right_double


def psi(x: Matrix, e: Projection) -> Matrix:
    """x e, defined for projections e <= x″."""
    e = certify_projection(e)
    if not proj_le(e, phi(x)):
        raise PreconditionViolated(f"{e} is not below x″ = {phi(x)}")
    return x @ e


def _require_below(x: Matrix, *elements: Matrix):
    for a in elements:
        if a.shape != x.shape or a.field != x.field:
            raise ShapeMismatch(f"{a.shape} over {a.field} vs bound {x.shape} over {x.field}")
        if not _le(a, x):
            raise PreconditionViolated(f"{a} is not below the bound {x}")


def segment_meet(x: Matrix, a: Matrix, b: Matrix) -> Matrix:
    """Meet of a, b <= x, namely x (a″ ∧ b″)."""
    _require_below(x, a, b)
    return x @ proj_meet(phi(a), phi(b))


def segment_join(x: Matrix, a: Matrix, b: Matrix) -> Matrix:
    """Join of a, b <= x, namely x (a″ ∨ b″); it is the least upper bound in the whole ring."""
    _require_below(x, a, b)
    return x @ proj_join(phi(a), phi(b))


def segment_ortho(x: Matrix, a: Matrix) -> Matrix:
    """Orthocomplement of a inside [0, x]: x - a."""
    _require_below(x, a)
    return x - a


def upper_bound_exists(a: Matrix, b: Matrix) -> tuple[bool | None, Matrix | None]:
    """Decide whether a and b have a common upper bound.

    Returns ``(verdict, witness)``. Finite rings are searched exhaustively.
    Over Q(i) only a, b and 1 are tried as candidates; if none works the
    verdict is None (unknown).
    """
    if a.shape != b.shape or a.field != b.field:
        raise ShapeMismatch(f"{a.shape} over {a.field} vs {b.shape} over {b.field}")
    d = RingDescriptor.of(a)
    for cand in (a, b, d.one):
        if _le(a, cand) and _le(b, cand):
            return True, cand
    if not d.enumerable:
        return None, None
    for cand in d.elements():
        if _le(a, cand) and _le(b, cand):
            return True, cand
    return False, None


def bounded_meet(a: Matrix, b: Matrix, bound: Matrix | None = None) -> Matrix:
    """Meet of two elements with a common upper bound: a (a″ ∧ b″).

    The bound itself is not needed for the formula, only its existence; pass
    it when known, otherwise it is searched for with :func:`upper_bound_exists`.
    """
    if bound is not None:
        _require_below(bound, a, b)
    else:
        verdict, _ = upper_bound_exists(a, b)
        if verdict is None:
            raise PreconditionViolated("cannot establish a common upper bound; pass one explicitly")
        if not verdict:
            raise PreconditionViolated(f"{a} and {b} have no common upper bound")
    m = proj_meet(phi(a), phi(b))
    out = a @ m
    if out != b @ m:
        raise AssertionError(f"a(a″∧b″) != b(a″∧b″) for bounded pair {a}, {b}")
    return out


def is_maximal(a: Matrix) -> bool | None:
    """Whether nothing lies strictly above a.

    Exhaustive on finite rings. Over Q(i), left invertible elements are
    maximal and anything else is reported as None (unknown).
    """
    d = RingDescriptor.of(a)
    if d.enumerable:
        return not any(z != a and _le(a, z) for z in d.elements())
    return True if rank(a) == d.size else None


@lru_cache(maxsize=None)
def ring_projections(d: RingDescriptor) -> tuple[Projection, ...]:
    """All projections of a finite ring, in lexicographic entry order."""
    if not d.enumerable:
        raise NotEnumerable(f"{d} is not enumerable")
    return tuple(
        Projection._trusted(m) for m in d.elements() if m @ m == m and m.star() == m
    )


def initial_segment(x: Matrix) -> list[Matrix]:
    """[0, x] computed as {x e : e in P, e <= x″}, sorted lexicographically."""
    d = RingDescriptor.of(x)
    if not d.enumerable:
        raise NotEnumerable(f"{d} is not enumerable")
    top = phi(x)
    return sorted((x @ e for e in ring_projections(d) if proj_le(e, top)), key=Matrix.sort_key)
