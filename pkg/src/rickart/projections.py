"""The orthomodular lattice of projections of a matrix *-ring.

Meets and joins are computed from subspace bases by elimination, without
using Moore-Penrose inverses, so they serve as an independent check on the
prime operations.
"""

from __future__ import annotations

from .errors import NotIdempotent, NotSelfAdjoint, ShapeMismatch, SingularGram, SingularMatrix
from .matrix import Matrix, column_space_basis, inverse, nullspace

__all__ = [
    "Projection",
    "certify_projection",
    "proj_le",
    "projection_onto",
    "proj_meet",
    "proj_join",
    "proj_ortho",
    "column_space_basis",
]


class Projection(Matrix):
    """A square matrix known to satisfy e @ e == e == e.star().

    Compares and hashes equal to the plain :class:`Matrix` with the same
    entries. Build one with :func:`certify_projection`.
    """

    __slots__ = ()

    @classmethod
    def _trusted(cls, m: Matrix) -> "Projection":
        return cls._raw(m.row_tuples(), m.field, m.shape)

    def __repr__(self):
        return f"Projection({self}, field={self.field})"


def certify_projection(a: Matrix) -> Projection:
    """Wrap ``a`` as a :class:`Projection` after checking both defining identities.

    Raises
    ------
    NotIdempotent
        if ``a @ a != a``.
    NotSelfAdjoint
        if ``a.star() != a``.
    """
    if isinstance(a, Projection):
        return a
    if not a.is_square:
        raise ShapeMismatch(f"projection must be square, got {a.shape}")
    if a @ a != a:
        raise NotIdempotent(f"{a} is not idempotent")
    if a.star() != a:
        raise NotSelfAdjoint(f"{a} is not self-adjoint")
    return Projection._trusted(a)


def _same_ring(e: Matrix, f: Matrix):
    if e.shape != f.shape or e.field != f.field:
        raise ShapeMismatch(f"projections from different rings: {e.shape} over {e.field}, {f.shape} over {f.field}")


def proj_le(e: Projection, f: Projection) -> bool:
    """e <= f in P. Both ef == e and fe == e are evaluated; they must agree."""
    _same_ring(e, f)
    left = e @ f == e
    right = f @ e == e
    if left != right:
        raise AssertionError(f"ef = e and fe = e disagree for {e}, {f}; inputs are not projections")
    return left


def projection_onto(basis: Matrix) -> Projection:
    """Orthogonal projection onto the span of the independent columns of ``basis``.

    Computed as B (B* B)^-1 B*. Over a proper scalar domain the Gram matrix of
    an independent family is invertible; :class:`SingularGram` otherwise.
    """
    n, r = basis.shape
    if r == 0:
        return Projection._trusted(Matrix.zeros(n, n, basis.field))
    bs = basis.star()
    try:
        g_inv = inverse(bs @ basis)
    except SingularMatrix as exc:
        raise SingularGram(f"Gram matrix of {basis} is singular") from exc
    return Projection._trusted(basis @ g_inv @ bs)


def _range_intersection(be: Matrix, bf: Matrix) -> Matrix:
    # nullspace of [Be | -Bf] gives coefficients (u, v) with Be u = Bf v
    k = nullspace(be.hstack(-bf))
    u = k.row_slice(range(be.cols))
    return column_space_basis(be @ u)


def proj_meet(e: Projection, f: Projection) -> Projection:
    """Projection onto ran(e) ∩ ran(f)."""
    _same_ring(e, f)
    return projection_onto(_range_intersection(column_space_basis(e), column_space_basis(f)))


def proj_join(e: Projection, f: Projection) -> Projection:
    """Projection onto ran(e) + ran(f).

    Checked against the De Morgan form 1 - ((1-e) ∧ (1-f)).
    """
    _same_ring(e, f)
    join = projection_onto(column_space_basis(e.hstack(f)))
    dual = proj_ortho(proj_meet(proj_ortho(e), proj_ortho(f)))
    if join != dual:
        raise AssertionError(f"De Morgan failed for {e}, {f}: {join} vs {dual}")
    return join


def proj_ortho(e: Projection) -> Projection:
    """Orthocomplement 1 - e."""
    return Projection._trusted(Matrix.identity(e.rows, e.field) - e)
