"""One-sided star orders and their equivalent formulations.

For square a, b of a *-regular matrix ring, each of the following decides
the right star order (the left order is the mirror image):

``prime``
    b a″ = a = a b″
``stareq``
    a a* = b a* and a″ <= b″ (also checked in the form a b′ = 0)
``range``
    a a* = b a* and the row space of a lies in the row space of b
``exist``
    a a* = b a* and a = c b for some c
``witness``
    a a* = b a* and a = p b for an idempotent p whose left annihilator
    equals that of a (with a projection q, a q = b q, as companion witness)

On a regular ring all five coincide; :func:`equivalence_report` evaluates
them side by side.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import InternalDisagreement, ShapeMismatch
from .matrix import Matrix, rank, same_column_space, solve
from .projections import proj_le
from .star_ring import Side, annihilator_oracle, pinv, primes

__all__ = [
    "OrderFormulation",
    "OrderReport",
    "WitnessResult",
    "range_le",
    "star_eq",
    "star_le",
    "left_star_le",
    "right_star_le",
    "witness_check",
    "equivalence_report",
    "prime_chain",
]


class OrderFormulation(str, enum.Enum):
    PRIME = "prime"
    STAR_EQ_PROJECTION = "stareq"
    RANGE_INCLUSION = "range"
    EXISTENTIAL = "exist"
    IDEMPOTENT_WITNESS = "witness"


@dataclass(frozen=True)
class OrderReport:
    side: Side
    verdicts: dict = field(default_factory=dict)

    @property
    def agreed(self) -> bool:
        return len(set(self.verdicts.values())) <= 1

    @property
    def holds(self) -> bool:
        return self.agreed and all(self.verdicts.values())

    def to_json(self) -> dict:
        return {
            "side": self.side,
            "verdicts": {f.value: v for f, v in self.verdicts.items()},
            "agreed": self.agreed,
        }


def _check_pair(a: Matrix, b: Matrix, square: bool = True):
    if a.shape != b.shape or a.field != b.field:
        raise ShapeMismatch(f"cannot compare {a.shape} over {a.field} with {b.shape} over {b.field}")
    if square and not a.is_square:
        raise ShapeMismatch(f"ring formulations need square matrices, got {a.shape}")


def _check_side(side):
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def _doubles(a: Matrix) -> tuple[Matrix, Matrix]:
    # a a† and a† a; defined for rectangular a as well
    ad = pinv(a)
    return a @ ad, ad @ a


def range_le(a: Matrix, b: Matrix, side: Side) -> bool:
    """Principal one-sided ideal inclusion.

    ``side="right"``: aR ⊆ bR, i.e. ran(a) ⊆ ran(b), i.e. a = b x.
    ``side="left"``: Ra ⊆ Rb, i.e. row(a) ⊆ row(b), i.e. a = y b.

    Decided three ways (rank of the stacked matrix, solvability, and
    b‵‵ a = a resp. a b″ = a); raises :class:`InternalDisagreement` if they differ.
    """
    _check_side(side)
    _check_pair(a, b, square=False)
    if side == "right":
        by_rank = rank(b.hstack(a)) == rank(b)
        by_solve = solve(b, a) is not None
        by_primes = _doubles(b)[0] @ a == a
    else:
        by_rank = rank(b.vstack(a)) == rank(b)
        by_solve = solve(b.transpose(), a.transpose()) is not None
        by_primes = a @ _doubles(b)[1] == a
    if not by_rank == by_solve == by_primes:
        raise InternalDisagreement(
            f"range_le({a}, {b}, {side}): rank={by_rank} solve={by_solve} primes={by_primes}"
        )
    return by_rank


def _star_equation(a: Matrix, b: Matrix, side: Side) -> bool:
    if side == "right":
        s = a.star()
        return a @ s == b @ s
    s = a.star()
    return s @ a == s @ b


def star_eq(a: Matrix, b: Matrix, side: Side) -> bool:
    """a a* = b a* (right) or a* a = a* b (left).

    The equivalent forms a = b a″ (right) and a = a‵‵ b (left) are evaluated
    as well and must agree.
    """
    _check_side(side)
    _check_pair(a, b, square=False)
    direct = _star_equation(a, b, side)
    ld, rd = _doubles(a)
    via_primes = (b @ rd == a) if side == "right" else (ld @ b == a)
    if direct != via_primes:
        raise InternalDisagreement(f"star_eq({a}, {b}, {side}): direct={direct} primes={via_primes}")
    return direct


def prime_chain(a: Matrix, b: Matrix, side: Side) -> tuple[bool, ...]:
    """The five equivalent conditions linking a and the primes of b.

    Right: a b″ = a, a b′ = 0, a″ b′ = 0, a″ b″ = a″, a″ <= b″.
    Left:  b‵‵ a = a, b‵ a = 0, b‵ a‵‵ = 0, b‵‵ a‵‵ = a‵‵, a‵‵ <= b‵‵.
    """
    _check_side(side)
    _check_pair(a, b)
    pa, pb = primes(a), primes(b)
    if side == "right":
        ad, bp, bd = pa.right_double, pb.right_prime, pb.right_double
        return (
            a @ bd == a,
            (a @ bp).is_zero(),
            (ad @ bp).is_zero(),
            ad @ bd == ad,
            proj_le(ad, bd),
        )
    ad, bp, bd = pa.left_double, pb.left_prime, pb.left_double
    return (
        bd @ a == a,
        (bp @ a).is_zero(),
        (bp @ ad).is_zero(),
        bd @ ad == ad,
        proj_le(ad, bd),
    )


@dataclass(frozen=True)
class WitnessResult:
    """Canonical witnesses for the idempotent formulation.

    For the left order the projection is a‵‵ and the idempotent b† a; for the
    right order the projection is a″ and the idempotent a b†. ``failed``
    names the conditions that did not hold.
    """

    side: Side
    projection: Matrix
    idempotent: Matrix
    failed: tuple[str, ...]

    @property
    def holds(self) -> bool:
        return not self.failed


def _same_annihilator(x: Matrix, y: Matrix, side: Side) -> bool:
    bx, by = annihilator_oracle(x, side), annihilator_oracle(y, side)
    if side == "left":
        bx, by = bx.transpose(), by.transpose()
    return same_column_space(bx, by)


def witness_check(a: Matrix, b: Matrix, side: Side) -> WitnessResult:
    """Propose the canonical witnesses and verify every defining condition.

    Two variants are checked and must agree:

    * idempotent form (left): a* a = a* b, a = b q with q idempotent and
      q x = 0 iff a x = 0 for all x. The right order mirrors it with
      a = p b and x p = 0 iff x a = 0.
    * projection/idempotent pair (left): projection P, idempotent Q with
      ran P = ran a, ker Q = ker a, P a = P b, a Q = b Q. For the right order
      P is the idempotent and Q the projection.

    Annihilator equalities are decided by :func:`annihilator_oracle`.
    """
    _check_side(side)
    _check_pair(a, b)
    bd = pinv(b)
    pa = primes(a)
    if side == "left":
        proj = pa.left_double
        idem = bd @ a
        big_p, big_q = proj, idem
        idem_form = {
            "star-equation": _star_equation(a, b, "left"),
            "idempotent": idem @ idem == idem,
            "a=bq": b @ idem == a,
            "annihilator": _same_annihilator(idem, a, "right"),
        }
    else:
        proj = pa.right_double
        idem = a @ bd
        big_p, big_q = idem, proj
        idem_form = {
            "star-equation": _star_equation(a, b, "right"),
            "idempotent": idem @ idem == idem,
            "a=pb": idem @ b == a,
            "annihilator": _same_annihilator(idem, a, "left"),
        }
    pair_form = {
        "P-idempotent": big_p @ big_p == big_p,
        "Q-idempotent": big_q @ big_q == big_q,
        "ran P = ran a": same_column_space(big_p, a),
        "ker Q = ker a": _same_annihilator(big_q, a, "right"),
        "Pa=Pb": big_p @ a == big_p @ b,
        "aQ=bQ": a @ big_q == b @ big_q,
    }
    idem_ok = all(idem_form.values())
    pair_ok = all(pair_form.values())
    if idem_ok != pair_ok:
        raise InternalDisagreement(
            f"witness forms disagree for ({a}, {b}, {side}): {idem_form} vs {pair_form}"
        )
    failed = tuple(k for k, v in {**idem_form, **pair_form}.items() if not v)
    return WitnessResult(side, proj, idem, failed)


def star_le(a: Matrix, b: Matrix, side: Side, formulation=OrderFormulation.PRIME) -> bool:
    """Evaluate a <= b in the one-sided star order on ``side``.

    Only ``range`` accepts rectangular matrices (the classical matrix order);
    the ring formulations require square input.
    """
    _check_side(side)
    formulation = OrderFormulation(formulation)
    _check_pair(a, b, square=formulation is not OrderFormulation.RANGE_INCLUSION)
    # the ideal side used for range inclusion is opposite to the order side
    other = "left" if side == "right" else "right"

    if formulation is OrderFormulation.PRIME:
        pa, pb = primes(a), primes(b)
        if side == "right":
            return b @ pa.right_double == a and a @ pb.right_double == a
        return pa.left_double @ b == a and pb.left_double @ a == a

    if formulation is OrderFormulation.STAR_EQ_PROJECTION:
        pa, pb = primes(a), primes(b)
        if side == "right":
            by_le = proj_le(pa.right_double, pb.right_double)
            by_zero = (a @ pb.right_prime).is_zero()
        else:
            by_le = proj_le(pa.left_double, pb.left_double)
            by_zero = (pb.left_prime @ a).is_zero()
        if by_le != by_zero:
            raise InternalDisagreement(f"projection comparison vs annihilation differ for ({a}, {b}, {side})")
        return star_eq(a, b, side) and by_le

    if formulation is OrderFormulation.RANGE_INCLUSION:
        return _star_equation(a, b, side) and range_le(a, b, other)

    if formulation is OrderFormulation.EXISTENTIAL:
        if not _star_equation(a, b, side):
            return False
        if side == "right":
            c = solve(b.transpose(), a.transpose())
            return c is not None and c.transpose() @ b == a
        c = solve(b, a)
        return c is not None and b @ c == a

    return witness_check(a, b, side).holds


def left_star_le(a: Matrix, b: Matrix, formulation=OrderFormulation.PRIME) -> bool:
    return star_le(a, b, "left", formulation)


def right_star_le(a: Matrix, b: Matrix, formulation=OrderFormulation.PRIME) -> bool:
    return star_le(a, b, "right", formulation)


def equivalence_report(a: Matrix, b: Matrix, side: Side) -> OrderReport:
    """Evaluate every formulation of the order on ``side`` for the pair."""
    _check_side(side)
    _check_pair(a, b)
    return OrderReport(side, {f: star_le(a, b, side, f) for f in OrderFormulation})
