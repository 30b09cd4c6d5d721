"""Matrix *-rings: involution, properness, Moore-Penrose inverses and Rickart primes.

In a *-regular ring every element x has a Moore-Penrose inverse x†, and the
Rickart prime operations are

    x‵ = 1 - x x†     (left annihilator projection,  "left prime")
    x′ = 1 - x† x     (right annihilator projection, "right prime")
    x‵‵ = x x†,  x″ = x† x   (the double primes).

The ring of n x n matrices over Q(i) with conjugate transpose is *-regular
for every n. Over F_p with plain transpose it is *-regular for n = 1, and
for n = 2 exactly when p ≡ 3 (mod 4).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Literal

from .errors import NotDecidable, NotEnumerable, ParseError, ShapeMismatch, SingularCore, SingularMatrix
from .matrix import Matrix, inverse, nullspace, rref, same_column_space
from .projections import Projection, certify_projection
from .scalars import QI, Field, GaussianRationals, PrimeField, is_prime

__all__ = [
    "Side",
    "RingDescriptor",
    "ProperCertificate",
    "PrimeQuadruple",
    "star",
    "check_proper",
    "rank_factorize",
    "pinv",
    "primes",
    "annihilator_oracle",
    "primes_match_annihilators",
]

Side = Literal["left", "right"]

#: Largest ring that check_proper will search exhaustively.
EXHAUSTIVE_LIMIT = 1_000_000

_RING_FP = re.compile(r"^M(\d+)\(F(\d+)\)$")
_RING_QI = re.compile(r"^Qi:n=(\d+)$")


@dataclass(frozen=True)
class RingDescriptor:
    """The ring of ``size`` x ``size`` matrices over ``field``."""

    field: Field
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("ring size must be positive")

    @classmethod
    def of(cls, a: Matrix) -> "RingDescriptor":
        if not a.is_square:
            raise ShapeMismatch(f"ring elements are square, got {a.shape}")
        return cls(a.field, a.rows)

    @classmethod
    def parse(cls, text: str) -> "RingDescriptor":
        """Parse the shorthands ``M<n>(F<p>)`` and ``Qi:n=<n>``."""
        text = text.strip()
        m = _RING_FP.match(text)
        if m:
            n, p = int(m.group(1)), int(m.group(2))
            if not is_prime(p):
                raise ParseError(f"{p} is not prime")
            if n < 1:
                raise ParseError("ring size must be positive")
            return cls(PrimeField(p), n)
        m = _RING_QI.match(text)
        if m and int(m.group(1)) >= 1:
            return cls(QI, int(m.group(1)))
        raise ParseError(f"unrecognised ring {text!r}; expected M<n>(F<p>) or Qi:n=<n>")

    @property
    def proper(self) -> bool:
        """Whether the involution is certified proper (so the ring is *-regular)."""
        if isinstance(self.field, GaussianRationals):
            return True
        if self.size == 1:
            return True
        return self.size == 2 and self.field.p % 4 == 3

    @property
    def enumerable(self) -> bool:
        return isinstance(self.field, PrimeField)

    @property
    def cardinality(self) -> int | None:
        if not self.enumerable:
            return None
        return self.field.p ** (self.size * self.size)

    @property
    def one(self) -> Matrix:
        return Matrix.identity(self.size, self.field)

    @property
    def zero(self) -> Matrix:
        return Matrix.zeros(self.size, self.size, self.field)

    def elements(self) -> Iterator[Matrix]:
        """Every ring element exactly once, in lexicographic entry order."""
        if not self.enumerable:
            raise NotEnumerable(f"{self} is not enumerable")
        n = self.size
        values = tuple(self.field.elements())
        for flat in itertools.product(values, repeat=n * n):
            yield Matrix._raw(
                tuple(flat[i * n:(i + 1) * n] for i in range(n)), self.field, (n, n)
            )

    def __str__(self):
        if isinstance(self.field, PrimeField):
            return f"M{self.size}(F{self.field.p})"
        return f"Qi:n={self.size}"


@dataclass(frozen=True)
class ProperCertificate:
    """Outcome of :func:`check_proper`.

    ``proper`` is True with a textual ``reason`` or False with a ``witness``
    x != 0 such that x* x = 0.
    """

    descriptor: RingDescriptor
    proper: bool
    reason: str
    witness: Matrix | None = None
    exhaustive: bool = False


def star(a: Matrix) -> Matrix:
    return a.star()


def _search_isotropic(d: RingDescriptor) -> Matrix | None:
    # prefer a witness with both x*x = 0 and xx* = 0
    one_sided = None
    for x in d.elements():
        if x.is_zero():
            continue
        xs = x.star()
        if (xs @ x).is_zero():
            if (x @ xs).is_zero():
                return x
            if one_sided is None:
                one_sided = x
    return one_sided


def check_proper(d: RingDescriptor) -> ProperCertificate:
    """Certify or refute that x* x = 0 implies x = 0 in the ring ``d``.

    Admitted descriptors get an analytic certificate (confirmed by exhaustive
    search when the ring is small enough); other finite rings are searched
    for an explicit counterexample.
    """
    if isinstance(d.field, GaussianRationals):
        return ProperCertificate(
            d, True, "trace(x* x) is the sum of |x_ij|^2, positive unless x = 0"
        )
    p, n = d.field.p, d.size
    small = d.cardinality <= EXHAUSTIVE_LIMIT
    if d.proper:
        if n == 1:
            reason = f"x* x = x^2 in the field F_{p}, which vanishes only at 0"
        else:
            reason = f"x^2 + y^2 is anisotropic over F_{p} since -1 is a non-square (p ≡ 3 mod 4)"
        if small:
            witness = _search_isotropic(d)
            if witness is not None:
                raise AssertionError(f"admitted ring {d} has isotropic element {witness}")
        return ProperCertificate(d, True, reason, exhaustive=small)
    if not small:
        raise NotDecidable(f"{d} is neither admitted nor small enough to search")
    witness = _search_isotropic(d)
    if witness is None:
        return ProperCertificate(d, True, "exhaustive search found no x != 0 with x* x = 0", exhaustive=True)
    return ProperCertificate(d, False, "x* x = 0 for a nonzero x", witness=witness, exhaustive=True)


def rank_factorize(a: Matrix) -> tuple[Matrix, Matrix]:
    """Full-rank factorization a = F @ G.

    F holds the pivot columns of ``a`` (full column rank r) and G the nonzero
    rows of its reduced row echelon form (full row rank r). For a = 0 both
    factors are empty (r = 0).
    """
    r_mat, pivots = rref(a)
    return a.columns(pivots), r_mat.row_slice(range(len(pivots)))


@lru_cache(maxsize=1 << 16)
def pinv(a: Matrix) -> Matrix:
    """Moore-Penrose inverse, computed as G* (F* A G*)^-1 F* from a = F G.

    Raises
    ------
    SingularCore
        if F* A G* is singular, which can only happen when the involution is
        not proper on the relevant spaces.
    """
    f, g = rank_factorize(a)
    if f.cols == 0:
        return Matrix.zeros(a.cols, a.rows, a.field)
    fs, gs = f.star(), g.star()
    try:
        core = inverse(fs @ a @ gs)
    except SingularMatrix as exc:
        raise SingularCore(f"F* A G* is singular for {a}") from exc
    return gs @ core @ fs


@dataclass(frozen=True)
class PrimeQuadruple:
    """The Rickart primes of one element.

    left_double = 1 - left_prime and right_double = 1 - right_prime.
    """

    left_prime: Projection
    right_prime: Projection
    left_double: Projection
    right_double: Projection

    def to_json(self) -> dict:
        return {
            "lp": self.left_prime.to_json(),
            "rp": self.right_prime.to_json(),
            "ld": self.left_double.to_json(),
            "rd": self.right_double.to_json(),
        }


@lru_cache(maxsize=1 << 16)
def primes(a: Matrix) -> PrimeQuadruple:
    """Left/right primes and double primes of a square matrix."""
    if not a.is_square:
        raise ShapeMismatch(f"primes need a square matrix, got {a.shape}")
    ad = pinv(a)
    one = Matrix.identity(a.rows, a.field)
    ld = certify_projection(a @ ad)
    rd = certify_projection(ad @ a)
    return PrimeQuadruple(
        left_prime=certify_projection(one - ld),
        right_prime=certify_projection(one - rd),
        left_double=ld,
        right_double=rd,
    )


def annihilator_oracle(a: Matrix, side: Side) -> Matrix:
    """Basis of the left or right annihilator of ``a`` by plain elimination.

    ``side="right"`` returns columns spanning {z : a z = 0};
    ``side="left"`` returns rows spanning {y : y a = 0}.
    """
    if not a.is_square:
        raise ShapeMismatch(f"annihilators are taken in the ring, got {a.shape}")
    if side == "right":
        return nullspace(a)
    if side == "left":
        return nullspace(a.transpose()).transpose()
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def primes_match_annihilators(a: Matrix) -> bool:
    """Whether {y : ya = 0} = {y : y a‵ = y} and {z : az = 0} = {z : a′ z = z}.

    For a projection q, {z : qz = z} is the column space of q and
    {y : yq = y} its row space; both are compared against the oracle bases.
    """
    q = primes(a)
    right = same_column_space(q.right_prime, annihilator_oracle(a, "right"))
    left = same_column_space(q.left_prime.transpose(), annihilator_oracle(a, "left").transpose())
    return right and left
