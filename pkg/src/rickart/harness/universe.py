"""Ring universes: exhaustive enumeration and seeded sampling."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Literal

from ..errors import NotEnumerable
from ..matrix import Matrix, column_space_basis
from ..projections import Projection, projection_onto
from ..scalars import GaussianRational, PrimeField
from ..star_ring import RingDescriptor

__all__ = [
    "RingUniverse",
    "enumerate_ring",
    "sample_matrix",
    "case_rng",
    "random_matrix",
    "random_projection_below",
]


@dataclass(frozen=True)
class RingUniverse:
    """Where a suite draws its ring elements from.

    ``mode="exhaustive"`` visits every element of a finite ring;
    ``mode="sampled"`` draws ``count`` cases whose Q(i) entries have
    numerators in [-entry_bound, entry_bound] and denominators in
    [1, entry_bound].
    """

    descriptor: RingDescriptor
    mode: Literal["exhaustive", "sampled"] = "sampled"
    count: int = 1000
    seed: int = 0
    entry_bound: int = 3

    def __post_init__(self):
        if self.mode not in ("exhaustive", "sampled"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "exhaustive" and not self.descriptor.enumerable:
            raise NotEnumerable(f"{self.descriptor} cannot be enumerated")
        if self.entry_bound < 1 or self.count < 0:
            raise ValueError("entry_bound must be >= 1 and count >= 0")

    @classmethod
    def exhaustive(cls, descriptor: RingDescriptor) -> "RingUniverse":
        return cls(descriptor, "exhaustive")

    @classmethod
    def sampled(cls, descriptor: RingDescriptor, count: int = 1000, seed: int = 0, entry_bound: int = 3):
        return cls(descriptor, "sampled", count, seed, entry_bound)

    def __str__(self):
        if self.mode == "exhaustive":
            return f"{self.descriptor} exhaustive"
        return f"{self.descriptor} sampled(count={self.count}, seed={self.seed}, bound={self.entry_bound})"


def enumerate_ring(u: RingUniverse) -> Iterator[Matrix]:
    """All p^(n^2) elements, each once, in lexicographic entry order."""
    if u.mode != "exhaustive":
        raise NotEnumerable("enumerate_ring needs an exhaustive universe")
    return u.descriptor.elements()


def case_rng(u: RingUniverse, index: int, stream: str = "") -> random.Random:
    # string seeds are hashed with SHA-512, so this is stable across processes
    return random.Random(f"{u.seed}/{index}/{stream}")


def _random_scalar(rng: random.Random, d: RingDescriptor, bound: int):
    if isinstance(d.field, PrimeField):
        return d.field.element(rng.randrange(d.field.p))
    if rng.random() < 0.35:
        return GaussianRational(0)
    re = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    im = Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) if rng.random() < 0.5 else 0
    return GaussianRational(re, im)


def random_matrix(rng: random.Random, d: RingDescriptor, bound: int, shape=None) -> Matrix:
    r, c = shape or (d.size, d.size)
    return Matrix([[_random_scalar(rng, d, bound) for _ in range(c)] for _ in range(r)], d.field, (r, c))


def sample_matrix(u: RingUniverse, index: int, stream: str = "") -> Matrix:
    """The deterministic draw for ``(seed, index, stream)``.

    About a third of the entries are zero, which makes rank-deficient
    matrices common.
    """
    return random_matrix(case_rng(u, index, stream), u.descriptor, u.entry_bound)


def random_projection_below(rng: random.Random, top: Matrix, bound: int = 3) -> Projection:
    """A random projection onto a subspace of ran(top), for a projection ``top``.

    The dimension is uniform in 0..rank(top).
    """
    d = RingDescriptor.of(top)
    basis = column_space_basis(top)
    r = basis.cols
    k = rng.randint(0, r)
    if k == 0:
        return projection_onto(basis.columns([]))
    coeffs = random_matrix(rng, d, bound, shape=(r, k))
    return projection_onto(column_space_basis(basis @ coeffs))
