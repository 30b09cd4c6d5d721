"""Brute-force poset oracle.

Everything here is derived from the relation predicate alone; no prime
operation, pseudoinverse or projection lattice routine is called, so the
tables can be used to check those routines without circularity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

__all__ = ["PosetTable", "brute_force_poset_ops"]


@dataclass
class PosetTable:
    """Order data for a finite list of elements.

    ``leq[i][j]`` is the relation between ``elements[i]`` and ``elements[j]``.
    ``down[i]``/``up[i]`` are bitsets of the elements below/above i.
    ``meets[i][j]``/``joins[i][j]`` hold an index or None when the greatest
    lower / least upper bound does not exist.
    """

    elements: list
    leq: list[list[bool]]
    down: list[int]
    up: list[int]
    meets: list[list[int | None]]
    joins: list[list[int | None]]
    covers: list[tuple[int, int]]
    maximal: list[int]
    least: int | None

    def index(self, x) -> int:
        return self._index[x]

    def __post_init__(self):
        self._index = {x: i for i, x in enumerate(self.elements)}

    def members(self, bits: int) -> list[int]:
        return [i for i in range(len(self.elements)) if bits >> i & 1]


def _bound(candidates: int, cone: list[int]) -> int | None:
    # the element of `candidates` whose cone contains all of `candidates`
    i = 0
    bits = candidates
    while bits:
        if bits & 1 and cone[i] & candidates == candidates:
            return i
        bits >>= 1
        i += 1
    return None


def brute_force_poset_ops(elements: Sequence, relation: Callable[[object, object], bool]) -> PosetTable:
    """Tabulate a finite poset by exhaustive evaluation of ``relation``."""
    elements = list(elements)
    n = len(elements)
    leq = [[bool(relation(a, b)) for b in elements] for a in elements]
    down = [sum(1 << j for j in range(n) if leq[j][i]) for i in range(n)]
    up = [sum(1 << j for j in range(n) if leq[i][j]) for i in range(n)]

    meets: list[list[int | None]] = [[None] * n for _ in range(n)]
    joins: list[list[int | None]] = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            # glb: a lower bound whose down-set holds every lower bound
            m = _bound(down[i] & down[j], down)
            jn = _bound(up[i] & up[j], up)
            meets[i][j] = meets[j][i] = m
            joins[i][j] = joins[j][i] = jn

    covers = []
    for i in range(n):
        for j in range(n):
            if i != j and leq[i][j]:
                between = up[i] & down[j] & ~(1 << i) & ~(1 << j)
                if not between:
                    covers.append((i, j))

    maximal = [i for i in range(n) if up[i] == 1 << i]
    full = (1 << n) - 1
    least = next((i for i in range(n) if up[i] == full), None)
    return PosetTable(elements, leq, down, up, meets, joins, covers, maximal, least)
