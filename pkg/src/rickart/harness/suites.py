"""Property suites certifying the *-ring, order and lattice identities.

Every suite is split into independent units (one ring element, or one sample
index); units can run in any process and their results are merged in unit
order, so a report does not depend on the number of workers.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

from ..errors import UnknownSuite
from ..matrix import Matrix, rank
from ..orders import equivalence_report, prime_chain, star_le
from ..projections import certify_projection, proj_join, proj_le, proj_meet, proj_ortho
from ..star_ring import RingDescriptor, annihilator_oracle, pinv, primes, primes_match_annihilators
from ..structure import (
    bounded_meet,
    initial_segment,
    is_maximal,
    phi,
    psi,
    ring_projections,
    segment_join,
    segment_meet,
    segment_ortho,
)
from .poset import PosetTable, brute_force_poset_ops
from .universe import RingUniverse, case_rng, random_matrix, random_projection_below, sample_matrix

__all__ = ["Failure", "SuiteReport", "SUITE_NAMES", "run_suite", "run_suites", "shrink", "ring_poset"]


@dataclass
class Failure:
    property: str
    inputs: tuple

    def to_json(self) -> dict:
        return {"inputs": [m.to_json() for m in self.inputs], "property": self.property}


@dataclass
class SuiteReport:
    suite: str
    cases: int
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": [f.to_json() for f in self.failures],
            "seconds": self.seconds,
        }


# -- case bookkeeping --------------------------------------------------------


def _outcome(pred: Callable, inputs: Sequence[Matrix]) -> str | None:
    """None when the property holds, else a short failure signature."""
    try:
        return None if pred(*inputs) else "false"
    except Exception as exc:  # any crash is a failure of the property
        return type(exc).__name__


def shrink(pred: Callable, inputs: Sequence[Matrix]) -> tuple:
    """Greedily zero entries while the property keeps failing the same way."""
    signature = _outcome(pred, inputs)
    current = list(inputs)
    changed = True
    while changed:
        changed = False
        for k, m in enumerate(current):
            for i in range(m.rows):
                for j in range(m.cols):
                    if not m[i, j]:
                        continue
                    rows = [list(r) for r in m.row_tuples()]
                    rows[i][j] = m.field.zero
                    cand = Matrix(rows, m.field, m.shape)
                    trial = current[:k] + [cand] + current[k + 1:]
                    if _outcome(pred, trial) == signature:
                        current, m = trial, cand
                        changed = True
    return tuple(current)


class _Cases:
    def __init__(self):
        self.count = 0
        self.failures: list[Failure] = []

    def check(self, name: str, pred: Callable, *inputs: Matrix):
        self.count += 1
        if _outcome(pred, inputs) is not None:
            self.failures.append(Failure(name, shrink(pred, inputs)))

    def vacuous(self, n: int = 1):
        # implication cases whose hypothesis is false
        self.count += n


# -- shared finite-ring data -------------------------------------------------


@lru_cache(maxsize=None)
def ring_elements(d: RingDescriptor) -> tuple[Matrix, ...]:
    return tuple(d.elements())


@lru_cache(maxsize=None)
def ring_poset(d: RingDescriptor, side: str = "right") -> PosetTable:
    """Brute-force poset of a finite ring under the prime-form star order."""
    return brute_force_poset_ops(ring_elements(d), lambda a, b: star_le(a, b, side))


@lru_cache(maxsize=None)
def projection_poset(d: RingDescriptor) -> PosetTable:
    return brute_force_poset_ops(ring_projections(d), proj_le)


def _is_projection(a: Matrix) -> bool:
    return a @ a == a and a.star() == a


def _one(a: Matrix) -> Matrix:
    return Matrix.identity(a.rows, a.field)


def _zero(a: Matrix) -> Matrix:
    return Matrix.zeros(a.rows, a.cols, a.field)


def _rng(u: RingUniverse, i: int, stream: str):
    return case_rng(u, i, stream)


def _rand(u: RingUniverse, rng) -> Matrix:
    return random_matrix(rng, u.descriptor, u.entry_bound)


# -- property predicates -----------------------------------------------------


def _penrose(a: Matrix) -> bool:
    x = pinv(a)
    ax, xa = a @ x, x @ a
    return ax @ a == a and xa @ x == x and ax.star() == ax and xa.star() == xa


def _primes_structure(a: Matrix) -> bool:
    q = primes(a)
    one = _one(a)
    ad = pinv(a)
    return (
        q.left_double == one - q.left_prime
        and q.right_double == one - q.right_prime
        and q.left_double == a @ ad
        and q.right_double == ad @ a
    )


def _left_annihilation(a: Matrix, y: Matrix) -> bool:
    q = primes(a)
    return (y @ a).is_zero() == (y @ q.left_prime == y) == (y @ q.left_double).is_zero()


def _right_annihilation(a: Matrix, z: Matrix) -> bool:
    q = primes(a)
    return (a @ z).is_zero() == (q.right_prime @ z == z) == (q.right_double @ z).is_zero()


def _left_star_factor(a: Matrix, b: Matrix, candidates: Sequence[Matrix] = ()) -> bool:
    s = a.star()
    first = s @ a == s @ b
    second = a == primes(a).left_double @ b
    if candidates:
        third = any(a == p @ b for p in candidates)
        return first == second == third
    return first == second


def _right_star_factor(a: Matrix, b: Matrix, candidates: Sequence[Matrix] = ()) -> bool:
    s = a.star()
    first = a @ s == b @ s
    second = a == b @ primes(a).right_double
    if candidates:
        third = any(a == b @ q for q in candidates)
        return first == second == third
    return first == second


def _primes_annihilate(a: Matrix) -> bool:
    q = primes(a)
    return (q.left_prime @ a).is_zero() and (a @ q.right_prime).is_zero()


def _doubles_are_units(a: Matrix) -> bool:
    q = primes(a)
    return q.left_double @ a == a and a @ q.right_double == a


def _product_doubles_shrink(a: Matrix, b: Matrix) -> bool:
    ab = primes(a @ b)
    return proj_le(ab.right_double, primes(b).right_double) and proj_le(
        ab.left_double, primes(a).left_double
    )


def _product_doubles_absorb(a: Matrix, b: Matrix) -> bool:
    right = primes(a @ b).right_double == primes(primes(a).right_double @ b).right_double
    left = primes(a @ b).left_double == primes(a @ primes(b).left_double).left_double
    return right and left


def _double_of_restriction_right(a: Matrix, e: Matrix) -> bool:
    e = certify_projection(e)
    return not proj_le(e, primes(a).right_double) or primes(a @ e).right_double == e


def _double_of_restriction_left(a: Matrix, e: Matrix) -> bool:
    e = certify_projection(e)
    return not proj_le(e, primes(a).left_double) or primes(e @ a).left_double == e


def _annihilators_closed(a: Matrix, e: Matrix, f: Matrix) -> bool:
    e, f = certify_projection(e), certify_projection(f)
    m, j = proj_meet(e, f), proj_join(e, f)
    ok = True
    if (a @ e).is_zero() and (a @ f).is_zero():
        ok = ok and (a @ m).is_zero() and (a @ j).is_zero()
    if (e @ a).is_zero() and (f @ a).is_zero():
        ok = ok and (m @ a).is_zero() and (j @ a).is_zero()
    return ok


def _transitive(side: str) -> Callable:
    def pred(a, b, c):
        return not (star_le(a, b, side) and star_le(b, c, side)) or star_le(a, c, side)
    return pred


def _antisymmetric(side: str) -> Callable:
    def pred(a, b):
        return not (star_le(a, b, side) and star_le(b, a, side)) or a == b
    return pred


def _agreement(side: str) -> Callable:
    def pred(a, b):
        return equivalence_report(a, b, side).agreed and len(set(prime_chain(a, b, side))) == 1
    return pred


def _duality(a: Matrix, b: Matrix) -> bool:
    left = equivalence_report(a, b, "left").verdicts
    right = equivalence_report(a.star(), b.star(), "right").verdicts
    return left == right


def _de_morgan(e: Matrix, f: Matrix) -> bool:
    e, f = certify_projection(e), certify_projection(f)
    return proj_join(e, f) == proj_ortho(proj_meet(proj_ortho(e), proj_ortho(f)))


def _orthogonality_symmetric(e: Matrix, f: Matrix) -> bool:
    return (e @ f).is_zero() == (f @ e).is_zero()


def _projection_order_forms(e: Matrix, f: Matrix) -> bool:
    # e <= f iff e f‵ = 0 iff f‵ e = 0, with f‵ = f′ = 1 - f
    e, f = certify_projection(e), certify_projection(f)
    fc = proj_ortho(f)
    return proj_le(e, f) == (e @ fc).is_zero() == (fc @ e).is_zero()


def _orthomodular(e: Matrix, f: Matrix) -> bool:
    e, f = certify_projection(e), certify_projection(f)
    return not proj_le(e, f) or f == proj_join(e, proj_meet(f, proj_ortho(e)))


def _interval_complement(x: Matrix, a: Matrix) -> bool:
    c = segment_ortho(x, a)
    return star_le(c, x, "right") and segment_join(x, a, c) == x and segment_meet(x, a, c).is_zero()


def _interval_orthomodular(x: Matrix, a: Matrix, b: Matrix) -> bool:
    if not star_le(a, b, "right"):
        return True
    return b == segment_join(x, a, segment_meet(x, b, segment_ortho(x, a)))


# -- suites ------------------------------------------------------------------


def _units(u: RingUniverse) -> int:
    return u.descriptor.cardinality if u.mode == "exhaustive" else u.count


def _penrose_unit(u: RingUniverse, i: int, c: _Cases):
    a = ring_elements(u.descriptor)[i] if u.mode == "exhaustive" else sample_matrix(u, i)
    c.check("penrose-identities", _penrose, a)


def _primes_unit(u: RingUniverse, i: int, c: _Cases):
    d = u.descriptor
    if u.mode == "exhaustive":
        elems = ring_elements(d)
        a = elems[i]
        ys, bs = elems, elems
        projs = ring_projections(d)
    else:
        rng = _rng(u, i, "primes")
        a = sample_matrix(u, i)
        w = _rand(u, rng)
        left_basis = annihilator_oracle(a, "left")
        right_basis = annihilator_oracle(a, "right")
        # elements whose rows (columns) annihilate a, built from the oracle bases
        y_ann = random_matrix(rng, d, u.entry_bound, (d.size, left_basis.rows)) @ left_basis
        z_ann = right_basis @ random_matrix(rng, d, u.entry_bound, (right_basis.cols, d.size))
        ys = (_rand(u, rng), y_ann, z_ann, w)
        p = random_projection_below(rng, _one(a), u.entry_bound)
        q = primes(a)
        bs = (
            _rand(u, rng),
            a + q.left_prime @ w,   # satisfies a*a = a*b
            a + w @ q.right_prime,  # satisfies aa* = ba*
            a,
        )
        projs = ()
        c.check("projection-factor-star-left", lambda b, p: _left_star_factor(p @ b, b, (p,)), bs[0], p)
        c.check("projection-factor-star-right", lambda b, p: _right_star_factor(b @ p, b, (p,)), bs[0], p)
    c.check("primes-annihilator-oracle", primes_match_annihilators, a)
    c.check("primes-structure", _primes_structure, a)
    for y in ys:
        c.check("primes-left-annihilator", _left_annihilation, a, y)
        c.check("primes-right-annihilator", _right_annihilation, a, y)
    for b in bs:
        c.check("left-star-factor", lambda a, b: _left_star_factor(a, b, projs), a, b)
        c.check("right-star-factor", lambda a, b: _right_star_factor(a, b, projs), a, b)


def _doubles_unit(u: RingUniverse, i: int, c: _Cases):
    d = u.descriptor
    if u.mode == "exhaustive":
        elems = ring_elements(d)
        a = elems[i]
        bs = elems
        projs = ring_projections(d)
        pairs = [(e, f) for e in projs for f in projs]
        es_right = es_left = projs
    else:
        rng = _rng(u, i, "prop22")
        a = sample_matrix(u, i)
        q = primes(a)
        bs = (_rand(u, rng), sample_matrix(u, i, "b"))
        es_right = (random_projection_below(rng, q.right_double, u.entry_bound),)
        es_left = (random_projection_below(rng, q.left_double, u.entry_bound),)
        pairs = [
            (random_projection_below(rng, q.right_prime, u.entry_bound),
             random_projection_below(rng, q.right_prime, u.entry_bound)),
            (random_projection_below(rng, q.left_prime, u.entry_bound),
             random_projection_below(rng, q.left_prime, u.entry_bound)),
            (random_projection_below(rng, _one(a), u.entry_bound),
             random_projection_below(rng, _one(a), u.entry_bound)),
        ]
    c.check("primes-annihilate", _primes_annihilate, a)
    c.check("doubles-are-units", _doubles_are_units, a)
    for b in bs:
        c.check("product-doubles-shrink", _product_doubles_shrink, a, b)
        c.check("product-doubles-absorb", _product_doubles_absorb, a, b)
    for e in es_right:
        c.check("double-of-restriction-right", _double_of_restriction_right, a, e)
    for e in es_left:
        c.check("double-of-restriction-left", _double_of_restriction_left, a, e)
    for e, f in pairs:
        c.check("annihilators-closed-under-meet-join", _annihilators_closed, a, e, f)


def _order_axioms_unit(u: RingUniverse, i: int, c: _Cases):
    d = u.descriptor
    if u.mode == "exhaustive":
        elems = ring_elements(d)
        n = len(elems)
        a = elems[i]
        for side in ("right", "left"):
            leq = ring_poset(d, side).leq
            c.check(f"reflexive-{side}", lambda a: star_le(a, a, side), a)
            anti, trans = _antisymmetric(side), _transitive(side)
            for j in range(n):
                if leq[i][j] and leq[j][i]:
                    c.check(f"antisymmetric-{side}", anti, a, elems[j])
                else:
                    c.vacuous()
                if not leq[i][j]:
                    c.vacuous(n)
                    continue
                for k in range(n):
                    if leq[j][k]:
                        c.check(f"transitive-{side}", trans, a, elems[j], elems[k])
                    else:
                        c.vacuous()
        return

    rng = _rng(u, i, "chain")
    for side in ("right", "left"):
        top = sample_matrix(u, i, side)
        q = primes(top)
        base = q.right_double if side == "right" else q.left_double
        e1 = base if rng.random() < 0.25 else random_projection_below(rng, base, u.entry_bound)
        e2 = random_projection_below(rng, e1, u.entry_bound)
        if side == "right":
            mid, low = top @ e1, top @ e2
        else:
            mid, low = e1 @ top, e2 @ top
        c.check(
            f"constructed-chain-{side}",
            lambda x, y, z: star_le(x, y, side) and star_le(y, z, side),
            low, mid, top,
        )
        for x in (low, mid, top):
            c.check(f"reflexive-{side}", lambda a: star_le(a, a, side), x)
        c.check(f"transitive-{side}", _transitive(side), low, mid, top)
        c.check(f"antisymmetric-{side}", _antisymmetric(side), low, mid)
        c.check(f"antisymmetric-{side}", _antisymmetric(side), mid, top)
        c.check(f"antisymmetric-{side}", _antisymmetric(side), top, _rand(u, rng))


def _equivalence_unit(u: RingUniverse, i: int, c: _Cases):
    d = u.descriptor
    if u.mode == "exhaustive":
        elems = ring_elements(d)
        a = elems[i]
        for b in elems:
            c.check("formulations-agree-right", _agreement("right"), a, b)
            c.check("formulations-agree-left", _agreement("left"), a, b)
            c.check("left-right-duality", _duality, a, b)
        return

    rng = _rng(u, i, "equivalence")
    kind = i % 4
    for side in ("right", "left"):
        b = sample_matrix(u, i, side)
        q = primes(b)
        if kind == 0:  # comparable
            e = random_projection_below(rng, q.right_double if side == "right" else q.left_double, u.entry_bound)
            a = b @ e if side == "right" else e @ b
        elif kind == 1:  # star equation holds, inclusion need not
            p = random_projection_below(rng, _one(b), u.entry_bound)
            a = b @ p if side == "right" else p @ b
        elif kind == 2:  # inclusion holds, star equation need not
            w = _rand(u, rng)
            a = w @ b if side == "right" else b @ w
        else:
            a = _rand(u, rng)
        c.check(f"formulations-agree-{side}", _agreement(side), a, b)
        c.check("left-right-duality", _duality, a, b)


def _iso_unit(u: RingUniverse, i: int, c: _Cases):
    d = u.descriptor
    if u.mode == "exhaustive":
        table = ring_poset(d, "right")
        elems = table.elements
        x = elems[i]
        below = [elems[k] for k in table.members(table.down[i])]
        top = phi(x)
        projs = [e for e in ring_projections(d) if proj_le(e, top)]

        def bijection(x):
            seg = sorted(
                (a for a in ring_elements(d) if star_le(a, x, "right")), key=Matrix.sort_key
            )
            t = phi(x)
            ps = [e for e in ring_projections(d) if proj_le(e, t)]
            images = {phi(a) for a in seg}
            back = {psi(x, e) for e in ps}
            return (
                len(seg) == len(ps)
                and images == set(ps)
                and back == set(seg)
                and all(psi(x, phi(a)) == a for a in seg)
                and all(phi(psi(x, e)) == e for e in ps)
                and initial_segment(x) == seg
            )

        c.check("phi-psi-bijection", bijection, x)
        for a in below:
            for b in below:
                c.check(
                    "phi-order-preserving",
                    lambda a, b: star_le(a, b, "right") == proj_le(phi(a), phi(b)),
                    a, b,
                )
        for e in projs:
            for f in projs:
                c.check(
                    "psi-order-preserving",
                    lambda x, e, f: proj_le(e, f) == star_le(psi(x, e), psi(x, f), "right"),
                    x, e, f,
                )
        return

    rng = _rng(u, i, "iso")
    x = sample_matrix(u, i)
    top = phi(x)
    e = random_projection_below(rng, top, u.entry_bound)
    f = random_projection_below(rng, e if rng.random() < 0.5 else top, u.entry_bound)
    c.check("phi-psi-roundtrip", lambda x, e: phi(psi(x, e)) == e, x, e)
    c.check(
        "psi-phi-roundtrip",
        lambda x, e: star_le(psi(x, e), x, "right") and psi(x, phi(psi(x, e))) == psi(x, e),
        x, e,
    )
    c.check(
        "psi-order-preserving",
        lambda x, e, f: proj_le(f, e) == star_le(psi(x, f), psi(x, e), "right"),
        x, e, f,
    )
    c.check(
        "phi-order-preserving",
        lambda a, b: star_le(a, b, "right") == proj_le(phi(a), phi(b)),
        psi(x, f), psi(x, e),
    )


def _meetjoin_unit(u: RingUniverse, i: int, c: _Cases):
    d = u.descriptor
    if u.mode == "exhaustive":
        table = ring_poset(d, "right")
        elems = table.elements
        x = elems[i]
        below = table.members(table.down[i])

        def glb(x, a, b):
            k = table.meets[table.index(a)][table.index(b)]
            return k is not None and segment_meet(x, a, b) == elems[k]

        def lub(x, a, b):
            k = table.joins[table.index(a)][table.index(b)]
            return k is not None and segment_join(x, a, b) == elems[k]

        def bounded(x, a, b):
            m = proj_meet(phi(a), phi(b))
            return bounded_meet(a, b, x) == a @ m == b @ m == segment_meet(x, a, b)

        def independent(x, a, b):
            ia, ib = table.index(a), table.index(b)
            m, j = segment_meet(x, a, b), segment_join(x, a, b)
            bounds = table.members(table.up[ia] & table.up[ib])
            return all(
                segment_meet(elems[y], a, b) == m and segment_join(elems[y], a, b) == j
                for y in bounds
            )

        for ia in below:
            for ib in below:
                a, b = elems[ia], elems[ib]
                c.check("meet-is-global-glb", glb, x, a, b)
                c.check("join-is-global-lub", lub, x, a, b)
                c.check("bounded-meet", bounded, x, a, b)
                c.check("bound-independence", independent, x, a, b)
        return

    rng = _rng(u, i, "meetjoin")
    x = sample_matrix(u, i)
    top = phi(x)
    a = x @ random_projection_below(rng, top, u.entry_bound)
    b = x @ random_projection_below(rng, top, u.entry_bound)
    y = x + _rand(u, rng) @ primes(x).right_prime

    def bounds_ok(x, a, b):
        m, j = segment_meet(x, a, b), segment_join(x, a, b)
        le = lambda p, q: star_le(p, q, "right")
        return le(m, a) and le(m, b) and le(a, j) and le(b, j) and le(j, x)

    def bounded(x, a, b):
        m = proj_meet(phi(a), phi(b))
        return bounded_meet(a, b, x) == a @ m == b @ m == segment_meet(x, a, b)

    def independent(x, y, a, b):
        if not star_le(x, y, "right"):
            return True
        return segment_meet(y, a, b) == segment_meet(x, a, b) and segment_join(y, a, b) == segment_join(x, a, b)

    c.check("meet-join-bounds", bounds_ok, x, a, b)
    c.check("bounded-meet", bounded, x, a, b)
    c.check("bound-independence", independent, x, y, a, b)


def _orthomodular_unit(u: RingUniverse, i: int, c: _Cases):
    d = u.descriptor
    if u.mode == "exhaustive":
        table = ring_poset(d, "right")
        elems = table.elements
        x = elems[i]
        below = [elems[k] for k in table.members(table.down[i])]
        if _is_projection(x):
            ptable = projection_poset(d)
            e = certify_projection(x)

            def lattice(e, f):
                ie, jf = ptable.index(e), ptable.index(f)
                m, j = ptable.meets[ie][jf], ptable.joins[ie][jf]
                return (
                    m is not None and j is not None
                    and proj_meet(e, f) == ptable.elements[m]
                    and proj_join(e, f) == ptable.elements[j]
                )

            for f in ring_projections(d):
                c.check("de-morgan", _de_morgan, e, f)
                c.check("orthogonality-symmetric", _orthogonality_symmetric, e, f)
                c.check("projection-order-forms", _projection_order_forms, e, f)
                c.check("orthomodular-law", _orthomodular, e, f)
                c.check("projection-lattice-bounds", lattice, e, f)
        for a in below:
            c.check("interval-complement", _interval_complement, x, a)
            for b in below:
                c.check("interval-orthomodular", _interval_orthomodular, x, a, b)
        return

    rng = _rng(u, i, "orthomodular")
    one = Matrix.identity(d.size, d.field)
    f = random_projection_below(rng, one, u.entry_bound)
    e = random_projection_below(rng, f, u.entry_bound)
    g = random_projection_below(rng, one, u.entry_bound)
    h = random_projection_below(rng, proj_ortho(f), u.entry_bound)
    for p, q in ((e, f), (f, g), (f, h)):
        c.check("de-morgan", _de_morgan, p, q)
        c.check("orthogonality-symmetric", _orthogonality_symmetric, p, q)
        c.check("projection-order-forms", _projection_order_forms, p, q)
        c.check("orthomodular-law", _orthomodular, p, q)
    x = sample_matrix(u, i)
    top = phi(x)
    f2 = random_projection_below(rng, top, u.entry_bound)
    e2 = random_projection_below(rng, f2, u.entry_bound)
    a, b = x @ e2, x @ f2
    c.check("interval-complement", _interval_complement, x, a)
    c.check("interval-orthomodular", _interval_orthomodular, x, a, b)


def _maximal_unit(u: RingUniverse, i: int, c: _Cases):
    d = u.descriptor
    if u.mode == "exhaustive":
        table = ring_poset(d, "right")
        elems = table.elements
        a = elems[i]
        one = d.one
        c.check("zero-is-least", lambda a: star_le(_zero(a), a, "right"), a)
        c.check(
            "least-is-unique",
            lambda a: not all(star_le(a, b, "right") for b in elems) or a.is_zero(),
            a,
        )
        c.check("below-one-iff-projection", lambda a: star_le(a, one, "right") == _is_projection(a), a)
        c.check("maximal-matches-poset", lambda a: is_maximal(a) == (table.index(a) in table.maximal), a)
        if rank(a) == d.size:
            c.check("left-invertible-is-maximal", is_maximal, a)
        else:
            c.vacuous()
        return

    rng = _rng(u, i, "maximal")
    a = sample_matrix(u, i)
    e = random_projection_below(rng, d.one, u.entry_bound)
    c.check("zero-is-least", lambda a: star_le(_zero(a), a, "right"), a)
    c.check("below-one-iff-projection", lambda a: star_le(a, d.one, "right") == _is_projection(a), a)
    c.check("below-one-iff-projection", lambda a: star_le(a, d.one, "right") == _is_projection(a), e)
    if rank(a) == d.size:
        c.check(
            "left-invertible-is-maximal",
            lambda a: primes(a).right_double == d.one and is_maximal(a) is True,
            a,
        )
    else:
        c.vacuous()


_SUITES: dict[str, Callable] = {
    "penrose": _penrose_unit,
    "primes": _primes_unit,
    "prop22": _doubles_unit,
    "order-axioms": _order_axioms_unit,
    "equivalence": _equivalence_unit,
    "iso": _iso_unit,
    "meetjoin": _meetjoin_unit,
    "orthomodular": _orthomodular_unit,
    "maximal": _maximal_unit,
}

SUITE_NAMES = tuple(_SUITES)


def _run_units(name: str, u: RingUniverse, indices: Sequence[int]) -> tuple[int, list]:
    fn = _SUITES[name]
    count = 0
    tagged = []
    for i in indices:
        c = _Cases()
        fn(u, i, c)
        count += c.count
        tagged.extend((i, f) for f in c.failures)
    return count, tagged


def run_suite(name: str, universe: RingUniverse, workers: int = 1) -> SuiteReport:
    """Run one named suite over a universe.

    Raises :class:`UnknownSuite` for a name outside :data:`SUITE_NAMES`.
    """
    if name not in _SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    start = time.perf_counter()
    n = _units(universe)
    if workers <= 1 or n < 2:
        cases, tagged = _run_units(name, universe, range(n))
    else:
        chunks = [range(k, n, workers) for k in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_units, [name] * workers, [universe] * workers, chunks))
        cases = sum(r[0] for r in results)
        tagged = sorted((t for r in results for t in r[1]), key=lambda t: t[0])
    return SuiteReport(name, cases, [f for _, f in tagged], time.perf_counter() - start)


def run_suites(names: Sequence[str] | str, universe: RingUniverse, workers: int = 1) -> list[SuiteReport]:
    if names == "all":
        names = SUITE_NAMES
    elif isinstance(names, str):
        names = [names]
    for name in names:
        if name not in _SUITES:
            raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    return [run_suite(name, universe, workers) for name in names]
