"""Acceptance criteria.

Each test runs one criterion at its stated scale, asserts exact agreement
(there is no tolerance: all arithmetic is exact) and the runtime budget, and
prints a single PASS/FAIL line. Run on its own with

    pytest tests/test_acceptance.py -v
"""

import json
import subprocess
import sys
import time
from contextlib import contextmanager

import pytest

from rickart.cli import main
from rickart.harness import RingUniverse, run_suite
from rickart.matrix import Matrix
from rickart.scalars import QI, PrimeField
from rickart.star_ring import RingDescriptor, check_proper

F3 = PrimeField(3)
M2F3 = RingDescriptor(F3, 2)
SAMPLES = 1000

# the random Q(i) universes: 1000 samples at each of n = 2 and n = 3, entry bound 3
QI_UNIVERSES = [RingUniverse.sampled(RingDescriptor(QI, n), SAMPLES, seed=0, entry_bound=3) for n in (2, 3)]
EXHAUSTIVE = RingUniverse.exhaustive(M2F3)


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def _run(number, title, budget):
        start = time.perf_counter()
        status, detail = "FAIL", ""
        try:
            yield
            elapsed = time.perf_counter() - start
            if elapsed >= budget:
                detail = " over budget"
                raise AssertionError(f"criterion {number} took {elapsed:.1f}s, budget {budget}s")
            status = "PASS"
        finally:
            elapsed = time.perf_counter() - start
            with capsys.disabled():
                print(f"\n[{status}] criterion {number:2d}: {title} ({elapsed:.2f}s, budget {budget}s){detail}")

    return _run


def _suite_clean(name, universes):
    for u in universes:
        report = run_suite(name, u)
        assert report.cases > 0, f"{name} on {u} checked nothing"
        assert report.failures == [], f"{name} on {u}: {[f.to_json() for f in report.failures[:3]]}"


def test_c01_penrose(criterion):
    with criterion(1, "Moore-Penrose identities, random Q(i) n=2,3 and all of M2(F3)", 30):
        _suite_clean("penrose", QI_UNIVERSES + [EXHAUSTIVE])


def test_c02_primes(criterion):
    with criterion(2, "Rickart primes, one-sided factorisations, prime identities", 60):
        _suite_clean("primes", QI_UNIVERSES + [EXHAUSTIVE])
        _suite_clean("prop22", QI_UNIVERSES + [EXHAUSTIVE])


def test_c03_order_axioms(criterion):
    with criterion(3, "partial-order axioms, exhaustive M2(F3) and Q(i) chains", 120):
        report = run_suite("order-axioms", EXHAUSTIVE)
        # reflexivity 2*81, antisymmetry 2*81^2, transitivity 2*81^3 at least
        assert report.cases >= 2 * (81 + 81 ** 2 + 81 ** 3)
        assert report.failures == []
        _suite_clean("order-axioms", QI_UNIVERSES)


def test_c04_equivalence(criterion):
    with criterion(4, "five formulations agree, all M2(F3) pairs and random Q(i) pairs", 120):
        report = run_suite("equivalence", EXHAUSTIVE)
        assert report.cases >= 2 * 81 * 81
        assert report.failures == []
        _suite_clean("equivalence", QI_UNIVERSES)


def test_c05_isomorphism(criterion):
    with criterion(5, "phi/psi order isomorphism [0,x] ~ [0,x″] for every x in M2(F3)", 60):
        _suite_clean("iso", [EXHAUSTIVE])


def test_c06_meet_join(criterion):
    with criterion(6, "segment meet/join are global glb/lub; bounded meet; bound independence", 300):
        _suite_clean("meetjoin", [EXHAUSTIVE])


def test_c07_orthomodular(criterion):
    with criterion(7, "orthomodular law on P and on every interval; De Morgan", 60):
        _suite_clean("orthomodular", [EXHAUSTIVE])


def test_c08_maximal(criterion):
    with criterion(8, "0 least, left-invertible maximal, a <= 1 iff projection", 30):
        _suite_clean("maximal", [EXHAUSTIVE])


def test_c09_properness(criterion):
    with criterion(9, "properness certified for Q(i) n<=3, F3/F7 n<=2; refuted for M2(F2)", 5):
        for n in (1, 2, 3):
            assert check_proper(RingDescriptor(QI, n)).proper
        for p in (3, 7):
            for n in (1, 2):
                cert = check_proper(RingDescriptor(PrimeField(p), n))
                assert cert.proper and cert.exhaustive
        cert = check_proper(RingDescriptor(PrimeField(2), 2))
        assert not cert.proper
        w = cert.witness
        assert not w.is_zero() and (w.star() @ w).is_zero()


def test_c10_cli(criterion, tmp_path, capsys):
    def write(m, name):
        p = tmp_path / name
        p.write_text(json.dumps(m.to_json()))
        return str(p)

    def call(argv):
        code = main(argv)
        out, _ = capsys.readouterr()
        return code, out

    with criterion(10, "CLI: pinv and primes worked example, order exit codes, stable hasse", 5):
        a = write(Matrix([[1, 0], [1, 0]], QI), "a.json")
        zero = write(Matrix.zeros(2, 2, QI), "zero.json")
        e = write(Matrix([[1, 0], [0, 0]], QI), "e.json")
        code, out = call(["pinv", a])
        assert code == 0 and json.loads(out)["entries"] == [["1/2", "1/2"], ["0", "0"]]
        code, out = call(["primes", a])
        q = json.loads(out)
        assert code == 0
        assert q["lp"]["entries"] == [["1/2", "-1/2"], ["-1/2", "1/2"]]
        assert q["rp"]["entries"] == [["0", "0"], ["0", "1"]]
        assert q["ld"]["entries"] == [["1/2", "1/2"], ["1/2", "1/2"]]
        assert q["rd"]["entries"] == [["1", "0"], ["0", "0"]]
        code, out = call(["order", "--side", "right", "--formulation", "all", zero, a])
        assert code == 0 and json.loads(out)["holds"] and json.loads(out)["agreed"]
        assert call(["order", "--side", "right", e, a])[0] == 1
        assert call(["order", "--side", "right", a, write(Matrix.identity(3, QI), "i3.json")])[0] == 2
        dots = []
        for k in range(2):
            out_path = tmp_path / f"h{k}.dot"
            assert call(["hasse", "--relation", "right-cstar", "--ring", "M2(F3)", "-o", str(out_path)])[0] == 0
            dots.append(out_path.read_bytes())
        assert dots[0] == dots[1] and dots[0].count(b"->") > 0
