import json
import subprocess
import sys

import pytest

from rickart.cli import emit_hasse_dot, main
from rickart.harness import brute_force_poset_ops
from rickart.matrix import Matrix
from rickart.orders import right_star_le
from rickart.projections import proj_le
from rickart.scalars import QI
from rickart.structure import ring_projections

from conftest import M2F3, f3, qi


@pytest.fixture
def write(tmp_path):
    def _write(m, name):
        path = tmp_path / name
        path.write_text(json.dumps(m.to_json() if isinstance(m, Matrix) else m))
        return str(path)

    return _write


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_pinv_worked_example(write, capsys):
    code, out, _ = run(["pinv", write(qi([[1, 0], [1, 0]]), "a.json")], capsys)
    assert code == 0
    assert json.loads(out) == {"field": {"kind": "Qi"}, "rows": 2, "cols": 2,
                               "entries": [["1/2", "1/2"], ["0", "0"]]}
    assert Matrix.from_json(json.loads(out)) == qi([["1/2", "1/2"], [0, 0]])


def test_primes_quadruple(write, capsys):
    code, out, _ = run(["primes", write(qi([[1, 0], [1, 0]]), "a.json")], capsys)
    assert code == 0
    q = {k: Matrix.from_json(v) for k, v in json.loads(out).items()}
    assert list(q) == ["lp", "rp", "ld", "rd"]
    assert q["rd"] == qi([[1, 0], [0, 0]]) and q["rp"] == qi([[0, 0], [0, 1]])
    assert q["ld"] == qi([["1/2", "1/2"], ["1/2", "1/2"]])
    assert q["lp"] == qi([["1/2", "-1/2"], ["-1/2", "1/2"]])


def test_order_exit_codes(write, capsys):
    zero, b = write(qi([[0, 0], [0, 0]]), "zero.json"), write(qi([[1, 0], [1, 0]]), "b.json")
    e = write(qi([[1, 0], [0, 0]]), "e.json")
    code, out, _ = run(["order", "--side", "right", "--formulation", "all", zero, b], capsys)
    assert code == 0
    obj = json.loads(out)
    assert obj["agreed"] and obj["holds"] and all(obj["verdicts"].values())
    assert set(obj["verdicts"]) == {"prime", "stareq", "range", "exist", "witness"}
    code, out, _ = run(["order", "--side", "right", e, b], capsys)
    assert code == 1 and json.loads(out)["holds"] is False
    for form in ["prime", "stareq", "range", "exist", "witness"]:
        assert run(["order", "--side", "left", "--formulation", form, zero, b], capsys)[0] == 0
        assert run(["order", "--side", "right", "--formulation", form, e, b], capsys)[0] == 1


def test_order_errors_exit_2(write, capsys):
    a = write(qi([[1, 0], [0, 0]]), "a.json")
    three = write(Matrix.identity(3, QI), "i3.json")
    f3m = write(f3([[1, 0], [0, 1]]), "f.json")
    bad = write({"field": {"kind": "Fp", "p": 3}, "rows": 1, "cols": 1, "entries": [["3"]]}, "bad.json")
    for argv in (["order", "--side", "right", a, three],
                 ["order", "--side", "left", a, f3m],
                 ["pinv", bad],
                 ["pinv", "/nonexistent/x.json"]):
        code, out, err = run(argv, capsys)
        assert code == 2 and out == "" and "error" in err
    code, out, err = run(["meet", "--bound", a, three, a], capsys)
    assert code == 2


def test_invalid_json_exit_2(tmp_path, capsys):
    p = tmp_path / "x.json"
    p.write_text("{not json")
    code, _, err = run(["pinv", str(p)], capsys)
    assert code == 2 and "invalid JSON" in err


def test_meet_join(write, capsys):
    one = write(Matrix.identity(2, QI), "one.json")
    e = write(qi([[1, 0], [0, 0]]), "e.json")
    f = write(qi([["1/2", "1/2"], ["1/2", "1/2"]]), "f.json")
    code, out, _ = run(["meet", "--bound", one, e, f], capsys)
    assert code == 0 and Matrix.from_json(json.loads(out)) == qi([[0, 0], [0, 0]])
    code, out, _ = run(["join", "--bound", one, e, f], capsys)
    assert code == 0 and Matrix.from_json(json.loads(out)) == Matrix.identity(2, QI)
    code, _, err = run(["meet", "--bound", e, f, e], capsys)
    assert code == 2 and "not below" in err


def test_segment(write, capsys):
    top = write(f3([[1, 0], [0, 1]]), "one.json")
    code, out, _ = run(["segment", "--top", top, "--ring", "M2(F3)"], capsys)
    assert code == 0
    assert [Matrix.from_json(m) for m in json.loads(out)] == list(ring_projections(M2F3))
    assert run(["segment", "--top", top, "--ring", "M2(F7)"], capsys)[0] == 2


def test_ring_shorthand_rejections(capsys):
    for ring in ["M2(F2)", "M2(F5)", "M3(F3)", "M2(F4)", "R:n=2"]:
        code, _, err = run(["hasse", "--ring", ring], capsys)
        assert code == 2 and "admitted rings" in err
    code, _, err = run(["hasse", "--ring", "Qi:n=2"], capsys)
    assert code == 2


def test_hasse_byte_stable(tmp_path, capsys):
    a, b = tmp_path / "a.dot", tmp_path / "b.dot"
    assert main(["hasse", "--relation", "right-cstar", "--ring", "M2(F3)", "-o", str(a)]) == 0
    assert main(["hasse", "--relation", "right-cstar", "--ring", "M2(F3)", "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    text = a.read_text()
    assert text.startswith("digraph hasse {\n") and text.endswith("}\n")
    assert text.count("[label=") == 81


def test_hasse_projection_lattice(capsys):
    code, out, _ = run(["hasse", "--relation", "projection", "--ring", "M2(F3)"], capsys)
    assert code == 0
    edges = [line for line in out.splitlines() if "->" in line]
    # 0 is node n0 and 1 = [[1,0],[0,1]] is the top; four atoms in between
    assert len(edges) == 8
    top = next(line.split()[0] for line in out.splitlines() if '"[[1,0],[0,1]]"' in line)
    assert sum(line.strip().startswith("n0 ->") for line in edges) == 4
    assert sum(line.endswith(f"-> {top};") for line in edges) == 4


def test_hasse_dot_small_posets():
    z, e, one = qi([[0, 0], [0, 0]]), qi([[1, 0], [0, 0]]), Matrix.identity(2, QI)
    chain = emit_hasse_dot(brute_force_poset_ops([one, z, e], right_star_le))
    assert chain == (
        "digraph hasse {\n  rankdir=BT;\n"
        '  n0 [label="[[0,0],[0,0]]"];\n  n1 [label="[[1,0],[0,0]]"];\n  n2 [label="[[1,0],[0,1]]"];\n'
        "  n0 -> n1;\n  n1 -> n2;\n}\n"
    )
    a, b = qi([[1, 0], [0, 0]]), qi([[0, 1], [0, 0]])
    anti = emit_hasse_dot(brute_force_poset_ops([z, a, b], right_star_le))
    assert [l.strip() for l in anti.splitlines() if "->" in l] == ["n0 -> n1;", "n0 -> n2;"]


def test_hasse_projection_relation_matches_library():
    t = brute_force_poset_ops(ring_projections(M2F3), proj_le)
    assert t.least == 0 and len(t.maximal) == 1


def test_verify(capsys):
    code, out, err = run(["verify", "--suite", "order-axioms", "--ring", "M2(F3)"], capsys)
    assert code == 0
    [report] = json.loads(out)
    assert report["suite"] == "order-axioms" and report["failures"] == []
    assert "order-axioms" in err
    code, out, _ = run(["verify", "--suite", "penrose", "--ring", "Qi:n=2", "--samples", "10", "--seed", "4"],
                       capsys)
    assert code == 0 and json.loads(out)[0]["cases"] == 10


def test_module_entry_point(tmp_path):
    p = tmp_path / "a.json"
    p.write_text(json.dumps(qi([[1, 0], [1, 0]]).to_json()))
    proc = subprocess.run([sys.executable, "-m", "rickart", "pinv", str(p)], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["entries"] == [["1/2", "1/2"], ["0", "0"]]
