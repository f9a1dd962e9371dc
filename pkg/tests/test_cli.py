import json
import re

from rsfans import examples as ex
from rsfans.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_examples_listing(capsys):
    code, out, _ = run(capsys, "examples")
    assert code == 0
    assert re.search(r"f2\s+23 elements\s+11 characters", out)


def test_examples_dot_matches_golden(capsys):
    code, out, _ = run(capsys, "examples", "f2", "--dot")
    assert code == 0
    labels = dict(re.findall(r'(n\d+) \[label="([^"]*)"\]', out))
    edges = {(labels[a], labels[b]) for a, b in re.findall(r"(n\d+) -> (n\d+);", out)}
    assert edges == ex.golden("order", "f2")[1]


def test_examples_spec_dot(capsys):
    code, out, _ = run(capsys, "examples", "f4", "--dot", "--spec")
    assert code == 0 and '"h7"' in out and '"h1"' not in out


def test_verify_rs_on_three_file(capsys):
    code, out, _ = run(capsys, "verify-rs", str(ex.structure_path("three")))
    assert code == 0
    assert "RS8" in out


def test_verify_rs_nonzero_exit_on_failure(capsys, tmp_path):
    p = tmp_path / "free2.ts"
    p.write_text("name: free2\ngenerators: x y\nrelations:\n")
    code, out, _ = run(capsys, "verify-rs", str(p))
    assert code == 1
    assert re.search(r"RS3\s+FAIL", out)


def test_check_ts_and_parse_error(capsys, tmp_path):
    assert run(capsys, "check-ts", "f3")[0] == 0
    p = tmp_path / "bad.ts"
    p.write_text("name: bad\nconstants: one=1 zero=0 minus_one=-1\nelements: 1 0 -1\ntable:\n1 0 -1\n0 0 q\n-1 0 1\n")
    code, _, err = run(capsys, "check-ts", str(p))
    assert code == 2
    assert "line 6, column 5" in err


def test_check_ts_reports_axiom_failure(capsys, tmp_path):
    p = tmp_path / "bad.ts"
    p.write_text("name: bad\nconstants: one=1 zero=0 minus_one=-1\nelements: 1 0 -1\ntable:\n1 0 -1\n0 0 0\n-1 0 -1\n")
    code, out, _ = run(capsys, "check-ts", str(p))
    assert code == 1 and re.search(r"TS3\s+FAIL", out)


def test_make_fan_precondition(capsys, tmp_path):
    p = tmp_path / "free2.ts"
    p.write_text("name: free2\ngenerators: x y\nrelations:\n")
    code, _, err = run(capsys, "make-fan", str(p))
    assert code == 2
    assert "('x', 'y')" in err


def test_unknown_structure_and_element(capsys):
    assert run(capsys, "chars", "nosuch")[0] == 2
    code, _, err = run(capsys, "quotient", "f1", "--ideal", "0,w")
    assert code == 2 and "unknown element" in err


def test_chars_json(capsys):
    code, out, _ = run(capsys, "--json", "chars", "f1")
    data = json.loads(out)
    assert code == 0
    assert data["characters"]["h2"] == [1, 0, -1, 1, -1, 1, -1]


def test_is_fan(capsys):
    assert run(capsys, "is-fan", "f1")[0] == 0
    code, out, _ = run(capsys, "is-fan", "f1", "--chars", "h1,h2")
    assert code == 1 and "verdicts agree           yes" in out


def test_order_outputs(capsys, tmp_path):
    code, out, _ = run(capsys, "order", "f4")
    assert code == 0 and "pentagon" in out
    dot = tmp_path / "f1.dot"
    code, out, _ = run(capsys, "order", "f1", "--dot", str(dot))
    assert code == 0 and dot.read_text().startswith('digraph "f1-order"')
    code, out, _ = run(capsys, "order", "f1", "--spec")
    assert "h2 < h1" in out


def test_quotient_commands(capsys):
    code, out, _ = run(capsys, "quotient", "f3", "--ideal", "0")
    assert code == 0
    assert re.search(r"\[1\] = \{1, z", out)
    code, out, _ = run(capsys, "quotient", "f1", "--chars", "h2")
    assert code == 0 and "quotient has 3 elements" in out
    assert run(capsys, "quotient", "f2", "--chars", "h2,h8")[0] == 2


def test_characterize(capsys):
    code, out, _ = run(capsys, "--json", "characterize", "f2")
    assert code == 0 and json.loads(out)["equivalence_holds"]


def test_rs3_search(capsys):
    code, out, _ = run(capsys, "rs3-search", "f1")
    assert code == 0 and "no separating subset" in out


def test_pring(capsys):
    code, out, _ = run(capsys, "pring", "check", "--preorder", "lex", "--range", "2")
    assert code == 0
    assert "T-radical refuted by witness (1X+0, 0X+0)" in out
    assert "holds on sample" in out


def test_output_is_deterministic(capsys):
    first = run(capsys, "--json", "order", "f2")[1]
    assert run(capsys, "--json", "order", "f2")[1] == first


def test_reproduce_writes_only_into_out_dir(capsys, tmp_path, monkeypatch):
    from rsfans import acceptance
    from rsfans.acceptance import Row

    monkeypatch.setattr(acceptance, "ROWS", [lambda seed=0: Row(1, "stub", True, "ok", ["logged"])])
    out_dir = tmp_path / "out"
    code, out, _ = run(capsys, "reproduce", "--out", str(out_dir))
    assert code == 0 and "[PASS]  1. stub: ok" in out
    assert (out_dir / "acceptance.json").exists()
    assert sorted(p.name for p in tmp_path.iterdir()) == ["out"]
