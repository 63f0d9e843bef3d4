import json

import pytest

from bentkit.cli import main, parse_function
from bentkit.core import BooleanFunction
from bentkit.errors import ParseError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_text(capsys):
    code, out, _ = run(capsys, "eval", "x1*x2 + x3*x4")
    assert code == 0
    assert "class    Bent" in out and "degree   2" in out


def test_eval_json_round_trip(capsys):
    code, out, _ = run(capsys, "eval", "--json", "x1*x2 + x3*x4")
    d = json.loads(out)
    assert code == 0 and d["tag"] == "bent"
    f = BooleanFunction.from_hex(d["hex"])
    assert f == BooleanFunction.from_anf(d["anf"], d["n"])
    assert d["dual_hex"] == d["hex"]


def test_eval_hex_and_parse_error(capsys):
    code, out, _ = run(capsys, "eval", "--json", "hex:0001")
    assert code == 0 and json.loads(out)["anf"] == "x1*x2*x3*x4"
    code, _, err = run(capsys, "eval", "x0 + x1")
    assert code == 1 and "parse error" in err


def test_parse_function_inference():
    assert parse_function("1", 2) == BooleanFunction.constant(2, 1)
    assert parse_function("8") == BooleanFunction.from_table([1, 0, 0, 0])
    with pytest.raises(ParseError):
        parse_function("x1 +* x2")


def test_synth_from_file(tmp_path, capsys):
    p = tmp_path / "s.txt"
    p.write_text("00110\n01101\n10000\n11011\n\n1\n")
    code, out, _ = run(capsys, "synth", "--json", str(p))
    d = json.loads(out)
    assert code == 0 and d["tag"] == "plateaued" and d["s"] == 3
    want = BooleanFunction.from_callable(5, lambda x1, x2, x3, x4, x5:
                                         x4 & (x2 ^ x5) ^ x1 & (x2 ^ x4 ^ x5) ^ x3 & (1 ^ x2 ^ x4 ^ x5))
    assert BooleanFunction.from_anf(d["anf"], 5) == want


def test_synth_failure_exit_codes(tmp_path, capsys):
    p = tmp_path / "s.txt"
    p.write_text("00110\n01101\n10000\n11011\n")
    code, _, err = run(capsys, "synth", str(p), "--dual", "x1")
    assert code == 2 and "DualWeightError" in err
    code, _, _ = run(capsys, "synth", str(tmp_path / "missing.txt"), "--dual", "x1*x2")
    assert code == 2
    p.write_text("0a1\n")
    code, _, _ = run(capsys, "synth", str(p), "--dual", "x1*x2")
    assert code == 1


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "--json", "indirect-sum", "x1*x2", "x1*x2 + x1", "x1*x2", "x1*x2 + x2")
    d = json.loads(out)
    assert code == 0 and d["tag"] == "bent" and d["n"] == 4
    code, _, err = run(capsys, "construct", "rothaus", "x1*x2", "x1*x2", "x1")
    assert code == 2 and "witness" in err
    code, out, _ = run(capsys, "construct", "--no-verify", "rothaus", "x1*x2", "x1*x2", "x1")
    assert code == 0


def test_construct_generic_a_counterexample(capsys):
    fs = ["x1*x3 + x2*x4", "x1*x3 + x2*x4 + x2", "x1*x3 + x2*x4 + x3"]
    code, _, err = run(capsys, "construct", "generic-a", *fs, "--m", "1000")
    assert code == 2 and "PreconditionFailed" in err
    code, out, _ = run(capsys, "construct", "generic-a", *fs, "--m", "0000")
    assert code == 0 and "Bent" in out


def test_construct_dualcor(capsys):
    code, out, _ = run(capsys, "construct", "dualcor", "x1", "0", "--n", "2", "--pi", "0,1,2,3", "--phi", "0,1,3,2")
    assert code == 0 and "Bent" in out


def test_paper_examples(capsys):
    code, out, _ = run(capsys, "paper-examples", "--only", "rothaus-form", "--only", "mesnager")
    assert code == 0 and "2/2 passed" in out
    code, _, _ = run(capsys, "paper-examples", "--only", "nope")
    assert code == 1
    code, out, _ = run(capsys, "paper-examples", "--json")
    assert code == 0 and all(r["passed"] for r in json.loads(out))
