import json
import subprocess
import sys

import pytest

from wbcat.affine import multiply
from wbcat.cli import main
from wbcat.cyclotomic import make_params
from wbcat.diagrams import element_to_json, generator


def run_main(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dim_example(capsys):
    code, out, _ = run_main(capsys, "dim", "--seq", "1,-1", "--m", "2", "--n", "2", "--delta", "0")
    assert code == 0 and out == '{"dim":8}\n'


def test_omega_example(capsys):
    code, out, _ = run_main(capsys, "omega", "--m", "1", "--n", "1", "--delta", "0", "--k", "5")
    assert code == 0 and out == '{"omega":"2"}\n'


def test_qcancel_example(capsys):
    code, out, _ = run_main(capsys, "qcancel", "--poly", "y1+y2", "--pair", "1,2")
    assert code == 0 and out == '{"result":true}\n'
    code, out, _ = run_main(capsys, "qcancel", "--poly", "y1*y2", "--pair", "1,2")
    assert code == 0 and out == '{"result":false}\n'


def test_engine_error_exit_1(capsys):
    code, out, err = run_main(capsys, "omega", "--m", "2", "--n", "2", "--delta", "2", "--k", "1")
    assert code == 1 and out == "" and "degenerate" in err


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["dim", "--seq", "1,-1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_bad_seq_is_engine_error(capsys):
    code, _, err = run_main(capsys, "dim", "--seq", "1,2", "--m", "2", "--n", "2", "--delta", "0")
    assert code == 1 and "orientation" in err


def test_reduce_fixpoint_and_determinism(capsys):
    p = make_params(2, 2, 0)
    y1 = generator("y", (1, -1), 1)
    el = json.dumps(element_to_json(multiply(y1, y1, p.omega)))
    args = ("reduce", "--element", el, "--m", "2", "--n", "2", "--delta", "0")
    code, out1, _ = run_main(capsys, *args)
    assert code == 0
    code, out2, _ = run_main(capsys, *args)
    assert out2 == out1
    code, out3, _ = run_main(capsys, "reduce", "--element", out1.strip(), "--m", "2", "--n", "2", "--delta", "0")
    assert code == 0 and out3 == out1
    parsed = json.loads(out1)
    assert parsed["terms"][0]["coeff"] == "2"
    assert parsed["terms"][0]["monomial"]["gamma"] == [1, 0]


def test_reduce_affine_keeps_dot_stack(capsys):
    p = make_params(2, 2, 0)
    y1 = generator("y", (1, -1), 1)
    el = json.dumps(element_to_json(multiply(y1, y1, p.omega)))
    code, out, _ = run_main(capsys, "reduce", "--element", el, "--m", "2", "--n", "2", "--delta", "0", "--affine")
    assert code == 0
    assert json.loads(out)["terms"][0]["monomial"]["gamma"] == [2, 0]


def test_multiply_matches_engine(capsys):
    y1 = json.dumps(element_to_json(generator("y", (1, -1), 1)))
    code, out, _ = run_main(capsys, "multiply", "--x", y1, "--y", y1, "--m", "2", "--n", "2", "--delta", "0")
    assert code == 0
    assert json.loads(out)["terms"][0]["coeff"] == "2"


def test_struct_consts_single_strand(capsys):
    code, out, _ = run_main(capsys, "struct-consts", "--seq", "1", "--m", "2", "--n", "2", "--delta", "0")
    assert code == 0
    assert json.loads(out) == {
        "dim": 2,
        "triples": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"], [1, 1, 1, "2"]],
    }


def test_center_commands(capsys):
    code, out, _ = run_main(capsys, "center-basis", "--seq", "1,-1", "--max-deg", "1", "--m", "2", "--n", "2", "--delta", "0")
    assert code == 0 and json.loads(out) == {"basis": ["1", "y1+y2"]}
    code, out, _ = run_main(capsys, "center-test", "--poly", "y1", "--seq", "1,-1", "--m", "2", "--n", "2", "--delta", "0")
    assert code == 0 and json.loads(out) == {"central": False}


def test_wseries(capsys):
    code, out, _ = run_main(capsys, "wseries", "--seq", "1,-1,1", "--i", "1", "--k", "2", "--m", "2", "--n", "2", "--delta", "0")
    assert code == 0 and json.loads(out) == {"poly": "16"}
    code, _, err = run_main(capsys, "wseries", "--seq", "1,1", "--i", "1", "--k", "0", "--m", "2", "--n", "2", "--delta", "0")
    assert code == 1 and "orientation" in err


def test_verify_relations(capsys):
    code, out, _ = run_main(capsys, "verify-relations", "--seq", "1,-1")
    assert code == 0
    rep = json.loads(out)
    assert rep["all_ok"] is True and rep["failed"] == []
    assert "cap_y_cap" in rep["ok"] and "cap_sq" in rep["ok"]


def test_verify_s8_trivial(capsys):
    code, out, _ = run_main(capsys, "verify-s8", "--seq", "1,-1", "--N", "2")
    assert code == 0
    rep = json.loads(out)
    assert rep and all(v["failures"] == [] for v in rep.values())


def test_spectrum(capsys):
    code, out, _ = run_main(capsys, "spectrum", "--seq", "1,-1", "--m", "2", "--n", "2", "--delta", "0")
    assert code == 0
    assert json.loads(out) == {
        "count": 6,
        "tuples": [["0", "0"], ["0", "0"], ["0", "2"], ["2", "-2"], ["2", "0"], ["2", "2"]],
    }


def test_young_enum(capsys):
    code, out, _ = run_main(capsys, "young-enum", "--seq", "1", "--m", "2", "--n", "2", "--delta", "1")
    assert code == 0
    assert json.loads(out) == {
        "count": 2,
        "factors": [[0, -1, 0, 0], [-1, -1, 1, 0]],
        "sequences": [[["remove_below", 1, "-1"]], [["add_above", 3, "0"]]],
    }


def test_faithfulness(capsys):
    code, out, _ = run_main(capsys, "faithfulness", "--seq", "1", "--m", "2", "--n", "2", "--delta", "0")
    assert code == 0
    assert json.loads(out) == {"dim": 2, "faithful": True, "rank": 2}


def test_console_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "wbcat.cli", "dim", "--seq", "1,-1", "--m", "2", "--n", "2", "--delta", "0"],
        capture_output=True,
        text=True,
    )
    assert r.returncode == 0 and r.stdout == '{"dim":8}\n'
