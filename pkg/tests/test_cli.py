import json

import pytest

from symprod.cli import emit_json, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_betti_json(capsys):
    code, out, _ = run_cli(capsys, "betti", "--g", "2", "--n", "2")
    assert code == 0
    assert json.loads(out) == {"g": 2, "n": 2, "betti": [1, 4, 7, 4, 1]}


def test_signature_json(capsys):
    code, out, _ = run_cli(capsys, "signature", "--g", "3")
    assert code == 0
    assert json.loads(out) == {"g": 3, "n": 2, "signature": -2}


def test_obstruction_json(capsys):
    code, out, _ = run_cli(capsys, "obstruction", "--g", "2", "--k", "3")
    assert code == 0
    report = json.loads(out)
    assert report["km_congruent"] is False
    assert report["characteristic"] is True
    assert report["self_intersection"] == -9


def test_verify_macdonald(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "macdonald", "--g", "2", "--n", "3")
    assert code == 0
    report = json.loads(out)
    assert report["failures"] == 0
    assert report["relations_checked"] > 0


def test_verify_all_suites(capsys):
    for suite in ("betti", "signature", "wedge", "all"):
        code, out, _ = run_cli(capsys, "verify", "--suite", suite, "--g", "1", "--n", "2")
        assert code == 0
        assert json.loads(out)["failures"] == 0


def test_euler(capsys):
    code, out, _ = run_cli(capsys, "euler", "--g", "3", "--n", "2")
    assert json.loads(out)["euler"] == 6 and code == 0


def test_clifford(capsys):
    code, out, _ = run_cli(capsys, "clifford", "--g", "2", "--n", "5")
    report = json.loads(out)
    assert report["bound"] == 3 and code == 0
    assert report["certificate"]["bstar_coefficient"] != 0


def test_rational_curves(capsys):
    code, out, _ = run_cli(capsys, "rational-curves", "--g", "6")
    assert json.loads(out) == {"degrees": [1], "g": 6}


def test_primitive(capsys):
    code, out, _ = run_cli(capsys, "primitive", "--g", "1", "--n", "2", "--degree", "2")
    report = json.loads(out)
    assert report["classes"] == [
        [{"coeff": 1, "e": [], "gamma": 1}, {"coeff": -1, "e": [1, 2], "gamma": 0}]
    ]


def test_canonical(capsys):
    code, out, _ = run_cli(capsys, "canonical", "--g", "2")
    report = json.loads(out)
    assert report["canonical_homology"] == [
        {"coeff": 1, "e": [], "gamma": 1},
        {"coeff": -1, "e": [1, 2], "gamma": 0},
        {"coeff": -1, "e": [3, 4], "gamma": 0},
    ]


def test_chern(capsys):
    code, out, _ = run_cli(capsys, "chern", "--g", "0", "--n", "2")
    report = json.loads(out)
    assert report["c1"] == [{"coeff": 3, "estar": [], "bstar": 1}]


def test_intersection_matrix_csv(capsys):
    code, out, _ = run_cli(capsys, "intersection-matrix", "--g", "1", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == ",g1,e1.e2"
    assert lines[1] == "g1,1,0"
    assert lines[2] == "e1.e2,0,-1"


def test_intersection_matrix_json(capsys):
    code, out, _ = run_cli(capsys, "intersection-matrix", "--g", "2")
    report = json.loads(out)
    assert report["determinant"] in (1, -1)
    assert report["signature"] == -1
    assert len(report["entries"]) == 7


def test_output_is_deterministic(capsys):
    _, first, _ = run_cli(capsys, "betti", "--g", "3", "--n", "3")
    _, second, _ = run_cli(capsys, "betti", "--g", "3", "--n", "3")
    assert first == second
    _, obs1, _ = run_cli(capsys, "obstruction", "--g", "2", "--k", "7")
    _, obs2, _ = run_cli(capsys, "obstruction", "--g", "2", "--k", "7")
    assert obs1 == obs2


def test_json_keys_sorted_no_floats(capsys):
    _, out, _ = run_cli(capsys, "obstruction", "--g", "2", "--k", "3")
    report = json.loads(out)
    assert list(report) == sorted(report)
    assert "." not in out.replace("self-intersection", "").split('"notes"')[0]


def test_invalid_parameters_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["betti", "--g", "-1", "--n", "2"])
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        main(["signature", "--g", "99"])
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        main(["euler", "--g", "2", "--n", "2", "--format", "csv"])
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        main(["primitive", "--g", "1", "--n", "2", "--degree", "9"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_bigint_marker():
    report = {"value": 2**80, "small": 3}
    text = emit_json(report)
    decoded = json.loads(text)
    assert decoded["bigint"] is True
    assert decoded["value"] == str(2**80)
    assert decoded["small"] == 3
    plain = json.loads(emit_json({"value": 7}))
    assert "bigint" not in plain


def test_text_format(capsys):
    code, out, _ = run_cli(capsys, "euler", "--g", "2", "--n", "2", "--format", "text")
    assert code == 0
    assert "euler: 1" in out
