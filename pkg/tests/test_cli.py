import json

import pytest

from cycbar.cli import UsageError, _parse_weight_range, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_weight_range_parsing():
    assert _parse_weight_range("7") == (7, 7)
    assert _parse_weight_range("1..12") == (1, 12)
    assert _parse_weight_range(" 3..3 ") == (3, 3)
    for bad in ("abc", "5..2", "-1", "1..x", ".."):
        with pytest.raises(UsageError):
            _parse_weight_range(bad)


def test_homology_text(capsys):
    code, out, err = run(capsys, "homology", "--k", "2", "--i", "3")
    assert code == 0
    assert err == ""
    assert "weight component k=2, i=3" in out
    lines = [l.strip() for l in out.splitlines()]
    assert "2      1  Z" in lines
    assert "3      1  Z" in lines


def test_homology_weight_zero(capsys):
    code, out, _ = run(capsys, "homology", "--k", "3", "--i", "0")
    assert code == 0
    assert "i=0" in out and "Z" in out


def test_homology_json_round_trip(capsys):
    code, out, _ = run(capsys, "homology", "--k", "2", "--i", "1..3", "--format", "json")
    assert code == 0
    tree = json.loads(out)
    assert tree == json.loads(json.dumps(tree))
    assert tree["command"] == "homology"
    assert tree["config"] == {"k": 2, "i_min": 1, "i_max": 3}
    assert [c["i"] for c in tree["components"]] == [1, 2, 3]
    piece = tree["components"][1]
    assert piece["degrees"][1]["homology"] == {
        "rank": 0,
        "torsion": [2],
        "name": "Z/2",
    }


def test_output_is_byte_identical(capsys):
    outs = []
    for _ in range(2):
        code, out, _ = run(
            capsys, "tp", "--p", "2", "--k", "3", "--j", "1",
            "--truncate", "10", "--format", "json",
        )
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(
        capsys, "verdict", "--p", "2", "--k", "4",
        "--format", "json", "--out", str(target),
    )
    assert code == 0
    assert out == ""
    tree = json.loads(target.read_text())
    assert tree["verdicts"]["p_inverted_iso"] is True


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--k", "3", "--max-i", "7")
    assert code == 0
    assert "overall: PASS" in out
    assert "0 violations" in out


def test_verify_json_shape(capsys):
    code, out, _ = run(
        capsys, "verify", "--k", "2", "--max-i", "5", "--format", "json"
    )
    assert code == 0
    tree = json.loads(out)
    assert tree["ok"] is True
    assert [w["i"] for w in tree["weight_pieces"]] == [1, 3, 5]
    assert all(w["match"] for w in tree["weight_pieces"])
    assert all(e["alternating_count"] == 0 for e in tree["euler"])
    assert tree["identities"]["violations"] == []
    assert tree["identities"]["simplices_checked"] > 0


def test_verify_with_jobs_matches_serial(capsys):
    code1, out1, _ = run(capsys, "verify", "--k", "2", "--max-i", "6",
                         "--format", "json")
    code2, out2, _ = run(capsys, "verify", "--k", "2", "--max-i", "6",
                         "--format", "json", "--jobs", "2")
    assert code1 == code2 == 0
    assert out1 == out2


def test_tp_text(capsys):
    code, out, _ = run(capsys, "tp", "--p", "2", "--k", "3", "--j", "1",
                       "--truncate", "10")
    assert code == 0
    assert "truncated at weight 10" in out
    assert "exponent supremum:     infinity" in out


def test_tp_json_factors(capsys):
    code, out, _ = run(capsys, "tp", "--p", "2", "--k", "3", "--j", "1",
                       "--truncate", "10", "--format", "json")
    assert code == 0
    tree = json.loads(out)
    assert [f["exponent"] for f in tree["factors"]] == [0, 1, 0, 2, 0, 0, 0, 3, 0, 1]
    assert tree["truncated"] is True
    assert tree["verdicts"]["integral_iso"] is False
    assert tree["verdicts"]["exponent_sup"] == "infinity"
    assert [f["k_divides_i"] for f in tree["factors"][:6]] == [
        False, False, True, False, False, True,
    ]


def test_tp_even_degree(capsys):
    code, out, _ = run(capsys, "tp", "--p", "2", "--k", "3", "--j", "2",
                       "--truncate", "10", "--format", "json")
    assert code == 0
    tree = json.loads(out)
    assert tree["factors"] == []
    assert tree["truncated"] is False


def test_verdict_json(capsys):
    code, out, _ = run(capsys, "verdict", "--p", "3", "--k", "9",
                       "--format", "json")
    assert code == 0
    node = json.loads(out)["verdicts"]
    assert node["integral_iso"] is False
    assert node["p_inverted_iso"] is True
    assert node["exponent_sup"] == 2
    assert node["witness_weight"] == 9
    assert "negative cyclic" in node["remark"]


def test_selftest_passes(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert out.count("PASS") == 4
    assert "FAIL" not in out


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "homology", "--k", "1", "--i", "1")[0] == 2
    assert run(capsys, "homology", "--k", "2", "--i", "5..2")[0] == 2
    assert run(capsys, "homology", "--k", "2", "--i", "x")[0] == 2
    assert run(capsys, "verify", "--k", "2", "--max-i", "0")[0] == 2
    assert run(capsys, "tp", "--p", "4", "--k", "3", "--j", "1",
               "--truncate", "5")[0] == 2
    assert run(capsys, "tp", "--p", "2", "--k", "3", "--j", "1",
               "--truncate", "0")[0] == 2
    assert run(capsys, "verdict", "--p", "2", "--k", "0")[0] == 2
    code, _, err = run(capsys, "homology", "--k", "1", "--i", "1")
    assert "error:" in err


def test_unknown_command_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_missing_required_flag_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["homology", "--k", "2"])
    assert exc.value.code == 2
