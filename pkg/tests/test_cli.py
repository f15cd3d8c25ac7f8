import json

import pytest

from curvegroups.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_artin_nf(capsys):
    code, out, _ = run(capsys, "artin", "nf", "--type", "E6", "--word", "(a2 a4 a6 a1 a3 a5)^6", "--json")
    assert code == 0
    assert json.loads(out)["results"]["normal_form"]["delta_power"] == 1


def test_plucker(capsys):
    code, out, _ = run(capsys, "plucker", "--degree", "3", "--nodes", "1", "--cusps", "0", "--json")
    rec = json.loads(out)["results"]["record"]
    assert code == 0 and (rec["d_dual"], rec["iota"], rec["tau"]) == (4, 3, 0)


def test_ade_info(capsys):
    code, out, _ = run(capsys, "ade", "info", "--type", "E6", "--json")
    res = json.loads(out)["results"]
    assert code == 0
    assert res["mu"] == 6 and res["fiber_rank"] == 6 and res["basis"][3] == "x2^2"
    assert set(res) == {"mu", "branches", "fiber_rank", "basis", "deformation", "monodromy_order"}


def test_zvk_file(capsys, tmp_path):
    f = tmp_path / "cusp.json"
    f.write_text(json.dumps({"degree": 2, "base": ["t"], "braids": {"t": "s1^3"}}))
    code, out, _ = run(capsys, "zvk", str(f), "--json")
    res = json.loads(out)["results"]
    assert code == 0
    assert set(res) == {"total", "total_closed", "affine", "projective"}
    assert res["affine"].startswith("< g1, g2 |")


def test_input_errors_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"degree": 2,\n')
    code, _, err = run(capsys, "zvk", str(bad))
    assert code == 2 and "line" in err
    bad.write_text(json.dumps({"degree": 3, "base": ["t"], "braids": {"t": "s1"}, "fiber": ["a"]}))
    assert run(capsys, "zvk", str(bad))[0] == 2
    assert run(capsys, "artin", "nf", "--type", "A3", "--word", "a7")[0] == 2
    assert run(capsys, "artin", "nf", "--type", "A3", "--word", "(a1")[0] == 2
    assert run(capsys, "plucker", "--degree", "3", "--nodes", "9")[0] == 2
    assert run(capsys, "ade", "info", "--type", "Q3")[0] == 2
    assert run(capsys, "robb", "--degree", "3")[0] == 2


def test_quartic_exit_code_reflects_failures(capsys):
    code, out, _ = run(capsys, "quartic", "--skip-enumeration")
    assert code == 1
    assert "[FAIL   ]" in out


def test_verify_all_only(capsys):
    code, out, _ = run(capsys, "verify-all", "--only", "plucker", "--json")
    rep = json.loads(out)
    assert code == 0
    assert rep["summary"]["failed"] == 0
    assert all("[7 plucker]" in c["claim"] for c in rep["checks"])


def test_robb(capsys):
    code, out, _ = run(capsys, "robb", "--degree", "5")
    assert code == 0 and "d=5" in out


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2
