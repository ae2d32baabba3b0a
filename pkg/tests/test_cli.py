import json

import pytest

from zeroapn.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_zero_apn(capsys):
    code, out, _ = run(capsys, "check", "-n", "9", "-d", "35", "--json")
    rec = json.loads(out)
    assert code == 0 and rec["zero_apn"] and rec["uniformity"] > 2
    assert rec["modulus_hex"] == "203" and rec["seed"] == 20240607


def test_check_not_zero_apn(capsys):
    code, out, _ = run(capsys, "check", "-n", "4", "-d", "1", "--json")
    rec = json.loads(out)
    assert code == 1 and rec["witnesses"] == [format(w, "x") for w in range(2, 16)]


def test_check_human(capsys):
    code, out, _ = run(capsys, "check", "-n", "4", "-d", "1")
    assert code == 1 and "witnesses: 2 3" in out


@pytest.mark.parametrize("argv", [
    ["check", "-n", "4", "-d", "15"],
    ["check", "-n", "4", "-d", "0"],
    ["check", "-n", "9", "-d", "35", "--modulus", "13"],
    ["certify", "3.2-case2"],
    ["certify", "9.9"],
    ["certify"],
    ["bogus"],
    ["x0check", "-n", "14", "-d", "3"],
    ["x0check", "-n", "4", "-d", "3", "--x0", "ff"],
    ["table1", "--only", "99"],
    ["coset", "-n", "5", "-d", "31"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2


def test_transcription_message(capsys):
    code, _, err = run(capsys, "certify", "3.2-case2")
    assert code == 2 and "transcription not in the source" in err


def test_alternate_modulus(capsys):
    code, out, _ = run(capsys, "check", "-n", "9", "-d", "35", "--modulus", "211", "--json")
    rec = json.loads(out)
    assert code == 0 and rec["modulus_hex"] == "211" and rec["zero_apn"]


def test_env_overrides(capsys, monkeypatch):
    monkeypatch.setenv("ZEROAPN_JSON", "1")
    monkeypatch.setenv("ZEROAPN_SEED", "7")
    monkeypatch.setenv("ZEROAPN_MODULUS", "211")
    code, out, _ = run(capsys, "check", "-n", "9", "-d", "35")
    rec = json.loads(out)
    assert rec["seed"] == 7 and rec["modulus_hex"] == "211"
    code, out, _ = run(capsys, "check", "-n", "9", "-d", "35", "--seed", "9")
    assert json.loads(out)["seed"] == 9


def test_spectrum_and_x0(capsys):
    code, out, _ = run(capsys, "spectrum", "-n", "5", "-d", "3", "--json")
    rec = json.loads(out)
    assert code == 0 and rec["uniformity"] == 2
    code, out, _ = run(capsys, "x0check", "-n", "5", "-d", "3", "--x0", "1b", "--json")
    assert code == 0 and json.loads(out)["x0_apn"]
    code, _, _ = run(capsys, "x0check", "-n", "4", "-d", "1")
    assert code == 1


def _strip(lines):
    recs = [json.loads(l) for l in lines.splitlines()]
    for r in recs:
        r.pop("elapsed_ms")
    return recs


def test_table1_cache_rerun(capsys, tmp_path):
    argv = ["table1", "--only", "1", "--only", "12", "--n-max", "13", "--json", "--cache-dir", str(tmp_path)]
    code, first, _ = run(capsys, *argv)
    assert code == 0
    assert any(tmp_path.rglob("*.json"))
    code2, second, _ = run(capsys, *argv)
    assert code2 == 0 and _strip(first) == _strip(second)
    fams = {r["family"] for r in _strip(first)}
    assert fams == {1, 12}


def test_table1_m_max(capsys):
    code, out, _ = run(capsys, "table1", "--only", "5", "--m-max", "3", "--json")
    recs = _strip(out)
    assert code == 0 and [r["m"] for r in recs] == [3]  # m = 2 is excluded by m != 2 mod 3


def test_certify_writes_file(capsys, tmp_path):
    code, out, _ = run(capsys, "certify", "3.1", "-o", str(tmp_path), "--json")
    rec = json.loads(out)
    assert code == 0 and rec["verdict"] == "pass"
    data = json.loads((tmp_path / "2m+1_1.json").read_text())
    assert data["case"] == "2m+1/1"


def test_conjugate(capsys):
    code, out, _ = run(capsys, "conjugate", "3.6", "--json")
    assert code == 0 and json.loads(out)["agree"]


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "-n", "7", "-d", "3", "--json")
    rec = json.loads(out)
    assert code == 0 and rec["classical_match"]
    code, out, _ = run(capsys, "classify", "-n", "9", "-d", "35", "--json")
    rec = json.loads(out)
    assert not rec["classical_match"]
    assert {"family-1", "family-12"} <= {m["name"] for m in rec["matches"]}


def test_coset_and_matrix(capsys):
    code, out, _ = run(capsys, "coset", "-n", "5", "-d", "3", "--json")
    assert json.loads(out)["members"] == [3, 6, 12, 17, 24]
    code, out, _ = run(capsys, "inequiv-matrix", "-n", "9", "--kinds", "paper-family")
    assert code == 0 and "family-2(m=4) ~ family-5(m=3)" in out
