import json
from pathlib import Path

import pytest

from linkmu.cli import main

GOLDEN = Path(__file__).parent / "golden"

CASES = {
    "mu_hopf_12": ["mu", "hopf", "12"],
    "mu_borromean_123": ["mu", "borromean", "123"],
    "mu_trivial2_12": ["mu", "trivial-2", "12"],
    "mu_hopf_12_json": ["mu", "hopf", "12", "--json"],
    "table_hopf": ["table", "hopf", "--maxlen", "2"],
    "table_whitehead_nonzero": ["table", "whitehead", "--nonzero"],
    "check_hopf_linkhomotopy": ["check", "hopf", "linkhomotopy"],
    "check_trivial3_linkhomotopy": ["check", "trivial-3", "linkhomotopy"],
    "check_borromean_selfdelta": ["check", "borromean", "selfdelta", "--maxlen", "4"],
    "check_borromean0_null": ["check", "borromean0", "nullhomotopy", "--component", "0"],
    "conway_kk4": ["conway", "--kk", "4"],
    "conway_kk4_closed": ["conway", "--kk", "4", "--closed-form"],
    "conway_trefoil": ["conway", "trefoil"],
    "conway_kk5_modz": ["conway", "--kk", "5", "--mod-z", "9"],
    "kk_2": ["kk", "2"],
    "lk_pipeline_4": ["lk-pipeline", "4"],
    "lk_pipeline_3": ["lk-pipeline", "3"],
    "obstruction_5": ["obstruction", "--p", "5"],
    "obstruction_m3": ["obstruction", "--p", "-3"],
    "fixtures_list": ["fixtures", "list"],
}

FAILING = {"check_hopf_linkhomotopy", "check_borromean_selfdelta", "check_borromean0_null"}


def run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, capsys, monkeypatch):
    monkeypatch.delenv("MILNOR_MAXLEN_DEFAULT", raising=False)
    code, out, _ = run(capsys, CASES[name])
    assert out == (GOLDEN / f"{name}.txt").read_text()
    assert code == (1 if name in FAILING else 0)


def test_output_is_repeatable(capsys):
    first = run(capsys, ["table", "borromean", "--maxlen", "3"])
    assert run(capsys, ["table", "borromean", "--maxlen", "3"]) == first


def test_spec_strings(capsys):
    assert run(capsys, ["mu", "hopf", "12"])[1] == "mu=1 mubar=1 (mod 0)\n"
    assert run(capsys, ["conway", "--kk", "4"])[1] == "1 + 2*z^6 + z^12\n"
    assert run(capsys, ["conway", "--kk", "4", "--closed-form"])[1].rstrip().endswith("MATCH")
    out = run(capsys, ["lk-pipeline", "2"])[1]
    assert "mubar([2,2]) = -2" in out
    out = run(capsys, ["obstruction", "--p", "5"])[1]
    assert "residue 4 mod 5" in out and "NOT self-Delta concordant" in out


@pytest.mark.parametrize("argv", [
    ["obstruction", "--p", "1"],
    ["obstruction", "--p", "0"],
    ["mu", "hopf", "1x"],
    ["mu", "hopf", "1"],
    ["mu", "hopf", "13"],
    ["mu", "nosuchthing", "12"],
    ["check", "hopf", "nullhomotopy"],
    ["check", "hopf", "nullhomotopy", "--component", "7"],
    ["conway"],
    ["conway", "trefoil", "--kk", "3"],
    ["conway", "trefoil", "--closed-form"],
    ["conway", "hopf"],
    ["conway", "--kk", "1"],
    ["kk", "1"],
    ["lk-pipeline", "1"],
    ["table", "hopf", "--maxlen", "1"],
    ["table", "hopf", "--ends-with", "5"],
    ["fixtures", "show"],
    ["fixtures", "show", "nope"],
])
def test_usage_errors_exit_2(argv, capsys):
    code, out, err = run(capsys, argv)
    assert code == 2
    assert err.startswith("error: ")


def test_nullhomotopy_requires_assertion(tmp_path, capsys):
    f = tmp_path / "l.json"
    f.write_text(json.dumps({"components": 2, "has_component_zero": True,
                             "longitudes": ["m1 m2 m1^-1 m2^-1", "", ""]}))
    code, _, err = run(capsys, ["check", str(f), "nullhomotopy", "--component", "0"])
    assert code == 2 and "trivial_rest_asserted" in err
    data = json.loads(f.read_text())
    data["trivial_rest_asserted"] = True
    f.write_text(json.dumps(data))
    code, out, _ = run(capsys, ["check", str(f), "nullhomotopy", "--component", "0"])
    assert code == 1 and out == "fails; witness 120: 1; witness 210: -1\n"


def test_link_file_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, ["mu", str(bad), "12"])[0] == 2
    bad.write_text(json.dumps({"components": 2, "longitudes": ["m2 m3", "m1"]}))
    assert run(capsys, ["mu", str(bad), "12"])[0] == 2
    bad.write_text(json.dumps({"components": 2, "longitudes": ["m2^0", "m1"]}))
    code, _, err = run(capsys, ["mu", str(bad), "12"])
    assert code == 2 and "m2^0" in err


def test_matrix_file(tmp_path, capsys):
    f = tmp_path / "m.txt"
    f.write_text("2\n-1 1\n0 -1\n")
    assert run(capsys, ["conway", str(f)])[1:] == ("1 + z^2\n", "")
    f.write_text("2\n-1 1\n")
    assert run(capsys, ["conway", str(f)])[0] == 2


def test_kk_output_round_trips(tmp_path, capsys):
    f = tmp_path / "k3.txt"
    _, out, _ = run(capsys, ["kk", "3"])
    f.write_text(out)
    assert run(capsys, ["conway", str(f)])[1] == "1 - 2*z^4 + z^8\n"


def test_json_mode(capsys):
    for argv in (["check", "hopf", "linkhomotopy"], ["conway", "--kk", "3", "--closed-form"],
                 ["lk-pipeline", "3"], ["obstruction", "--p", "-3"], ["table", "hopf", "--maxlen", "2"],
                 ["fixtures", "list"], ["kk", "2"]):
        _, out, _ = run(capsys, argv + ["--json"])
        data = json.loads(out)
        assert data["schema"] == 1 and data["command"] == argv[0]
    data = json.loads(run(capsys, ["check", "hopf", "linkhomotopy", "--json"])[1])
    assert data["verdict"] == "fails"
    assert data["witnesses"][0] == {"index": "12", "value": 1, "modulus": 0}
    data = json.loads(run(capsys, ["lk-pipeline", "4", "--json"])[1])
    assert data["mubar_kk"] == -2 and data["a_7"] == -2


def test_env_default_maxlen(capsys, monkeypatch):
    monkeypatch.setenv("MILNOR_MAXLEN_DEFAULT", "3")
    _, out, _ = run(capsys, ["table", "hopf"])
    assert max(len(line.split(":")[0]) for line in out.splitlines()) == 3
    monkeypatch.setenv("MILNOR_MAXLEN_DEFAULT", "three")
    assert run(capsys, ["table", "hopf"])[0] == 2


def test_table_filters(capsys):
    _, out, _ = run(capsys, ["table", "borromean", "--maxlen", "5", "--r-max", "1", "--ends-with", "3", "--nonzero"])
    assert out == "123: 1 (mod 0)\n213: -1 (mod 0)\n"


def test_fixtures_show(capsys):
    _, out, _ = run(capsys, ["fixtures", "show", "hopf"])
    assert json.loads(out)["longitudes"] == ["m2", "m1"]
    _, out, _ = run(capsys, ["fixtures", "show", "kk2"])
    assert out.startswith("4\n")
