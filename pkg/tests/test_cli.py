from __future__ import annotations

import json
import subprocess
import sys

import pytest

from canbasis.cli import RunConfig, main, parse_dimvec, run_canbase, run_hecke
from canbasis.fixtures import fixture_names, run_selftest
from canbasis.laurent import IntLaurent, RatFunc
from canbasis.report import SCHEMA, emit_json, parse_report

ONE_MINUS_V2 = IntLaurent({0: 1, -2: -1})


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_dimvec():
    assert parse_dimvec("1,2,1") == (1, 2, 1)
    assert parse_dimvec("(2, 2)") == (2, 2)
    for bad in ["", "1,-1", "a,b"]:
        with pytest.raises(ValueError):
            parse_dimvec(bad)


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig((1,), "canbase", ())
    with pytest.raises(ValueError):
        RunConfig((1,), "canbase", ("dims",))
    with pytest.raises(ValueError):
        RunConfig((), "hecke", ("dims",))


def test_canbase_json_p_q(capsys):
    code, out, _ = run(["canbase", "--dimvec", "1,2,1", "--emit", "p,q", "--format", "json"], capsys)
    assert code == 0
    rep = parse_report(out)
    assert rep["schema"] == SCHEMA
    assert rep["kostant_partitions"][0] == [1, 0, 2, 0, 0, 1]
    assert rep["root_order"] == [[3, 3], [2, 3], [2, 2], [1, 3], [1, 2], [1, 1]]
    assert rep["P"][4][0] == IntLaurent.parse("v^-4")
    assert rep["Q"][4][2] == IntLaurent.const(1)


def test_canbase_psi_22(capsys):
    code, out, _ = run(["canbase", "--dimvec", "2,2", "--emit", "psi"], capsys)
    assert code == 0
    assert parse_report(out)["psi"][1][1] == RatFunc(1, ONE_MINUS_V2 ** 4)


def test_canbase_trivial(capsys):
    code, out, _ = run(["canbase", "--dimvec", "1", "--emit", "psi,p"], capsys)
    rep = parse_report(out)
    assert code == 0
    assert rep["psi"] == [[RatFunc(1, ONE_MINUS_V2)]]
    assert rep["P"] == [[IntLaurent.const(1)]]


def test_hecke_dims_and_multiplicities(capsys):
    code, out, _ = run(["hecke", "--dimvec", "1,2,1", "--emit", "dims,multiplicities"], capsys)
    rep = parse_report(out)
    assert code == 0
    assert rep["dims"] == [4, 6, 6, 2, 4]
    assert rep["multiplicities"][0] == [1, 1, 1, 2, 1]
    code, out, _ = run(["hecke", "--dimvec", "1", "--emit", "dims"], capsys)
    assert parse_report(out)["dims"] == [1]


@pytest.mark.parametrize("command, emit", [
    ("canbase", ("kp", "orbits", "patterns", "psi", "l", "d", "p", "q")),
    ("hecke", ("orbits", "patterns", "psi", "l", "d", "p", "q", "multiplicities", "h", "f", "dims")),
])
@pytest.mark.parametrize("dimvec", [(2, 2), (1, 2, 1), (2, 1, 2)])
def test_json_round_trip(command, emit, dimvec):
    cfg = RunConfig(dimvec, command, emit)
    rep = run_canbase(cfg) if command == "canbase" else run_hecke(cfg)
    back = parse_report(emit_json(rep))
    assert back == rep | {"dimvec": list(dimvec)}
    assert parse_report(emit_json(back)) == back


def test_pretty_and_latex(capsys):
    code, out, _ = run(["hecke", "--dimvec", "1,2,1", "--emit", "psi,d,h,f,dims", "--format", "pretty"], capsys)
    assert code == 0
    assert "Psi = 1/(1-v^-2)^3(1-v^-4) *" in out
    assert "H = 1/(1-v^-2)^4 *" in out
    assert "dim L_c = 4, 6, 6, 2, 4" in out
    code, out, _ = run(["canbase", "--dimvec", "2,2", "--emit", "psi", "--format", "latex"], capsys)
    assert code == 0
    assert "\\tfrac{1}{(1-v^{-2})^{2}(1-v^{-4})^{2}}" in out
    assert "1 + 2v^{-2} + v^{-4}" in out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "r.json"
    code, out, _ = run(["canbase", "--dimvec", "2,2", "--emit", "l", "--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert parse_report(target.read_text())["L"][2][0] == IntLaurent.parse("v^-4")


def test_error_exit_codes(capsys):
    assert run(["canbase", "--dimvec", "1,x"], capsys)[0] == 2
    assert run(["canbase", "--dimvec", "2,2", "--emit", "dims"], capsys)[0] == 2
    assert run(["canbase", "--dimvec", "4,4", "--max-summands", "100"], capsys)[0] == 3
    assert run(["hecke", "--dimvec", "2,2", "--max-summands", "10"], capsys)[0] == 3


def test_workers_env(monkeypatch, capsys):
    monkeypatch.setenv("CANBASIS_WORKERS", "2")
    code, out, _ = run(["canbase", "--dimvec", "2,2,1", "--emit", "p"], capsys)
    serial = run(["canbase", "--dimvec", "2,2,1", "--emit", "p", "--workers", "1"], capsys)[1]
    assert code == 0 and out == serial


def test_selftest_all_pass(capsys):
    code, out, _ = run(["selftest"], capsys)
    assert code == 0
    assert out.strip().endswith(f"{len(fixture_names())}/{len(fixture_names())} fixtures passed")


def test_selftest_list(capsys):
    code, out, _ = run(["selftest", "--list"], capsys)
    assert code == 0
    assert out.split() == fixture_names()
    assert {"psi.22", "P.121", "F.121", "table.121"} <= set(out.split())


def test_selftest_corrupted_fixture(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"dims.121": [4, 6, 6, 2, 5]}))
    code, out, _ = run(["selftest", "--only", "dims.121,F.121", "--fixtures", str(bad)], capsys)
    assert code == 1
    assert "FAIL dims.121" in out and "PASS F.121" in out
    assert "- 5" in out and "+ 4" in out


def test_selftest_formatting_insensitive():
    res = run_selftest(["F.121"], {"F.121": ["v^{11} + 3v^{9}", "2v^9+2v^7+2v^5", "2v^5+2v^7+2v^9",
                                              "v^8+v^6", "3v^5+v^3"]})
    assert res[0].passed


def test_selftest_unknown_names(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"nope": 1}))
    assert run(["selftest", "--fixtures", str(bad)], capsys)[0] == 2
    with pytest.raises(KeyError):
        run_selftest(["nope"])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "canbasis", "selftest", "--list"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "psi.121" in proc.stdout
