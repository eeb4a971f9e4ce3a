import json
import subprocess
import sys

import pytest
from hypothesis import given

from conftest import ideals
from monocycles.cli import (
    fixture_names,
    format_ideal_file,
    load_fixture,
    main,
    parse_ideal_text,
    run,
    verify_report,
)


@pytest.fixture
def ideal_file(tmp_path):
    def write(name):
        path = tmp_path / f"{name}.ideal"
        path.write_text(format_ideal_file(load_fixture(name)))
        return str(path)
    return write


@given(ideals(n_min=1, n_max=5))
def test_ideal_file_roundtrip(I):
    text = format_ideal_file(I)
    assert parse_ideal_text(text) == I
    assert format_ideal_file(parse_ideal_text(text)) == text


def test_ideal_file_errors():
    with pytest.raises(ValueError):
        parse_ideal_text("x1*x2\n")
    with pytest.raises(ValueError):
        parse_ideal_text("n=2\nx3\n")
    assert parse_ideal_text("# comment\nn=2\nx1*x2  # trailing\n\n").gens == ((1, 1),)


def test_fixtures_load():
    names = fixture_names()
    assert {"J", "I3", "rp2", "five_var", "nonvanishing"} <= set(names)
    for name in names:
        assert load_fixture(name).gens


@pytest.mark.parametrize("argv,code", [
    (["golod4", "--ideal", "{J}"], 0),
    (["is-boundary", "--ideal", "{I3}", "--monomial", "x3", "--sigma", "1,2"], 1),
    (["is-boundary", "--ideal", "{I3}", "--monomial", "x3^2", "--sigma", "1,2"], 0),
    (["is-boundary", "--ideal", "{I3}", "--monomial", "1", "--sigma", "1"], 2),
    (["is-boundary", "--ideal", "{rp2}", "--monomial", "x4*x5*x6", "--sigma", "1,2,3", "--char", "2"], 1),
    (["monprod", "--ideal", "{nonvanishing}"], 1),
    (["monprod", "--ideal", "{J}"], 0),
    (["boundary-ideal", "--ideal", "{J}", "--sigma", "1,2"], 0),
    (["symmetric", "principal", "--lambda", "2,0,0,0"], 1),
    (["symmetric", "vp", "--lambdas", "3,1,0,0;2,2,0,0"], 0),
    (["linquot", "basis", "--ideal", "{J}"], 1),
    (["linquot", "basis", "--ideal", "{matroidal}"], 0),
    (["matroid", "circuits", "--n", "4", "--p", "2", "--sigma", "1,2"], 0),
    (["betti", "--ideal", "{J}", "--char", "4"], 2),
    (["golod4", "--ideal", "/nonexistent.ideal"], 2),
    (["golod4"], 2),
])
def test_exit_codes(argv, code, ideal_file, capsys):
    argv = [ideal_file(a[1:-1]) if a.startswith("{") else a for a in argv]
    assert main(argv) == code


@pytest.mark.parametrize("argv", [
    ["golod4", "--ideal", "{J}", "--json"],
    ["boundary-ideal", "--ideal", "{J}", "--sigma", "1,2", "--json"],
    ["monprod", "--ideal", "{nonvanishing}", "--json", "--jobs", "2"],
    ["homology", "--ideal", "{J}", "--p", "3", "--json"],
    ["pairing", "--ideal", "{five_var}", "--p", "1", "--q", "3", "--json"],
    ["linquot", "check", "--ideal", "{J}", "--json"],
    ["linquot", "betti", "--ideal", "{shifted}", "--json"],
    ["symmetric", "shifted", "--lambdas", "2,1,0;1,1,1", "--json"],
    ["is-boundary", "--ideal", "{preimage}", "--monomial", "x3*x4", "--sigma", "1,2", "--witness", "--json"],
])
def test_json_reports_reproduce(argv, ideal_file, capsys):
    argv = [ideal_file(a[1:-1]) if a.startswith("{") else a for a in argv]
    code = main(argv)
    report = json.loads(capsys.readouterr().out)
    assert set(report) == {"command", "input", "result", "holds"}
    assert code == (0 if report["holds"] else 1)
    assert verify_report(report)
    tampered = dict(report, holds=not report["holds"])
    assert not verify_report(tampered)


def test_run_text():
    J = load_fixture("J")
    out = run("golod4", {"char": 0, "ideal": {"n": 4, "gens": [list(g) for g in J.gens]}})
    assert out["holds"] and out["text"]


def test_selftest_subprocess():
    proc = subprocess.run([sys.executable, "-m", "monocycles.cli", "selftest"], capture_output=True, text=True,
                          timeout=300)
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert "FAIL" not in proc.stdout
    assert proc.stdout.splitlines()[-1].endswith("checks passed")
