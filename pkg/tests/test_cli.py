import io
import json

import pytest

from conftest import brute_gp
from gpkit.cli import main, parse_range
from gpkit.graph6 import parse_graph6


def run(argv, stdin=""):
    out = io.StringIO()
    code = main(argv, out=out, stdin=io.StringIO(stdin))
    return code, out.getvalue()


def test_parse_range():
    assert parse_range("4..7") == [4, 5, 6, 7]
    assert parse_range("12") == [12]


def test_compute_star():
    code, out = run(["compute", "--g6", "D?{"])
    assert code == 0
    fields = dict(f.split("=") for f in out.split()[1:])
    assert int(fields["gp"]) == brute_gp(parse_graph6("D?{")) == 4
    assert fields["girth"] == "-" and fields["diameter"] == "2"


def test_compute_json_from_stdin():
    code, out = run(["compute", "--json"], stdin="Cl\nD?{\n")
    assert code == 0
    rows = [json.loads(x) for x in out.splitlines()]
    assert [r["gp"] for r in rows] == [2, 4]
    assert set(rows[0]) == {"graph6", "n", "diameter", "girth", "omega", "eta", "gp", "witness"}


def test_compute_file_and_jobs(tmp_path):
    path = tmp_path / "in.g6"
    path.write_text("Cl\nD?{\nCF\n")
    a = run(["compute", "--input", str(path)])
    b = run(["compute", "--input", str(path), "--jobs", "2"])
    assert a == b and a[0] == 0


def test_compute_bad_line_is_input_error(capsys):
    code, out = run(["compute"], stdin="Cl\nC!\n")
    assert code == 1
    assert "line 2" in capsys.readouterr().err


def test_compute_lenient_still_flags_error():
    code, out = run(["compute", "--lenient"], stdin="Cl\nC!\n")
    assert code == 1 and out.count("\n") == 1


def test_compute_disconnected():
    code, _ = run(["compute", "--g6", "A?"])
    assert code == 1


def test_check():
    code, out = run(["check", "--g6", "Cl", "--set", "0,1,2"])
    assert code == 0
    assert "definitional: fail" in out and "structural: fail" in out
    code, out = run(["check", "--g6", "Cl", "--set", "0,3", "--json"])
    rec = json.loads(out)
    assert rec["definitional"] and rec["structural"]
    assert rec["certificate"]["blocks"] == [[0, 3]]
    assert run(["check", "--g6", "Cl", "--set", "0,9"])[0] == 1


def test_generate():
    code, out = run(["generate", "--family", "F2", "--params", "r=[2,1] s=[1] t=[]", "--emit", "g6"])
    assert code == 0
    g = parse_graph6(out.strip())
    assert g.order == 6 and brute_gp(g) == 4
    assert run(["generate", "--family", "F6", "--params", "b=3 S=[0] T=[0]"])[0] == 1
    assert run(["generate", "--family", "F6", "--params", "b=3 S=[0] T=[0]", "--strict"])[0] == 0


def test_recognize():
    code, out = run(["recognize", "--g6", "Dhc"])  # C5
    assert code == 0
    assert out.splitlines()[0] == "Dhc families=F7"
    code, out = run(["recognize", "--json", "--strict"], stdin="C^\nC~\n")
    recs = [json.loads(x) for x in out.splitlines()]
    assert [r["families"] for r in recs] == [["F8"], []]


def test_enumerate():
    code, out = run(["enumerate", "--n", "4", "--connected"])
    assert code == 0 and len(out.split()) == 6
    assert len(run(["enumerate", "--n", "4"])[1].split()) == 11
    assert run(["enumerate", "--n", "9"])[0] == 1


def test_verify_cycles():
    code, out = run(["verify", "--check", "cycles", "--n", "12"])
    assert code == 0
    rows = [line.split() for line in out.splitlines()[1:]]
    assert all(r[1] == "gp=3" for r in rows if int(r[0][1:]) >= 5)


def test_verify_main():
    code, out = run(["verify", "--check", "main", "--n", "4..6", "--json"])
    assert code == 0
    assert json.loads(out.splitlines()[-1])["failed"] == 0


def test_verify_falsified_exit_code():
    code, out = run(["verify", "--check", "main", "--n", "6", "--strict", "--json"])
    assert code == 3
    recs = [json.loads(x) for x in out.splitlines()]
    assert sum(r["record"] == "counterexample" for r in recs) == 12


def test_verify_is_deterministic():
    argv = ["verify", "--check", "oracle", "--n", "1..5", "--samples", "20", "--json"]
    assert run(argv) == run(argv)


def test_verify_out_of_range():
    assert run(["verify", "--check", "main", "--n", "2..3"])[0] == 1


@pytest.mark.parametrize(
    "argv",
    [[], ["frobnicate"], ["compute", "--bogus"], ["verify", "--check", "nope", "--n", "4"],
     ["verify", "--check", "main", "--n", "7..4"], ["compute", "--g6", "Cl", "--input", "x"]],
)
def test_usage_errors(argv, capsys):
    assert run(argv)[0] == 2


def test_jobs_env_default(monkeypatch):
    from gpkit import cli

    monkeypatch.setenv("GPKIT_JOBS", "3")
    assert cli.build_parser().parse_args(["compute"]).jobs == 3
    monkeypatch.setenv("GPKIT_JOBS", "x")
    assert cli.build_parser().parse_args(["compute"]).jobs == 1


def test_console_script():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "gpkit.cli", "compute", "--g6", "Cl"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.startswith("Cl n=4 diameter=2 girth=4 omega=2 eta=2 gp=2")
