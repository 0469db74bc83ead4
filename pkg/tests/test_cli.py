import json
import subprocess
import sys

import pytest

from lapforge.cli import main, parse_vertex
from lapforge.errors import ParseError

K2 = '{"vertices":[{"id":[0],"weight":"1"},{"id":[1],"weight":"1"}],"edges":[{"u":[0],"v":[1],"weight":"1"}]}'
K3 = (
    '{"vertices":[{"id":[0],"weight":"1"},{"id":[1],"weight":"1"},{"id":[2],"weight":"1"}],'
    '"edges":[{"u":[0],"v":[1],"weight":"1"},{"u":[1],"v":[2],"weight":"1"},{"u":[0],"v":[2],"weight":"1"}]}'
)
SPLIT = '{"vertices":[{"id":[0],"weight":"1"},{"id":[1],"weight":"1"}],"edges":[]}'


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, text in (("k2", K2), ("k3", K3), ("split", SPLIT), ("bad", "{nope")):
        p = tmp_path / f"{name}.json"
        p.write_text(text)
        out[name] = str(p)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_compute_charpoly(files, capsys):
    code, out, _ = run(capsys, "compute", "charpoly", files["k2"])
    assert code == 0 and out == '{"coeffs":["0","-2","1"]}\n'


def test_compute_theta_disconnected(files, capsys):
    code, out, _ = run(capsys, "compute", "theta", files["split"])
    assert code == 0 and json.loads(out)["ratio"] == "0"


def test_compute_csf_k3(files, capsys):
    code, out, _ = run(capsys, "compute", "csf", files["k3"])
    assert code == 0 and len(json.loads(out)["terms"]) == 3


def test_compute_eigenvalues_kron_starmesh(files, capsys):
    code, out, _ = run(capsys, "compute", "eigenvalues", files["k3"], "--kind", "combinatorial")
    vals = json.loads(out)["eigenvalues"]
    assert code == 0 and abs(vals[0]) < 1e-12 and abs(vals[2] - 3) < 1e-9
    code, out, _ = run(capsys, "compute", "kron", files["k3"], "--set", "2")
    assert code == 0 and json.loads(out)["edges"] == [{"u": [0], "v": [1], "weight": "3/2"}]
    code, out, _ = run(capsys, "compute", "starmesh", files["k3"], "--vertex", "0")
    assert code == 0 and len(json.loads(out)["edges"]) == 2


def test_exit_codes(files, capsys):
    assert run(capsys, "compute", "charpoly", files["bad"])[0] == 2
    assert run(capsys, "compute", "charpoly", files["k2"] + ".missing")[0] == 2
    assert run(capsys, "compute", "kron", files["split"], "--set", "0")[0] == 3
    assert run(capsys, "compute", "kron", files["k3"])[0] == 3
    assert run(capsys, "verify", "census", "11")[0] == 3
    assert run(capsys, "verify", "delcon", "4")[0] == 3


def test_parse_vertex():
    assert parse_vertex("2,1") == (1, 2)
    with pytest.raises(ParseError):
        parse_vertex("a")


def test_verify_delcon_reference(capsys):
    code, out, err = run(capsys, "verify", "delcon", "--seed", "7", "--count", "100")
    last = json.loads(out.splitlines()[-1])
    assert code == 0 and last["passed"] == 100 and last["count"] == 100
    assert "100/100 pass" in err


def test_verify_vacuous(capsys):
    code, out, err = run(capsys, "verify", "interlace", "--seed", "1", "--count", "0")
    assert code == 0 and "0/0 pass" in err


def test_verify_census_8(capsys):
    code, out, err = run(capsys, "verify", "census", "8")
    line = json.loads(out)
    assert code == 0 and line["trees"] == 23 and line["collisions"] == 0
    assert "trees=23, collisions=0" in err


def test_byte_identical_reports():
    cmd = [sys.executable, "-m", "lapforge", "verify", "reduction", "--seed", "9", "--count", "10"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a


def test_verify_failure_exits_one(capsys, monkeypatch):
    from lapforge import cli
    from lapforge.suites import SUITES, Check, Suite

    base = SUITES["delcon"].checks[1]
    broken = Suite("delcon", (Check("never", base.sample, lambda G, p: False),))
    monkeypatch.setitem(cli.SUITES, "delcon", broken)
    code, out, err = run(capsys, "verify", "delcon", "--count", "2")
    records = [json.loads(x) for x in out.splitlines()]
    dumps = [r for r in records if "graph" in r]
    assert code == 1 and len(dumps) == 2 and "failing: never" in err
