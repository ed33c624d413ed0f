import io
import json
from pathlib import Path

import pytest

from tabx.cli import main
from tabx.fixtures import T_C, T_C_PRIME, T_D1, T_D12, by_name


@pytest.fixture
def run(monkeypatch, capsys):
    def call(argv, stdin=""):
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
        code = main(argv)
        out, err = capsys.readouterr()
        return code, out, err

    return call


def test_admissible(run):
    code, out, _ = run(["admissible", "--kinds"], T_C)
    assert code == 0
    assert out.splitlines() == ["admissible", "1 I-", "2 I+", "3 I-", "4 I+", "5 N"]
    code, out, _ = run(["admissible"], T_C_PRIME)
    assert code == 1 and "prefix 2" in out


def test_cycles(run):
    code, out, _ = run(["cycles", "--class", "BC"], T_C)
    assert code == 0 and len(out.splitlines()) == 3
    code, out, _ = run(["cycles", "--class", "dd", "--label", "5"], T_C)
    assert code == 0 and "vacated=" in out


def test_move_through(run):
    code, out, _ = run(["move-through", "--class", "BC", "--label", "2"], T_C)
    assert code == 0 and out.split() == "1 2 2 4 5 5 1 3 3 4".split()
    code, out, _ = run(["move-through", "--class", "BC", "--label", "4", "--header"], T_C)
    assert out.startswith("type: C")


def test_move_through_refuses_degenerate(run):
    code, _, err = run(["move-through", "--class", "BC", "--label", "1", "--type", "B"], "0 1 1")
    assert code == 1 and "zero square" in err


def test_clusters(run, tmp_path):
    path = tmp_path / "t.tab"
    path.write_text(T_D12)
    code, out, _ = run(["clusters", "--in", str(path)])
    assert code == 0
    assert out.splitlines()[1] == "id=6 kind=closed class=BC labels={6,7}"
    code, _, err = run(["clusters"], T_C_PRIME)
    assert code == 2


def test_phi_and_psi(run):
    code, out, _ = run(["phi"], by_name("t_d1_pm").text)
    assert code == 0 and out.split() == "1 1 3 2 2 3".split()
    code, out, _ = run(["phi", "--mode", "cl"], by_name("t_d1_plus").text)
    assert code == 0 and out.split() == "1 1 3 2 2 3".split()
    code, out, _ = run(["psi"], "type: D\n1 1 3 3\n2 2")
    assert code == 0 and out.splitlines()[-1] == "signs: 1=+ 3=+"
    code, out, _ = run(["psi", "--mode", "cl"], "type: D\n1 1 3 3\n2 2")
    assert "mode: cl" in out and out.splitlines()[-1] == "signs: 1=+"


def test_tau(run):
    code, out, err = run(["tau"], T_D1)
    assert code == 0 and out.strip() == "1*"
    assert "unverified" in err
    code, out, err = run(["tau", "--type", "C"], "1\n1")
    assert out.strip() == "1" and err == ""


def test_enum(run):
    code, out, _ = run(["enum", "--what", "sdt", "--type", "C", "--size", "2", "--count-only"])
    assert code == 0 and out.strip() == "6"
    code, out, _ = run(["enum", "--what", "syt", "--shape", "3,2", "--count-only"])
    assert out.strip() == "5"
    code, out, _ = run(["enum", "--what", "classes", "--type", "D", "--shape", "3,3", "--mode", "cl", "--count-only"])
    assert out.strip() == "3"
    code, out, _ = run(["enum", "--what", "admissible", "--type", "D", "--shape", "3,3"])
    assert len(out.strip().split("\n\n")) == 2


def test_verify(run, tmp_path, monkeypatch):
    report = tmp_path / "r.json"
    code, out, _ = run(["verify", "--suite", "counts", "--type", "C,D", "--max-size", "2", "--report", str(report)])
    assert code == 0 and "summary" in out
    assert json.loads(report.read_text())["ok"]
    monkeypatch.setenv("TABX_MAX_SIZE", "1")
    code, out, _ = run(["verify", "--suite", "bijection", "--type", "D", "--format", "json"])
    assert code == 0
    details = [c["detail"] for c in json.loads(out)["checks"]]
    assert not any("n=2" in d for d in details)


def test_fixtures(run, tmp_path):
    code, out, _ = run(["fixtures"])
    assert code == 0 and "MISMATCH" not in out
    code, out, _ = run(["fixtures", "--write", str(tmp_path)])
    assert code == 0 and Path(out.splitlines()[0]).exists()


@pytest.mark.parametrize(
    "argv,stdin",
    [
        (["bogus"], ""),
        (["enum", "--what", "sdt", "--type", "C"], ""),
        (["enum", "--what", "syt", "--size", "2"], ""),
        (["admissible", "--in", "/nonexistent/file"], ""),
        (["admissible"], "1 2\n1 3"),  # no type
        (["phi"], T_D1),  # no signs line
    ],
)
def test_usage_errors(run, argv, stdin):
    code, _, err = run(argv, stdin)
    assert code == 2
    assert err
