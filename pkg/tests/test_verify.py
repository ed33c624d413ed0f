import json

import pytest

from tabx.verify import SUITES, Check, Report, verify


def test_small_run_is_clean():
    report = verify("all", max_size=3)
    assert report.ok
    assert {c.suite for c in report.checks} == set(SUITES)
    assert not [c for c in report.checks if c.status == "FAIL"]


def test_known_conflicts_are_labelled():
    report = verify("involution", ["B"], max_size=3)
    movable = [c for c in report.checks if c.name == "every-cycle-movable"]
    assert movable and movable[0].status == "xfail"


def test_text_and_json():
    report = verify("counts", ["D"], max_size=2)
    text = report.to_text()
    assert text.splitlines()[-1].startswith("summary passed=")
    assert "suite=counts" in text
    data = json.loads(report.to_json())
    assert data["ok"] is True
    assert all(c["status"] == "pass" for c in data["checks"])


def test_status_and_ok():
    r = Report()
    r.add(Check("s", "a", "B", True))
    r.add(Check("s", "b", "B", False, known_conflict=True))
    assert r.ok
    r.add(Check("s", "c", "B", False))
    assert not r.ok
    assert [c.status for c in r.checks] == ["pass", "xfail", "FAIL"]


def test_bad_arguments():
    with pytest.raises(ValueError):
        verify("nonsense")
    with pytest.raises(ValueError):
        verify("counts", max_size=-1)
    with pytest.raises(ValueError):
        verify("counts", ["E"])
