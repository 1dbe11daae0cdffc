import json

import pytest

from fibrun import identities
from fibrun.errors import UnknownId
from fibrun.identities import IDENTITIES, Report, CheckResult, verify


@pytest.mark.parametrize("key", sorted(IDENTITIES))
def test_every_identity_passes_at_default_range(key):
    report = verify(key)
    assert report.passed, report.to_text()


def test_examples():
    assert verify("lucas_run_recurrence", 12).passed
    assert [r.n for r in verify("lucas_run_recurrence", 12).results] == list(range(2, 13))
    assert verify("gf_vs_census_d_r", 5).passed
    counts = verify("counts", 20)
    assert counts.passed and counts.results[-1].n == 20


def test_unknown_identity():
    with pytest.raises(UnknownId):
        verify("riemann", 3)


def test_hyphenated_ids():
    assert verify("set-identity", 6).identity == "set_identity"


def test_thread_count_does_not_change_report(monkeypatch):
    one = verify("euler", 12, threads=1).to_json()
    four = verify("euler", 12, threads=4).to_json()
    assert one == four
    monkeypatch.setenv(identities.THREADS_ENV, "3")
    assert verify("euler", 12).to_json() == one


def test_failure_report_carries_smallest_n():
    report = Report("demo", "demo", 0, 3, [
        CheckResult(0, True, "1", "1"),
        CheckResult(1, False, "1+q", "1+x"),
        CheckResult(2, False, "a", "b"),
    ])
    assert not report.passed
    assert report.first_failure.n == 1
    data = json.loads(report.to_json())
    assert data["first_failure"] == {"n": 1, "passed": False, "lhs": "1+q", "rhs": "1+x"}
    assert "lhs: 1+q" in report.to_text()


def test_broken_identity_is_reported(monkeypatch):
    desc, _, n_min, n_max = IDENTITIES["euler"]
    monkeypatch.setitem(IDENTITIES, "euler", (desc, lambda n: (n < 3, "x", "y"), n_min, n_max))
    report = verify("euler", 5)
    assert not report.passed and report.first_failure.n == 3


def test_set_identity_sides():
    lhs, rhs = identities.set_identity_sides(5)
    assert lhs == rhs
    assert "10000" in lhs and "00000" in lhs
    # 11000 is run-constrained but 110 is not a Lucas-run vertex
    assert "11000" not in lhs


def test_non_isometric_witness():
    u, v, d = identities.non_isometric_witness(7)
    assert d > sum(a != b for a, b in zip(u, v))
    assert identities.non_isometric_witness(6) is None
