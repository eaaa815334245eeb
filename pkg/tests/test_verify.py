import csv
import io
import json

import pytest

from rinctab import InputError
from rinctab import verify
from rinctab.qpoly import QPoly
from rinctab.verify import (
    VerificationReport,
    check_amaj_theorem,
    check_bijections,
    check_maj_theorem,
    check_recurrences,
    check_schroeder,
    check_sq_theorem,
    format_reports,
    run_checks,
)


@pytest.mark.parametrize(
    "check, arg",
    [
        (check_maj_theorem, 1),
        (check_maj_theorem, 2),
        (check_amaj_theorem, 3),
        (check_sq_theorem, 3),
        (check_recurrences, 4),
        (check_bijections, 3),
        (check_schroeder, 3),
    ],
)
def test_small_ranges_pass(check, arg):
    report = check(arg)
    assert report.passed, report.counterexample
    assert report.cases > 0
    assert report.counterexample is None


def test_reports_are_reproducible():
    a = [r.to_dict(with_time=False) for r in run_checks("all", 3)]
    b = [r.to_dict(with_time=False) for r in run_checks("all", 3)]
    assert a == b
    assert [r["check"] for r in a] == sorted(r["check"] for r in a)


def test_failure_is_captured_not_raised(monkeypatch):
    real = verify.formula_Rq

    def broken(n, k):
        p = real(n, k)
        return p + QPoly.monomial(0) if (n, k) == (2, 1) else p

    monkeypatch.setattr(verify, "formula_Rq", broken)
    reports = {r.name: r for r in run_checks("all", 3)}
    bad = reports["maj"]
    assert bad.status == "fail"
    assert bad.counterexample["input"] == {"n": 2, "k": 1}
    assert bad.counterexample["expected"] == "1 + q + q^2 + q^3"
    assert bad.counterexample["actual"] == "q + q^2 + q^3"
    # siblings still ran
    assert reports["amaj"].passed and reports["bijections"].passed


def test_tableau_counterexample_is_replayable(monkeypatch):
    real = verify.amaj
    monkeypatch.setattr(verify, "amaj", lambda t: real(t) + (1 if t.n == 3 else 0))
    report = check_bijections(3)
    assert report.status == "fail"
    from rinctab.tableaux import parse_text

    t = parse_text(report.counterexample["input"])
    assert t.n == 3


def test_unknown_check():
    with pytest.raises(InputError):
        run_checks("nope")


def test_formats():
    reports = [VerificationReport("x", {"n_max": 2}, cases=3, wall_time=0.5)]
    assert json.loads(format_reports(reports, "json"))[0]["status"] == "pass"
    rows = list(csv.DictReader(io.StringIO(format_reports(reports, "csv"))))
    assert rows[0]["check"] == "x" and rows[0]["cases"] == "3"
    assert format_reports(reports, "text").startswith("PASS x")
    with pytest.raises(InputError):
        format_reports(reports, "yaml")
