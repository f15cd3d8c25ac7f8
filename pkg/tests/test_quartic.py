import json

import pytest

from curvegroups.quartic import (
    l0_presentation,
    load_golden,
    load_monodromy,
    quartic_report,
    relator_table_comparison,
    second_presentation,
)
from curvegroups.presentation import group_order


@pytest.fixture(scope="module")
def report():
    return quartic_report()


def test_report_has_enough_checks(report):
    assert len(report.checks) >= 25


def test_known_failures_only(report):
    # the two relator-table entries and the two presentations built from one of them
    failed = sorted(c.claim for c in report.checks if c.status == "fail")
    assert failed == [
        "L0 filling: every printed relation is present",
        "a2^t2 matches the relator table",
        "b1 eliminated: every printed relation of the reduced presentation is present",
        "b1^t3 matches the relator table",
    ]
    assert report.unknown == 0


def test_display_table_agrees_elsewhere():
    rows = relator_table_comparison(load_monodromy(), load_golden())
    matched = {(r["t"], r["g"]) for r in rows if r["relator_table_match"]}
    assert len(matched) == 10
    assert ("t2", "a2") not in matched and ("t3", "b1") not in matched


def test_reduced_presentations():
    m = load_monodromy()
    assert second_presentation(m).generators == ("a1", "a2", "b2", "t1", "t2", "t3")
    assert l0_presentation(m).generators == ("a1", "a2", "b2", "t1")
    assert group_order(l0_presentation(m).killing(["t1"])) == 12


def test_skip_enumeration(report):
    quick = quartic_report(skip_enumeration=True)
    assert len(quick.checks) < len(report.checks)
    assert not any("order 12" in c.claim for c in quick.checks)


def test_tampered_golden_names_the_check(tmp_path):
    g = load_golden()
    g["klein"]["tau"][2]["matrix"] = "S^5"
    path = tmp_path / "golden.json"
    path.write_text(json.dumps(g), encoding="utf-8")
    rep = quartic_report(skip_enumeration=True, golden_path=str(path))
    bad = [c.claim for c in rep.checks if c.status == "fail"]
    assert "t3 = (x, S^5)" in bad


def test_report_is_deterministic(report):
    assert quartic_report().to_json() == report.to_json()
