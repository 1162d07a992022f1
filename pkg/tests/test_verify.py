from stacksort.verify import (
    CheckResult,
    has_failure,
    render_report,
    verify_conjectures,
    verify_tables,
    verify_theorems,
    west_two_stack_count,
)


def test_west_two_stack_closed_form():
    assert [west_two_stack_count(n) for n in range(1, 9)] == [
        1,
        2,
        6,
        22,
        91,
        408,
        1938,
        9614,
    ]


def test_theorem_suite_small_run_all_pass():
    results = verify_theorems(3, 6)
    assert results
    assert not has_failure(results)
    ids = {r.check_id for r in results}
    assert {"THM 2.2", "THM 3.3", "THM 3.4", "COR 3.2", "COR 4.5",
            "PROP 4.1", "LEM 2.1-rev", "LEM 2.1-swap", "LEM 3.1",
            "EX 123-machine", "OQ 123-fertility-law", "AMB two-letter"} <= ids


def test_theorem_suite_reports_fertility_law_finding():
    results = verify_theorems(3, 5)
    law = [r for r in results if r.check_id == "OQ 123-fertility-law"]
    assert law
    assert all(r.status == "FINDING" for r in law)
    assert all("holds" in r.detail for r in law)


def test_two_letter_resolution_detail():
    results = verify_theorems(3, 6)
    amb = [r for r in results if r.check_id == "AMB two-letter"]
    assert len(amb) == 1
    assert amb[0].status == "PASS"
    assert "west-two-stack" in amb[0].detail
    assert "catalan" in amb[0].detail


def test_table_suite_small_run():
    results = verify_tables(4, 6)
    assert not has_failure(results)
    infos = [r for r in results if r.status == "INFO"]
    assert len(infos) == 1  # the row with no published values
    assert "2 1" == infos[0].subject


def test_conjecture_suite_small_run():
    results = verify_conjectures(5)
    assert not has_failure(results)
    assert any(r.check_id == "CONJ fishburn-def" for r in results)
    findings = [r for r in results if r.status == "FINDING"]
    assert findings
    assert all("agree" in r.detail for r in findings if r.check_id == "CONJ equidistribution")


def test_report_line_format():
    result = CheckResult("THM 2.2", "3 2 1", 6, "PASS", "why")
    assert result.line() == "THM 2.2 | 3 2 1 | 6 | PASS (why)"
    bare = CheckResult("LEM 3.1", "-", 4, "FAIL")
    assert bare.line() == "LEM 3.1 | - | 4 | FAIL"
    lines = render_report([result, bare])
    assert lines == [result.line(), bare.line()]


def test_failures_are_detected():
    ok = CheckResult("X", "-", 1, "PASS")
    bad = CheckResult("X", "-", 1, "FAIL")
    finding = CheckResult("X", "-", 1, "FINDING")
    assert not has_failure([ok, finding])
    assert has_failure([ok, bad])
