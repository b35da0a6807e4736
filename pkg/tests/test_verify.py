"""The verifier itself: green on the real code, red under injected faults."""

import pytest

from sepstats import closedforms, verify
from sepstats.series import MultiPoly, TruncSeries

# -- report plumbing --------------------------------------------------------


def test_report_requires_witness_on_failure():
    with pytest.raises(ValueError):
        verify.CheckReport("x", "fail", "broken")
    with pytest.raises(ValueError):
        verify.CheckReport("x", "maybe", "odd verdict")
    ok = verify.CheckReport("x", "pass", "fine")
    assert "PASS" in ok.line() and "x" in ok.line()


def test_report_jsonable_shape():
    rep = verify.CheckReport("demo", "fail", "mismatch", 3, "t^3 differs", 0.1)
    doc = rep.to_jsonable()
    assert doc["check"] == "demo"
    assert doc["verdict"] == "fail"
    assert doc["first_fail"] == 3
    assert doc["witness"] == "t^3 differs"


# -- unimodality helper -----------------------------------------------------


def test_unimodality_cases():
    assert verify.unimodality([22, 31, 26, 10, 1]) == (True, 2, True)
    assert verify.unimodality({1: 0, 2: 5, 3: 5, 4: 1}) == (True, 2, False)
    assert verify.unimodality([1, 2, 1, 2])[0] is False
    assert verify.unimodality([]) == (True, None, True)
    assert verify.unimodality({2: 0, 5: 0}) == (True, None, True)
    assert verify.unimodality([7]) == (True, 1, True)
    with pytest.raises(ValueError):
        verify.unimodality({1: -2})


# -- selected checks pass on the real implementation ------------------------


def test_fast_checks_pass():
    reports = verify.run_all(
        [
            "counting-identities",
            "counting-gf-radicals",
            "asc-des-relations",
            "equidistribution-negative-control",
            "series-snippets",
            "tables-golden",
            "conjectures",
        ]
    )
    assert all(r.verdict == "pass" for r in reports)
    # conjectures expand to three reports
    assert len(reports) == 9
    assert all("evidence only" in r.detail for r in reports[-3:])


def test_run_all_rejects_unknown_names():
    with pytest.raises(ValueError, match="unknown checks"):
        verify.run_all(["no-such-check"])


def test_conjecture_depth_is_forwarded():
    reports = verify.run_all(["conjectures"], conjecture_n=6)
    assert all("n <= 6" in r.detail for r in reports)


# -- negative controls: each oracle seam must be able to fail ----------------


def test_corrupted_count_formula_fails_with_witness():
    report = verify.verify_counts(eq2_fn=lambda n: 2**n)
    assert report.verdict == "fail"
    assert report.witness is not None
    assert "peak-weighted" in report.witness
    assert report.first_fail == 3  # 2^(n-1) = 1, 2, 4 first diverges at length 3


def test_corrupted_closed_form_fails_with_witness(monkeypatch):
    real = closedforms.closed_form_S_single

    def tampered(order, stat="rmax"):
        bump = TruncSeries.term(order, 5, MultiPoly.variable("x"))
        return real(order, stat) + bump

    monkeypatch.setattr(closedforms, "closed_form_S_single", tampered)
    report = verify.verify_single_stat_closed_forms(order=8, census_order=6)
    assert report.verdict == "fail"
    assert report.first_fail == 5
    assert "t^5" in report.witness


def test_corrupted_table_fails(monkeypatch):
    real = verify.render_table

    def tampered(which, max_n=8):
        text = real(which, max_n)
        return text.replace("1806", "1807") if which == 3 else text

    monkeypatch.setattr(verify, "render_table", tampered)
    report = verify.verify_tables_golden()
    assert report.verdict == "fail"
    assert "table 3" in report.witness


def test_snippet_check_detects_coefficient_drift(monkeypatch):
    tampered = dict(verify._SNIPPETS)
    key = (("lmax", "rmax"), "all")
    rows = list(tampered[key])
    order, text = rows[2]
    rows[2] = (order, text.replace("2x^2y^2", "3x^2y^2"))
    tampered[key] = rows
    monkeypatch.setattr(verify, "_SNIPPETS", tampered)
    report = verify.verify_snippets()
    assert report.verdict == "fail"
    assert report.first_fail == order


def test_non_unimodal_row_fails_conjecture(monkeypatch):
    real = verify.conjecture_rows

    def fake_rows(perm_class, stat, max_n):
        rows = real(perm_class, stat, max_n)
        rows[max_n] = {1: 1, 2: 3, 3: 1, 4: 2}  # dip then rise
        return rows

    monkeypatch.setattr(verify, "conjecture_rows", fake_rows)
    reports = verify.check_conjectures(max_n=6)
    assert all(r.verdict == "fail" for r in reports)
    assert all("not unimodal" in r.witness for r in reports)


def test_equidistribution_check_has_teeth(monkeypatch):
    # feeding a wrong distribution for one family member must fail the check
    real = verify.dist_from_enumeration

    def tampered(n, perm_class="all", stats=None, **kw):
        table = real(n, perm_class, stats, **kw)
        if stats == ("rmin",) and n == 3:
            rows = {k: dict(v) for k, v in table.rows.items()}
            rows[3] = {(1,): 6}
            return type(table)(table.perm_class, table.stats, rows)
        return table

    monkeypatch.setattr(verify, "dist_from_enumeration", tampered)
    report = verify.verify_equidistribution(max_n=4)
    assert report.verdict == "fail"
    assert report.first_fail == 3


# -- full suite smoke (kept after the targeted tests for cache warmth) -------


def test_full_suite_green():
    reports = verify.run_all()
    failing = [r.line() for r in reports if r.verdict != "pass"]
    assert not failing, "\n".join(failing)
    assert len(reports) == 24
