"""Acceptance gate: one test and one printed pass/fail line per criterion.

Every criterion is exact — series and tables are compared coefficient by
coefficient with integer/rational arithmetic and zero tolerance.  Run with
``pytest -v`` to get one verdict line per criterion; the printed CRITERION
lines additionally appear with ``-s`` or in failure reports.
"""

import time

from sepstats import verify
from sepstats.enumeration import enumerate_filter, enumerate_structural


def _gate(number: int, description: str, reports, elapsed=None, budget=None):
    reports = [reports] if isinstance(reports, verify.CheckReport) else reports
    ok = all(r.verdict == "pass" for r in reports)
    if budget is not None and elapsed is not None:
        ok = ok and elapsed <= budget
    print(f"CRITERION {number}: {'PASS' if ok else 'FAIL'} - {description}")
    for r in reports:
        assert r.verdict == "pass", r.line()
    if budget is not None and elapsed is not None:
        assert elapsed <= budget, f"budget {budget}s exceeded: {elapsed:.1f}s"


def test_criterion_01_counting_formulas_and_streams():
    start = time.perf_counter()
    report = verify.verify_counts(max_n=12, stream_n=7)
    _gate(
        1,
        "counts: streams n<=7, summation formulas n<=12, halving relation",
        report,
        elapsed=time.perf_counter() - start,
        budget=60,
    )


def test_criterion_02_independent_enumerations_agree():
    start = time.perf_counter()
    ok_reports = []
    for n in range(1, 10):
        filtered = [p.values for p in enumerate_filter(n)]
        structural = [p.values for p in enumerate_structural(n)]
        assert filtered == structural, f"methods disagree at n={n}"
    ok_reports.append(
        verify.CheckReport(
            "enumeration-methods", "pass", "filter == structural for n <= 9"
        )
    )
    _gate(
        2,
        "brute-force filter and structural enumeration agree for n <= 9",
        ok_reports,
        elapsed=time.perf_counter() - start,
        budget=120,
    )


def test_criterion_03_distribution_tables_byte_exact():
    start = time.perf_counter()
    report = verify.verify_tables_golden()
    _gate(
        3,
        "all three distribution triangles byte-match the golden files",
        report,
        elapsed=time.perf_counter() - start,
        budget=60,
    )


def test_criterion_04_functional_equations_match_census():
    report = verify.verify_master_vs_enumeration(order=9)
    _gate(
        4,
        "six-variable fixpoint of the master equations equals the census "
        "through order 9",
        report,
    )


def test_criterion_05_ascent_descent_algebraic_relations():
    report = verify.verify_asc_des(order=14)
    _gate(
        5,
        "cubic and irreducible-series relations for (asc, des) hold "
        "through order 14",
        report,
    )


def test_criterion_06_closed_forms_all_variants():
    reports = [
        verify.verify_single_stat_closed_forms(order=12, census_order=9),
        verify.verify_pair_set2_closed_forms(order=12, census_order=9),
        verify.verify_pair_set1_closed_forms(order=12, census_order=9),
        verify.verify_triple_closed_forms(order=12, census_order=9),
        verify.verify_quad_closed_form(order=12, census_order=9),
        verify.verify_e_function_identities(order=12),
    ]
    _gate(
        6,
        "every closed form (singles, both pair families, triples, quadruple, "
        "E-function) matches fixpoint order 12 and census order 9",
        reports,
    )


def test_criterion_07_equidistribution_and_symmetry():
    reports = [
        verify.verify_equidistribution(max_n=8),
        verify.verify_negative_control(),
        verify.verify_symmetries(max_n=8),
        verify.verify_factorization(order=12),
        verify.verify_transfer(order=12),
    ]
    _gate(
        7,
        "equidistribution families (with negative control), symmetry "
        "transport, factorization, and transfer identities, exhaustive n <= 8",
        reports,
    )


def test_criterion_08_frozen_series_expansions():
    report = verify.verify_snippets()
    _gate(
        8,
        "all eight frozen series expansions reproduced exactly",
        report,
    )


def test_criterion_09_conjecture_evidence():
    reports = verify.check_conjectures(max_n=12)
    assert all("evidence only" in r.detail for r in reports), (
        "conjecture reports must state their finite range"
    )
    _gate(
        9,
        "unimodality/peak evidence for the three conjectures through n = 12, "
        "reported as finite-range evidence",
        reports,
    )


def test_criterion_10_classical_cross_oracles():
    reports = [
        verify.verify_rising_factorial(max_n=8),
        verify.verify_eulerian(max_n=8),
    ]
    _gate(
        10,
        "rising-factorial and Eulerian distributions reproduced by "
        "exhaustive search over all of S_n, n <= 8",
        reports,
    )
