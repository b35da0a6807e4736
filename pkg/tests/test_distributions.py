"""Distribution tables: census consistency, marginals, emission, bindings."""

import json

import pytest

from sepstats.closedforms import SET2_PAIRS, closed_form_pair_set2
from sepstats.distributions import (
    DEFAULT_CENSUS_CAP,
    STAT_NAMES,
    STAT_TO_VARIABLE,
    canonical_class,
    class_count,
    counts_by_variable,
    dist_from_enumeration,
    table_rows,
    render_table,
    series_from_enumeration,
)
from sepstats.enumeration import count_irreducible, count_separable
from sepstats.series import VARIABLES, parse_poly


def test_canonical_class_aliases():
    assert canonical_class("irr") == "irreducible"
    assert canonical_class("red") == "reducible"
    assert canonical_class("all") == "all"
    with pytest.raises(ValueError):
        canonical_class("both")


def test_class_count():
    assert class_count("all", 5) == count_separable(5)
    assert class_count("irreducible", 5) == count_irreducible(5)
    assert class_count("reducible", 5) == count_separable(5) - count_irreducible(5)


def test_row_totals_match_class_counts():
    for n in range(1, 7):
        for cls in ("all", "irreducible", "reducible"):
            table = dist_from_enumeration(n, cls, ("lmax", "rmax"))
            table.check_totals()
            assert table.total(n) == class_count(cls, n)


def test_single_stat_value_counts_sorted():
    table = dist_from_enumeration(4, "all", ("rmax",))
    assert table.value_counts(4) == {1: 6, 2: 9, 3: 6, 4: 1}
    with pytest.raises(ValueError):
        dist_from_enumeration(3, "all", ("lmax", "rmax")).value_counts(3)


def test_joint_marginalizes_to_single():
    for n in range(1, 7):
        joint = dist_from_enumeration(n, "all", ("lmax", "rmax"))
        single = dist_from_enumeration(n, "all", ("lmax",))
        marg: dict = {}
        for (lmax, _rmax), c in joint.row(n).items():
            marg[(lmax,)] = marg.get((lmax,), 0) + c
        assert marg == single.row(n)


def test_csv_and_json_emission():
    table = dist_from_enumeration(3, "all", ("rmax",))
    lines = list(table.csv_lines())
    assert lines[0] == "n,rmax,count"
    assert "3,1,2" in lines and "3,2,3" in lines and "3,3,1" in lines
    doc = json.loads(table.to_json())
    assert doc["class"] == "all"
    assert doc["stats"] == ["rmax"]
    assert doc["rows"]["3"] == [[[1], 2], [[2], 3], [[3], 1]]


def test_series_from_enumeration_matches_dist():
    for n in range(1, 6):
        series = series_from_enumeration(5)
        poly = series.coefficient(n)
        table = dist_from_enumeration(n, "all", STAT_NAMES)
        total = sum(c for _, c in poly.terms())
        assert total == count_separable(n)
        for key, cnt in table.row(n).items():
            # table key order == STAT_NAMES == variable order (p,q,x,y,u,v)
            assert poly.coefficient(key) == cnt


def test_series_from_enumeration_cap():
    with pytest.raises(ValueError):
        series_from_enumeration(DEFAULT_CENSUS_CAP + 1)
    with pytest.raises(ValueError):
        dist_from_enumeration(DEFAULT_CENSUS_CAP + 1, "all", ("rmax",))


def test_counts_by_variable():
    poly = parse_poly("2x^2y + 3xy + y^2")
    assert counts_by_variable(poly, "x") == {0: 1, 1: 3, 2: 2}
    assert counts_by_variable(poly, "y") == {1: 5, 2: 1}
    with pytest.raises(AssertionError):
        counts_by_variable(parse_poly("x") - 2 * parse_poly("x"), "x")


def test_table_rows_and_render():
    rows3 = table_rows(3)
    assert rows3[0] == [1]
    assert rows3[3] == [6, 9, 6, 1]
    rows5 = table_rows(5)
    assert rows5[1] == [1]  # irreducible lmax row for n=2, last column dropped
    text = render_table(4)
    assert text.endswith("\n")
    assert text.splitlines()[7] == "0 1092 1288 1069 607 195 27 1"
    with pytest.raises(ValueError):
        render_table(6)


def test_pair_variable_binding_calibration():
    """Pin the statistic-to-variable binding of the pair closed forms.

    For each ordered pair the closed form must match the census with
    lmax -> x, rmax -> y, lmin -> u, rmin -> v.  Over ALL separables each
    pair distribution happens to be swap-symmetric (a reversal or
    complement exchanges the two statistics), so the binding is pinned on
    the irreducible class, where those symmetries flip reducibility and
    the joint distribution is genuinely asymmetric.
    """
    order = 6
    for cls in ("all", "irreducible", "reducible"):
        census = series_from_enumeration(order, cls)
        for pair in SET2_PAIRS:
            closed = closed_form_pair_set2(order, pair, cls)
            lanes = {STAT_TO_VARIABLE[s] for s in pair}
            projected = census
            for var in VARIABLES:
                if var not in lanes:
                    projected = projected.specialize(var)
            assert closed.first_difference(projected) is None, (cls, pair)
    # asymmetry witness: irreducible 21 has lmax=1, rmax=2, so the
    # irreducible (lmax, rmax) series has xy^2 but not x^2y at order 2
    irr = closed_form_pair_set2(order, ("lmax", "rmax"), "irreducible")
    c2 = irr.coefficient(2)
    assert c2.coefficient((0, 0, 1, 2, 0, 0)) == 1
    assert c2.coefficient((0, 0, 2, 1, 0, 0)) == 0
