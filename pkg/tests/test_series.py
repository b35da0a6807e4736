"""Series engine: polynomial arithmetic, series calculus, solver, I/O."""

from fractions import Fraction

import pytest

from sepstats.series import (
    MultiPoly,
    TruncSeries,
    VARIABLES,
    canonical_json,
    document_to_series,
    parse_poly,
    series_to_document,
    solve_fixpoint,
    solve_master_fixpoint,
)


# -- polynomials ------------------------------------------------------------


def test_poly_ring_axioms_on_samples():
    x = MultiPoly.variable("x")
    y = MultiPoly.variable("y")
    a = 2 * x * y + 3
    b = x - y
    c = y * y + 1
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a - a).is_zero()
    assert a + MultiPoly.zero() == a
    assert a * MultiPoly.one() == a


def test_poly_coefficient_lookup_and_terms():
    p = parse_poly("3x^2y + v")
    assert p.coefficient((0, 0, 2, 1, 0, 0)) == 3
    assert p.coefficient((0, 0, 0, 0, 0, 1)) == 1
    assert p.coefficient((1, 0, 0, 0, 0, 0)) == 0
    assert len(list(p.terms())) == 2


def test_poly_specialize_and_map_variables():
    p = parse_poly("x^2y + xy + y")
    assert p.specialize("x") == parse_poly("3y")
    assert p.specialize("y", 0) == MultiPoly.zero()
    q = p.map_variables({"x": "u", "y": "v"})
    assert q == parse_poly("u^2v + uv + v")
    with pytest.raises(ValueError):
        parse_poly("x + y").map_variables({"x": "y"})


def test_poly_fraction_coefficients_normalize():
    p = MultiPoly.variable("x") * Fraction(1, 2)
    assert (p + p) == MultiPoly.variable("x")
    assert (p + p).coefficient((0, 0, 1, 0, 0, 0)) == 1
    # whole Fractions collapse to int so dict equality stays canonical
    q = MultiPoly.variable("x") * Fraction(2, 1)
    assert q == 2 * MultiPoly.variable("x")


def test_parse_poly_round_trip_via_str():
    for text in ("p^2 + 4*p*q + q^2", "x", "2", "x^3y + 2*x^2*y^2 + x*y^3"):
        p = parse_poly(text)
        assert parse_poly(str(p)) == p


def test_parse_poly_rejects_garbage():
    for bad in ("", "x +", "z", "x^", "3..2"):
        with pytest.raises(ValueError):
            parse_poly(bad)


# -- truncated series -------------------------------------------------------


def test_series_geometric_inverse():
    t = TruncSeries.t(8)
    geom = (1 - t).invert()
    assert all(geom.coefficient(n) == MultiPoly.one() for n in range(9))
    assert (geom * (1 - t)).is_one()


def test_series_sqrt_squares_back():
    t = TruncSeries.t(10)
    s = (1 - 6 * t + t * t).sqrt()
    assert s * s == 1 - 6 * t + t * t
    assert s.coefficient(0) == MultiPoly.one()
    with pytest.raises(ValueError):
        (2 + t).sqrt()


def test_series_divide_respects_valuation():
    t = TruncSeries.t(10)
    num = t * t + t * t * t  # valuation 2
    den = t  # valuation 1
    quot = num.divide(den)
    assert quot.coefficient(1) == MultiPoly.one()
    assert quot.coefficient(2) == MultiPoly.one()
    with pytest.raises(ZeroDivisionError):
        t.divide(TruncSeries.zero(10))


def test_series_truncation_on_mixed_order_arithmetic():
    a = TruncSeries.t(8)
    b = TruncSeries.t(5)
    assert (a + b).order == 5
    assert (a * b).order == 5


def test_series_specialize_and_agreement():
    s, i = solve_fixpoint(6, ("x", "y"))
    s_y = s.specialize("x")
    s_plain = solve_fixpoint(6, ("y",))[0]
    assert s_y == s_plain
    assert s_y.agrees_with(s_plain, through=6)
    assert s_y.first_difference(s) is not None  # different variable sets


# -- the solver -------------------------------------------------------------


def test_fixpoint_counting_specialization():
    s, i = solve_fixpoint(10, ())
    sep = [1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098]
    irr = [1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049]
    for n in range(1, 11):
        assert s.coefficient(n).constant_term() == sep[n - 1]
        assert i.coefficient(n).constant_term() == irr[n - 1]


def test_fixpoint_known_low_order_coefficients():
    s, _ = solve_fixpoint(3, ("x", "y"))
    assert s.coefficient(3) == parse_poly("x^3y + 2x^2y^2 + xy^3 + x^2y + xy^2")
    s_pq, i_pq = solve_fixpoint(3, ("p", "q"))
    assert s_pq.coefficient(3) == parse_poly("p^2 + 4pq + q^2")
    assert i_pq.coefficient(3) == parse_poly("2pq + q^2")


def test_solve_master_fixpoint_default_order():
    s, i = solve_master_fixpoint(4)
    assert s.order == 4
    total = sum(c for _, c in s.coefficient(4).terms())
    assert total == 22


def test_fixpoint_rejects_bad_active_set():
    with pytest.raises(ValueError):
        solve_fixpoint(4, ("w",))


# -- serialization ----------------------------------------------------------


def test_series_document_round_trip_bit_exact():
    s, _ = solve_fixpoint(6, ("x", "y", "u"))
    doc = series_to_document("test", s)
    back = document_to_series(doc)
    assert back == s
    # canonical JSON is deterministic
    assert canonical_json(doc) == canonical_json(
        series_to_document("test", back)
    )


def test_series_document_preserves_fractions():
    from sepstats.closedforms import schroeder_gf

    # the radical construction passes through Fractions internally
    s = schroeder_gf(8)
    doc = series_to_document("radical", s)
    assert document_to_series(doc) == s


def test_document_shape():
    t = TruncSeries.term(3, 2, parse_poly("xy"))
    doc = series_to_document("xy-term", t)
    assert doc["order"] == 3
    assert doc["variables"] == list(VARIABLES)
    assert doc["coefficients"]["2"] == [[[0, 0, 1, 1, 0, 0], 1, 1]]
    assert doc["coefficients"]["0"] == []
