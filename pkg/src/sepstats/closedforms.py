"""Closed-form generating functions for separable permutation statistics.

Each builder evaluates an explicit algebraic formula — radicals, rational
expressions in the single-statistic series S(t,z), and the auxiliary
E-function — using only exact series primitives, and returns a
:class:`~sepstats.series.TruncSeries` in the canonical variable lanes
(lmax -> x, rmax -> y, lmin -> u, rmin -> v).  None of these formulas is
taken on faith: the verifier compares every one against the functional
equation fixpoint and against direct enumeration.

Conventions for multi-statistic forms:

* set-2 pairs (first statistic from {lmax, rmin}, second from
  {rmax, lmin}): z1 is the first statistic's lane, z2 the second's;
* set-1 pairs: (rmax, lmin) and (lmax, rmin), again in listed order;
* triples: (lmax, rmax, lmin), (lmin, rmin, lmax), (rmin, rmax, lmin),
  (rmax, rmin, lmax) with lanes z1, z2, z3 in listed order.

>>> counts = [int(schroeder_gf(6).coefficient(n).constant_term()) for n in range(1, 7)]
>>> counts
[1, 2, 6, 22, 90, 394]
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Sequence

from .distributions import STAT_TO_VARIABLE, counts_by_variable
from .series import MultiPoly, TruncSeries, solve_fixpoint

__all__ = [
    "SET2_PAIRS",
    "SET1_PAIRS",
    "TRIPLES",
    "discriminant_root",
    "schroeder_gf",
    "little_schroeder_gf",
    "closed_form_S_single",
    "closed_form_I_single",
    "closed_form_R_single",
    "closed_form_pair_set2",
    "closed_form_pair_set1",
    "e_function",
    "closed_form_triple",
    "closed_form_quad",
    "closed_form",
    "asc_des_cubic_residual",
    "asc_des_irr_residual",
    "des_cubic_residual",
]

#: Ordered statistic pairs whose joint distribution is a rational function
#: of two single-statistic series (the "set 2" family).
SET2_PAIRS: tuple[tuple[str, str], ...] = (
    ("lmax", "rmax"),
    ("lmax", "lmin"),
    ("rmin", "rmax"),
    ("rmin", "lmin"),
)

#: Ordered statistic pairs of the "set 1" family.
SET1_PAIRS: tuple[tuple[str, str], ...] = (
    ("rmax", "lmin"),
    ("lmax", "rmin"),
)

#: Ordered triples with closed forms; the first two are the "E-side" group
#: (irreducible part given by E itself is the *second* group below).
TRIPLES: tuple[tuple[str, str, str], ...] = (
    ("lmax", "rmax", "lmin"),
    ("lmin", "rmin", "lmax"),
    ("rmin", "rmax", "lmin"),
    ("rmax", "rmin", "lmax"),
)
_TRIPLES_RMAX_LMIN_TAIL = {("lmax", "rmax", "lmin"), ("rmin", "rmax", "lmin")}
_TRIPLES_RMIN_LMAX_TAIL = {("lmin", "rmin", "lmax"), ("rmax", "rmin", "lmax")}

_CLASSES = ("all", "irreducible", "reducible")


def _check_class(perm_class: str) -> str:
    from .distributions import canonical_class

    return canonical_class(perm_class)


def _lane(stat: str) -> str:
    try:
        return STAT_TO_VARIABLE[stat]
    except KeyError:
        raise ValueError(
            f"unknown statistic {stat!r}; expected one of "
            f"{tuple(STAT_TO_VARIABLE)}"
        ) from None


@functools.lru_cache(maxsize=None)
def discriminant_root(order: int) -> TruncSeries:
    """sqrt(1 - 6t + t^2), the radical shared by all closed forms."""
    t = TruncSeries.t(order)
    return (1 - 6 * t + t * t).sqrt()


@functools.lru_cache(maxsize=None)
def schroeder_gf(order: int) -> TruncSeries:
    """Counting series of separable permutations: (1 - t - sqrt(1-6t+t^2))/2.

    >>> int(schroeder_gf(8).coefficient(7).constant_term())
    1806
    """
    t = TruncSeries.t(order)
    return (1 - t - discriminant_root(order)) * Fraction(1, 2)


@functools.lru_cache(maxsize=None)
def little_schroeder_gf(order: int) -> TruncSeries:
    """Counting series of irreducible ones: (1 + t - sqrt(1-6t+t^2))/4.

    >>> int(little_schroeder_gf(8).coefficient(7).constant_term())
    903
    """
    t = TruncSeries.t(order)
    return (1 + t - discriminant_root(order)) * Fraction(1, 4)


@functools.lru_cache(maxsize=None)
def _single_gf_by_lane(order: int, lane: str) -> TruncSeries:
    # Work one order higher: the final division cancels one power of t.
    w = order + 1
    t = TruncSeries.t(w)
    z = MultiPoly.variable(lane)
    r = discriminant_root(w)
    base = r * Fraction(-1, 4) - t * z + t * Fraction(1, 4) + Fraction(5, 4)
    inner = base * base + r - t - 1
    num = inner.sqrt() * 4 - r + t * z * 4 + t - 3
    den = (r - t - 1) * 2
    return num.divide(den)


def closed_form_S_single(order: int, stat: str = "rmax") -> TruncSeries:
    """The two-radical closed form for S(t,z), z marking one of the four
    extreme-value statistics (they are equidistributed; the series lives in
    the lane of the requested statistic).

    >>> S = closed_form_S_single(6)
    >>> from sepstats.distributions import counts_by_variable
    >>> list(counts_by_variable(S.coefficient(5), "y").values())
    [22, 31, 26, 10, 1]
    >>> S.specialize("y") == schroeder_gf(6)
    True
    """
    return _single_gf_by_lane(order, _lane(stat))


@functools.lru_cache(maxsize=None)
def _single_split_by_lane(order: int, lane: str) -> tuple[TruncSeries, TruncSeries]:
    """(I_head, R_head) for the rmax/lmin reading: I = S^2/(1+S) + zt and
    R = S/(1+S) - zt.  The lmax/rmin reading swaps the zt terms:
    I = S/(1+S), R = S^2/(1+S)."""
    s = _single_gf_by_lane(order, lane)
    one_plus = s + 1
    zt = TruncSeries.term(order, 1, MultiPoly.variable(lane))
    head = (s * s).divide(one_plus)
    tail = s.divide(one_plus)
    return head + zt, tail - zt


def closed_form_I_single(order: int, stat: str = "rmax") -> TruncSeries:
    """Irreducible-class single-statistic closed form.

    For stat in {rmax, lmin} this is S^2/(1+S) + zt; for {lmax, rmin} it is
    S/(1+S).  (The two pairs are exchanged by the reverse map, which also
    exchanges irreducible and reducible for lengths >= 2.)

    >>> from sepstats.distributions import counts_by_variable
    >>> counts_by_variable(closed_form_I_single(4, "rmax").coefficient(4), "y")
    {2: 5, 3: 5, 4: 1}
    >>> counts_by_variable(closed_form_I_single(4, "lmax").coefficient(4), "x")
    {1: 6, 2: 4, 3: 1}
    """
    lane = _lane(stat)
    head_plus, tail_minus = _single_split_by_lane(order, lane)
    if stat in ("rmax", "lmin"):
        return head_plus
    zt = TruncSeries.term(order, 1, MultiPoly.variable(lane))
    return tail_minus + zt  # S/(1+S)


def closed_form_R_single(order: int, stat: str = "rmax") -> TruncSeries:
    """Reducible-class single-statistic closed form (complement of
    :func:`closed_form_I_single` inside :func:`closed_form_S_single`)."""
    lane = _lane(stat)
    head_plus, tail_minus = _single_split_by_lane(order, lane)
    if stat in ("rmax", "lmin"):
        return tail_minus
    zt = TruncSeries.term(order, 1, MultiPoly.variable(lane))
    return head_plus - zt  # S^2/(1+S)


def _irr_aux(order: int, lane: str) -> TruncSeries:
    """The I(t,z) that feeds the set-1 pair and A-function formulas:
    S^2/(1+S) + zt in the given lane."""
    return _single_split_by_lane(order, lane)[0]


@functools.lru_cache(maxsize=None)
def closed_form_pair_set2(
    order: int, pair: tuple[str, str] = ("lmax", "rmax"), perm_class: str = "all"
) -> TruncSeries:
    """Joint closed form for a set-2 pair.

    S = (S(z1)+1)(S(z2)+1) t z1 z2 / (1 - S(z1)S(z2)), with the
    irreducible part dropping the S(z1)+1 factor and the reducible part
    replacing it by S(z1).

    >>> from sepstats.series import parse_poly
    >>> c3 = closed_form_pair_set2(3, ("lmax", "rmax")).coefficient(3)
    >>> c3 == parse_poly("x^3y + 2x^2y^2 + xy^3 + x^2y + xy^2")
    True
    """
    cls = _check_class(perm_class)
    if tuple(pair) not in SET2_PAIRS:
        raise ValueError(f"pair {pair} is not one of {SET2_PAIRS}")
    lane1, lane2 = _lane(pair[0]), _lane(pair[1])
    s1 = _single_gf_by_lane(order, lane1)
    s2 = _single_gf_by_lane(order, lane2)
    tz = TruncSeries.term(
        order, 1, MultiPoly.variable(lane1) * MultiPoly.variable(lane2)
    )
    den = 1 - s1 * s2
    if cls == "all":
        num = (s1 + 1) * (s2 + 1) * tz
    elif cls == "irreducible":
        num = (s2 + 1) * tz
    else:
        num = s1 * (s2 + 1) * tz
    return num.divide(den)


@functools.lru_cache(maxsize=None)
def closed_form_pair_set1(
    order: int, pair: tuple[str, str] = ("rmax", "lmin"), perm_class: str = "all"
) -> TruncSeries:
    """Joint closed form for a set-1 pair.

    With K = S(z1) I(z2) (where I is the rmax/lmin-side irreducible single
    form) and T = t z1 z2:  S = (K + T)/(1 - K - T).  The class split
    depends on the pair: for (rmax, lmin), I = S - K and R = K; for
    (lmax, rmin), I = K + T and R = S - K - T.

    >>> from sepstats.distributions import counts_by_variable
    >>> c4 = closed_form_pair_set1(4, ("rmax", "lmin"), "irreducible").coefficient(4)
    >>> sum(c for _, c in c4.terms())
    11
    """
    cls = _check_class(perm_class)
    pair = tuple(pair)
    if pair not in SET1_PAIRS:
        raise ValueError(f"pair {pair} is not one of {SET1_PAIRS}")
    lane1, lane2 = _lane(pair[0]), _lane(pair[1])
    core = _single_gf_by_lane(order, lane1) * _irr_aux(order, lane2)
    tz = TruncSeries.term(
        order, 1, MultiPoly.variable(lane1) * MultiPoly.variable(lane2)
    )
    s_pair = (core + tz).divide(1 - core - tz)
    if cls == "all":
        return s_pair
    if pair == ("rmax", "lmin"):
        return s_pair - core if cls == "irreducible" else core
    if cls == "irreducible":
        return core + tz
    return s_pair - core - tz


@functools.lru_cache(maxsize=None)
def e_function(order: int, lanes: tuple[str, str, str] = ("x", "y", "u")) -> TruncSeries:
    """The auxiliary E(t, z1, z2, z3) used by the triple and quadruple forms:

    E = z1 z2 z3 t
        + (S(z1)+1)(S(z2)+1)(S(z3)+1) t^2 z1^2 z2 z3
          / ((1 - S(z1)S(z3)) (1 - S(z1)S(z2)))
    """
    l1, l2, l3 = lanes
    s1 = _single_gf_by_lane(order, l1)
    s2 = _single_gf_by_lane(order, l2)
    s3 = _single_gf_by_lane(order, l3)
    z1 = MultiPoly.variable(l1)
    z2 = MultiPoly.variable(l2)
    z3 = MultiPoly.variable(l3)
    first = TruncSeries.term(order, 1, z1 * z2 * z3)
    num = (s1 + 1) * (s2 + 1) * (s3 + 1) * TruncSeries.term(
        order, 2, z1 * z1 * z2 * z3
    )
    den = (1 - s1 * s3) * (1 - s1 * s2)
    return first + num.divide(den)


@functools.lru_cache(maxsize=None)
def closed_form_triple(
    order: int,
    triple: tuple[str, str, str] = ("lmax", "rmax", "lmin"),
    perm_class: str = "all",
) -> TruncSeries:
    """Joint closed form for one of the four statistic triples.

    S = E / (1 - A - t z2 z3) with A = S(z2) (z3 t + S(z3)^2/(S(z3)+1)).
    For the (., rmax, lmin)-tailed triples the reducible part is
    E - z1 z2 z3 t; for the (., rmin, lmax)-tailed ones the irreducible
    part is E; the remaining parts share one bracket expression.
    """
    cls = _check_class(perm_class)
    triple = tuple(triple)
    if triple not in TRIPLES:
        raise ValueError(f"triple {triple} is not one of {TRIPLES}")
    l1, l2, l3 = (_lane(s) for s in triple)
    s2 = _single_gf_by_lane(order, l2)
    s3 = _single_gf_by_lane(order, l3)
    z1 = MultiPoly.variable(l1)
    z2 = MultiPoly.variable(l2)
    z3 = MultiPoly.variable(l3)
    a_func = s2 * (
        TruncSeries.term(order, 1, z3) + (s3 * s3).divide(s3 + 1)
    )
    tz23 = TruncSeries.term(order, 1, z2 * z3)
    den = 1 - a_func - tz23
    e_ser = e_function(order, (l1, l2, l3))
    if cls == "all":
        return e_ser.divide(den)
    tz123 = TruncSeries.term(order, 1, z1 * z2 * z3)
    bracket = (tz123 + (a_func + tz23) * (e_ser - tz123)).divide(den)
    if triple in _TRIPLES_RMAX_LMIN_TAIL:
        return bracket if cls == "irreducible" else e_ser - tz123
    return e_ser if cls == "irreducible" else bracket - tz123


@functools.lru_cache(maxsize=None)
def closed_form_quad(order: int, perm_class: str = "all") -> TruncSeries:
    """Closed form for the joint distribution of (lmax, rmax, lmin, rmin).

    S(t,x,y,u,v) = I(t,x,y,u,v) + R(t,x,y,u,v) where

    * I = xyuvt + E(t,x,y,u) S(t,y,u,v): here E with z-slots (x, y, u) is
      the reducible (lmax, rmax, lmin) triple series plus xyut, and
      S(t,y,u,v) is the (rmin, rmax, lmin) triple closed form;
    * R = I(t,x,y,v) S(t,x,u,v): the irreducible series of the statistics
      marked by x, y, v is the (rmax, rmin, lmax) triple (z-slots y, v, x
      — not the literal variable listing), times the (lmin, rmin, lmax)
      triple closed form.

    >>> from sepstats.series import MultiPoly
    >>> c1 = closed_form_quad(3).coefficient(1)
    >>> c1 == MultiPoly.from_exponents({(0, 0, 1, 1, 1, 1): 1})
    True
    """
    cls = _check_class(perm_class)
    xyuvt = TruncSeries.term(
        order,
        1,
        MultiPoly.variable("x")
        * MultiPoly.variable("y")
        * MultiPoly.variable("u")
        * MultiPoly.variable("v"),
    )
    e_xyu = e_function(order, ("x", "y", "u"))
    i_xyv = closed_form_triple(order, ("rmax", "rmin", "lmax"), "irreducible")
    s_yuv = closed_form_triple(order, ("rmin", "rmax", "lmin"))
    s_xuv = closed_form_triple(order, ("lmin", "rmin", "lmax"))
    irr = xyuvt + e_xyu * s_yuv
    red = i_xyv * s_xuv
    if cls == "irreducible":
        return irr
    if cls == "reducible":
        return red
    return irr + red


def closed_form(
    order: int, stats: Sequence[str], perm_class: str = "all"
) -> TruncSeries:
    """Dispatch to the closed form for a 1-, 2-, 3-, or 4-statistic tuple."""
    stats = tuple(stats)
    if len(stats) == 1:
        cls = _check_class(perm_class)
        if cls == "all":
            return closed_form_S_single(order, stats[0])
        if cls == "irreducible":
            return closed_form_I_single(order, stats[0])
        return closed_form_R_single(order, stats[0])
    if len(stats) == 2:
        if stats in SET2_PAIRS:
            return closed_form_pair_set2(order, stats, perm_class)
        if stats in SET1_PAIRS:
            return closed_form_pair_set1(order, stats, perm_class)
        raise ValueError(
            f"pair {stats} has no closed form; expected one of "
            f"{SET2_PAIRS + SET1_PAIRS}"
        )
    if len(stats) == 3:
        return closed_form_triple(order, stats, perm_class)
    if len(stats) == 4:
        if stats != ("lmax", "rmax", "lmin", "rmin"):
            raise ValueError(
                "the four-statistic closed form is stated for "
                "('lmax', 'rmax', 'lmin', 'rmin')"
            )
        return closed_form_quad(order, perm_class)
    raise ValueError(f"no closed form for {len(stats)} statistics")


# ---------------------------------------------------------------------------
# Residuals for the ascent/descent relations
# ---------------------------------------------------------------------------


def asc_des_cubic_residual(order: int) -> TruncSeries:
    """pq S^3 + pq t S^2 + ((p+q)t - 1) S + t for the fixpoint S(t,p,q);
    identically zero when the cubic relation holds."""
    s, _ = solve_fixpoint(order, ("p", "q"))
    t = TruncSeries.t(order)
    p = MultiPoly.variable("p")
    q = MultiPoly.variable("q")
    return (p * q) * (s * s * s) + (p * q) * (t * s * s) + (t * (p + q) - 1) * s + t


def asc_des_irr_residual(order: int) -> TruncSeries:
    """I(t,p,q) - (t + q(t+S)S)/(1+qS) for the fixpoint pair; zero when the
    irreducible closed form holds."""
    s, i = solve_fixpoint(order, ("p", "q"))
    t = TruncSeries.t(order)
    q = MultiPoly.variable("q")
    closed = (t + q * ((t + s) * s)).divide(1 + q * s)
    return i - closed


def des_cubic_residual(order: int) -> TruncSeries:
    """q S^3 + qt S^2 + ((1+q)t - 1) S + t for S(t,q) (the p = 1
    specialization of the cubic); zero when the descent-only relation
    holds."""
    s_pq, _ = solve_fixpoint(order, ("p", "q"))
    s = s_pq.specialize("p")
    t = TruncSeries.t(order)
    q = MultiPoly.variable("q")
    return q * (s * s * s) + q * (t * s * s) + (t * (q + 1) - 1) * s + t


def single_stat_table_row(order: int, stat: str, perm_class: str, n: int) -> dict[int, int]:
    """Distribution row at length n read off the single-statistic closed
    form — the series-side source for the printed tables and conjectures."""
    series = closed_form(order, (stat,), perm_class)
    if n > series.order:
        raise ValueError(f"row {n} beyond computed order {series.order}")
    return counts_by_variable(series.coefficient(n), STAT_TO_VARIABLE[stat])
