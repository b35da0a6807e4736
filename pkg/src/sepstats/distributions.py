"""Exact statistic distributions over separable permutation classes.

Two independent routes produce distribution data:

* a census route (:func:`dist_from_enumeration`,
  :func:`series_from_enumeration`) that walks the structural enumeration
  stream and tallies statistic profiles permutation by permutation, and
* the series route in :mod:`sepstats.series` / :mod:`sepstats.closedforms`
  built from functional equations.

Keeping both routes intact is the point: each one checks the other.

>>> table = dist_from_enumeration(3, "all", ("rmax",))
>>> table.value_counts(3)
{1: 2, 2: 3, 3: 1}
>>> dist_from_enumeration(4, "irreducible", ("rmax",)).value_counts(4)
{2: 5, 3: 5, 4: 1}
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

from .enumeration import (
    count_irreducible,
    count_separable,
    iter_separable_bytes,
)
from .permutations import _stats_of_sequence
from .series import MultiPoly, TruncSeries

__all__ = [
    "STAT_NAMES",
    "STAT_TO_VARIABLE",
    "VARIABLE_TO_STAT",
    "DEFAULT_CENSUS_CAP",
    "DEEP_CENSUS_CAP",
    "DistTable",
    "dist_from_enumeration",
    "series_from_enumeration",
    "counts_by_variable",
    "render_table",
    "TABLE_NUMBERS",
]

#: Canonical statistic order; also the exponent order of MultiPoly monomials.
STAT_NAMES: tuple[str, ...] = ("asc", "des", "lmax", "rmax", "lmin", "rmin")

#: Which series variable carries which statistic.
STAT_TO_VARIABLE: dict[str, str] = {
    "asc": "p",
    "des": "q",
    "lmax": "x",
    "rmax": "y",
    "lmin": "u",
    "rmin": "v",
}
VARIABLE_TO_STAT: dict[str, str] = {v: k for k, v in STAT_TO_VARIABLE.items()}

#: Census sizes: up to 12 routinely, up to 14 only on request (deep=True).
DEFAULT_CENSUS_CAP = 12
DEEP_CENSUS_CAP = 14

_CLASS_CANON = {
    "all": "all",
    "irreducible": "irreducible",
    "irr": "irreducible",
    "reducible": "reducible",
    "red": "reducible",
}
_CLASS_TO_STREAM = {"all": "all", "irreducible": "irr", "reducible": "red"}


def canonical_class(perm_class: str) -> str:
    """Normalize a permutation-class name ('irr' -> 'irreducible', ...)."""
    try:
        return _CLASS_CANON[perm_class]
    except KeyError:
        raise ValueError(
            f"unknown permutation class {perm_class!r}; "
            f"expected one of {sorted(set(_CLASS_CANON))}"
        ) from None


def class_count(perm_class: str, n: int) -> int:
    """Number of length-n permutations in the given class."""
    cls = canonical_class(perm_class)
    if cls == "all":
        return count_separable(n)
    if cls == "irreducible":
        return count_irreducible(n)
    return count_separable(n) - count_irreducible(n)


def _check_cap(n: int, deep: bool, what: str) -> None:
    cap = DEEP_CENSUS_CAP if deep else DEFAULT_CENSUS_CAP
    if n < 1:
        raise ValueError(f"{what} needs n >= 1, got {n}")
    if n > cap:
        hint = "" if deep else " (pass deep=True to allow up to 14)"
        raise ValueError(f"{what} capped at n <= {cap}, got {n}{hint}")


def _stat_indices(stats: Sequence[str]) -> tuple[int, ...]:
    if not stats:
        raise ValueError("at least one statistic is required")
    if len(set(stats)) != len(stats):
        raise ValueError(f"duplicate statistics in {tuple(stats)}")
    try:
        return tuple(STAT_NAMES.index(s) for s in stats)
    except ValueError:
        bad = [s for s in stats if s not in STAT_NAMES]
        raise ValueError(
            f"unknown statistics {bad}; expected names from {STAT_NAMES}"
        ) from None


@dataclass(frozen=True)
class DistTable:
    """Sparse distribution rows for one permutation class and statistic tuple.

    ``rows[n]`` maps a tuple of statistic values (in the order of ``stats``)
    to the exact number of class permutations of length n realizing it.
    """

    perm_class: str
    stats: tuple[str, ...]
    rows: dict[int, dict[tuple[int, ...], int]] = field(default_factory=dict)

    def lengths(self) -> list[int]:
        return sorted(self.rows)

    def row(self, n: int) -> dict[tuple[int, ...], int]:
        return self.rows[n]

    def value_counts(self, n: int) -> dict[int, int]:
        """Single-statistic row with scalar keys, sorted by value."""
        if len(self.stats) != 1:
            raise ValueError(
                f"value_counts needs a single statistic, have {self.stats}"
            )
        return {key[0]: c for key, c in sorted(self.rows[n].items())}

    def total(self, n: int) -> int:
        return sum(self.rows[n].values())

    def check_totals(self) -> None:
        for n in self.rows:
            expected = class_count(self.perm_class, n)
            if self.total(n) != expected:
                raise AssertionError(
                    f"row total for n={n} is {self.total(n)}, expected "
                    f"{expected} ({self.perm_class})"
                )

    # -- emission ----------------------------------------------------------

    def csv_lines(self) -> Iterator[str]:
        """CSV rows: n, one column per statistic, count."""
        yield ",".join(["n", *self.stats, "count"])
        for n in self.lengths():
            for key in sorted(self.rows[n]):
                yield ",".join(map(str, [n, *key, self.rows[n][key]]))

    def to_jsonable(self) -> dict:
        return {
            "class": self.perm_class,
            "stats": list(self.stats),
            "rows": {
                str(n): [[list(key), c] for key, c in sorted(self.rows[n].items())]
                for n in self.lengths()
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable(), sort_keys=True, indent=2)


def dist_from_enumeration(
    n: int,
    perm_class: str = "all",
    stats: Sequence[str] = STAT_NAMES,
    *,
    deep: bool = False,
) -> DistTable:
    """Exact census distribution of ``stats`` on the class at length ``n``.

    >>> dist_from_enumeration(1, "irreducible", ("rmax",)).value_counts(1)
    {1: 1}
    """
    cls = canonical_class(perm_class)
    _check_cap(n, deep, "dist_from_enumeration")
    indices = _stat_indices(stats)
    counts: dict[tuple[int, ...], int] = {}
    for word in iter_separable_bytes(n, _CLASS_TO_STREAM[cls]):
        profile = _stats_of_sequence(word).monomial()
        key = tuple(profile[i] for i in indices)
        counts[key] = counts.get(key, 0) + 1
    table = DistTable(cls, tuple(stats), {n: counts})
    table.check_totals()
    return table


@functools.lru_cache(maxsize=None)
def series_from_enumeration(
    order: int, perm_class: str = "all", *, deep: bool = False
) -> TruncSeries:
    """The six-variable joint distribution series built by direct census.

    The coefficient of t^n is the sum over class permutations of length n
    of p^asc q^des x^lmax y^rmax u^lmin v^rmin.  This is the
    enumeration-side oracle for the functional-equation solver.  Cached:
    verification runs compare many closed forms against the same census.

    >>> S = series_from_enumeration(1)
    >>> str(S.coefficient(1))
    'x*y*u*v'
    """
    cls = canonical_class(perm_class)
    _check_cap(order, deep, "series_from_enumeration")
    stream_cls = _CLASS_TO_STREAM[cls]
    coeffs: list[MultiPoly] = [MultiPoly.zero()]
    for n in range(1, order + 1):
        counts: dict[tuple[int, ...], int] = {}
        for word in iter_separable_bytes(n, stream_cls):
            key = _stats_of_sequence(word).monomial()
            counts[key] = counts.get(key, 0) + 1
        poly = MultiPoly.from_exponents(counts)
        expected = class_count(cls, n)
        total = sum(c for _, c in poly.terms())
        if total != expected:
            raise AssertionError(
                f"census series coefficient t^{n} sums to {total}, "
                f"expected {expected} ({cls})"
            )
        coeffs.append(poly)
    return TruncSeries(coeffs)


def counts_by_variable(poly: MultiPoly, var: str) -> dict[int, int]:
    """Marginal distribution read off a series coefficient.

    Groups the coefficient's monomials by the exponent of ``var`` and sums
    (equivalently: substitutes 1 for every other variable).  Values are
    asserted to be non-negative integers, as befits counts.
    """
    from .series import VARIABLES

    idx = VARIABLES.index(var)
    out: dict[int, int] = {}
    for exps, c in poly.terms():
        out[exps[idx]] = out.get(exps[idx], 0) + c
    for k, c in out.items():
        if not isinstance(c, int) or c < 0:
            raise AssertionError(
                f"marginal count for {var}^{k} is {c}, expected a "
                "non-negative integer"
            )
    return dict(sorted(out.items()))


# ---------------------------------------------------------------------------
# Distribution-triangle rendering (tables 3, 4, 5)
# ---------------------------------------------------------------------------

#: Table number -> (class, statistic, column-range function).  Table 3 is
#: the distribution of any one of lmax/rmax/lmin/rmin on all separable
#: permutations (the four coincide; rmax is used).  Table 4 is rmax on
#: irreducible ones (k = 1 is structurally 0 for n >= 2 and is printed).
#: Table 5 is lmax on irreducible ones; its rows stop at k = n - 1 because
#: lmax = n forces the identity permutation, which is reducible for n >= 2.
TABLE_NUMBERS = (3, 4, 5)
_TABLE_SPECS: dict[int, tuple[str, str, str]] = {
    3: ("all", "rmax", "full"),
    4: ("irreducible", "rmax", "full"),
    5: ("irreducible", "lmax", "drop_last"),
}
_TABLE_ROWS = 8


def table_rows(which: int, max_n: int = _TABLE_ROWS) -> list[list[int]]:
    """Table rows as integer lists, row n listing counts for k = 1.. ."""
    if which not in _TABLE_SPECS:
        raise ValueError(f"no such table {which}; expected one of {TABLE_NUMBERS}")
    perm_class, stat, shape = _TABLE_SPECS[which]
    rows = []
    for n in range(1, max_n + 1):
        counts = dist_from_enumeration(n, perm_class, (stat,)).value_counts(n)
        top = n if shape == "full" else max(1, n - 1)
        rows.append([counts.get(k, 0) for k in range(1, top + 1)])
    return rows


def render_table(which: int, max_n: int = _TABLE_ROWS) -> str:
    """Render a table exactly as printed: one line per n, space-separated.

    >>> print(render_table(3, max_n=4))
    1
    1 1
    2 3 1
    6 9 6 1
    <BLANKLINE>
    """
    lines = [" ".join(map(str, row)) for row in table_rows(which, max_n)]
    return "\n".join(lines) + "\n"
