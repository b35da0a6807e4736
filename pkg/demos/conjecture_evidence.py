"""Unimodality evidence: distribution triangles and where they peak.

Prints the three statistic triangles and the finite-range unimodality
verdicts behind the open conjectures.

Run with ``python3 demos/conjecture_evidence.py``.
"""

from sepstats.verify import check_conjectures, conjecture_rows, unimodality


def show_triangle(title: str, perm_class: str, stat: str, max_n: int) -> None:
    print(f"== {title} ==")
    rows = conjecture_rows(perm_class, stat, max_n)
    for n in sorted(rows):
        counts = [rows[n].get(k, 0) for k in range(1, max(rows[n]) + 1)]
        weak, peak, strict = unimodality(rows[n])
        marker = f"peak k={peak}" + ("" if strict else " (plateau)")
        print(f"  n={n:2d}: {' '.join(map(str, counts)):<60} {marker}")
    print()


def main() -> None:
    max_n = 10
    show_triangle(
        "right-to-left maxima over all separables", "all", "rmax", max_n
    )
    show_triangle(
        "right-to-left maxima over the irreducibles", "irreducible", "rmax", max_n
    )
    show_triangle(
        "left-to-right maxima over the irreducibles", "irreducible", "lmax", max_n
    )

    print("== Verdicts (finite-range evidence, not proofs) ==")
    for report in check_conjectures(max_n=12):
        print(f"  {report.line()}")


if __name__ == "__main__":
    main()
