"""A guided tour: what makes a permutation separable, and how we count them.

Run with ``python3 demos/tour_of_separability.py``.
"""

from sepstats import (
    Permutation,
    block_decompose,
    complement,
    components,
    count_irreducible,
    count_separable,
    enumerate_structural,
    inverse,
    is_irreducible,
    is_separable,
    reverse,
    stats,
)


def main() -> None:
    print("== Separability is pattern avoidance ==")
    for text in ("2165743", "2413", "3142", "42135"):
        pi = Permutation.parse(text)
        verdict = "separable" if is_separable(pi) else "NOT separable"
        print(f"  {str(pi):>8}  {verdict}")
    print()

    print("== Every separable permutation decomposes into interval blocks ==")
    pi = Permutation.parse("2165743")
    l_blocks, r_blocks = block_decompose(pi)
    print(f"  {pi} splits around its maximum 7 into")
    print(f"    left blocks  (in position order): {l_blocks}")
    print(f"    right blocks (in position order): {r_blocks}")
    comps = components(pi)
    print(f"  direct-sum components of {pi}: {[str(c) for c in comps]}")
    print(f"  irreducible? {is_irreducible(pi)}")
    print()

    print("== The class is closed under the dihedral symmetries ==")
    for op in (reverse, complement, inverse):
        image = op(pi)
        print(
            f"  {op.__name__:>10}({pi}) = {image}  "
            f"(separable: {is_separable(image)}, "
            f"irreducible: {is_irreducible(image)})"
        )
    print()

    print("== Counting: the large and little Schroeder numbers ==")
    print("   n   separable  irreducible")
    for n in range(1, 11):
        print(f"  {n:2d}  {count_separable(n):10d}  {count_irreducible(n):11d}")
    print("  (for n >= 2 exactly half of the separables are irreducible)")
    print()

    print("== The six statistics on the separables of length 4 ==")
    print("  perm  asc des lmax rmax lmin rmin")
    for pi in enumerate_structural(4):
        s = stats(pi)
        print(
            f"  {str(pi):>4}  {s.asc:3d} {s.des:3d} {s.lmax:4d} "
            f"{s.rmax:4d} {s.lmin:4d} {s.rmin:4d}"
        )


if __name__ == "__main__":
    main()
