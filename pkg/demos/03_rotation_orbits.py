"""Rotation-symmetric functions and the SANF grammar.

Cyclic rotation of variable indices acts on monomial masks; a
rotation-symmetric function is a union of whole orbits.  The short
ANF (SANF) lists one canonical representative per orbit, so
"x1x2x3" on six variables stands for all six rotations of that cube.
"""

from rotbent import (
    enumerate_orbit_reps,
    format_monomial,
    format_sanf,
    mask_to_bits,
    orbit_count,
    orbit_expand,
    orbit_masks,
    parse_sanf,
    sanf_truth_table,
)


def main():
    sanf = parse_sanf("x1x2x3", 6)
    print("SANF:", format_sanf(sanf))
    print("orbit of x1x2x3 on n=6:")
    for m in sorted(orbit_masks(sanf.reps[0], 6)):
        print(f"  {mask_to_bits(m, 6)}  {format_monomial(m)}")
    anf = orbit_expand(sanf)
    print("expanded monomial count:", len(anf.monomials))
    print("truth table weight:", sanf_truth_table(sanf).weight)

    print()
    print("necklace counts (orbits of weight-w masks):")
    for n in (6, 8, 10):
        counts = [orbit_count(n, w) for w in range(1, n + 1)]
        print(f"  n={n}: {counts}")

    print()
    print("degree-3 representatives on n=8:")
    for rep in enumerate_orbit_reps(8, 3):
        print(f"  {mask_to_bits(rep, 8)}  {format_monomial(rep)}")


if __name__ == "__main__":
    main()
