"""Classifying the homogeneous degree-2 rotation-symmetric bent functions.

A degree-2 rotation-symmetric function is a sum of orbits of x1x_e.
It maps to a polynomial over GF(2), and the function is bent exactly
when that polynomial is coprime with x^n + 1.  The same question can
be settled by a circulant rank, by the rank of the quadratic form, or
by the Walsh spectrum; all four routes agree.
"""

from rotbent import (
    circulant_nonsingular,
    classify_degree2,
    format_sanf,
    gf2_gcd,
    is_bent,
    is_bent_degree2_rots,
    parse_sanf,
    poly_str,
    rots_quadratic_poly,
    sanf_truth_table,
)


def main():
    n = 8
    for text in ("x1x5", "x1x2", "x1x2+x1x3"):
        sanf = parse_sanf(text, n)
        p = rots_quadratic_poly(sanf)
        g = gf2_gcd(p, (1 << n) | 1)
        print(f"{text} on n={n}:")
        print(f"  row polynomial {poly_str(p)}")
        print(f"  gcd with x^{n} + 1: {poly_str(g)}")
        print(f"  gcd route {is_bent_degree2_rots(sanf)}, "
              f"circulant {circulant_nonsingular(p, n)}, "
              f"Walsh {is_bent(sanf_truth_table(sanf))}")

    print()
    for n in (2, 4, 6, 8, 10):
        members = [format_sanf(s) for s in classify_degree2(n)]
        print(f"n={n}: {len(members)} bent degree-2 functions")
        for text in members:
            print(f"  {text}")


if __name__ == "__main__":
    main()
