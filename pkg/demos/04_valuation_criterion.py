"""Cover coefficients and the 2-adic bentness criterion.

For a function given by its monomial list, the cover coefficient
H(u) sums (-2)^|T| over all monomial subsets T whose union is u.
A function is bent exactly when the 2-adic valuation of H at the
all-ones mask is n/2 and every other valuation clears |u| - n/2.
The same numbers fall out of the Walsh spectrum, which gives a
second, independent route.
"""

from rotbent import (
    all_cover_coefficients,
    all_cover_from_spectrum,
    bent_by_valuation,
    cover_coefficient,
    is_bent,
    mask_to_bits,
    orbit_expand,
    parse_sanf,
    sanf_truth_table,
    walsh_spectrum,
)


def main():
    sanf = parse_sanf("x1x2x3+x1x2x4", 6)
    anf = orbit_expand(sanf)
    monos = sorted(anf.monomials)
    n = 6

    print("function: x1x2x3+x1x2x4 on n=6,", len(monos), "monomials expanded")
    full = (1 << n) - 1
    cv = cover_coefficient(monos, full)
    print(f"H(all ones) = {cv.value}, valuation {cv.valuation} (bent needs {n // 2})")

    direct = all_cover_coefficients(monos, n)
    via_spectrum = all_cover_from_spectrum(walsh_spectrum(sanf_truth_table(sanf)))
    print("direct and spectrum routes identical:", bool((direct == via_spectrum).all()))

    print("valuation verdict:", bent_by_valuation(anf))
    print("Walsh verdict:   ", is_bent(sanf_truth_table(sanf)))

    print()
    print("nonzero coefficients at low weight:")
    for u in range(1 << n):
        if direct[u] and u.bit_count() <= 3:
            print(f"  u={mask_to_bits(u, n)} H={direct[u]}")


if __name__ == "__main__":
    main()
