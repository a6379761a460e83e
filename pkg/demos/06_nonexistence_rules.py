"""Structural nonexistence rules for homogeneous functions.

Five rules try to refute bentness without touching the full spectrum.
Most work by exhibiting a witness mask u0 whose cover coefficient has
a 2-adic valuation too small for a bent function; the witness is then
re-verified numerically before the verdict is released.  A rule that
does not apply says INCONCLUSIVE, never "bent".
"""

from rotbent import all_checks, parse_sanf, verify_witness


def show(text, n):
    sanf = parse_sanf(text, n)
    print(f"{text} on n={n}:")
    for name, rep in all_checks(sanf):
        print(f"  {name:14} {rep.text()}")
        if rep.witness_u0 is not None:
            print(f"  {'':14} witness re-verified: {verify_witness(sanf, rep)}")
    print()


def main():
    # A single contiguous cube: several rules refute it at once.
    show("x1x2x3", 8)
    # The classic pair where the chain rules fire but the gap bounds
    # stay silent.
    show("x1x2x3+x1x2x4", 10)
    # A sparse monomial far from the block shapes.
    show("x1x3x5", 16)
    # Nothing applies: every rule declines.
    show("x1x2x4", 10)


if __name__ == "__main__":
    main()
