"""Truth tables and algebraic normal form.

A function on n variables is stored as a table of 2^n bits indexed by
i = sum x_j 2^(j-1), so x1 is the least significant bit.  The Mobius
transform converts between the table and the set of ANF monomials,
each monomial being an int bitmask over the variables.
"""

from rotbent import (
    AnfForm,
    algebraic_degree,
    anf_from_truth_table,
    format_monomial,
    truth_table_from_anf,
)


def main():
    # x1x2 + x3 on three variables.
    anf = AnfForm(3, frozenset({0b011, 0b100}))
    tt = truth_table_from_anf(anf)
    print("monomials:", " + ".join(format_monomial(m) for m in sorted(anf.monomials)))
    print("degree:", algebraic_degree(anf))
    print("truth table (i = x1 + 2 x2 + 4 x3):")
    for i, bit in enumerate(tt.bits):
        x = [(i >> j) & 1 for j in range(3)]
        print(f"  x1={x[0]} x2={x[1]} x3={x[2]} -> {bit}")
    print("weight:", tt.weight)

    back = anf_from_truth_table(tt)
    print("round trip recovers the ANF:", back == anf)


if __name__ == "__main__":
    main()
