"""Walsh spectra and bent functions.

A function is bent when every Walsh value has the same magnitude
2^(n/2), the flattest spectrum a Boolean function can have.  Bent
functions only exist for even n, and for n >= 4 their degree is at
most n/2.
"""

from rotbent import AnfForm, is_bent, truth_table_from_anf, walsh_spectrum


def show(label, anf):
    tt = truth_table_from_anf(anf)
    ws = walsh_spectrum(tt)
    verdict = "bent" if is_bent(tt) else "not bent"
    print(f"{label}: {verdict}")
    print("  spectrum:", " ".join(str(v) for v in ws.values))


def main():
    show("x1x2 on n=2", AnfForm(2, frozenset({0b11})))
    show("x1x2 + x3x4 on n=4", AnfForm(4, frozenset({0b0011, 0b1100})))
    show("x1x2 alone on n=4", AnfForm(4, frozenset({0b0011})))
    show("x1 + x2 on n=2", AnfForm(2, frozenset({0b01, 0b10})))


if __name__ == "__main__":
    main()
