"""Boolean functions as truth tables and algebraic normal forms.

Index convention, used everywhere in this package: the input vector
(x1, ..., xn) maps to the table index i = sum_j x_j * 2**(j-1), so x1 is the
least significant bit of the index.  A monomial prod_{j in S} x_j is encoded
as the int mask with bit j-1 set for each j in S; the same convention makes
"monomial m divides index i" simply (i & m) == m.

Truth tables are numpy uint8 arrays of 0/1 values.  All public objects are
immutable after construction and safe to share across threads.
"""

from dataclasses import dataclass

import numpy as np

N_MAX = 30  # construction cap; tables beyond this are not materializable anyway


def _as_table_bits(n, bits):
    a = np.asarray(bits, dtype=np.uint8)
    if a.ndim != 1 or a.size != 1 << n:
        raise ValueError(f"truth table for n={n} needs exactly {1 << n} entries")
    if a.max(initial=0) > 1:
        raise ValueError("truth table entries must be 0 or 1")
    a = a.copy()
    a.flags.writeable = False
    return a


def _check_n(n):
    if not isinstance(n, int) or not 1 <= n <= N_MAX:
        raise ValueError(f"n must be an int in [1, {N_MAX}], got {n!r}")


@dataclass(frozen=True, eq=False)
class TruthTable:
    """Value table of a Boolean function on n variables."""

    n: int
    bits: np.ndarray

    def __post_init__(self):
        _check_n(self.n)
        object.__setattr__(self, "bits", _as_table_bits(self.n, self.bits))

    @property
    def weight(self):
        """Number of inputs mapped to 1."""
        return int(self.bits.sum())

    def __eq__(self, other):
        if not isinstance(other, TruthTable):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.bits, other.bits))

    def __repr__(self):
        return f"TruthTable(n={self.n}, weight={self.weight})"


@dataclass(frozen=True)
class AnfForm:
    """Algebraic normal form: the set of monomial masks with coefficient 1."""

    n: int
    monomials: frozenset

    def __post_init__(self):
        _check_n(self.n)
        monos = frozenset(int(m) for m in self.monomials)
        for m in monos:
            if not 0 <= m < 1 << self.n:
                raise ValueError(f"monomial mask {m} out of range for n={self.n}")
        object.__setattr__(self, "monomials", monos)


def _xor_butterfly(a):
    """In-place-style XOR butterfly; its own inverse (applied to a copy)."""
    a = a.copy()
    h = 1
    while h < a.size:
        a = a.reshape(-1, 2 * h)
        a[:, h:] ^= a[:, :h]
        a = a.reshape(-1)
        h *= 2
    return a


def anf_from_truth_table(tt):
    """Moebius transform of the table: monomials with coefficient 1."""
    coeffs = _xor_butterfly(tt.bits)
    return AnfForm(tt.n, frozenset(int(i) for i in np.flatnonzero(coeffs)))


def truth_table_from_anf(anf):
    """Evaluate an ANF on all inputs via the same butterfly (involution)."""
    ind = np.zeros(1 << anf.n, dtype=np.uint8)
    for m in anf.monomials:
        ind[m] = 1
    return TruthTable(anf.n, _xor_butterfly(ind))


def algebraic_degree(anf):
    """Largest monomial weight, or None for the zero function."""
    if not anf.monomials:
        return None
    return max(m.bit_count() for m in anf.monomials)
