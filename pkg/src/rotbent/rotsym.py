"""Rotation symmetry: variable rotation orbits and the short ANF (SANF).

The rotation rho sends the value at position p to position p+1 (mod n,
positions 1-based), which on monomial masks is a left rotate within n bits.
A rotation-symmetric function is invariant under rho, so its ANF is a union
of whole monomial orbits; the SANF keeps one canonical representative per
orbit.  The canonical representative is the rotation whose position string
u1 u2 ... un is lexicographically largest, i.e. ones pushed earliest; it
always has a 1 in position 1.
"""

import re
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .boolfn import AnfForm, _check_n, truth_table_from_anf


def rotate(u, l, n):
    """Rotate the monomial mask u by l positions (position p -> p+l mod n)."""
    _check_n(n)
    if not 0 <= u < 1 << n:
        raise ValueError(f"mask {u} out of range for n={n}")
    l %= n
    if l == 0:
        return u
    return ((u << l) | (u >> (n - l))) & ((1 << n) - 1)


def or_combine(u, v):
    """Componentwise OR of two masks: zero only where both are zero."""
    return u | v


def cycle_length(u, n):
    """Smallest l >= 1 with rotate(u, l, n) == u; always a divisor of n."""
    for l in sorted(d for d in range(1, n + 1) if n % d == 0):
        if rotate(u, l, n) == u:
            return l
    raise AssertionError("unreachable: l = n always fixes u")


def _rev(u, n):
    """Mask read as the position string u1 u2 ... un, as an integer key."""
    r = 0
    for j in range(n):
        r = (r << 1) | ((u >> j) & 1)
    return r


def orbit_masks(u, n):
    """All distinct rotations of u, in rotation order starting from u."""
    return [rotate(u, l, n) for l in range(cycle_length(u, n))]


def canonical_rep(u, n):
    """Canonical orbit representative (lexicographically largest position string)."""
    if u == 0:
        raise ValueError("the zero mask has no canonical representative")
    return max(orbit_masks(u, n), key=lambda v: _rev(v, n))


def cyclic_run_count(u, n):
    """Number of maximal cyclic runs of ones in the mask."""
    if u == 0:
        return 0
    if u == (1 << n) - 1:
        return 1
    starts = u & ~rotate(u, 1, n)
    return starts.bit_count()


def enumerate_orbit_reps(n, w):
    """Canonical representatives of all weight-w orbits, sorted by position tuple."""
    _check_n(n)
    if not 0 < w <= n:
        raise ValueError(f"weight must be in [1, {n}], got {w}")
    reps = set()
    for pos in combinations(range(n), w):
        m = 0
        for p in pos:
            m |= 1 << p
        reps.add(canonical_rep(m, n))
    return sorted(reps, key=lambda u: positions(u))


def positions(u):
    """1-based variable indices of a monomial mask, ascending."""
    return tuple(j + 1 for j in range(u.bit_length()) if (u >> j) & 1)


def mask_from_positions(pos, n):
    m = 0
    for p in pos:
        if not 1 <= p <= n:
            raise ValueError(f"variable index {p} out of range for n={n}")
        m |= 1 << (p - 1)
    return m


@dataclass(frozen=True)
class Sanf:
    """Short ANF: one canonical representative per monomial rotation orbit."""

    n: int
    reps: tuple

    def __post_init__(self):
        _check_n(self.n)
        reps = tuple(int(r) for r in self.reps)
        if not reps:
            raise ValueError("a SANF needs at least one representative")
        seen = set()
        for r in reps:
            if not 0 < r < 1 << self.n:
                raise ValueError(f"representative {r} out of range for n={self.n}")
            if r != canonical_rep(r, self.n):
                raise ValueError(f"representative {format_monomial(r)} is not canonical")
            if r in seen:
                raise ValueError(f"duplicate orbit for {format_monomial(r)}")
            seen.add(r)
        object.__setattr__(self, "reps", reps)

    @property
    def homogeneous_degree(self):
        """Common monomial weight, or None when the reps mix degrees."""
        degs = {r.bit_count() for r in self.reps}
        return degs.pop() if len(degs) == 1 else None

    def __str__(self):
        return format_sanf(self)


def sanf_from_masks(masks, n):
    """Build a Sanf from arbitrary monomial masks, canonicalizing each."""
    reps = []
    seen = set()
    for m in masks:
        c = canonical_rep(m, n)
        if c in seen:
            raise ValueError(f"two monomials share the orbit of {format_monomial(c)}")
        seen.add(c)
        reps.append(c)
    return Sanf(n, tuple(reps))


def orbit_expand(sanf):
    """Full ANF of the rotation-symmetric function the SANF describes."""
    monos = []
    for r in sanf.reps:
        monos.extend(orbit_masks(r, sanf.n))
    assert len(monos) == len(set(monos))
    return AnfForm(sanf.n, frozenset(monos))


def sanf_truth_table(sanf):
    """Truth table of the expanded SANF."""
    return truth_table_from_anf(orbit_expand(sanf))


def is_rotation_symmetric(tt):
    """True when the table is invariant under rotating the input variables."""
    n = tt.n
    idx = np.arange(1 << n, dtype=np.int64)
    rot = ((idx << 1) | (idx >> (n - 1))) & ((1 << n) - 1) if n > 1 else idx
    return bool(np.array_equal(tt.bits, tt.bits[rot]))


_MONO_RE = re.compile(r"^(?:x(\d+))+$")
_TOKEN_RE = re.compile(r"x(\d+)")


def parse_sanf(text, n):
    """Parse SANF text: '+'-joined monomials 'x<i>x<j>...', whitespace ignored.

    Indices are 1-based and must be strictly increasing inside a monomial.
    Monomials are canonicalized to orbit representatives; two monomials from
    the same orbit are rejected (they would cancel over GF(2)).
    """
    compact = "".join(text.split())
    if not compact:
        raise ValueError("empty SANF")
    masks = []
    for part in compact.split("+"):
        if not part or not _MONO_RE.match(part):
            raise ValueError(f"bad monomial {part!r}; expected e.g. x1x3x5")
        idxs = [int(t) for t in _TOKEN_RE.findall(part)]
        if any(b <= a for a, b in zip(idxs, idxs[1:])):
            raise ValueError(f"indices must be strictly increasing in {part!r}")
        masks.append(mask_from_positions(idxs, n))
    return sanf_from_masks(masks, n)


def format_monomial(u):
    return "".join(f"x{p}" for p in positions(u))


def format_sanf(sanf):
    return "+".join(format_monomial(r) for r in sanf.reps)


def mask_to_bits(u, n):
    """Render a mask as the 0/1 position string u1 u2 ... un."""
    return "".join(str((u >> j) & 1) for j in range(n))


def bits_to_mask(text, n):
    """Parse a 0/1 position string (position 1 first) back to a mask."""
    if len(text) != n or set(text) - {"0", "1"}:
        raise ValueError(f"expected {n} characters of 0/1, got {text!r}")
    return sum(1 << j for j, ch in enumerate(text) if ch == "1")


def orbit_count(n, w):
    """Number of weight-w orbits (binary necklaces), by direct enumeration."""
    return len(enumerate_orbit_reps(n, w))
