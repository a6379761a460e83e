"""GF(2)[x] arithmetic on int-encoded polynomials and degree-2 bentness.

A polynomial is a nonnegative int with bit j holding the coefficient of x^j,
so 0b10011 is x^4 + x + 1.  The zero polynomial has degree None.

A homogeneous degree-2 rotation-symmetric function is determined by its set
of representatives x1 x_e with 2 <= e <= n/2 + 1 (larger e rewrites to the
equivalent n - e + 2, which orbit canonicalization already performs).  Its
bentness has three equivalent characterizations, all implemented here and
cross-checked in the tests:

  * gcd route: coprimality of a row polynomial with x^n + 1,
  * circulant route: nonsingularity of the circulant matrix of that row,
  * rank route: full rank of the symmetric adjacency matrix of the
    quadratic part (valid for any quadratic function, not just symmetric).
"""

from itertools import combinations

from .rotsym import Sanf, positions, rotate
from .boolfn import algebraic_degree


def gf2_degree(p):
    """Degree of an int-encoded polynomial; None for the zero polynomial."""
    if p < 0:
        raise ValueError("polynomials are nonnegative ints")
    return p.bit_length() - 1 if p else None


def gf2_mul(a, b):
    """Carry-less product."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def gf2_divmod(a, b):
    """Quotient and remainder of a by b over GF(2)."""
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def gf2_mod(a, b):
    return gf2_divmod(a, b)[1]


def gf2_gcd(a, b):
    """Euclidean gcd; by GF(2) convention the result is its own normalization."""
    while b:
        a, b = b, gf2_mod(a, b)
    return a


def poly_str(p):
    """Readable form, highest degree first: 'x^4 + x + 1'."""
    if p == 0:
        return "0"
    terms = []
    for j in range(p.bit_length() - 1, -1, -1):
        if (p >> j) & 1:
            terms.append("1" if j == 0 else "x" if j == 1 else f"x^{j}")
    return " + ".join(terms)


def _deg2_e_values(sanf):
    n = sanf.n
    if n % 2:
        raise ValueError("degree-2 analysis needs an even number of variables")
    if sanf.homogeneous_degree != 2:
        raise ValueError("SANF is not homogeneous of degree 2")
    es = []
    for r in sanf.reps:
        p = positions(r)
        assert p[0] == 1 and 2 <= p[1] <= n // 2 + 1  # canonical reps guarantee this
        es.append(p[1])
    return es


def rots_quadratic_poly(sanf):
    """Row polynomial of the degree-2 SANF: sum of x^(e-1) + x^(n+1-e).

    The self-paired representative e = n/2 + 1 contributes the single term
    x^(n/2); distinct representatives touch disjoint exponent pairs.
    """
    n = sanf.n
    p = 0
    for e in _deg2_e_values(sanf):
        if e == n // 2 + 1:
            p ^= 1 << (n // 2)
        else:
            p ^= (1 << (e - 1)) | (1 << (n + 1 - e))
    return p


def is_bent_degree2_rots(sanf):
    """gcd route: bent iff the row polynomial is coprime with x^n + 1."""
    n = sanf.n
    return gf2_gcd(rots_quadratic_poly(sanf), (1 << n) | 1) == 1


def rank_gf2(rows):
    """Rank over GF(2) of a matrix given as int-encoded rows."""
    pivots = []
    for row in rows:
        for p in pivots:
            row = min(row, row ^ p)
        if row:
            pivots.append(row)
    return len(pivots)


def circulant_nonsingular(row, n):
    """Circulant route: rank of the n rotations of the first row."""
    rows = [rotate(row, j, n) for j in range(n)]
    return rank_gf2(rows) == n


def is_bent_quadratic(anf):
    """Rank route for any function of degree <= 2.

    Bent iff the symmetric matrix (a_ij) of the quadratic monomials x_i x_j
    is nonsingular over GF(2); linear and constant terms do not matter.
    """
    n = anf.n
    deg = algebraic_degree(anf)
    if deg is not None and deg > 2:
        raise ValueError(f"function has degree {deg}, not quadratic")
    rows = [0] * n
    for m in anf.monomials:
        if m.bit_count() == 2:
            i = (m & -m).bit_length() - 1
            j = m.bit_length() - 1
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return rank_gf2(rows) == n


def classify_degree2(n):
    """All bent homogeneous degree-2 rotation-symmetric functions on n variables.

    Tries every nonempty subset of e-values in [2, n/2+1] through the gcd
    route; output is ordered by subset size, then lexicographically.
    """
    if n % 2 or n < 2:
        raise ValueError("classification needs even n >= 2")
    evals = range(2, n // 2 + 2)
    found = []
    for size in range(1, len(evals) + 1):
        for combo in combinations(evals, size):
            reps = tuple((1 << 0) | (1 << (e - 1)) for e in combo)
            sanf = Sanf(n, reps)
            if is_bent_degree2_rots(sanf):
                found.append(sanf)
    return found
