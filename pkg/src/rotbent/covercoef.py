"""Cover coefficients of a monomial list and the valuation bentness test.

For a function given as a list of monomial masks (the full ANF, repeats
allowed), the cover coefficient at a mask u is

    H(u) = sum over subsets T of the list with OR(T) = u of (-2)^|T|,

where OR is componentwise (zero only where every member is zero).  These
coefficients carry the spectrum: W(c) = (-1)^|c| * sum_{u >= c} 2^(n-|u|) H(u)
and conversely H(u) = (-1)^|u| * 2^(|u|-n) * sum_{c >= u} W(c), with >= the
bitmask-superset order.  Bentness is a statement about 2-adic valuations:
f is bent iff v2(H(all-ones)) = n/2 and v2(H(u)) > |u| - n/2 for every other
u, where v2(0) counts as +infinity (passes the strict inequality, fails the
equality).

Two independent routes are provided: `cover_coefficient` works straight off
the monomial list, `cover_coefficient_from_spectrum` goes through the Walsh
transform.  They must agree everywhere; tests enforce that.
"""

import math
from dataclasses import dataclass

import numpy as np

from .boolfn import truth_table_from_anf
from .errors import CapacityError, InternalInconsistencyError
from .walsh import WalshSpectrum, walsh_spectrum

CAPACITY = 24  # contractual cap on the monomial-list size for the direct route
_ARRAY_N_MAX = 20  # full 2^n arrays beyond this are not worth materializing

INFINITE = math.inf


def two_adic_valuation(x):
    """v2(x): exponent of the largest power of 2 dividing x; inf for 0."""
    if x == 0:
        return INFINITE
    x = abs(int(x))
    return (x & -x).bit_length() - 1


@dataclass(frozen=True)
class CoverValue:
    """A cover coefficient together with its 2-adic valuation."""

    value: int
    valuation: object  # int, or math.inf for value 0


def _popcounts(n):
    idx = np.arange(1 << n, dtype=np.int64)
    pc = np.zeros(1 << n, dtype=np.int64)
    for b in range(n):
        pc += (idx >> b) & 1
    return pc


def _zeta_add(a):
    """a[v] <- sum over subsets of v (in place on a copy)."""
    a = a.copy()
    h = 1
    while h < a.size:
        a = a.reshape(-1, 2 * h)
        a[:, h:] += a[:, :h]
        a = a.reshape(-1)
        h *= 2
    return a


def _mobius_sub(a):
    """Inverse of _zeta_add: a[u] <- sum_{v subset u} (-1)^(|u|-|v|) a[v]."""
    a = a.copy()
    h = 1
    while h < a.size:
        a = a.reshape(-1, 2 * h)
        a[:, h:] -= a[:, :h]
        a = a.reshape(-1)
        h *= 2
    return a


def _superset_sums(a):
    """a[u] <- sum over supersets of u."""
    a = a.copy()
    h = 1
    while h < a.size:
        a = a.reshape(-1, 2 * h)
        a[:, :h] += a[:, h:]
        a = a.reshape(-1)
        h *= 2
    return a


def all_cover_coefficients(monomials, n):
    """H(u) for every u at once, straight from the monomial list.

    Uses the exact identity H(u) = sum_{v subset u} (-1)^(|u|-|v|) (-1)^c(v)
    with c(v) the number of list monomials contained in v, which equals the
    literal subset sum term by term.  No capacity cap: cost is O(n 2^n).
    """
    if n > _ARRAY_N_MAX:
        raise CapacityError(f"full coefficient array needs n <= {_ARRAY_N_MAX}")
    cnt = np.zeros(1 << n, dtype=np.int64)
    for m in monomials:
        cnt[m] += 1
    cnt = _zeta_add(cnt)
    signs = np.where(cnt & 1, -1, 1).astype(np.int64)
    return _mobius_sub(signs)


def _walk(sub, u):
    """Literal pruned subset walk used when u has too many bits to compress."""
    suffix = [0] * (len(sub) + 1)
    for i in range(len(sub) - 1, -1, -1):
        suffix[i] = suffix[i + 1] | sub[i]

    def rec(i, cur):
        if cur | suffix[i] != u:
            return 0
        if i == len(sub):
            return 1  # cur == u guaranteed by the check above
        return rec(i + 1, cur) - 2 * rec(i + 1, cur | sub[i])

    return rec(0, 0)


def cover_coefficient(monomials, u):
    """H(u) for one u, by the direct route.  List size is capped at 24."""
    monos = list(monomials)
    if len(monos) > CAPACITY:
        raise CapacityError(
            f"direct route takes at most {CAPACITY} monomials, got {len(monos)}; "
            "use the spectrum route"
        )
    sub = [m for m in monos if m & ~u == 0]
    w = u.bit_count()
    if u != 0 and w <= _ARRAY_N_MAX:
        # compress onto the support of u and run the lattice identity there
        pos = [j for j in range(u.bit_length()) if (u >> j) & 1]
        place = {p: i for i, p in enumerate(pos)}
        cnt = np.zeros(1 << w, dtype=np.int64)
        for m in sub:
            c = 0
            for j in range(m.bit_length()):
                if (m >> j) & 1:
                    c |= 1 << place[j]
            cnt[c] += 1
        cnt = _zeta_add(cnt)
        signs = np.where(cnt & 1, -1, 1).astype(np.int64)
        val = int(_mobius_sub(signs)[-1])
    elif u == 0:
        val = -1 if monos.count(0) % 2 else 1
    else:
        val = _walk(sub, u)
    return CoverValue(val, two_adic_valuation(val))


def cover_coefficient_from_spectrum(spectrum, u):
    """H(u) recovered from the Walsh spectrum; the 2-power must divide exactly."""
    n = spectrum.n
    if not 0 <= u < 1 << n:
        raise ValueError(f"mask {u} out of range for n={n}")
    idx = np.arange(1 << n, dtype=np.int64)
    s = int(spectrum.values[(idx & u) == u].sum())
    w = u.bit_count()
    q, r = divmod(s, 1 << (n - w))
    if r:
        raise InternalInconsistencyError(
            f"superset sum {s} not divisible by 2^{n - w}; spectrum is not a "
            "valid transform"
        )
    val = -q if w % 2 else q
    return CoverValue(val, two_adic_valuation(val))


def all_cover_from_spectrum(spectrum):
    """H(u) for every u via the spectrum route, exact."""
    n = spectrum.n
    s = _superset_sums(spectrum.values.astype(np.int64))
    pc = _popcounts(n)
    shift = n - pc
    q = s >> shift
    if np.any(q << shift != s):
        raise InternalInconsistencyError("spectrum superset sums fail 2-power division")
    return np.where(pc & 1, -q, q)


def spectrum_from_cover(monomials, n):
    """Walsh spectrum assembled from cover coefficients (direct route inside)."""
    monos = list(monomials)
    if len(monos) > CAPACITY:
        raise CapacityError(
            f"cover-route spectrum takes at most {CAPACITY} monomials, got {len(monos)}"
        )
    harr = all_cover_coefficients(monos, n)
    pc = _popcounts(n)
    s = _superset_sums(harr << (n - pc))
    return WalshSpectrum(n, np.where(pc & 1, -s, s))


def _valuations(harr):
    """Elementwise v2 as an int array, with a huge sentinel where H = 0."""
    low = harr & -harr
    v2 = np.zeros_like(harr)
    nz = harr != 0
    v2[nz] = np.round(np.log2(low[nz].astype(np.float64))).astype(np.int64)
    v2[~nz] = np.iinfo(np.int64).max  # stands in for +infinity
    return v2


def bent_by_valuation(anf, route="auto"):
    """Bentness via the valuation criterion on the cover coefficients.

    route: "direct" (monomial list, capped at 24 monomials), "spectrum"
    (through the Walsh transform), or "auto" (direct when within capacity).
    """
    n = anf.n
    if n % 2:
        raise ValueError("the valuation criterion needs an even number of variables")
    monos = sorted(anf.monomials)
    if route == "auto":
        route = "direct" if len(monos) <= CAPACITY else "spectrum"
    if route == "direct":
        if len(monos) > CAPACITY:
            raise CapacityError(
                f"direct route takes at most {CAPACITY} monomials, got {len(monos)}"
            )
        harr = all_cover_coefficients(monos, n)
    elif route == "spectrum":
        if n > _ARRAY_N_MAX:
            raise CapacityError(f"spectrum route needs n <= {_ARRAY_N_MAX}")
        harr = all_cover_from_spectrum(walsh_spectrum(truth_table_from_anf(anf)))
    else:
        raise ValueError(f"unknown route {route!r}")

    full = (1 << n) - 1
    pc = _popcounts(n)
    v2 = _valuations(harr)
    if harr[full] == 0 or v2[full] != n // 2:
        return False
    bound = pc - n // 2
    bad = v2 <= bound
    bad[full] = False
    return not bool(np.any(bad))
