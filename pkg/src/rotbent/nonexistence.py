"""Structural nonexistence rules for homogeneous rotation-symmetric functions.

Each checker inspects a SANF and either proves the expanded function cannot
be bent (verdict NOT_BENT) or declines (INCONCLUSIVE).  NOT_BENT verdicts
from the valuation-based rules come with a witness: a mask u0 built by
OR-combining rotations of a representative, a chain length k, and the
claimed 2-adic valuation of the cover coefficient H(u0).  A valid witness
violates the valuation criterion, so the function cannot be bent.

The rules never trust their own pattern analysis blindly: before a witness
is emitted, its valuation is recomputed numerically (both cover-coefficient
routes, which must agree) and the report is only released when the claimed
valuation is exact and the violation is real.  Pattern edge cases therefore
degrade to INCONCLUSIVE instead of to an unsound verdict.

Soundness contract: no checker may return NOT_BENT on a function the Walsh
test finds bent.  The test suite sweeps this over every homogeneous degree-3
SANF on 6, 8 and 10 variables.
"""

from dataclasses import dataclass

from .boolfn import truth_table_from_anf
from .covercoef import (
    CAPACITY,
    cover_coefficient,
    cover_coefficient_from_spectrum,
)
from .errors import CapacityError, InternalInconsistencyError
from .rotsym import (
    cyclic_run_count,
    format_monomial,
    mask_to_bits,
    orbit_expand,
    orbit_masks,
    rotate,
)
from .walsh import is_bent, walsh_spectrum

NOT_BENT = "NOT_BENT"
INCONCLUSIVE = "INCONCLUSIVE"

_DIRECT_N_MAX = 20  # witnesses are verified numerically up to this table size


@dataclass(frozen=True)
class NonexistenceReport:
    """Outcome of one structural rule on one SANF."""

    n: int
    rule: str
    verdict: str
    witness_u0: object = None  # int mask, or None when the rule carries no witness
    witness_k: object = None
    claimed_valuation: object = None
    detail: str = ""

    def as_dict(self):
        return {
            "n": self.n,
            "rule": self.rule,
            "verdict": self.verdict,
            "witness_u0": None
            if self.witness_u0 is None
            else mask_to_bits(self.witness_u0, self.n),
            "witness_k": self.witness_k,
            "claimed_valuation": self.claimed_valuation,
            "detail": self.detail,
        }

    def text(self):
        parts = [f"{self.verdict} rule={self.rule}"]
        if self.witness_u0 is not None:
            parts.append(f"u0={mask_to_bits(self.witness_u0, self.n)}")
            parts.append(f"k={self.witness_k}")
            parts.append(f"v2={self.claimed_valuation}")
        if self.detail:
            parts.append(f"({self.detail})")
        return " ".join(parts)


@dataclass(frozen=True)
class StructureProfile:
    """Shape summary a SANF presents to the valuation rules."""

    n: int
    degree: int
    rep_count: int
    max_positions: tuple  # largest set position of each rep, in input order
    d1: int  # smallest of those
    u1: int  # first rep attaining d1
    split_l: object  # largest valid block split of u1, or None
    a_mask: object  # low block of u1 under that split (positions 1..l)
    b_mask: object  # high block shifted down (positions l+1..d1)


@dataclass(frozen=True)
class SparseTripleParams:
    """Decomposition parameters of a single gap-pattern degree-3 orbit."""

    n1: int
    n2: int
    n0: int
    span: int  # largest set position of the representative
    q: int
    r: int


def _valid_splits(u1, d1):
    """Split points l where both blocks of u1 start and end with a 1."""
    return [l for l in range(1, d1) if (u1 >> (l - 1)) & 1 and (u1 >> l) & 1]


def profile(sanf):
    """Structure profile; the SANF must be homogeneous."""
    d = sanf.homogeneous_degree
    if d is None:
        raise ValueError("profile needs a homogeneous SANF")
    maxpos = tuple(r.bit_length() for r in sanf.reps)
    d1 = min(maxpos)
    u1 = sanf.reps[maxpos.index(d1)]
    splits = _valid_splits(u1, d1)
    if splits:
        l = max(splits)
        a, b = u1 & ((1 << l) - 1), u1 >> l
    else:
        l = a = b = None
    return StructureProfile(sanf.n, d, len(sanf.reps), maxpos, d1, u1, l, a, b)


def max_index_gap(sanf):
    """Largest gap between consecutive set positions within any representative."""
    best = 0
    for r in sanf.reps:
        pos = [j + 1 for j in range(r.bit_length()) if (r >> j) & 1]
        for a, b in zip(pos, pos[1:]):
            best = max(best, b - a)
    return best


def _prelim(sanf):
    """Checks shared by every rule: odd n, and the n/2 degree bound."""
    n = sanf.n
    if n % 2:
        return NonexistenceReport(
            n, "odd-n", NOT_BENT, detail="bent functions need an even number of variables"
        )
    deg = max(r.bit_count() for r in sanf.reps)
    if n >= 4 and deg > n // 2:
        return NonexistenceReport(
            n,
            "degree-bound",
            NOT_BENT,
            detail=f"degree {deg} exceeds the bent bound n/2 = {n // 2}",
        )
    return None


def _witness_value(sanf, u0):
    """H(u0) of the expanded SANF by every feasible route, cross-checked."""
    anf = orbit_expand(sanf)
    monos = sorted(anf.monomials)
    n = sanf.n
    got = []
    if len(monos) <= CAPACITY:
        got.append(cover_coefficient(monos, u0))
    if n % 2 == 0 and n <= _DIRECT_N_MAX:
        spec = walsh_spectrum(truth_table_from_anf(anf))
        got.append(cover_coefficient_from_spectrum(spec, u0))
    if not got:
        raise CapacityError(
            f"witness verification infeasible: {len(monos)} monomials on n={n}"
        )
    if len(got) == 2 and got[0].value != got[1].value:
        raise InternalInconsistencyError(
            f"cover routes disagree at u0: {got[0].value} vs {got[1].value}"
        )
    return got[0]


def verify_witness(sanf, report):
    """Recompute the witness valuation and confirm it breaks the criterion.

    True iff v2(H(u0)) equals the claimed valuation and that valuation
    violates the bent condition v2 > |u0| - n/2.  Reports without witness
    fields, or with an all-ones u0, are rejected as a precondition error.
    """
    if report.witness_u0 is None:
        raise ValueError("report carries no witness")
    n = sanf.n
    u0 = report.witness_u0
    if u0 == (1 << n) - 1:
        raise ValueError("all-ones witnesses are excluded (separate criterion clause)")
    cv = _witness_value(sanf, u0)
    violated = cv.valuation <= u0.bit_count() - n // 2
    return violated and cv.valuation == report.claimed_valuation


def _try_witness(sanf, rule, u0, k, claimed, detail, verify):
    """Build a NOT_BENT report, gated on numerical verification when feasible."""
    report = NonexistenceReport(sanf.n, rule, NOT_BENT, u0, k, claimed, detail)
    if verify:
        try:
            if not verify_witness(sanf, report):
                return None
        except CapacityError:
            pass  # out of verification reach: trust the structural argument
    return report


def _needs_degree3(sanf, rule):
    d = sanf.homogeneous_degree
    if d is None or d < 3:
        return NonexistenceReport(
            sanf.n, rule, INCONCLUSIVE, detail="rule needs homogeneous degree >= 3"
        )
    return None


def check_shift_chain(sanf, verify=True):
    """Chains of d1-shifted copies of u1 whose cover valuation is too small.

    For each chain length k (k*d < n, k*d1 <= n) and each block split of u1,
    the rule requires that no representative's orbit contains a gap variant
    of the split blocks (u1 itself is exempt from its gap-0 pattern).  When
    the patterns are excluded and k(d-1) >= n/2, the chain u0 has claimed
    valuation k, which breaks the bent criterion.
    """
    pre = _prelim(sanf)
    if pre:
        return pre
    bad = _needs_degree3(sanf, "shift-chain")
    if bad:
        return bad
    n, d = sanf.n, sanf.homogeneous_degree
    prof = profile(sanf)
    d1, u1 = prof.d1, prof.u1
    splits = _valid_splits(u1, d1)
    if not splits:
        return NonexistenceReport(
            n, "shift-chain", INCONCLUSIVE, detail="u1 admits no two-block split"
        )
    orbs = [set(orbit_masks(r, n)) for r in sanf.reps]
    k = 1
    while k * d < n and k * d1 <= n:
        if k * (d - 1) < n // 2:
            k += 1
            continue
        for l in splits:
            a, b = u1 & ((1 << l) - 1), u1 >> l
            excluded = False
            for rep, orb in zip(sanf.reps, orbs):
                # gap patterns keep a trailing empty position; the fully
                # wrapped arrangement is the second family's job (and at
                # g = n - d1 a contiguous u1 would always self-match)
                g_lo = 1 if rep == u1 else 0
                for g in range(g_lo, n - d1):
                    if a | (b << (l + g)) in orb:
                        excluded = True
                        break
                if excluded:
                    break
                if b | (a << (d1 - l + n - k * d1)) in orb:
                    excluded = True
                    break
            if excluded:
                continue
            u0 = 0
            for j in range(k):
                u0 |= rotate(u1, j * d1, n)
            report = _try_witness(
                sanf,
                "shift-chain",
                u0,
                k,
                k,
                f"k={k} l={l} d1={d1} chain of {format_monomial(u1)}",
                verify,
            )
            if report:
                return report
        k += 1
    return NonexistenceReport(
        n, "shift-chain", INCONCLUSIVE, detail="no chain instantiation fires"
    )


def check_leading_block(sanf, verify=True):
    """SANF containing x1...xd with every other orbit at least three-block.

    The chain witness depends on how d divides n; the n = 2d case uses the
    overlapping two-chain u1 OR rho^(d-1)(u1) covering all but one position.
    """
    pre = _prelim(sanf)
    if pre:
        return pre
    bad = _needs_degree3(sanf, "leading-block")
    if bad:
        return bad
    n, d = sanf.n, sanf.homogeneous_degree
    block = (1 << d) - 1
    if block not in sanf.reps:
        return NonexistenceReport(
            n, "leading-block", INCONCLUSIVE, detail="no contiguous leading block"
        )
    for r in sanf.reps:
        if r != block and cyclic_run_count(r, n) <= 2:
            return NonexistenceReport(
                n,
                "leading-block",
                INCONCLUSIVE,
                detail=f"{format_monomial(r)} is two-block shaped",
            )
    q, rem = divmod(n, d)
    if rem:
        k, u0 = q, _block_chain(block, d, q, n)
    elif q == 2:
        k, u0 = 2, block | rotate(block, d - 1, n)
    else:
        k, u0 = q - 1, _block_chain(block, d, q - 1, n)
    report = _try_witness(
        sanf, "leading-block", u0, k, k, f"k={k} chain of {format_monomial(block)}", verify
    )
    if report:
        return report
    return NonexistenceReport(
        n, "leading-block", INCONCLUSIVE, detail="witness did not verify"
    )


def _block_chain(u1, step, k, n):
    u0 = 0
    for j in range(k):
        u0 |= rotate(u1, j * step, n)
    return u0


def check_block_pair(sanf, verify=True):
    """The exact pair x1...xd + x1...x(d-1)x(d+1), d >= 3: never bent.

    The chain witness fires for most n; for the two small escapes (d=3 with
    n = 6 or 10) the valuation bound is not violated and the rule falls back
    to a direct spectral check, still returning NOT_BENT but without witness
    fields.
    """
    pre = _prelim(sanf)
    if pre:
        return pre
    bad = _needs_degree3(sanf, "block-pair")
    if bad:
        return bad
    n, d = sanf.n, sanf.homogeneous_degree
    block = (1 << d) - 1
    pair = ((1 << (d - 1)) - 1) | (1 << d)
    if set(sanf.reps) != {block, pair}:
        return NonexistenceReport(
            n, "block-pair", INCONCLUSIVE, detail="SANF is not the block/pair shape"
        )
    q, rem = divmod(n, d)
    if rem not in (0, 1):
        k, u0 = q, _block_chain(block, d, q, n)
    elif rem == 0 and q == 2:
        k, u0 = 2, block | rotate(block, d - 2, n)
    else:  # rem == 0 with q >= 3, or rem == 1 (q >= 3: q = 2 would make n odd)
        k, u0 = q - 1, _block_chain(block, d, q - 1, n)
    report = _try_witness(
        sanf, "block-pair", u0, k, k, f"k={k} chain of {format_monomial(block)}", verify
    )
    if report:
        return report
    if n <= _DIRECT_N_MAX:
        from .rotsym import sanf_truth_table

        if not is_bent(sanf_truth_table(sanf)):
            return NonexistenceReport(
                n,
                "block-pair",
                NOT_BENT,
                detail="direct spectral verification (chain witness does not violate "
                "the valuation bound at these parameters)",
            )
        return NonexistenceReport(  # unreachable for this shape; stay sound anyway
            n, "block-pair", INCONCLUSIVE, detail="function tested bent"
        )
    return NonexistenceReport(
        n, "block-pair", INCONCLUSIVE, detail="witness did not verify"
    )


def sparse_triple_params(sanf):
    """Decomposition n = q*(span+n0) + r + n1 + 1 for a single degree-3 orbit.

    Returns None when the SANF is not a single weight-3 representative or the
    decomposition has q < 1.
    """
    if len(sanf.reps) != 1 or sanf.reps[0].bit_count() != 3:
        return None
    u1 = sanf.reps[0]
    pos = [j + 1 for j in range(u1.bit_length()) if (u1 >> j) & 1]
    n1, n2 = pos[1] - pos[0] - 1, pos[2] - pos[1] - 1
    span = pos[2]
    n0 = max(n1, n2)
    q, r = divmod(sanf.n - n1 - 1, span + n0)
    if q < 1:
        return None
    return SparseTripleParams(n1, n2, n0, span, q, r)


def check_sparse_triple(sanf, verify=True):
    """Single degree-3 orbit x1 x(2+n1) x(3+n1+n2) with a firing decomposition.

    Fires when q*(span - n0 - 1) >= r + n1 + 1; the witness chains q copies
    of the filled window u2 (the OR of n0+1 consecutive rotations of u1) and
    claims valuation q*(n0+1).
    """
    pre = _prelim(sanf)
    if pre:
        return pre
    n = sanf.n
    params = sparse_triple_params(sanf)
    if params is None:
        return NonexistenceReport(
            n,
            "sparse-triple",
            INCONCLUSIVE,
            detail="needs a single weight-3 representative with q >= 1",
        )
    n1, n0, span, q, r = params.n1, params.n0, params.span, params.q, params.r
    if q * (span - n0 - 1) < r + n1 + 1:
        return NonexistenceReport(
            n,
            "sparse-triple",
            INCONCLUSIVE,
            detail=f"bound not met: q(span-n0-1)={q * (span - n0 - 1)} < "
            f"r+n1+1={r + n1 + 1} with {params}",
        )
    u1 = sanf.reps[0]
    u2 = 0
    for i in range(n0 + 1):
        u2 |= rotate(u1, i, n)
    u0 = _block_chain(u2, span + n0, q, n)
    report = _try_witness(
        sanf,
        "sparse-triple",
        u0,
        q,
        q * (n0 + 1),
        f"{params} window u2={mask_to_bits(u2, n)}",
        verify,
    )
    if report:
        return report
    return NonexistenceReport(
        n, "sparse-triple", INCONCLUSIVE, detail=f"witness did not verify with {params}"
    )


def check_gap_bounds(sanf):
    """Earlier nonexistence bounds driven by the largest index gap.

    Three conditions, tried in order on a homogeneous SANF of degree d >= 3
    (n >= 4): (i) the SANF is exactly x1...xd; (ii) it is exactly the
    block/pair shape with the side condition (n-2)/4 > floor(n/d) (for
    n = 1 mod d the bound sharpens to n/4, which only separates at inputs
    the degree bound already removes); (iii) the max index gap satisfies
    gap < (n/2-1)/floor(n/d).  No witnesses: these bounds come from a
    different argument than the valuation rules.
    """
    pre = _prelim(sanf)
    if pre:
        return pre
    bad = _needs_degree3(sanf, "gap-bounds")
    if bad:
        return bad
    n, d = sanf.n, sanf.homogeneous_degree
    if n < 4:
        return NonexistenceReport(
            n, "gap-bounds", INCONCLUSIVE, detail="bounds stated for n >= 4"
        )
    floor_nd = n // d
    block = (1 << d) - 1
    pair = ((1 << (d - 1)) - 1) | (1 << d)
    notes = []

    if sanf.reps == (block,):
        return NonexistenceReport(
            n, "gap-bounds(i)", NOT_BENT, detail="single contiguous block"
        )
    notes.append("(i) shape no")

    if set(sanf.reps) == {block, pair}:
        side = n > 4 * floor_nd if n % d == 1 else n - 2 > 4 * floor_nd
        text = (
            f"side condition (n-2)/4 > floor(n/d) evaluates "
            f"{(n - 2) / 4:g} > {floor_nd}, {'true' if side else 'false'}"
        )
        if side:
            return NonexistenceReport(
                n, "gap-bounds(ii)", NOT_BENT, detail=f"block/pair shape, {text}"
            )
        notes.append(f"(ii) {text}")
    else:
        notes.append("(ii) shape no")

    gap = max_index_gap(sanf)
    if 2 * gap * floor_nd < n - 2:
        return NonexistenceReport(
            n,
            "gap-bounds(iii)",
            NOT_BENT,
            detail=f"max gap {gap} < (n/2-1)/floor(n/d) = {n // 2 - 1}/{floor_nd}",
        )
    notes.append(f"(iii) gap {gap} not below {n // 2 - 1}/{floor_nd}")
    return NonexistenceReport(n, "gap-bounds", INCONCLUSIVE, detail="; ".join(notes))


RULES = (
    ("shift-chain", check_shift_chain),
    ("leading-block", check_leading_block),
    ("block-pair", check_block_pair),
    ("sparse-triple", check_sparse_triple),
    ("gap-bounds", lambda sanf, verify=True: check_gap_bounds(sanf)),
)


def all_checks(sanf, verify=True):
    """Run every rule; returns a list of (rule name, report) in fixed order."""
    return [(name, fn(sanf, verify=verify)) for name, fn in RULES]
