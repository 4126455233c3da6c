"""Case analysis for properly-semistable classes: bounded lattice
searches for isotropic pairing-one destabilizers and spherical classes,
a decision tree over aligned decompositions, and the A2 pattern test.

The decisive search — "is there an isotropic w1 with <v, w1> = 1 whose
charge aligns with v at p?" — is solved analytically, not by box scan:
the pairing and alignment constraints are two linear equations cutting a
rational line in (r1, d1, a1)-space, and the isotropy quadratic along
that line has at most two rational roots, extracted by exact square
testing of the discriminant.  A box scan survives only as the fallback
for degenerate lines (and as a test oracle), because a box can witness
presence but never certify absence.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from itertools import combinations

from .errors import (BoundOverflow, NonIntegral, NonPositiveSquare,
                     NotAligned, NotK3, NotPrimitive, UniquenessViolation,
                     ZeroCharge, ZeroDegree)
from .lattice import MukaiVector, Surface, d_beta, mukai_pairing, mukai_square
from .stability import StabilityParam, central_charge, reduced_sigma

_BOX_CAP = 5 * 10 ** 6  # hard ceiling on fallback box-scan volume


def _pairing_normal(v: MukaiVector, S: Surface):
    """<v, w> as a linear functional of w = (r, d, a)."""
    return (-v.a, S.h2 * v.d, -v.r)


def _alignment_normal(v: MukaiVector, p: StabilityParam, S: Surface):
    """rho(w, v) at p as a linear functional of w = (r, d, a)."""
    half = Fraction(S.h2, 2)
    q = p.t2 + p.s * p.s
    return (half * v.d * q - v.a * p.s,
            -half * v.r * q + v.a,
            v.r * p.s - v.d)


def _cross(n1, n2):
    return (n1[1] * n2[2] - n1[2] * n2[1],
            n1[2] * n2[0] - n1[0] * n2[2],
            n1[0] * n2[1] - n1[1] * n2[0])


def _solve_two_planes(n1, c1, n2, c2):
    """One rational solution of n1.w = c1, n2.w = c2 plus the primitive
    integer kernel direction, or None when the normals are parallel (the
    system is then a degenerate line/empty set)."""
    k = _cross(n1, n2)
    if k == (0, 0, 0):
        return None
    # a 2x2 minor is invertible iff some cross entry is nonzero; that
    # entry names the coordinate NOT involved in the minor
    for fixed in (2, 1, 0):
        if k[fixed] == 0:
            continue
        i, j = [t for t in (0, 1, 2) if t != fixed]
        det = n1[i] * n2[j] - n1[j] * n2[i]
        assert det != 0
        wi = (c1 * n2[j] - c2 * n1[j]) / det
        wj = (n1[i] * c2 - n2[i] * c1) / det
        w0 = [Fraction(0)] * 3
        w0[i], w0[j] = wi, wj
        # clear denominators of k and make it primitive integral
        den = 1
        for x in k:
            den *= Fraction(x).denominator
        kv = [Fraction(x) * den for x in k]
        g = gcd(gcd(int(kv[0]), int(kv[1])), int(kv[2]))
        kv = tuple(int(x) // g for x in kv)
        return tuple(w0), kv
    return None


def _fraction_sqrt(x: Fraction):
    """Exact square root of a nonnegative rational, or None."""
    if x < 0:
        return None
    rn, rd = isqrt(x.numerator), isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def _isotropic_roots_on_line(w0, k, S: Surface):
    """Rational tau with <(w0 + tau*k)^2> = 0; None when the whole line
    is isotropic (degenerate for root extraction)."""
    W0 = MukaiVector(*w0)
    K = MukaiVector(*k)
    a = mukai_square(K, S)
    b = 2 * mukai_pairing(W0, K, S)
    c = mukai_square(W0, S)
    if a == 0:
        if b == 0:
            return None if c == 0 else []
        return [-c / b]
    disc = b * b - 4 * a * c
    root = _fraction_sqrt(disc)
    if root is None:
        return []
    if root == 0:
        return [-b / (2 * a)]
    return [(-b - root) / (2 * a), (-b + root) / (2 * a)]


def _ipo_constraints_hold(w, v, p, S) -> bool:
    return (w.is_integral() and w.is_primitive()
            and mukai_square(w, S) == 0
            and mukai_pairing(v, w, S) == 1
            and reduced_sigma(w, v, p, S) == 0
            and d_beta(w, p.s, S) > 0)


def _ipo_line_search(v, p, S):
    """All integral isotropic w with <v,w> = 1 aligned with v at p and
    d_beta(w) > 0, found via the line parametrization.  Returns
    (witnesses, complete); complete=False means the line was degenerate
    and nothing can be certified from here."""
    n1, n2 = _pairing_normal(v, S), _alignment_normal(v, p, S)
    sol = _solve_two_planes(n1, Fraction(1), n2, Fraction(0))
    if sol is None:
        return [], False
    w0, k = sol
    taus = _isotropic_roots_on_line(w0, k, S)
    if taus is None:
        return [], False
    out = []
    for tau in taus:
        w = MukaiVector(w0[0] + tau * k[0], w0[1] + tau * k[1],
                        w0[2] + tau * k[2])
        if _ipo_constraints_hold(w, v, p, S):
            out.append(w)
    out.sort(key=lambda u: u.as_tuple())
    return out, True


def _ipo_box_search(v, p, S, bound):
    if (2 * bound + 1) ** 3 > _BOX_CAP:
        raise BoundOverflow(f"box scan of bound {bound} exceeds {_BOX_CAP} points")
    out = []
    rng = range(-bound, bound + 1)
    for r in rng:
        for d in rng:
            for a in rng:
                w = MukaiVector(r, d, a)
                if not w.is_zero() and _ipo_constraints_hold(w, v, p, S):
                    out.append(w)
    out.sort(key=lambda u: u.as_tuple())
    return out


def find_isotropic_pairing_one(v: MukaiVector, p: StabilityParam, S: Surface,
                               bound: int) -> list:
    """All integral primitive isotropic w1 with entries bounded by
    ``bound``, <v, w1> = 1, aligned with v at p, of positive twisted
    degree.  The line method makes this complete; the box bound only
    truncates the output."""
    if not v.is_integral():
        raise NonIntegral(f"search needs an integral v, got {v}")
    if central_charge(v, p, S).is_zero():
        raise ZeroCharge(f"Z({v}) = 0 at s={p.s}, t2={p.t2}")
    if bound <= 0:
        return []
    found, complete = _ipo_line_search(v, p, S)
    if not complete:
        found = _ipo_box_search(v, p, S, bound)
    return [w for w in found if max(abs(w.r), abs(w.d), abs(w.a)) <= bound]


def find_minus_two_aligned(p: StabilityParam, S: Surface, bound: int,
                           reference: MukaiVector) -> list:
    """All integral v with entries bounded by ``bound``, <v^2> = -2,
    d_beta(v) > 0, aligned with the reference class at p.  K3 only:
    a sheaf class on an abelian surface never has square -2.  At most
    one class can qualify; more than one signals an implementation bug
    (UniquenessViolation)."""
    if S.kind != "k3":
        raise NotK3("square -2 classes need a K3 surface")
    if central_charge(reference, p, S).is_zero():
        raise ZeroCharge(f"Z({reference}) = 0 at s={p.s}, t2={p.t2}")
    if (2 * bound + 1) ** 3 > _BOX_CAP:
        raise BoundOverflow(f"box scan of bound {bound} exceeds {_BOX_CAP} points")
    out = []
    rng = range(-bound, bound + 1)
    for r in rng:
        for d in rng:
            for a in rng:
                w = MukaiVector(r, d, a)
                if (mukai_square(w, S) == -2
                        and d_beta(w, p.s, S) > 0
                        and reduced_sigma(w, reference, p, S) == 0):
                    out.append(w)
    if len(out) > 1:
        raise UniquenessViolation(
            f"{len(out)} aligned square--2 classes found: {[str(w) for w in out]}")
    return out


# ---------------------------------------------------------------------------
# decomposition decision tree

STABLE_PAIR = "StablePairExists"
EXC_ISOTROPIC = "ExceptionalIsotropicPairingOne"
EXC_TRIPLE = "ExceptionalTriple"
EXC_RANK_TWO = "ExceptionalRankTwoCase"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class DecompositionReport:
    verdict: str
    witnesses: tuple = ()
    bound: int = None
    certified: bool = True


def _check_parts(parts, p, S):
    if not parts:
        raise NotAligned("empty decomposition")
    vecs = []
    for n, vi in parts:
        if not (isinstance(n, int) and n >= 1):
            raise NonIntegral(f"multiplicity must be a positive integer, got {n!r}")
        if not vi.is_integral():
            raise NonIntegral(f"part {vi} is not integral")
        if not vi.is_primitive():
            raise NotPrimitive(f"part {vi} has content {vi.content()}")
        vecs.append(vi)
    tuples = [v.as_tuple() for v in vecs]
    if len(set(tuples)) != len(tuples):
        raise NotAligned("parts must be pairwise distinct classes")
    for x, y in combinations(vecs, 2):
        if reduced_sigma(x, y, p, S) != 0:
            raise NotAligned(f"rho({x}, {y}) = {reduced_sigma(x, y, p, S)} != 0 "
                             f"at s={p.s}, t2={p.t2}")


def a2_pattern(parts, S: Surface) -> bool:
    """The numerical A2 pattern on the bare Gram data: exactly three
    parts, multiplicity one each, every class isotropic, every cross
    pairing equal to 1.  (The total class then has square 6.)

    This is a pure lattice predicate with no stability point involved.
    Note that three pairwise-distinct classes matching the pattern are
    linearly independent (the Gram matrix [[0,1,1],[1,0,1],[1,1,0]] is
    nonsingular), so they can never be simultaneously phase-aligned at
    a single (s, t) point: classes aligned with a nonzero charge span
    at most a 2-dimensional subspace, and classes of zero charge at a
    fixed point span at most a line.  detect_a2 therefore reports the
    pattern only through this predicate, after its alignment check has
    rejected any configuration that pretends to be simultaneous.
    """
    if len(parts) != 3 or any(n != 1 for n, _ in parts):
        return False
    vecs = [vi for _, vi in parts]
    if any(mukai_square(vi, S) != 0 for vi in vecs):
        return False
    return all(mukai_pairing(x, y, S) == 1 for x, y in combinations(vecs, 2))


def classify_decomposition(parts, p: StabilityParam, S: Surface,
                           bound: int = 20) -> DecompositionReport:
    """Decide what a decomposition v = sum n_i v_i into pairwise
    distinct, pairwise aligned classes implies at p.

    s = sum n_i >= 4 always leaves room for a stable pair; s = 3 does
    too except for the A2 pattern (three mutually pairing-one isotropic
    classes, where <v^2> = 6); s = 2 has two exceptional shapes: the
    structural rank-two case (two isotropic classes pairing to 1) and
    the hidden one where some isotropic w1 with <v, w1> = 1 aligns with
    v — searched for analytically, so absence is certified when the
    search line is nondegenerate and Inconclusive(bound) is returned
    only in the degenerate fallback.  s = 1 says nothing numerically.
    """
    _check_parts(parts, p, S)
    s_total = sum(n for n, _ in parts)
    vecs = [vi for _, vi in parts]
    if s_total >= 4:
        return DecompositionReport(STABLE_PAIR)
    if s_total == 3:
        if a2_pattern(parts, S):
            return DecompositionReport(EXC_TRIPLE, witnesses=tuple(vecs))
        return DecompositionReport(STABLE_PAIR)
    if s_total == 2:
        if (len(parts) == 2
                and all(mukai_square(vi, S) == 0 for vi in vecs)
                and mukai_pairing(vecs[0], vecs[1], S) == 1):
            return DecompositionReport(EXC_RANK_TWO, witnesses=tuple(vecs))
        v = MukaiVector(0, 0, 0)
        for n, vi in parts:
            v = v + n * vi
        found, complete = _ipo_line_search(v, p, S)
        if found:
            return DecompositionReport(EXC_ISOTROPIC, witnesses=(found[0],))
        if complete:
            return DecompositionReport(STABLE_PAIR)
        found = _ipo_box_search(v, p, S, bound)
        if found:
            return DecompositionReport(EXC_ISOTROPIC, witnesses=(found[0],))
        return DecompositionReport(INCONCLUSIVE, bound=bound, certified=False)
    # a single class: stability of one object is not a lattice question
    return DecompositionReport(INCONCLUSIVE, bound=bound, certified=False)


@dataclass(frozen=True)
class StableExistenceReport:
    verdict: str  # "Yes" | "ExceptionalWitness" | "Inconclusive"
    witness: MukaiVector = None
    certified: bool = True
    bound: int = None


def stable_existence(v: MukaiVector, p: StabilityParam, S: Surface,
                     bound: int = 20) -> StableExistenceReport:
    """Can a stable object of class v exist at p, as far as the lattice
    can tell?  "Yes" is certified by the complete line search finding no
    isotropic pairing-one class aligned at p; a witness is reported
    otherwise; Inconclusive happens only on degenerate search lines."""
    if not v.is_integral():
        raise NonIntegral(f"needs an integral v, got {v}")
    if mukai_square(v, S) <= 0:
        raise NonPositiveSquare(f"<v^2> = {mukai_square(v, S)} <= 0 for {v}")
    if d_beta(v, p.s, S) <= 0:
        raise ZeroDegree(f"d_beta({v}) = {d_beta(v, p.s, S)} <= 0 at s = {p.s}")
    found, complete = _ipo_line_search(v, p, S)
    if found:
        return StableExistenceReport("ExceptionalWitness", witness=found[0])
    if complete:
        return StableExistenceReport("Yes")
    found = _ipo_box_search(v, p, S, bound)
    if found:
        return StableExistenceReport("ExceptionalWitness", witness=found[0])
    return StableExistenceReport(INCONCLUSIVE, certified=False, bound=bound)


def detect_a2(parts, p: StabilityParam, S: Surface) -> bool:
    """True exactly on the A2 pattern among decompositions that pass the
    alignment check at p.  See a2_pattern for why the strict combination
    (independent pattern classes + simultaneous alignment at one point)
    is empty: this wrapper exists for contract symmetry with
    classify_decomposition and rejects non-aligned parts the same way."""
    _check_parts(parts, p, S)
    return a2_pattern(parts, S)
