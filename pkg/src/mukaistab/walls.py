"""Wall loci, the numerical wall criterion, bounded complete enumeration
of walls, chambers on a vertical ray, side classification, and the
category walls of K3 surfaces.

In the (s, t) upper half-plane the locus where the charges of v1 and v
align is rho(v1, v) = A*(t^2 + s^2) + C*s + D = 0: a circle centered on
the s-axis (A != 0, positive radius^2), a vertical line (A = 0, C != 0),
empty, or everything.  All geometry questions asked here (does a circle
arc meet a box intersected with a half-plane?) are decided exactly over
the rationals: for a circle the substitution u = (s - c)^2 turns
"t^2 in [t2_min, t2_max]" into a rational window for u, and the attained
range of u over an s-interval is computed endpoint-wise, so no square
root is ever taken.  The few comparisons against c +- sqrt(R2) that
remain are done by sign bookkeeping and squaring.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd, isqrt

from .errors import (BoundOverflow, NonIntegral, NonPositiveSquare, NotK3,
                     NotPrimitive, ZeroCharge, ZeroDegree)
from .lattice import (MukaiVector, Surface, d_beta, d_beta_min, mukai_pairing,
                      mukai_square, rat)
from .stability import (StabilityParam, phase_key, reduced_sigma,
                        sigma_coefficients, central_charge)


# ---------------------------------------------------------------------------
# geometry types

@dataclass(frozen=True)
class Circle:
    center_s: Fraction
    radius_sq: Fraction


@dataclass(frozen=True)
class VerticalLine:
    s: Fraction


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Everywhere:
    pass


@dataclass(frozen=True)
class Region:
    """A compact box [s_min, s_max] x [t2_min, t2_max] with t2_min > 0.
    The large-volume boundary t^2 = 0 is excluded by construction, which
    is what makes wall enumeration finite."""

    s_min: Fraction
    s_max: Fraction
    t2_min: Fraction
    t2_max: Fraction

    def __post_init__(self):
        for f in ("s_min", "s_max", "t2_min", "t2_max"):
            object.__setattr__(self, f, rat(getattr(self, f)))
        if self.s_min > self.s_max:
            raise ValueError("s_min > s_max")
        if not (0 < self.t2_min <= self.t2_max):
            raise ValueError("need 0 < t2_min <= t2_max")


@dataclass(frozen=True)
class Wall:
    """A wall with its defining coefficients, classified geometry and one
    representative class v1.  Identity is the projective class (A:C:D):
    many v1 cut the same locus, so walls are deduplicated by the
    normalized coefficient triple."""

    A: Fraction
    C: Fraction
    D: Fraction
    geometry: object
    v1: MukaiVector = None

    def acd_key(self):
        return _normalize_acd(self.A, self.C, self.D)


def _normalize_acd(A, C, D):
    """Projective normalization of an integer (A, C, D) triple: divide by
    the gcd and make the first nonzero entry positive."""
    ints = []
    for x in (A, C, D):
        x = rat(x)
        assert x.denominator == 1, "wall coefficients of integral classes are integers"
        ints.append(int(x))
    g = gcd(gcd(abs(ints[0]), abs(ints[1])), abs(ints[2]))
    if g == 0:
        return (0, 0, 0)
    ints = [x // g for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return tuple(ints)


def wall_locus(v1: MukaiVector, v: MukaiVector, S: Surface) -> Wall:
    """Classify {(s,t): t > 0, rho(v1, v) = 0}.

    A != 0 gives the circle (s + C/(2A))^2 + t^2 = C^2/(4A^2) - D/A; a
    nonpositive radius^2 means the locus misses t > 0 entirely (radius 0
    would be a single point on the axis).  A = 0, C != 0 is the vertical
    line s = -D/C; A = C = 0 is empty or everything according to D.
    """
    assert not v.is_zero() and not v1.is_zero(), "wall_locus needs nonzero classes"
    A, C, D = sigma_coefficients(v1, v, S)
    if A != 0:
        center = -C / (2 * A)
        radius_sq = C * C / (4 * A * A) - D / A
        geom = Circle(center, radius_sq) if radius_sq > 0 else Empty()
    elif C != 0:
        geom = VerticalLine(-D / C)
    else:
        geom = Empty() if D != 0 else Everywhere()
    return Wall(A, C, D, geom, v1)


# ---------------------------------------------------------------------------
# exact one-radical comparisons and interval bookkeeping

def _lt_center_plus_root(x, c, R2) -> bool:
    """x < c + sqrt(R2), exactly (R2 > 0 rational)."""
    if x - c < 0:
        return True
    return (x - c) ** 2 < R2


def _gt_center_minus_root(x, c, R2) -> bool:
    """x > c - sqrt(R2), exactly."""
    if x - c > 0:
        return True
    return (x - c) ** 2 < R2


def _clip_degree_interval(v, S, s_lo, s_hi):
    """The set {s in [s_lo, s_hi] : d_beta(v)(s) > 0} as an interval with
    open-endpoint flags, or None when empty.  For r != 0 the boundary
    d/r is an open endpoint (the degree vanishes exactly there)."""
    r, d = v.r, v.d
    lo, hi = rat(s_lo), rat(s_hi)
    lo_open = hi_open = False
    if r == 0:
        if d <= 0:
            return None
    elif r > 0:
        # d - r*s > 0  <=>  s < d/r
        cut = d / r
        if cut <= lo:
            return None
        if cut <= hi:
            hi, hi_open = cut, True
    else:
        cut = d / r
        if cut >= hi:
            return None
        if cut >= lo:
            lo, lo_open = cut, True
    if lo > hi or (lo == hi and (lo_open or hi_open)):
        return None
    return lo, hi, lo_open, hi_open


def _sq_dist_range(lo, hi, lo_open, hi_open, c):
    """Range of (s - c)^2 over the interval, as (min, max, min_attained,
    max_attained).  The minimum is 0 when c lies in the closure; the
    maximum sits at the endpoint farther from c."""
    dlo, dhi = (lo - c) ** 2, (hi - c) ** 2
    if lo <= c <= hi:
        m = Fraction(0)
        m_att = (lo < c < hi) or (c == lo and not lo_open) or (c == hi and not hi_open)
    elif c < lo:
        m, m_att = dlo, not lo_open
    else:
        m, m_att = dhi, not hi_open
    if dlo > dhi:
        M, M_att = dlo, not lo_open
    elif dhi > dlo:
        M, M_att = dhi, not hi_open
    else:
        M, M_att = dlo, (not lo_open) or (not hi_open)
    return m, M, m_att, M_att


def _ranges_meet(m, M, m_att, M_att, l, u) -> bool:
    """Does the attained interval (possibly open at its min/max) meet the
    closed window [l, u]?  The attained set contains all of (m, M)."""
    if m > u or M < l:
        return False
    L, U = max(m, l), min(M, u)
    if L < U:
        return True
    # single candidate value L == U; it must actually be attained
    y = L
    if m < y < M:
        return True
    return (y == m and m_att) or (y == M and M_att)


def _circle_meets_region_positive_degree(c, R2, v, S, reg: Region) -> bool:
    """Does the circle carry a point with s in [s_min, s_max], t^2 in
    [t2_min, t2_max] and d_beta(v) > 0?  Exact: u = (s-c)^2 must land in
    [max(R2 - t2_max, 0), R2 - t2_min] for some s in the degree-clipped
    interval."""
    u_hi = R2 - reg.t2_min
    if u_hi < 0:
        return False
    u_lo = max(R2 - reg.t2_max, Fraction(0))
    J = _clip_degree_interval(v, S, reg.s_min, reg.s_max)
    if J is None:
        return False
    m, M, m_att, M_att = _sq_dist_range(*J, c)
    return _ranges_meet(m, M, m_att, M_att, u_lo, u_hi)


def _circle_meets_positive_degree(c, R2, v) -> bool:
    """Does the open arc {(s, t): (s-c)^2 + t^2 = R2, t > 0} contain a
    point with d_beta(v) > 0?  Unbounded version used by the wall
    criterion: the arc spans s in (c - R, c + R) openly."""
    r, d = v.r, v.d
    if r == 0:
        return d > 0
    cut = d / r
    if r > 0:  # need some s < cut in the open span
        return _gt_center_minus_root(cut, c, R2)
    return _lt_center_plus_root(cut, c, R2)


# ---------------------------------------------------------------------------
# the wall criterion

@dataclass(frozen=True)
class WallVectorReport:
    """Verdict of the numerical wall criterion for v1 against v.

    For an abelian surface ``is_wall`` is an honest iff at Picard rank 1:
    the classical numeric conditions (both squares >= 0, cross pairing
    > 0, v1 not proportional to v) AND the locus being a circle that
    meets the positive-degree half-plane {d_beta(v) > 0}.  The second
    clause is not redundant: rank-one degenerations exist where the
    numeric conditions hold but the locus is empty (both squares 2 and
    pairing 1 against a square-6 class) or collapses onto the vertical
    line s = d/r where the degree of v vanishes identically.  On any
    qualifying circle the positivity of twisted degrees forces both
    sub-charges into the upper half-plane, so a genuine wall point
    exists; ``details`` exposes the raw flags so callers can tell the
    two failure modes apart.

    For a K3 surface the verdict is only a necessary numerical test
    (conditions (a)-(c) at the twist ``s``, with the spherical shift
    epsilon = 1 and the minimal degree of the twist's denominator);
    ``necessary_only`` is set accordingly.
    """

    kind: str
    is_wall: bool
    necessary_only: bool
    details: dict

    def __bool__(self) -> bool:
        return self.is_wall


def is_wall_vector(v1: MukaiVector, v: MukaiVector, S: Surface,
                   s=Fraction(0)) -> WallVectorReport:
    """Numerical wall criterion; see WallVectorReport for semantics.
    ``s`` only matters on K3, where conditions (b)-(c) genuinely depend
    on the twist through the minimal positive degree 1/den(s)."""
    if not (v.is_integral() and v1.is_integral()):
        raise NonIntegral(f"criterion needs integral classes, got {v1}, {v}")
    q = mukai_square(v, S)
    if q <= 0:
        raise NonPositiveSquare(f"<v^2> = {q} <= 0 for v = {v}")
    v2 = v - v1
    q1 = mukai_square(v1, S)
    q2 = mukai_square(v2, S)
    p12 = mukai_pairing(v1, v2, S)
    proportional = (v1.r * v.d - v.r * v1.d == 0 and
                    v1.r * v.a - v.r * v1.a == 0 and
                    v1.d * v.a - v.d * v1.a == 0)
    if S.kind == "abelian":
        numeric = (q1 >= 0 and q2 >= 0 and p12 > 0 and not proportional)
        meets = False
        if numeric:
            w = wall_locus(v1, v, S)
            meets = (isinstance(w.geometry, Circle) and
                     _circle_meets_positive_degree(
                         w.geometry.center_s, w.geometry.radius_sq, v))
        return WallVectorReport(
            kind="abelian",
            is_wall=numeric and meets,
            necessary_only=False,
            details={"square_v1": q1, "square_v2": q2, "pairing": p12,
                     "proportional": proportional, "numeric": numeric,
                     "locus_meets_positive_degree": meets})
    # K3: conditions (a)-(c) at the twist s, epsilon = 1
    s = rat(s)
    d1 = d_beta(v1, s, S)
    d = d_beta(v, s, S)
    dmin = d_beta_min(s, S)
    cond_a = 0 < d1 < d
    cond_b = q1 < (d1 / d) * q + 2 * d * d1 / dmin ** 2 if d != 0 else False
    cond_c = q1 >= -2 * d1 * d1 / dmin ** 2
    ok = cond_a and cond_b and cond_c and not proportional
    return WallVectorReport(
        kind="k3",
        is_wall=ok,
        necessary_only=True,
        details={"square_v1": q1, "square_v2": q2, "pairing": p12,
                 "proportional": proportional, "s": s, "d_beta_min": dmin,
                 "a": cond_a, "b": cond_b, "c": cond_c})


# ---------------------------------------------------------------------------
# enumeration

def _ceil_sqrt(x: Fraction) -> int:
    """Smallest nonnegative integer n with n^2 >= x."""
    if x <= 0:
        return 0
    t = -(-x.numerator // x.denominator)  # ceil(x) as int
    n = isqrt(t)
    return n if n * n >= x else n + 1


def enumerate_walls(v: MukaiVector, S: Surface, reg: Region,
                    cap: int = 10 ** 6):
    """Complete list of distinct wall loci for v meeting reg at a point
    where d_beta(v) > 0, deduplicated by the projective (A:C:D) class;
    each wall carries the representative v1 minimizing (|<v1^2>|,
    (r1, d1, a1) lexicographically).

    Finiteness (the bound chain, abelian; K3 uses the shifted windows
    noted inline).  Write q = <v^2>, m = r1*d - r*d1, q1 = <v1^2>,
    q2 = <(v-v1)^2>, p = <v1, v> and let (s0, t0^2) be a wall point in
    reg with d_beta(v)(s0) > 0.  At such a point both twisted degrees
    x1 = d_beta(v1), x2 = d_beta(v - v1) are strictly positive
    (positivity of degrees on a qualifying wall), and t0^2 >= t2_min.

    1. Only circles occur: a vertical locus for v1 against v sits at
       s = -D/C which for m = 0 collapses to s = d/r where d_beta(v)
       vanishes identically, so no vertical wall ever carries a
       positive-degree point; m = 0 candidates are skipped.
    2. radius^2 = (p^2 - q1*q)/(h2*m)^2 >= t0^2 >= t2_min and
       0 <= q1*q (abelian), p <= q - 1 give
       m^2 <= (q-1)^2/(h2^2 * t2_min).   [K3: q1 >= -2, p <= q + 1,
       so m^2 <= ((q+1)^2 + 2q)/(h2^2 * t2_min).]
    3. The twisted pairing identity
       p/(x1 X) = q1/(2 x1^2) + q/(2 X^2) + (h2 t^2/2)(r1/x1 - r/X)^2
       with X = d_beta(v)(s0) and 0 < x1 < X yields
       (r1 - r*x1/X)^2 <= 2(q-1)/(h2*t2_min)   [K3: 2(q+2)/(h2*t2_min)],
       hence |r1| <= |r| + ceil(sqrt(of that)).
    4. For each r1, the existence of s0 in the degree-clipped region
       interval J with 0 < d1 - r1*s0 and d1 - d < (r1 - r)*s0 bounds d1
       to an explicit integer interval from the endpoint values of J.
    5. For each (r1, d1): if r1 != 0 the window sq_lo <= q1 <= sq_hi
       (sq_lo = 0, sq_hi = q - 2 abelian; -2 and q on K3, from
       q = q1 + 2 p12 + q2 with p12 >= 1 and q2 >= sq_lo) confines
       a1 = (h2*d1^2 - q1)/(2 r1) to an integer interval; if r1 = 0 the
       same window applied to q2 does, using r != 0 (r = r1 = 0 forces
       m = 0, already skipped).

    Raises BoundOverflow when the candidate stream would exceed ``cap``.
    """
    if not v.is_integral():
        raise NonIntegral(f"enumeration needs an integral v, got {v}")
    if not v.is_primitive():
        raise NotPrimitive(f"enumeration needs a primitive v, got {v}")
    q = mukai_square(v, S)
    if q <= 0:
        raise NonPositiveSquare(f"<v^2> = {q} <= 0 for v = {v}")
    J = _clip_degree_interval(v, S, reg.s_min, reg.s_max)
    if J is None:
        raise ZeroDegree(f"d_beta({v}) is nowhere positive on s in "
                         f"[{reg.s_min}, {reg.s_max}]")
    lo, hi, _, _ = J
    h2 = S.h2
    if S.kind == "abelian":
        sq_lo, sq_hi = Fraction(0), q - 2
        m_sq_bound = (q - 1) ** 2 / (h2 * h2 * reg.t2_min)
        r1_spread = 2 * (q - 1) / (h2 * reg.t2_min)
    else:
        sq_lo, sq_hi = Fraction(-2), q
        m_sq_bound = ((q + 1) ** 2 + 2 * q) / (h2 * h2 * reg.t2_min)
        r1_spread = 2 * (q + 2) / (h2 * reg.t2_min)
    r1_max = abs(int(v.r)) + _ceil_sqrt(r1_spread)

    count = 0
    best = {}  # acd key -> (selection key, Wall)
    for r1 in range(-r1_max, r1_max + 1):
        # step 4: d1 > inf_J r1*s and d1 < d + sup_J (r1-r)*s
        d1_lo = min(r1 * lo, r1 * hi)
        d1_hi = v.d + max((r1 - v.r) * lo, (r1 - v.r) * hi)
        d1_first = floor(d1_lo) + 1
        d1_last = ceil(d1_hi) - 1 if d1_hi == ceil(d1_hi) else floor(d1_hi)
        for d1 in range(d1_first, d1_last + 1):
            m = r1 * v.d - v.r * d1
            if m == 0:
                continue  # step 1: verticals never qualify
            if m * m > m_sq_bound:
                continue  # step 2
            # step 5: a1 window
            if r1 != 0:
                b_lo = (h2 * d1 * d1 - sq_hi) / (2 * r1)
                b_hi = (h2 * d1 * d1 - sq_lo) / (2 * r1)
            else:
                # q2 = h2*(d-d1)^2 - 2*r*(a - a1) in [sq_lo, sq_hi]
                r_, dd = v.r, v.d - d1
                b_lo = v.a - (h2 * dd * dd - sq_lo) / (2 * r_)
                b_hi = v.a - (h2 * dd * dd - sq_hi) / (2 * r_)
            if b_lo > b_hi:
                b_lo, b_hi = b_hi, b_lo
            a_first, a_last = ceil(b_lo), floor(b_hi)
            count += max(0, a_last - a_first + 1)
            if count > cap:
                raise BoundOverflow(f"more than {cap} candidate classes for "
                                    f"v={v} over the requested region")
            for a1 in range(a_first, a_last + 1):
                v1 = MukaiVector(r1, d1, a1)
                if not _enumeration_filter(v1, v, S, sq_lo):
                    continue
                w = wall_locus(v1, v, S)
                if not isinstance(w.geometry, Circle):
                    continue
                if not _circle_meets_region_positive_degree(
                        w.geometry.center_s, w.geometry.radius_sq, v, S, reg):
                    continue
                key = w.acd_key()
                q1 = mukai_square(v1, S)
                sel = (abs(q1), (v1.r, v1.d, v1.a))
                if key not in best or sel < best[key][0]:
                    best[key] = (sel, w)
    walls = [w for _, w in best.values()]
    walls.sort(key=_wall_sort_key)
    return walls


def _enumeration_filter(v1, v, S, sq_lo) -> bool:
    """Arithmetic part of the wall test used inside enumeration: both
    squares in the admissible window and positive cross pairing, v1 not
    proportional to v.  On abelian surfaces this is the exact criterion;
    on K3 it is the completeness policy (squares >= -2 allow spherical
    parts) and the result list is necessary-only, like is_wall_vector."""
    v2 = v - v1
    if mukai_square(v1, S) < sq_lo or mukai_square(v2, S) < sq_lo:
        return False
    if mukai_pairing(v1, v2, S) <= 0:
        return False
    return not (v1.r * v.d - v.r * v1.d == 0 and
                v1.r * v.a - v.r * v1.a == 0 and
                v1.d * v.a - v.d * v1.a == 0)


def _wall_sort_key(w: Wall):
    g = w.geometry
    if isinstance(g, Circle):
        return (0, g.center_s, g.radius_sq, w.acd_key())
    if isinstance(g, VerticalLine):
        return (1, g.s, 0, w.acd_key())
    return (2, 0, 0, w.acd_key())


# ---------------------------------------------------------------------------
# chambers on a vertical ray

@dataclass(frozen=True)
class ChamberRay:
    """Wall crossings of the ray {s} x (t2 range): the sorted t^2 cut
    values and the open chambers between them."""

    s: Fraction
    cut_points: tuple
    chambers: tuple


def chambers_on_ray(v: MukaiVector, S: Surface, s, t2_range,
                    cut_category_walls: bool = False,
                    cap: int = 10 ** 6) -> ChamberRay:
    """Intersect every enumerated wall with the vertical ray at s.

    ``cut_category_walls`` additionally cuts at the K3 category walls for
    b = s (their stratification is separate from the stability walls, so
    mixing them is opt-in); on an abelian surface the flag raises NotK3
    through the category-wall computation, which has none to offer.
    """
    s = rat(s)
    t2_lo, t2_hi = rat(t2_range[0]), rat(t2_range[1])
    if d_beta(v, s, S) <= 0:
        raise ZeroDegree(f"d_beta({v}) = {d_beta(v, s, S)} at s = {s}; "
                         "the ray lies outside the positive-degree region")
    reg = Region(s, s, t2_lo, t2_hi)
    cuts = set()
    for w in enumerate_walls(v, S, reg, cap=cap):
        g = w.geometry
        assert isinstance(g, Circle)
        t2 = g.radius_sq - (s - g.center_s) ** 2
        if t2 > 0 and t2_lo <= t2 <= t2_hi:
            cuts.add(t2)
    if cut_category_walls:
        for cw in category_walls_k3(s, S, t2_hi):
            if t2_lo <= cw.t2 <= t2_hi:
                cuts.add(cw.t2)
    cut_points = tuple(sorted(cuts))
    bounds = [t2_lo] + list(cut_points) + [t2_hi]
    chambers = tuple((a, b) for a, b in zip(bounds, bounds[1:]) if a < b)
    return ChamberRay(s, cut_points, chambers)


# ---------------------------------------------------------------------------
# side classification

C_PLUS = "CPlus"
C_MINUS = "CMinus"
ON_WALL = "OnWall"


def wall_side(v: MukaiVector, w1: MukaiVector, p: StabilityParam,
              S: Surface) -> str:
    """Which side of the wall of w1 the point p lies on, for v.

    rho(w1, v) = 0 is the wall itself and takes precedence (anti-aligned
    charges also have rho = 0 while their phase keys differ); off the
    wall the verdict is CPlus exactly when phase_key(v) > phase_key(w1).
    """
    if central_charge(v, p, S).is_zero():
        raise ZeroCharge(f"Z({v}) = 0 at s={p.s}, t2={p.t2}")
    if central_charge(w1, p, S).is_zero():
        raise ZeroCharge(f"Z({w1}) = 0 at s={p.s}, t2={p.t2}")
    rho = reduced_sigma(w1, v, p, S)
    if rho == 0:
        return ON_WALL
    return C_PLUS if phase_key(v, p, S) > phase_key(w1, p, S) else C_MINUS


# ---------------------------------------------------------------------------
# category walls (K3 only)

@dataclass(frozen=True)
class CategoryWall:
    u: MukaiVector
    t2: Fraction


def category_walls_k3(b, S: Surface, t2_max) -> list:
    """All category walls {t^2 = value} at beta = b*H with value in
    (0, t2_max], each tagged with its spherical class u (normalized up to
    sign: positive rank).

    Solved in closed form rather than searched.  With b = p/q in lowest
    terms and n = h2/2, a class u = (r_u, d_u, a_u) orthogonal to
    H + (H, bH)*rho must satisfy d_u = r_u * b, so integrality forces
    r_u = q*k; then <u^2> = 2k*(n k p^2 - q a_u) = -2 forces k = +-1 and
    a_u = (n p^2 + 1)/q, which is integral iff q divides n p^2 + 1.  In
    that case a_b(u) = 1/q and the wall equation rk(u)*(t^2 h2) =
    -2<e^{bH}, u> puts the single wall (up to sign of u) at
    t^2 = 2/(q^2 h2).  An abelian surface has no spherical classes at
    all (<u^2> is even and the relevant solvability fails), hence NotK3.
    """
    if S.kind != "k3":
        raise NotK3("category walls exist only on K3 surfaces")
    b = rat(b)
    t2_max = rat(t2_max)
    p, q = b.numerator, b.denominator
    n = S.h2 // 2
    num = n * p * p + 1
    if num % q != 0:
        return []
    u = MukaiVector(q, p, num // q)
    t2 = Fraction(2, q * q * S.h2)
    if 0 < t2 <= t2_max:
        return [CategoryWall(u, t2)]
    return []
