"""Independent test oracles: brute-force box scans and exact point
sampling on wall loci.

Everything here works on plain (r, d, a) tuples of ints/Fractions and is
written directly from the definitions, deliberately not sharing code
with the library's geometry helpers — agreement between the two routes
is what the acceptance tests check.  All decisions are exact; square
roots are handled through integer-sqrt rational bounds that get
tightened until a rational witness can be exhibited, and every witness
is re-verified against the defining inequalities before it is trusted.
"""

from fractions import Fraction
from math import gcd, isqrt

F = Fraction


# ---------------------------------------------------------------------------
# raw lattice formulas (tuple-based)

def pairing(x, y, h2):
    return h2 * x[1] * y[1] - x[0] * y[2] - x[2] * y[0]


def square(x, h2):
    return pairing(x, x, h2)


def twisted(v, s, h2):
    r, d, a = v
    return (r, d - r * s, a - d * s * h2 + F(r, 2) * s * s * h2)


def charge(v, s, t2, h2):
    """(re, im_over_t) of the central charge."""
    r_b, d_b, a_b = twisted(v, s, h2)
    return (-a_b + F(h2, 2) * t2 * r_b, d_b * h2)


def in_domain(v, s, t2, h2):
    """Is Z(v) in the upper half-plane union the negative reals?"""
    re, im_t = charge(v, s, t2, h2)
    if im_t > 0:
        return True
    return im_t == 0 and re < 0


def acd(v1, v, h2):
    """Coefficients of rho(v1, v) = A(t^2 + s^2) + C s + D."""
    r1, d1, a1 = v1
    r, d, a = v
    return (F(h2, 2) * (r1 * d - r * d1), a1 * r - r1 * a, a * d1 - a1 * d)


def normalize_acd(A, C, D):
    ints = [int(x) for x in (A, C, D)]
    g = gcd(gcd(abs(ints[0]), abs(ints[1])), abs(ints[2]))
    if g == 0:
        return (0, 0, 0)
    ints = [x // g for x in ints]
    for x in ints:
        if x:
            return tuple(ints) if x > 0 else tuple(-y for y in ints)
    return (0, 0, 0)


# ---------------------------------------------------------------------------
# exact sqrt bounds and interval utilities

def sqrt_bounds(x: Fraction, k: int):
    """Rationals (lo, hi) with lo <= sqrt(x) <= hi and hi - lo <= 1/2^k."""
    assert x >= 0
    p, q = x.numerator, x.denominator
    shift = 1 << k
    n = isqrt(p * q * shift * shift)
    return F(n, q * shift), F(n + 1, q * shift)


def halfline(r, d):
    """{s : d - r s > 0} as (lo, hi) with None for +-infinity, or
    'all'/'none' when the degree is constant."""
    if r == 0:
        return "all" if d > 0 else "none"
    if r > 0:
        return (None, F(d, r))
    return (F(d, r), None)


def intersect_open(a, b):
    """Intersection of open intervals given as (lo|None, hi|None) or
    'all'/'none'."""
    if a == "none" or b == "none":
        return "none"
    if a == "all":
        return b
    if b == "all":
        return a
    lo = a[0] if b[0] is None else (b[0] if a[0] is None else max(a[0], b[0]))
    hi = a[1] if b[1] is None else (b[1] if a[1] is None else min(a[1], b[1]))
    if lo is not None and hi is not None and lo >= hi:
        return "none"
    return (lo, hi)


def open_interval_meets_circle_span(iv, c, R2):
    """Does the open interval meet (c - R, c + R)?  Exact, one radical:
    needs lo < c + R and hi > c - R."""
    if iv == "none":
        return False
    if iv == "all":
        return True
    lo, hi = iv
    if lo is not None:
        x = lo - c
        if x >= 0 and x * x >= R2:  # lo >= c + R
            return False
    if hi is not None:
        x = c - hi
        if x >= 0 and x * x >= R2:  # hi <= c - R
            return False
    return True


def rational_inside(iv, c, R2, max_k=80):
    """A rational point in (open interval) cap (c - R, c + R), which the
    caller has already decided is nonempty.  Inner-approximates R from
    below until the squeezed interval opens up."""
    for k in range(2, max_k):
        r_lo, _ = sqrt_bounds(R2, k)
        lo = c - r_lo
        hi = c + r_lo
        if iv != "all":
            if iv[0] is not None:
                lo = max(lo, iv[0])
            if iv[1] is not None:
                hi = min(hi, iv[1])
        if lo < hi:
            mid = (lo + hi) / 2
            if (mid - c) ** 2 < R2:  # paranoia: verify in the true span
                ok = True
                if iv != "all":
                    ok = ((iv[0] is None or mid > iv[0])
                          and (iv[1] is None or mid < iv[1]))
                if ok:
                    return mid
    raise AssertionError("witness extraction failed to converge")


# ---------------------------------------------------------------------------
# the wall-point oracle (exact point sampling on the locus)

def _strict_pair_point(v1, v2, c, R2):
    """A rational s in the circle span with d(v1) > 0 and d(v2) > 0, or
    None.  The degree of v = v1 + v2 is then automatically positive."""
    iv = intersect_open(halfline(v1[0], v1[1]), halfline(v2[0], v2[1]))
    if not open_interval_meets_circle_span(iv, c, R2):
        return None
    return rational_inside(iv, c, R2)


def _boundary_point(vz, vpos, c, R2, h2):
    """Point where d(vz) = 0 with Re Z(vz) < 0 while d(vpos) > 0, on the
    circle.  Returns (s, t2) or None."""
    rz, dz, az = vz
    if rz == 0:
        if dz != 0:
            return None  # degree never vanishes... except nowhere: d(s) = dz constant != 0
        # d(vz) vanishes identically; Re Z = -az must be negative
        if az <= 0:
            return None
        iv = halfline(vpos[0], vpos[1])
        if not open_interval_meets_circle_span(iv, c, R2):
            return None
        s = rational_inside(iv, c, R2)
        return (s, R2 - (s - c) ** 2)
    s0 = F(dz, rz)
    if (s0 - c) ** 2 >= R2:
        return None
    t2 = R2 - (s0 - c) ** 2
    re, _ = charge(vz, s0, t2, h2)
    if re >= 0:
        return None
    if vpos[1] - vpos[0] * s0 <= 0:
        return None
    return (s0, t2)


def wall_point_oracle(v1, v, h2):
    """Does the locus rho(v1, v) = 0 contain a point with t^2 > 0,
    d_beta(v) > 0, and both Z(v1), Z(v2 := v - v1) in the upper
    half-plane union the negative reals?  Returns (exists, witness);
    any witness is exact and fully re-verified."""
    v2 = tuple(F(v[i]) - F(v1[i]) for i in range(3))
    A, C, D = acd(v1, v, h2)

    def verified(s, t2):
        assert t2 > 0
        assert A * (t2 + s * s) + C * s + D == 0, "witness off the locus"
        assert v[1] - v[0] * s > 0
        assert in_domain(v1, s, t2, h2) and in_domain(v2, s, t2, h2)
        return True, (s, t2)

    if A == 0 and C == 0:
        if D != 0:
            return False, None
        # locus is everything: v1 rationally proportional to v.  v
        # positive-degree makes Im Z(v) > 0, so v1 = k v and v2 = (1-k) v
        # can never both sit in the domain (k integral: one of them is a
        # nonpositive multiple or zero).  Still scan a few sample points
        # honestly rather than by argument.
        for s_num in range(-8, 9):
            s = F(s_num, 3)
            if v[1] - v[0] * s <= 0:
                continue
            for t2 in (F(1, 7), F(1), F(9, 2)):
                if in_domain(v1, s, t2, h2) and in_domain(v2, s, t2, h2):
                    return verified(s, t2)
        return False, None

    if A == 0:
        # vertical line s0 = -D/C: t^2 ranges freely
        s0 = F(-D, C)
        if v[1] - v[0] * s0 <= 0:
            return False, None
        window = "all"
        for w in (v1, v2):
            dw = w[1] - w[0] * s0
            if dw > 0:
                wiv = "all"
            elif dw < 0:
                wiv = "none"
            else:
                # Re Z(w) < 0: -a_b + (h2 t^2/2) r < 0
                _, _, a_b = twisted(w, s0, h2)
                r = w[0]
                if r == 0:
                    wiv = "all" if a_b > 0 else "none"
                elif r > 0:
                    wiv = (None, F(2) * a_b / (h2 * r)) if a_b > 0 else "none"
                else:
                    wiv = (F(2) * a_b / (h2 * r), None)
            window = intersect_open(window, wiv)
        if window == "none":
            return False, None
        if window == "all":
            return verified(s0, F(1))
        lo, hi = window
        lo = F(0) if lo is None or lo < 0 else lo
        if hi is None:
            return verified(s0, lo + 1)
        if hi <= lo:
            return False, None
        return verified(s0, (lo + hi) / 2)

    # circle (or empty)
    c = F(-C) / (2 * A)
    R2 = c * c - F(D) / A
    if R2 <= 0:
        return False, None
    s = _strict_pair_point(v1, v2, c, R2)
    if s is not None:
        return verified(s, R2 - (s - c) ** 2)
    for vz, vpos in ((v1, v2), (v2, v1)):
        pt = _boundary_point(vz, vpos, c, R2, h2)
        if pt is not None:
            return verified(*pt)
    return False, None


# ---------------------------------------------------------------------------
# brute-force wall-set oracle over a box

def _t2_attained_on(J, c, R2):
    """Attained t^2 = R2 - (s-c)^2 range over the interval J (with
    open-endpoint flags), as (lo, hi, lo_att, hi_att)."""
    lo, hi, lo_open, hi_open = J
    ulo, uhi = (lo - c) ** 2, (hi - c) ** 2
    if lo <= c <= hi:
        umin = F(0)
        umin_att = (lo < c < hi) or (c == lo and not lo_open) or (c == hi and not hi_open)
    elif c < lo:
        umin, umin_att = ulo, not lo_open
    else:
        umin, umin_att = uhi, not hi_open
    if ulo >= uhi:
        umax, umax_att = ulo, not lo_open
        if ulo == uhi:
            umax_att = umax_att or not hi_open
    else:
        umax, umax_att = uhi, not hi_open
    return R2 - umax, R2 - umin, umax_att, umin_att


def _closed_meets(lo, hi, lo_att, hi_att, a, b):
    """Does the (partially open) interval meet the closed [a, b]?"""
    if hi < a or lo > b:
        return False
    L, U = max(lo, a), min(hi, b)
    if L < U:
        return True
    y = L
    if lo < y < hi:
        return True
    return (y == lo and lo_att) or (y == hi and hi_att)


def circle_meets_region_oracle(c, R2, v, reg, h2):
    """reg = (smin, smax, t2min, t2max); needs a circle point with s in
    [smin, smax], t^2 in [t2min, t2max], d_beta(v) > 0."""
    smin, smax, t2min, t2max = reg
    r, d = v[0], v[1]
    lo, hi, lo_open, hi_open = F(smin), F(smax), False, False
    if r > 0:
        cut = F(d, r)
        if cut <= lo:
            return False
        if cut <= hi:
            hi, hi_open = cut, True
    elif r < 0:
        cut = F(d, r)
        if cut >= hi:
            return False
        if cut >= lo:
            lo, lo_open = cut, True
    else:
        if d <= 0:
            return False
    if lo > hi or (lo == hi and (lo_open or hi_open)):
        return False
    t_lo, t_hi, att_lo, att_hi = _t2_attained_on((lo, hi, lo_open, hi_open), c, R2)
    return _closed_meets(t_lo, t_hi, att_lo, att_hi, F(t2min), F(t2max))


def wall_set_box_oracle(v, h2, reg, box):
    """All distinct wall loci of v meeting the region, found by scanning
    every integral v1 with |entries| <= box: numeric criterion (both
    squares >= 0, cross pairing > 0, not proportional), circle locus,
    circle meets region in positive degree.  Returns {(A:C:D) normalized:
    (center, radius_sq)}."""
    r, d, a = int(v[0]), int(v[1]), int(v[2])
    q = h2 * d * d - 2 * r * a
    walls = {}
    rng = range(-box, box + 1)
    half = F(h2, 2)
    for r1 in rng:
        for d1 in rng:
            m = r1 * d - r * d1
            hdd = h2 * d1 * d1
            d2 = d - d1
            for a1 in rng:
                q1 = hdd - 2 * r1 * a1
                if q1 < 0:
                    continue
                p1v = h2 * d1 * d - r1 * a - a1 * r
                p12 = p1v - q1
                if p12 <= 0:
                    continue
                if q - q1 - 2 * p12 < 0:  # <v2^2> >= 0
                    continue
                if m == 0 and r1 * a - r * a1 == 0 and d1 * a - d * a1 == 0:
                    continue  # proportional
                A = half * m
                if A == 0:
                    continue  # vertical: never a circle
                C = F(a1 * r - r1 * a)
                D = F(a * d1 - a1 * d)
                c = -C / (2 * A)
                R2 = c * c - D / A
                if R2 <= 0:
                    continue
                if circle_meets_region_oracle(c, R2, v, reg, h2):
                    walls[normalize_acd(2 * A, 2 * C, 2 * D)] = (c, R2)
    return walls


# ---------------------------------------------------------------------------
# classification and category-wall oracles

def ipo_box_oracle(v, s, t2, h2, bound):
    """Isotropic w with <v, w> = 1, aligned with v at (s, t2), positive
    twisted degree, entries bounded; plain triple loop."""
    out = []
    rng = range(-bound, bound + 1)
    for r1 in rng:
        for d1 in rng:
            for a1 in rng:
                w = (r1, d1, a1)
                if h2 * d1 * d1 - 2 * r1 * a1 != 0:
                    continue
                if pairing(v, w, h2) != 1:
                    continue
                if d1 - r1 * s <= 0:
                    continue
                A, C, D = acd(w, v, h2)
                if A * (t2 + s * s) + C * s + D != 0:
                    continue
                g = gcd(gcd(abs(r1), abs(d1)), abs(a1))
                if g != 1:
                    continue
                out.append(w)
    return sorted(out)


def ipo_box_oracle_fast(v, s, t2, h2, bound):
    """Same set as ipo_box_oracle, but enumerating the isotropic classes
    of the box directly from h2 d^2 = 2 r a instead of a triple loop:
    rank zero forces degree zero (a free), otherwise a is determined by
    (r, d) when integral.  O(bound^2) instead of O(bound^3)."""
    out = []
    rng = range(-bound, bound + 1)
    candidates = [(0, 0, a1) for a1 in rng]
    for r1 in rng:
        if r1 == 0:
            continue
        for d1 in rng:
            num = h2 * d1 * d1
            if num % (2 * r1) != 0:
                continue
            a1 = num // (2 * r1)
            if abs(a1) <= bound:
                candidates.append((r1, d1, a1))
    for w in candidates:
        r1, d1, a1 = w
        assert h2 * d1 * d1 - 2 * r1 * a1 == 0
        if pairing(v, w, h2) != 1:
            continue
        if d1 - r1 * s <= 0:
            continue
        A, C, D = acd(w, v, h2)
        if A * (t2 + s * s) + C * s + D != 0:
            continue
        if gcd(gcd(abs(r1), abs(d1)), abs(a1)) != 1:
            continue
        out.append(w)
    return sorted(out)


def category_walls_box_oracle(b, h2, t2max, rmax, amax):
    """Spherical classes u with twisted degree zero at beta = b*H and an
    in-range wall value, by scanning ranks 1..rmax and entries |a| <=
    amax (normalized to positive rank)."""
    out = []
    for ru in range(1, rmax + 1):
        du = F(b) * ru
        if du.denominator != 1:
            continue
        du = int(du)
        for au in range(-amax, amax + 1):
            u = (ru, du, au)
            if square(u, h2) != -2:
                continue
            _, _, a_b = twisted(u, F(b), h2)
            t2 = 2 * a_b / (ru * h2)
            if 0 < t2 <= t2max:
                out.append((u, t2))
    return sorted(out)
