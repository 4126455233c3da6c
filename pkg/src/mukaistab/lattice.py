"""Exact arithmetic in the rank-3 algebraic Mukai lattice of a
Picard-rank-1 surface.

A class is written ``v = r + d*H + a*rho`` where ``H`` is the polarization
with self-intersection ``h2`` (positive and even) and ``rho`` is the point
class.  The pairing is

    <x, y> = h2 * x.d * y.d - x.r * y.a - x.a * y.r,

an even bilinear form of signature (2,1).  Everything here is a pure
function over ``fractions.Fraction`` — there is no floating point in the
core, by design: every identity downstream is exact and the tests run at
zero tolerance.

Twisting by ``beta = s*H`` re-expresses a vector in the basis adapted to
``e^{sH} = (1, s, s^2*h2/2)``; the twisted triple (r_b, d_b, a_b) is what
all the stability formulas consume.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import NonIntegral, Zero


def rat(x) -> Fraction:
    """Coerce ints, 'p/q' strings and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError(f"refusing float {x!r}: core arithmetic is exact")
    return Fraction(x)


@dataclass(frozen=True)
class Surface:
    """A Picard-rank-1 abelian or K3 surface, known to us only through
    its kind and the self-intersection h2 = (H^2) of the polarization."""

    kind: str  # "abelian" | "k3"
    h2: int

    def __post_init__(self):
        if self.kind not in ("abelian", "k3"):
            raise ValueError(f"kind must be 'abelian' or 'k3', got {self.kind!r}")
        if not (isinstance(self.h2, int) and self.h2 > 0 and self.h2 % 2 == 0):
            raise ValueError(f"h2 must be a positive even integer, got {self.h2!r}")

    @property
    def epsilon(self) -> int:
        return 0 if self.kind == "abelian" else 1


@dataclass(frozen=True)
class MukaiVector:
    """A rational class r + d*H + a*rho.  Rational entries are allowed on
    purpose (transform images of exponentials are rational); integrality
    is a queryable property, not a type constraint."""

    r: Fraction
    d: Fraction
    a: Fraction

    def __post_init__(self):
        object.__setattr__(self, "r", rat(self.r))
        object.__setattr__(self, "d", rat(self.d))
        object.__setattr__(self, "a", rat(self.a))

    def __add__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector(self.r + other.r, self.d + other.d, self.a + other.a)

    def __sub__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector(self.r - other.r, self.d - other.d, self.a - other.a)

    def __neg__(self) -> "MukaiVector":
        return MukaiVector(-self.r, -self.d, -self.a)

    def __rmul__(self, k) -> "MukaiVector":
        k = rat(k)
        return MukaiVector(k * self.r, k * self.d, k * self.a)

    def as_tuple(self):
        return (self.r, self.d, self.a)

    def is_zero(self) -> bool:
        return self.r == 0 and self.d == 0 and self.a == 0

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.as_tuple())

    def content(self) -> int:
        """gcd of the entries of an integral vector; 0 for the zero vector."""
        assert self.is_integral(), "content is defined for integral vectors"
        return gcd(gcd(int(self.r), int(self.d)), int(self.a))

    def is_primitive(self) -> bool:
        return self.is_integral() and self.content() == 1

    def __str__(self):
        return f"({self.r},{self.d},{self.a})"


def mv(r, d, a) -> MukaiVector:
    """Convenience constructor accepting ints / 'p/q' strings / Fractions."""
    return MukaiVector(rat(r), rat(d), rat(a))


RHO = MukaiVector(0, 0, 1)


def mukai_pairing(x: MukaiVector, y: MukaiVector, S: Surface) -> Fraction:
    """<x, y> = h2*x.d*y.d - x.r*y.a - x.a*y.r."""
    return S.h2 * x.d * y.d - x.r * y.a - x.a * y.r


def mukai_square(x: MukaiVector, S: Surface) -> Fraction:
    return mukai_pairing(x, x, S)


def sheaf_vector(rank: int, c1_mult: int, chi: int, S: Surface) -> MukaiVector:
    """Mukai vector of a sheaf with the given rank, c_1 = c1_mult*H and
    Euler characteristic: (rank, c1_mult, chi - epsilon*rank)."""
    return MukaiVector(rank, c1_mult, chi - S.epsilon * rank)


def exp_vector(s, S: Surface) -> MukaiVector:
    """e^{sH} = (1, s, s^2*h2/2)."""
    s = rat(s)
    return MukaiVector(1, s, s * s * S.h2 / 2)


@dataclass(frozen=True)
class TwistedInvariants:
    """The beta-twisted triple of a vector at beta = s*H.  The rank is
    twist-independent; d_b and a_b are the H-degree and rho-coefficient in
    the e^{sH}-adapted basis."""

    r_b: Fraction
    d_b: Fraction
    a_b: Fraction

    def as_tuple(self):
        return (self.r_b, self.d_b, self.a_b)


def twisted_invariants(v: MukaiVector, s, S: Surface) -> TwistedInvariants:
    """(r, d - r*s, a - d*s*h2 + (r/2)*s^2*h2).

    Equivalently a_b = -<v, e^{sH}>, which the tests assert; twisting by a
    rational s is an isometry of the rational lattice.
    """
    s = rat(s)
    h2 = S.h2
    d_b = v.d - v.r * s
    a_b = v.a - v.d * s * h2 + v.r * s * s * h2 / 2
    return TwistedInvariants(v.r, d_b, a_b)


def untwist(ti: TwistedInvariants, s, S: Surface) -> MukaiVector:
    """Inverse of twisted_invariants at the same s."""
    s = rat(s)
    h2 = S.h2
    d = ti.d_b + ti.r_b * s
    a = ti.a_b + d * s * h2 - ti.r_b * s * s * h2 / 2
    return MukaiVector(ti.r_b, d, a)


def retwist(ti: TwistedInvariants, s_from, s_to, S: Surface) -> TwistedInvariants:
    """Pass from the s_from-twisted basis to the s_to-twisted basis
    directly, without returning to untwisted coordinates:

        d_s = d_g + r*(g - s),
        a_s = a_g + d_g*(g - s)*h2 + (r/2)*(s - g)^2*h2,

    with g = s_from, s = s_to.  Composition consistency with the direct
    computation is a tested invariant.
    """
    g, s = rat(s_from), rat(s_to)
    h2 = S.h2
    d_s = ti.d_b + ti.r_b * (g - s)
    a_s = ti.a_b + ti.d_b * (g - s) * h2 + ti.r_b * (s - g) ** 2 * h2 / 2
    return TwistedInvariants(ti.r_b, d_s, a_s)


def d_beta(v: MukaiVector, s, S: Surface) -> Fraction:
    """Twisted degree d - r*s (the only coordinate most wall formulas need)."""
    return v.d - v.r * rat(s)


def d_beta_min(s, S: Surface) -> Fraction:
    """Minimal positive value of d - r*s over integer pairs (r, d).

    For s = p/q in lowest terms the values d - r*p/q sweep (1/q)*Z, so the
    minimum is 1/q.  (One classical normalization carries an extra (H^2)
    factor; this operation returns the plain lattice minimum, which is
    what the degree d_beta of an integral class actually attains.)
    """
    s = rat(s)
    return Fraction(1, s.denominator)


def _kernel_basis_of_functional(n0: int, n1: int, n2: int):
    """Integral basis of {x in Z^3 : n0*x0 + n1*x1 + n2*x2 = 0} for a
    nonzero integer functional, by the usual xgcd staircase.  The output
    spans the kernel saturated (index one), which the tests check against
    a brute-force scan."""
    if n0 == 0 and n1 == 0:
        # kernel is the coordinate plane x2 = 0
        return (1, 0, 0), (0, 1, 0)
    g1 = gcd(n0, n1)
    u1 = (n1 // g1, -n0 // g1, 0)
    # p*n0 + q*n1 = g1
    p, q = _xgcd(n0, n1)
    g = gcd(g1, n2)
    u2 = (-p * (n2 // g), -q * (n2 // g), g1 // g)
    assert n0 * u2[0] + n1 * u2[1] + n2 * u2[2] == 0
    return u1, u2


def _xgcd(a: int, b: int):
    """(p, q) with p*a + q*b = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_s, s = s, old_s - k * s
        old_t, t = t, old_t - k * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


def perp_basis(v: MukaiVector, S: Surface):
    """A Z-basis (pair of integral vectors) of the orthogonal complement
    {x integral : <x, v> = 0}.

    <x, v> is the integer functional (-v.a)*x_r + (h2*v.d)*x_d + (-v.r)*x_a,
    so this is a 1-functional kernel computation.
    """
    if not v.is_integral():
        raise NonIntegral(f"perp_basis needs an integral vector, got {v}")
    if v.is_zero():
        raise Zero("perp_basis of the zero vector")
    n = (-int(v.a), S.h2 * int(v.d), -int(v.r))
    u1, u2 = _kernel_basis_of_functional(*n)
    b1, b2 = MukaiVector(*u1), MukaiVector(*u2)
    assert mukai_pairing(b1, v, S) == 0 and mukai_pairing(b2, v, S) == 0
    return b1, b2


def primitivity_report(v: MukaiVector, S: Surface = None) -> dict:
    """Integrality / primitivity flags, plus isotropy when a surface is
    supplied (isotropy needs h2).  gcd of the zero vector is 0 and flagged
    non-primitive."""
    integral = v.is_integral()
    report = {
        "integral": integral,
        "primitive": bool(integral and v.content() == 1),
    }
    if S is not None:
        report["isotropic"] = mukai_square(v, S) == 0
    return report
