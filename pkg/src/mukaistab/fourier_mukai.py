"""Lattice-level Fourier-Mukai transforms with isotropic kernel class,
the induced duality, and how central charges and slopes move.

A transform is determined by a nonzero integer r1 and a rational c: its
kernel class is w1 = r1 * e^{cH} = (r1, r1*c, r1*c^2*h2/2), which must
be an integral primitive (isotropic) class.  On twisted invariants at
gamma = c the transform acts by the involutive coordinate map

    (r, d, a)  |->  (-r1*a, sign(r1)*d, -r/r1),

and the image is read in the gamma'-twisted basis of the target surface,
where gamma' = 0; so the returned triple is already the plain Mukai
vector of the image.  The map visibly swaps the roles of rank and
Euler-type entry: e^{gamma} |-> -rho/r1 and rho |-> -r1 * e^{gamma'}.
It preserves the Mukai pairing:
  h2*(sd_x)(sd_y) - (r1 a_x)(r_y/r1) - (r_x/r1)(r1 a_y)
    = h2 d_x d_y - a_x r_y - r_x a_y.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotIntegral, NotPrimitive, ZeroDenominator
from .lattice import (MukaiVector, Surface, TwistedInvariants, rat,
                      twisted_invariants, untwist)
from .stability import StabilityParam


@dataclass(frozen=True)
class FMTransform:
    r1: int
    c: Fraction

    def kernel_class(self, S: Surface) -> MukaiVector:
        return MukaiVector(self.r1, self.r1 * self.c,
                           self.r1 * self.c * self.c * S.h2 / 2)


def make_transform(r1, c, S: Surface) -> FMTransform:
    """Validated constructor: the kernel class r1*e^{cH} must be an
    integral primitive class (it is isotropic automatically)."""
    if not isinstance(r1, int) or r1 == 0:
        raise NotIntegral(f"r1 must be a nonzero integer, got {r1!r}")
    T = FMTransform(r1, rat(c))
    w1 = T.kernel_class(S)
    if not w1.is_integral():
        raise NotIntegral(f"kernel class {w1} is not integral")
    if not w1.is_primitive():
        raise NotPrimitive(f"kernel class {w1} has content {w1.content()}")
    return T


def _coordinate_map(T: FMTransform, r, d, a):
    sign = 1 if T.r1 > 0 else -1
    return -T.r1 * a, sign * d, Fraction(-r) / T.r1


def fm_apply(T: FMTransform, v: MukaiVector, S: Surface) -> MukaiVector:
    """Image of v, as a plain Mukai vector on the target surface (whose
    distinguished twist gamma' is 0).  Rational entries can occur for
    classes that are not genuine sheaf classes on the source."""
    ti = twisted_invariants(v, T.c, S)
    return MukaiVector(*_coordinate_map(T, ti.r_b, ti.d_b, ti.a_b))


def fm_inverse(T: FMTransform, w: MukaiVector, S: Surface) -> MukaiVector:
    """Inverse of fm_apply: the coordinate map is an involution, so apply
    it to w (already gamma'-twisted = plain) and untwist at gamma."""
    r, d, a = _coordinate_map(T, w.r, w.d, w.a)
    return untwist(TwistedInvariants(r, d, a), T.c, S)


def dual(v: MukaiVector) -> MukaiVector:
    """Derived dual on the lattice: negates the degree entry."""
    return MukaiVector(v.r, -v.d, v.a)


def l_divisor(lam, t2) -> Fraction:
    """Coefficient l = (t^2 + lambda^2)/2 of the induced polarization
    direction on the target; strictly positive for t^2 > 0."""
    lam, t2 = rat(lam), rat(t2)
    val = (t2 + lam * lam) / 2
    assert val > 0, "l_divisor needs t^2 > 0"
    return val


def slope_defect(E_image: MukaiVector, T: FMTransform, p: StabilityParam,
                 S: Surface) -> Fraction:
    """How far the image class is from the slope-zero locus of the
    induced polarization on the target, with lambda = c - s:

        -|r1| * d'(E_image) * l * h2 + lambda * rk(E_image),

    where d' is the gamma'-twisted degree of the image (= its plain
    degree entry).  Vanishes exactly when the source charges of the
    class and the kernel align."""
    lam = T.c - p.s
    l = l_divisor(lam, p.t2)
    return -abs(T.r1) * E_image.d * l * S.h2 + lam * E_image.r


@dataclass(frozen=True)
class TransformedCharge:
    """Data of the transformed stability condition: the complex unit
    zeta and the target parameters s' = xi_coeff, t' = eta_coeff, chosen
    so that  Z_{(xi, eta)}(fm_apply(T, v)) = zeta^{-1} * Z_{(s,t)}(v)."""

    zeta_re: Fraction
    zeta_im: Fraction
    xi_coeff: Fraction
    eta_coeff: Fraction


def transform_central_charge(T: FMTransform, p: StabilityParam,
                             S: Surface) -> TransformedCharge:
    """Where the stability condition goes under the transform.  Needs an
    exact rational t (not just t^2) since eta is linear in t.

    With lambda = c - s:
        zeta = -r1 * ((lambda^2 - t^2) h2 / 2  -  i * lambda * t * h2),
        Delta = |zeta/r1|^2,
        xi  = lambda * h2 * (lambda^2 + t^2) / (2 |r1| Delta),
        eta =      t * h2 * (lambda^2 + t^2) / (2 |r1| Delta).
    Since Delta = h2^2 (lambda^2 + t^2)^2 / 4 one gets the cross-check
    identity |r1| * l_divisor(lambda, t^2) * xi * h2 = lambda."""
    t = p.require_t()
    lam = T.c - p.s
    re_part = (lam * lam - t * t) * S.h2 / 2
    im_part = lam * t * S.h2
    delta = re_part * re_part + im_part * im_part
    if delta == 0:
        # would need lam = t = 0; unreachable with t > 0, kept defensive
        raise ZeroDenominator("degenerate transform at lambda = t = 0")
    scale = S.h2 * (lam * lam + t * t) / (2 * abs(T.r1) * delta)
    return TransformedCharge(zeta_re=-T.r1 * re_part,
                             zeta_im=T.r1 * im_part,
                             xi_coeff=lam * scale,
                             eta_coeff=t * scale)
