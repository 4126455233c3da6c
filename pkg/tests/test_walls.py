"""Wall loci, the wall-vector criterion, enumeration, chambers, sides."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from mukaistab import (
    C_MINUS, C_PLUS, ON_WALL, CategoryWall, Circle, Empty, Everywhere, Region,
    Surface, VerticalLine, category_walls_k3, chambers_on_ray, enumerate_walls,
    is_wall_vector, mukai_square, mv, param, wall_locus, wall_side,
)
from mukaistab.errors import (
    BoundOverflow, NonIntegral, NonPositiveSquare, NotK3, NotPrimitive,
    ZeroCharge, ZeroDegree,
)

AB = Surface("abelian", 2)
K3 = Surface("k3", 2)
F = Fraction

V_GOLD = mv(1, 0, -2)
GOLD_REGION = Region(F(-3), F(0), F(1, 100), F(4))

ints = st.integers(min_value=-15, max_value=15)
vectors = st.builds(mv, ints, ints, ints)


# ---------------------------------------------------------------------------
# wall_locus

def test_wall_locus_golden_circle():
    w = wall_locus(mv(1, -1, 1), V_GOLD, AB)
    assert w.geometry == Circle(F(-3, 2), F(1, 4))
    assert (w.A, w.C, w.D) == (1, 3, 2)


def test_wall_locus_proportional_is_everywhere():
    assert isinstance(wall_locus(2 * V_GOLD, V_GOLD, AB).geometry, Everywhere)


def test_wall_locus_degenerate_radius_is_empty():
    w = wall_locus(mv(1, 0, 0), mv(0, 1, 0), AB)
    assert (w.A, w.C, w.D) == (1, 0, 0)
    assert isinstance(w.geometry, Empty)


def test_wall_locus_negative_radius_sq_is_empty():
    # squares 2, 2 with cross pairing 1: radius^2 = (1 - 4)/(h2 m)^2 < 0
    v1, v = mv(1, 1, 0), mv(1, 0, -3)
    assert mukai_square(v1, AB) == 2
    assert mukai_square(v - v1, AB) == 2
    assert isinstance(wall_locus(v1, v, AB).geometry, Empty)


def test_wall_locus_vertical_line():
    w = wall_locus(mv(1, 0, -1), V_GOLD, AB)
    assert w.geometry == VerticalLine(F(0))


@given(vectors, vectors, st.integers(-5, 5))
def test_wall_locus_unchanged_by_adding_multiples_of_v(v1, v, k):
    """rho(v1 + k v, v) = rho(v1, v), so the (A, C, D) data agree."""
    if v1.is_zero() or v.is_zero() or (v1 + k * v).is_zero():
        return
    w1 = wall_locus(v1, v, AB)
    w2 = wall_locus(v1 + k * v, v, AB)
    assert (w1.A, w1.C, w1.D) == (w2.A, w2.C, w2.D)


@given(vectors, vectors, st.integers(1, 5))
def test_wall_acd_normalization_kills_scaling(v1, v, k):
    if v1.is_zero() or v.is_zero():
        return
    w1 = wall_locus(v1, v, AB)
    w2 = wall_locus(k * v1, v, AB)
    assert w1.acd_key() == w2.acd_key()


@given(vectors, vectors)
def test_wall_locus_matches_independent_acd(v1, v):
    if v1.is_zero() or v.is_zero():
        return
    w = wall_locus(v1, v, AB)
    A, C, D = oracles.acd(v1.as_tuple(), v.as_tuple(), 2)
    assert (w.A, w.C, w.D) == (A, C, D)


# ---------------------------------------------------------------------------
# is_wall_vector

def test_is_wall_vector_golden_true():
    rep = is_wall_vector(mv(1, -1, 1), V_GOLD, AB)
    assert rep.kind == "abelian" and rep.is_wall and not rep.necessary_only


def test_is_wall_vector_zero_cross_pairing():
    assert not is_wall_vector(mv(1, 0, 0), mv(1, 1, 0), AB)


def test_is_wall_vector_proportional():
    assert not is_wall_vector(V_GOLD, V_GOLD, AB)
    assert not is_wall_vector(3 * V_GOLD, V_GOLD, AB)


def test_is_wall_vector_rejects_empty_circle():
    """Numeric conditions alone are not enough: both squares >= 0 and
    positive cross pairing, but the locus has negative radius squared."""
    v1, v = mv(1, 1, 0), mv(1, 0, -3)
    v2 = v - v1
    assert mukai_square(v1, AB) >= 0 and mukai_square(v2, AB) >= 0
    assert oracles.pairing(v1.as_tuple(), v2.as_tuple(), 2) == 1
    assert not is_wall_vector(v1, v, AB)


def test_is_wall_vector_rejects_vertical_locus():
    """m = 0 degenerations sit on d_beta(v) = 0 and never destabilize."""
    v1 = mv(0, 0, -1)  # -rho: cross pairing with v is positive
    rep = is_wall_vector(v1, V_GOLD, AB)
    assert not rep.is_wall


def test_is_wall_vector_errors():
    with pytest.raises(NonPositiveSquare):
        is_wall_vector(mv(1, -1, 1), mv(1, 0, 0), AB)  # <v^2> = 0
    with pytest.raises(NonIntegral):
        is_wall_vector(mv(F(1, 2), 0, 0), V_GOLD, AB)


def test_is_wall_vector_k3_is_flagged_necessary_only():
    rep = is_wall_vector(mv(1, -1, 1), V_GOLD, K3)
    assert rep.kind == "k3" and rep.necessary_only


def test_is_wall_vector_matches_point_oracle_on_small_box():
    """Spot version of the exhaustive acceptance check: squares as standing
    hypotheses, point existence decided by independent sampling."""
    v = (1, 0, -2)
    V = mv(*v)
    for r1 in range(-4, 5):
        for d1 in range(-4, 5):
            for a1 in range(-4, 5):
                v1 = (r1, d1, a1)
                v2 = (v[0] - r1, v[1] - d1, v[2] - a1)
                if oracles.square(v1, 2) >= 0 and oracles.square(v2, 2) >= 0:
                    expect = oracles.wall_point_oracle(v1, v, 2)[0]
                else:
                    expect = False
                assert bool(is_wall_vector(mv(*v1), V, AB)) == expect


# ---------------------------------------------------------------------------
# enumerate_walls

def test_enumerate_walls_golden_region():
    walls = enumerate_walls(V_GOLD, AB, GOLD_REGION)
    assert len(walls) == 1
    (w,) = walls
    assert w.geometry == Circle(F(-3, 2), F(1, 4))
    assert w.acd_key() == (1, 3, 2)
    assert w.v1.is_integral()
    assert bool(is_wall_vector(w.v1, V_GOLD, AB))


def test_enumerate_walls_matches_box_oracle():
    got = {w.acd_key(): (w.geometry.center_s, w.geometry.radius_sq)
           for w in enumerate_walls(V_GOLD, AB, GOLD_REGION)}
    want = oracles.wall_set_box_oracle((1, 0, -2), 2,
                                       (F(-3), F(0), F(1, 100), F(4)), 12)
    assert got == want


def test_enumerate_walls_wider_region_against_oracle():
    v = mv(1, 0, -1)
    reg = Region(F(-2), F(2), F(1, 10), F(3))
    got = {w.acd_key(): (w.geometry.center_s, w.geometry.radius_sq)
           for w in enumerate_walls(v, AB, reg)}
    want = oracles.wall_set_box_oracle((1, 0, -1), 2,
                                       (F(-2), F(2), F(1, 10), F(3)), 12)
    assert got == want


def test_enumerate_walls_sorted_deterministically():
    v = mv(2, 1, -1)
    reg = Region(F(-2), F(2), F(1, 4), F(2))
    walls = enumerate_walls(v, AB, reg)
    keys = [(w.geometry.center_s, w.geometry.radius_sq, w.acd_key())
            for w in walls]
    assert keys == sorted(keys)
    assert len(set(w.acd_key() for w in walls)) == len(walls)


def test_enumerate_walls_k3_runs():
    walls = enumerate_walls(V_GOLD, K3, Region(F(-2), F(-1), F(1, 2), F(2)))
    for w in walls:
        assert isinstance(w.geometry, Circle)


def test_enumerate_walls_errors():
    with pytest.raises(NonPositiveSquare):
        enumerate_walls(mv(1, 0, 1), AB, GOLD_REGION)   # <v^2> = -2
    with pytest.raises(NonPositiveSquare):
        enumerate_walls(mv(0, 0, 1), AB, GOLD_REGION)   # d_beta == 0 ray
    with pytest.raises(NotPrimitive):
        enumerate_walls(2 * V_GOLD, AB, GOLD_REGION)
    with pytest.raises(NonIntegral):
        enumerate_walls(mv(F(1, 2), 0, -2), AB, GOLD_REGION)
    with pytest.raises(ZeroDegree):
        enumerate_walls(V_GOLD, AB, Region(F(1), F(2), F(1, 100), F(4)))
    with pytest.raises(BoundOverflow):
        enumerate_walls(V_GOLD, AB, GOLD_REGION, cap=3)


def test_region_validation():
    with pytest.raises(ValueError):
        Region(F(0), F(-1), F(1, 2), F(1))   # s_min > s_max
    with pytest.raises(ValueError):
        Region(F(0), F(1), F(0), F(1))       # t2_min must be positive
    with pytest.raises(ValueError):
        Region(F(0), F(1), F(2), F(1))       # empty t2 window


# ---------------------------------------------------------------------------
# chambers_on_ray

def test_chambers_golden_ray():
    ray = chambers_on_ray(V_GOLD, AB, F(-3, 2), (F(1, 100), F(4)))
    assert ray.cut_points == (F(1, 4),)
    assert ray.chambers == ((F(1, 100), F(1, 4)), (F(1, 4), F(4)))


def test_chambers_ray_missing_all_walls():
    ray = chambers_on_ray(V_GOLD, AB, F(-3, 2), (F(1, 2), F(4)))
    assert ray.cut_points == ()
    assert ray.chambers == ((F(1, 2), F(4)),)


def test_chambers_zero_degree_ray():
    with pytest.raises(ZeroDegree):
        chambers_on_ray(V_GOLD, AB, F(0), (F(1, 100), F(4)))


def test_chambers_cut_points_sorted_and_interior():
    v = mv(1, 0, -1)
    ray = chambers_on_ray(v, AB, F(-1, 2), (F(1, 100), F(4)))
    assert list(ray.cut_points) == sorted(set(ray.cut_points))
    for c in ray.cut_points:
        assert F(1, 100) < c <= F(4)
    # chambers tile the window around the cuts
    edges = [F(1, 100)] + list(ray.cut_points) + [F(4)]
    expect = tuple((a, b) for a, b in zip(edges, edges[1:]) if a < b)
    assert ray.chambers == expect


def test_chambers_category_cut_flag_abelian_raises():
    with pytest.raises(NotK3):
        chambers_on_ray(V_GOLD, AB, F(-3, 2), (F(1, 100), F(4)),
                        cut_category_walls=True)


def test_chambers_category_cut_flag_k3():
    plain = chambers_on_ray(V_GOLD, K3, F(0) - F(3, 2), (F(1, 100), F(4)))
    cut = chambers_on_ray(V_GOLD, K3, F(-3, 2), (F(1, 100), F(4)),
                          cut_category_walls=True)
    assert set(plain.cut_points) <= set(cut.cut_points)


# ---------------------------------------------------------------------------
# wall_side

def test_wall_side_three_point_golden():
    w1 = mv(1, -1, 1)
    s = F(-3, 2)
    assert wall_side(V_GOLD, w1, param(s, F(1)), AB) == C_PLUS
    assert wall_side(V_GOLD, w1, param(s, F(1, 4)), AB) == ON_WALL
    assert wall_side(V_GOLD, w1, param(s, F(1, 8)), AB) == C_MINUS


def test_wall_side_zero_charge():
    with pytest.raises(ZeroCharge):
        wall_side(V_GOLD, mv(0, 0, 0), param(F(-3, 2), F(1)), AB)


@given(st.fractions(min_value=F(-19, 10), max_value=F(-11, 10),
                    max_denominator=40))
def test_wall_side_sign_matches_reduced_sigma_on_golden_circle(s):
    """Crossing the golden circle flips the side; on it, OnWall."""
    from mukaistab import reduced_sigma
    w1 = mv(1, -1, 1)
    r2 = F(1, 4) - (s + F(3, 2)) ** 2
    if r2 <= 0:
        return
    inside = param(s, r2 / 2)
    on = param(s, r2)
    outside = param(s, r2 * 2)
    assert wall_side(V_GOLD, w1, on, AB) == ON_WALL
    for p in (inside, outside):
        side = wall_side(V_GOLD, w1, p, AB)
        rho = reduced_sigma(w1, V_GOLD, p, AB)
        assert side == (C_PLUS if rho > 0 else C_MINUS)


# ---------------------------------------------------------------------------
# category walls (K3)

def test_category_walls_golden():
    assert category_walls_k3(F(0), K3, F(4)) == [CategoryWall(mv(1, 0, 1), F(1))]
    assert category_walls_k3(F(0), K3, F(1, 2)) == []
    assert category_walls_k3(F(1, 2), K3, F(4)) == [
        CategoryWall(mv(2, 1, 1), F(1, 4))]


def test_category_walls_abelian_raises():
    with pytest.raises(NotK3):
        category_walls_k3(F(0), AB, F(4))


@pytest.mark.parametrize("b", [F(0), F(1, 2), F(1, 3), F(-2, 5), F(3)])
def test_category_walls_match_box_oracle(b):
    got = [(w.u.as_tuple(), w.t2) for w in category_walls_k3(b, K3, F(4))]
    want = [(tuple(F(x) for x in u), t2)
            for u, t2 in oracles.category_walls_box_oracle(b, 2, F(4), 60, 400)]
    assert sorted(got) == want


def test_category_wall_classes_are_spherical_and_orthogonal():
    for b in (F(0), F(1, 2), F(-1, 3), F(5, 4)):
        for w in category_walls_k3(b, K3, F(9)):
            assert mukai_square(w.u, K3) == -2
            assert w.u.d == w.u.r * b  # twisted degree vanishes at b
            assert w.t2 > 0
