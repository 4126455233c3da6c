"""K3-only structure: category walls along a vertical ray.

On a K3 surface the heart of the stability condition itself degenerates
along extra horizontal walls {t^2 = const} caused by spherical classes
(square -2) of twisted degree zero at beta = b*H.  These are walls for
the category, not for any particular v, and they cut every vertical ray
at the same heights.  Run me:  python3 demos/06_k3_category_walls.py
"""

from fractions import Fraction as F

from mukaistab import (
    Surface, category_walls_k3, chambers_on_ray, d_beta, mukai_square, mv,
)
from mukaistab.errors import NotK3

K3 = Surface("k3", 2)
AB = Surface("abelian", 2)

for b in (F(0), F(1, 2), F(1, 3)):
    walls = category_walls_k3(b, K3, F(4))
    print(f"b = {b}: " + ("; ".join(
        f"t^2 = {cw.t2} from u = {cw.u}" for cw in walls) or "none"))
    for cw in walls:
        assert mukai_square(cw.u, K3) == -2      # spherical
        assert d_beta(cw.u, b, K3) == 0          # degree drops at b

# abelian surfaces have no spherical classes, so no category walls
try:
    category_walls_k3(F(0), AB, F(4))
except NotK3 as e:
    print("abelian surface rejected:", e)

# a chamber ray on the K3 side can take the category walls into account;
# at s = -3/2 the spherical class (2,-3,5) adds a cut at t^2 = 1/4 that
# no wall of v produces
v = mv(1, 0, -1)
plain = chambers_on_ray(v, K3, F(-3, 2), (F(1, 100), F(4)))
cut = chambers_on_ray(v, K3, F(-3, 2), (F(1, 100), F(4)),
                      cut_category_walls=True)
print("\nray s = -3/2 for v =", v)
print("  cuts from walls of v:   ", [str(c) for c in plain.cut_points])
print("  with category walls too:", [str(c) for c in cut.cut_points])
