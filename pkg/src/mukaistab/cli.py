"""Command-line front end.

Every numeric value in JSON output is a lowest-terms rational string
("p/q" or "p"), never a float; keys are sorted and lists are emitted in
a deterministic order, so repeated runs are byte-identical.  `--approx`
adds a parallel "approx" object with floating-point renderings for
human reading.  Errors go to stderr as {"error": code, "detail": ...}
with exit codes 1 (usage), 2 (domain/precondition), 3 (bound exhausted).

All configuration comes from flags or a single JSON file given with
`--config` (flat object keyed by flag name with underscores; explicit
flags win).  No environment variables are consulted.
"""

import argparse
import json
import math
import re
import sys
from fractions import Fraction

from .errors import BoundOverflow, MukaiStabError, UsageError
from .lattice import (MukaiVector, Surface, d_beta_min, mukai_pairing,
                      twisted_invariants, retwist)
from .stability import central_charge, param, reduced_sigma
from .walls import (Circle, Region, VerticalLine, category_walls_k3,
                    chambers_on_ray, enumerate_walls, wall_side)
from .fourier_mukai import (fm_apply, make_transform,
                            transform_central_charge)
from .polarization import ample_class, omega_sx, omega_x
from .classification import classify_decomposition

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_BOUND = 0, 1, 2, 3

DEFAULT_SURFACE = '{"kind":"abelian","h2":2}'
DEFAULT_SURFACE_K3 = '{"kind":"k3","h2":2}'


# ---------------------------------------------------------------------------
# parsing and rendering

def _parse_rat(text) -> Fraction:
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"cannot parse rational {text!r}: {e}")


def _parse_vec(text) -> MukaiVector:
    parts = str(text).split(",")
    if len(parts) != 3:
        raise UsageError(f"vector literal must be 'r,d,a', got {text!r}")
    return MukaiVector(*(_parse_rat(x) for x in parts))


def _parse_surface(text) -> Surface:
    try:
        obj = json.loads(text)
        return Surface(obj["kind"], obj["h2"])
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise UsageError(f"bad surface JSON {text!r}: {e}")


def _parse_parts(text):
    """Decomposition literal: semicolon-separated parts, each 'r,d,a' or
    'n*r,d,a' with n the multiplicity (default 1)."""
    parts = []
    for chunk in str(text).split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "*" in chunk:
            n_text, vec_text = chunk.split("*", 1)
            try:
                n = int(n_text)
            except ValueError:
                raise UsageError(f"bad multiplicity in {chunk!r}")
        else:
            n, vec_text = 1, chunk
        parts.append((n, _parse_vec(vec_text)))
    if not parts:
        raise UsageError("empty decomposition")
    return parts


def _fmt_vec(v: MukaiVector) -> str:
    return f"{v.r},{v.d},{v.a}"


def _render(obj):
    """Exact JSON form: rationals as lowest-terms strings, vectors as
    'r,d,a' strings."""
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, MukaiVector):
        return _fmt_vec(obj)
    if isinstance(obj, dict):
        return {k: _render(x) for k, x in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_render(x) for x in obj]
    return obj


def _render_float(obj):
    if isinstance(obj, Fraction):
        return float(obj)
    if isinstance(obj, MukaiVector):
        return [float(obj.r), float(obj.d), float(obj.a)]
    if isinstance(obj, dict):
        return {k: _render_float(x) for k, x in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_render_float(x) for x in obj]
    return obj


def _emit_json(payload, approx: bool):
    doc = _render(payload)
    if approx:
        doc["approx"] = _render_float(payload)
    print(json.dumps(doc, sort_keys=True, separators=(",", ":")))


# ---------------------------------------------------------------------------
# SVG

def _f(x) -> str:
    return f"{float(x):.6f}"


def _svg_walls(v, S, reg: Region, walls) -> str:
    """Deterministic SVG: s horizontal, t = sqrt(t^2) vertical, equal
    scales, 1000px wide; each wall circle stroked and labeled with its
    representative class.  Floats appear only here, at render time."""
    if reg.s_min >= reg.s_max:
        raise UsageError("plotting needs s_min < s_max")
    s0, s1 = float(reg.s_min), float(reg.s_max)
    t0, t1 = math.sqrt(float(reg.t2_min)), math.sqrt(float(reg.t2_max))
    if t1 <= t0:
        raise UsageError("plotting needs t2_min < t2_max")
    width = 1000.0
    scale = width / (s1 - s0)
    height = (t1 - t0) * scale

    def X(s):
        return (float(s) - s0) * scale

    def Y(t):
        return height - (float(t) - t0) * scale

    out = []
    out.append(f'<svg xmlns="http://www.w3.org/2000/svg" '
               f'viewBox="0 0 {_f(width)} {_f(height)}" '
               f'width="{_f(width)}" height="{_f(height)}">')
    out.append('<defs><clipPath id="box">'
               f'<rect x="0" y="0" width="{_f(width)}" height="{_f(height)}"/>'
               '</clipPath></defs>')
    out.append(f'<rect x="0" y="0" width="{_f(width)}" height="{_f(height)}" '
               'fill="white" stroke="black" stroke-width="1"/>')
    out.append('<g clip-path="url(#box)">')
    for w in walls:
        g = w.geometry
        if isinstance(g, Circle):
            radius = math.sqrt(float(g.radius_sq))
            out.append(f'<circle cx="{_f(X(g.center_s))}" cy="{_f(Y(0.0))}" '
                       f'r="{_f(radius * scale)}" fill="none" '
                       'stroke="steelblue" stroke-width="1.5"/>')
            label_y = Y(min(radius, t1))
            out.append(f'<text x="{_f(X(g.center_s))}" y="{_f(label_y - 4)}" '
                       'font-size="12" text-anchor="middle" fill="black">'
                       f'{_fmt_vec(w.v1)}</text>')
        elif isinstance(g, VerticalLine):
            out.append(f'<line x1="{_f(X(g.s))}" y1="0" x2="{_f(X(g.s))}" '
                       f'y2="{_f(height)}" stroke="steelblue" stroke-width="1.5"/>')
    out.append('</g>')
    # frame annotations: exact rational corner labels
    out.append(f'<text x="2" y="{_f(height - 4)}" font-size="12">'
               f's={reg.s_min}</text>')
    out.append(f'<text x="{_f(width - 2)}" y="{_f(height - 4)}" font-size="12" '
               f'text-anchor="end">s={reg.s_max}</text>')
    out.append(f'<text x="2" y="14" font-size="12">t2={reg.t2_max}</text>')
    out.append(f'<text x="2" y="{_f(height - 18)}" font-size="12">'
               f't2={reg.t2_min}</text>')
    out.append(f'<text x="{_f(width / 2)}" y="14" font-size="12" '
               f'text-anchor="middle">v={_fmt_vec(v)}</text>')
    out.append('</svg>')
    return "\n".join(out)


def _wall_payload(w):
    g = w.geometry
    if isinstance(g, Circle):
        geom = {"type": "circle", "center_s": g.center_s,
                "radius_sq": g.radius_sq}
    elif isinstance(g, VerticalLine):
        geom = {"type": "vertical", "s": g.s}
    else:
        geom = {"type": type(g).__name__.lower()}
    return {"A": w.A, "C": w.C, "D": w.D, "geometry": geom,
            "representative": w.v1}


# ---------------------------------------------------------------------------
# argument plumbing

class _Parser(argparse.ArgumentParser):
    def __init__(self, *a, **kw):
        super().__init__(*a, **kw)
        # accept '-3/2' and '-1,2,-4' as values, not option strings
        self._negative_number_matcher = re.compile(r"^-\d")

    def error(self, message):
        raise UsageError(message)


def _add_common(sp, surface_default=DEFAULT_SURFACE):
    sp.add_argument("--surface", default=None,
                    help=f"surface JSON (default {surface_default})")
    sp.add_argument("--config", default=None,
                    help="JSON file with default flag values")
    sp.add_argument("--approx", action="store_true", default=False,
                    help="add floating-point annotations")
    sp.set_defaults(_surface_default=surface_default)


def _build_parser():
    ap = _Parser(prog="mukaistab",
                 description="exact wall-and-chamber computations on the "
                             "rank-3 Mukai lattice")
    sub = ap.add_subparsers(dest="command", metavar="command")

    sp = sub.add_parser("pair", help="Mukai pairing of two classes")
    sp.add_argument("--x")
    sp.add_argument("--y")
    _add_common(sp)

    sp = sub.add_parser("twist", help="twisted invariants at beta = s*H")
    sp.add_argument("--v")
    sp.add_argument("--s")
    sp.add_argument("--to", default=None, help="also re-twist to this s")
    _add_common(sp)

    sp = sub.add_parser("charge", help="central charge at (s, t)")
    sp.add_argument("--v")
    sp.add_argument("--s")
    sp.add_argument("--t", default=None)
    sp.add_argument("--t2", default=None)
    _add_common(sp)

    sp = sub.add_parser("walls", help="enumerate walls over a region")
    sp.add_argument("--v")
    sp.add_argument("--s-min")
    sp.add_argument("--s-max")
    sp.add_argument("--t2-min")
    sp.add_argument("--t2-max")
    sp.add_argument("--cap", type=int, default=10 ** 6)
    sp.add_argument("--format", choices=("json", "svg", "plain"),
                    default="json")
    _add_common(sp)

    sp = sub.add_parser("chambers", help="wall cuts on a vertical ray")
    sp.add_argument("--v")
    sp.add_argument("--s")
    sp.add_argument("--t2-min")
    sp.add_argument("--t2-max")
    sp.add_argument("--cut-category-walls", action="store_true", default=False)
    sp.add_argument("--cap", type=int, default=10 ** 6)
    _add_common(sp)

    sp = sub.add_parser("side", help="which side of a wall a point is on")
    sp.add_argument("--v")
    sp.add_argument("--w1")
    sp.add_argument("--s")
    sp.add_argument("--t2")
    _add_common(sp)

    sp = sub.add_parser("fm", help="Fourier-Mukai image of a class")
    sp.add_argument("--r1")
    sp.add_argument("--c")
    sp.add_argument("--v")
    _add_common(sp)

    sp = sub.add_parser("fm-charge", help="transformed stability data")
    sp.add_argument("--r1")
    sp.add_argument("--c")
    sp.add_argument("--s")
    sp.add_argument("--t")
    _add_common(sp)

    sp = sub.add_parser("ample", help="ample class of v at (s, t2)")
    sp.add_argument("--v")
    sp.add_argument("--s")
    sp.add_argument("--t2")
    _add_common(sp)

    sp = sub.add_parser("omega-x", help="t2 at which v meets a slope reference")
    sp.add_argument("--v")
    sp.add_argument("--s")
    sp.add_argument("--x")
    sp.add_argument("--absolute", action="store_true", default=False,
                    help="x is an absolute coordinate, not relative to s")
    _add_common(sp)

    sp = sub.add_parser("classify", help="classify an aligned decomposition")
    sp.add_argument("--parts", help="'n*r,d,a;...' (n optional)")
    sp.add_argument("--s")
    sp.add_argument("--t2")
    sp.add_argument("--bound", type=int, default=20)
    _add_common(sp)

    sp = sub.add_parser("k3-category-walls", help="category walls at beta = b*H")
    sp.add_argument("--b")
    sp.add_argument("--t2-max")
    _add_common(sp, surface_default=DEFAULT_SURFACE_K3)

    sp = sub.add_parser("plot", help="SVG wall diagram over a region")
    sp.add_argument("--v")
    sp.add_argument("--s-min")
    sp.add_argument("--s-max")
    sp.add_argument("--t2-min")
    sp.add_argument("--t2-max")
    sp.add_argument("--cap", type=int, default=10 ** 6)
    _add_common(sp)

    return ap


def _apply_config(args):
    if getattr(args, "config", None):
        try:
            with open(args.config) as fh:
                conf = json.load(fh)
        except (OSError, json.JSONDecodeError) as e:
            raise UsageError(f"cannot read config {args.config!r}: {e}")
        if not isinstance(conf, dict):
            raise UsageError("config must be a JSON object")
        for key, value in conf.items():
            dest = key.replace("-", "_")
            if not hasattr(args, dest):
                continue
            current = getattr(args, dest)
            if current is None or current is False:
                setattr(args, dest, value)
    if getattr(args, "surface", None) is None:
        args.surface = getattr(args, "_surface_default", DEFAULT_SURFACE)


def _need(args, *names):
    missing = [n for n in names if getattr(args, n.replace("-", "_")) is None]
    if missing:
        raise UsageError("missing required flag(s): "
                         + ", ".join("--" + n for n in missing))


# ---------------------------------------------------------------------------
# handlers

def _cmd_pair(args, S):
    _need(args, "x", "y")
    x, y = _parse_vec(args.x), _parse_vec(args.y)
    return {"pairing": mukai_pairing(x, y, S)}


def _cmd_twist(args, S):
    _need(args, "v", "s")
    v, s = _parse_vec(args.v), _parse_rat(args.s)
    ti = twisted_invariants(v, s, S)
    payload = {"r_beta": ti.r_b, "d_beta": ti.d_b, "a_beta": ti.a_b,
               "d_beta_min": d_beta_min(s, S)}
    if args.to is not None:
        to = _parse_rat(args.to)
        rt = retwist(ti, s, to, S)
        payload["retwisted"] = {"s": to, "r_beta": rt.r_b, "d_beta": rt.d_b,
                                "a_beta": rt.a_b}
    return payload


def _cmd_charge(args, S):
    _need(args, "v", "s")
    v, s = _parse_vec(args.v), _parse_rat(args.s)
    if args.t is not None:
        p = param(s, t=_parse_rat(args.t))
        z = central_charge(v, p, S)
        return {"re": z.re, "im": z.im_at(p.t)}
    if args.t2 is not None:
        p = param(s, t2=_parse_rat(args.t2))
        z = central_charge(v, p, S)
        return {"re": z.re, "im_over_t": z.im_over_t}
    raise UsageError("charge needs --t or --t2")


def _walls_of(args, S):
    _need(args, "v", "s-min", "s-max", "t2-min", "t2-max")
    v = _parse_vec(args.v)
    reg = Region(_parse_rat(args.s_min), _parse_rat(args.s_max),
                 _parse_rat(args.t2_min), _parse_rat(args.t2_max))
    return v, reg, enumerate_walls(v, S, reg, cap=args.cap)


def _cmd_walls(args, S):
    v, reg, walls = _walls_of(args, S)
    if args.format == "svg":
        print(_svg_walls(v, S, reg, walls))
        return None
    if args.format == "plain":
        for w in walls:
            g = w.geometry
            print(f"circle center_s={g.center_s} radius_sq={g.radius_sq} "
                  f"A={w.A} C={w.C} D={w.D} representative={_fmt_vec(w.v1)}")
        return None
    return {"v": v, "walls": [_wall_payload(w) for w in walls]}


def _cmd_chambers(args, S):
    _need(args, "v", "s", "t2-min", "t2-max")
    ray = chambers_on_ray(_parse_vec(args.v), S, _parse_rat(args.s),
                          (_parse_rat(args.t2_min), _parse_rat(args.t2_max)),
                          cut_category_walls=args.cut_category_walls,
                          cap=args.cap)
    return {"s": ray.s, "cut_points": list(ray.cut_points),
            "chambers": [list(ch) for ch in ray.chambers]}


def _cmd_side(args, S):
    _need(args, "v", "w1", "s", "t2")
    v, w1 = _parse_vec(args.v), _parse_vec(args.w1)
    p = param(_parse_rat(args.s), t2=_parse_rat(args.t2))
    return {"side": wall_side(v, w1, p, S),
            "rho": reduced_sigma(w1, v, p, S)}


def _parse_r1(args):
    try:
        return int(args.r1)
    except (TypeError, ValueError):
        raise UsageError(f"--r1 must be an integer, got {args.r1!r}")


def _cmd_fm(args, S):
    _need(args, "r1", "c", "v")
    T = make_transform(_parse_r1(args), _parse_rat(args.c), S)
    v = _parse_vec(args.v)
    return {"kernel": T.kernel_class(S), "image": fm_apply(T, v, S)}


def _cmd_fm_charge(args, S):
    _need(args, "r1", "c", "s", "t")
    T = make_transform(_parse_r1(args), _parse_rat(args.c), S)
    p = param(_parse_rat(args.s), t=_parse_rat(args.t))
    tc = transform_central_charge(T, p, S)
    return {"zeta_re": tc.zeta_re, "zeta_im": tc.zeta_im,
            "xi": tc.xi_coeff, "eta": tc.eta_coeff}


def _cmd_ample(args, S):
    _need(args, "v", "s", "t2")
    rep = ample_class(_parse_vec(args.v),
                      param(_parse_rat(args.s), t2=_parse_rat(args.t2)), S)
    return {"phi": rep.phi, "xi1": rep.xi1, "xi2": rep.xi2,
            "xi_omega": rep.xi_omega}


def _cmd_omega_x(args, S):
    _need(args, "v", "s", "x")
    v, s, x = _parse_vec(args.v), _parse_rat(args.s), _parse_rat(args.x)
    t2 = omega_sx(v, s, x, S) if args.absolute else omega_x(v, s, x, S)
    return {"t2": t2}


def _cmd_classify(args, S):
    _need(args, "parts", "s", "t2")
    rep = classify_decomposition(_parse_parts(args.parts),
                                 param(_parse_rat(args.s),
                                       t2=_parse_rat(args.t2)),
                                 S, bound=args.bound)
    payload = {"verdict": rep.verdict, "certified": rep.certified,
               "witnesses": list(rep.witnesses)}
    if rep.bound is not None:
        payload["bound"] = rep.bound
    return payload


def _cmd_k3_category_walls(args, S):
    _need(args, "b", "t2-max")
    walls = category_walls_k3(_parse_rat(args.b), S, _parse_rat(args.t2_max))
    return {"walls": [{"u": cw.u, "t2": cw.t2} for cw in walls]}


def _cmd_plot(args, S):
    v, reg, walls = _walls_of(args, S)
    print(_svg_walls(v, S, reg, walls))
    return None


_HANDLERS = {
    "pair": _cmd_pair,
    "twist": _cmd_twist,
    "charge": _cmd_charge,
    "walls": _cmd_walls,
    "chambers": _cmd_chambers,
    "side": _cmd_side,
    "fm": _cmd_fm,
    "fm-charge": _cmd_fm_charge,
    "ample": _cmd_ample,
    "omega-x": _cmd_omega_x,
    "classify": _cmd_classify,
    "k3-category-walls": _cmd_k3_category_walls,
    "plot": _cmd_plot,
}


def _fail(code: str, detail: str, exit_code: int) -> int:
    print(json.dumps({"error": code, "detail": detail},
                     sort_keys=True, separators=(",", ":")), file=sys.stderr)
    return exit_code


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("no command given (see --help)")
        _apply_config(args)
        S = _parse_surface(args.surface)
        payload = _HANDLERS[args.command](args, S)
        if payload is not None:
            _emit_json(payload, args.approx)
        return EXIT_OK
    except UsageError as e:
        return _fail(e.code, e.detail or str(e), EXIT_USAGE)
    except BoundOverflow as e:
        return _fail(e.code, e.detail, EXIT_BOUND)
    except MukaiStabError as e:
        return _fail(e.code, e.detail, EXIT_DOMAIN)
    except ValueError as e:
        return _fail("UsageError", str(e), EXIT_USAGE)


if __name__ == "__main__":
    sys.exit(main())
