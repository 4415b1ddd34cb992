"""Deterministic SVG figures for rank-two fans and hypersurface samples.

Supported apartments: the rank-two special linear one (n = 3), drawn in an
angle-preserving projection of the sum-zero plane, and the rank-two
symplectic one (n = 2), drawn in its own coordinates.  Maximal cones are
bounded by the rays normal to the polytope edges; those rays are computed
exactly from the weights and only converted to floats for drawing.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from .errors import UnsupportedRankError
from .sampling import random_fraction
from .weights import (GROUP_SL, GROUP_SP, WeightedCharacter, polytope_vertices,
                      skeleton_member, tropical_hypersurface_member,
                      weight_fan, weight_eval)


def _primitive(vec):
    g = 0
    for c in vec:
        g = math.gcd(g, abs(c))
    return tuple(c // g for c in vec) if g > 1 else tuple(vec)


def fan_rays(char: WeightedCharacter) -> list:
    """Exact integer directions of the rays of the rank-two fan, one per
    polytope edge: the locus where two adjacent vertices tie and dominate."""
    verts = sorted(polytope_vertices(char))
    weights = char.weights
    rays = set()
    for a, b in itertools.combinations(verts, 2):
        diff = tuple(int(p - q) for p, q in zip(a, b))
        if char.group == GROUP_SL:
            d = (diff[1] - diff[2], diff[2] - diff[0], diff[0] - diff[1])
        else:
            d = (-diff[1], diff[0])
        if not any(d):
            continue
        for cand in (d, tuple(-c for c in d)):
            top = weight_eval(a, cand)
            if all(weight_eval(mu, cand) <= top for mu in weights):
                rays.add(_primitive(cand))
                break
    return sorted(rays)


def _project(char, coords):
    if char.group == GROUP_SL:
        x1, x2, x3 = (float(c) for c in coords)
        return ((x1 - x2) / math.sqrt(2.0),
                (x1 + x2 - 2.0 * x3) / math.sqrt(6.0))
    x1, x2 = (float(c) for c in coords)
    return (x1, x2)


def _check_rank_two(char):
    if char.group == GROUP_SL and char.rank == 3:
        return
    if char.group == GROUP_SP and char.rank == 2:
        return
    raise UnsupportedRankError("figures exist for rank-two apartments only")


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def render_fan_svg(char: WeightedCharacter, *, p: int | None = None,
                   samples: int = 0, seed: int = 0, walls: bool = False,
                   size: int = 560) -> str:
    """Fan figure: cone boundary rays, optional wall lattice, and optionally
    a seeded overlay of sampled hypersurface members."""
    _check_rank_two(char)
    half = size / 2.0
    unit = size / 9.0

    def to_screen(xy):
        return (half + unit * xy[0], half - unit * xy[1])

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]

    if walls:
        seen = set()
        if char.group == GROUP_SL:
            pairs = [(0, 1), (0, 2), (1, 2)]
            for (i, j), m in itertools.product(pairs, range(-3, 4)):
                base = [Fraction(0)] * 3
                base[i] += Fraction(m, 2)
                base[j] -= Fraction(m, 2)
                diff = [0, 0, 0]
                diff[i], diff[j] = 1, -1
                direction = (diff[1] - diff[2], diff[2] - diff[0],
                             diff[0] - diff[1])
                bx, by = _project(char, base)
                dx, dy = _project(char, direction)
                norm = math.hypot(dx, dy)
                dx, dy = dx / norm, dy / norm
                key = (round(bx, 6), round(by, 6), round(dx, 6), round(dy, 6))
                if key in seen:
                    continue
                seen.add(key)
                x0, y0 = to_screen((bx - 8 * dx, by - 8 * dy))
                x1, y1 = to_screen((bx + 8 * dx, by + 8 * dy))
                parts.append(
                    f'<line x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x1)}" '
                    f'y2="{_fmt(y1)}" stroke="#dddddd" stroke-width="1"/>')
        else:
            for k in range(-3, 4):
                for axis in (0, 1):
                    c = k / 2.0
                    pts = ((c, -8.0), (c, 8.0)) if axis == 0 else ((-8.0, c), (8.0, c))
                    (x0, y0), (x1, y1) = (to_screen(pt) for pt in pts)
                    parts.append(
                        f'<line x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x1)}" '
                        f'y2="{_fmt(y1)}" stroke="#dddddd" stroke-width="1"/>')
                for sign in (1, -1):
                    (x0, y0) = to_screen((-8.0, sign * -8.0 + k))
                    (x1, y1) = to_screen((8.0, sign * 8.0 + k))
                    parts.append(
                        f'<line x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x1)}" '
                        f'y2="{_fmt(y1)}" stroke="#dddddd" stroke-width="1"/>')

    rays = fan_rays(char)
    for ray in rays:
        dx, dy = _project(char, ray)
        norm = math.hypot(dx, dy)
        x0, y0 = to_screen((0.0, 0.0))
        x1, y1 = to_screen((4.2 * dx / norm, 4.2 * dy / norm))
        parts.append(
            f'<line x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x1)}" '
            f'y2="{_fmt(y1)}" stroke="#222222" stroke-width="2" '
            f'data-ray="{",".join(str(c) for c in ray)}"/>')

    if samples:
        rng = random.Random(seed)
        fan = weight_fan(char)
        pp = p if p is not None else 2
        kept = 0
        for _ in range(samples):
            coords = tuple(random_fraction(rng, 16, 4) for _ in range(char.rank))
            member = tropical_hypersurface_member(char, pp, coords)
            if member != skeleton_member(fan, coords):
                raise AssertionError("hypersurface and skeleton disagree in figure")
            if not member:
                continue
            kept += 1
            x, y = to_screen(_project(char, coords))
            parts.append(
                f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="2.4" fill="#cc2222" '
                f'fill-opacity="0.7"/>')
        parts.append(f'<!-- hypersurface samples kept: {kept} of {samples} -->')

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
