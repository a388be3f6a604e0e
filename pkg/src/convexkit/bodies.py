"""Standard bodies, seeded random bodies, and disc approximants."""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import AmbientDimError
from .geometry import MAX_AMBIENT, MIN_AMBIENT, Polytope, convex_hull
from .linalg import as_scalar, as_vec


def box(*sides) -> Polytope:
    """Axis-aligned box [0, s1] x ... x [0, sn]."""
    sides = [as_scalar(s) for s in sides]
    pts = [()]
    for s in sides:
        pts = [p + (c,) for p in pts for c in (Fraction(0), s)]
    return convex_hull(pts)


def unit_square() -> Polytope:
    return box(1, 1)


def unit_cube() -> Polytope:
    return box(1, 1, 1)


def standard_simplex(n: int) -> Polytope:
    """conv{0, e1, ..., en}."""
    pts = [tuple(Fraction(0) for _ in range(n))]
    for i in range(n):
        e = [Fraction(0)] * n
        e[i] = Fraction(1)
        pts.append(tuple(e))
    return convex_hull(pts)


def diamond(r=1) -> Polytope:
    """2D cross-polytope conv{(+-r, 0), (0, +-r)}; area 2 r^2."""
    r = as_scalar(r)
    return convex_hull([(r, 0), (-r, 0), (0, r), (0, -r)])


def segment(a, b) -> Polytope:
    return convex_hull([as_vec(a), as_vec(b)], allow_degenerate=True)


def axis_segment(n: int, i: int, length=1) -> Polytope:
    """Segment from the origin to length*e_i in R^n."""
    e = [Fraction(0)] * n
    e[i] = as_scalar(length)
    return segment(tuple(Fraction(0) for _ in range(n)), tuple(e))


def disc_polygon(m: int) -> Polytope:
    """Inscribed 4m-gon approximating the unit disc, with rational vertices.

    Vertices lie exactly on the unit circle: each is ((1-t^2, 2t)) / (1+t^2)
    for a rational t close to tan(theta/2), theta running over first-quadrant
    angles offset by half a step so no vertex sits exactly on an axis.  The
    polygon is contained in the disc, so every support value is a rational
    lower bound for the disc's; at m = 10**4 the deficit is below 1e-8.
    """
    import math

    if m < 1:
        raise ValueError("need m >= 1")
    quarter = []
    for k in range(m):
        theta = math.pi * (2 * k + 1) / (4 * m)
        t = Fraction(math.tan(theta / 2)).limit_denominator(4 * m * 40)
        den = 1 + t * t
        quarter.append(((1 - t * t) / den, 2 * t / den))
    pts = []
    for x, y in quarter:
        pts.extend([(x, y), (-y, x), (-x, -y), (y, -x)])
    return convex_hull(pts)


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-100, 100), rng.randint(1, 10))


def random_polytope(dim: int, n_points: int, rng: random.Random) -> Polytope:
    """Hull of seeded random rational points, retried until full-dimensional.

    Numerators lie in [-100, 100], denominators in [1, 10]; identical rng
    state yields an identical body.
    """
    if not MIN_AMBIENT <= dim <= MAX_AMBIENT:
        raise AmbientDimError(f"dim must be in {MIN_AMBIENT}..{MAX_AMBIENT}")
    if n_points < dim + 1:
        raise ValueError("need at least dim + 1 points")
    while True:
        pts = [
            tuple(random_rational(rng) for _ in range(dim)) for _ in range(n_points)
        ]
        body = convex_hull(pts, allow_degenerate=True)
        if body.is_full_dimensional:
            return body


def random_direction(dim: int, rng: random.Random):
    """Nonzero rational direction with small entries."""
    while True:
        w = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(dim))
        if any(x != 0 for x in w):
            return w
