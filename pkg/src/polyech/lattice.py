"""Exact lattice-plane primitives: vectors, unrolled-circle angles, hulls.

All arithmetic is integer or rational; no floating point anywhere.  Angles
are represented combinatorially by a primitive integer direction plus a lap
count on the unrolled circle, so comparisons, antipodes and interval tests
are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, NamedTuple, Union


class Vec(NamedTuple):
    """Integer point or displacement in the plane."""

    x: int
    y: int

    def __add__(self, other: "Vec") -> "Vec":
        return Vec(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec") -> "Vec":
        return Vec(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Vec":
        return Vec(-self.x, -self.y)

    def __mul__(self, k: int) -> "Vec":
        return Vec(self.x * k, self.y * k)

    def __rmul__(self, k: int) -> "Vec":
        return Vec(self.x * k, self.y * k)


def cross(u: Vec, v: Vec) -> int:
    """Determinant of the 2x2 matrix with columns u, v."""
    return u.x * v.y - u.y * v.x


def dot(u: Vec, v: Vec) -> int:
    return u.x * v.x + u.y * v.y


def primitive_of(v: Vec) -> tuple[Vec, int]:
    """Split a nonzero integer vector into (primitive direction, multiplicity).

    >>> primitive_of(Vec(4, -6))
    (Vec(x=2, y=-3), 2)
    """
    if v.x == 0 and v.y == 0:
        raise ValueError("zero vector has no direction")
    g = math.gcd(abs(v.x), abs(v.y))
    return Vec(v.x // g, v.y // g), g


def is_primitive(v: Vec) -> bool:
    return (v.x, v.y) != (0, 0) and math.gcd(abs(v.x), abs(v.y)) == 1


def half_of(d: Vec) -> int:
    """0 if the direction's angle lies in [0, pi), else 1."""
    return 0 if (d.y > 0 or (d.y == 0 and d.x > 0)) else 1


@dataclass(frozen=True, slots=True)
class ExtendedAngle:
    """The angle of a primitive direction on lap `lap` of the unrolled circle.

    The realized angle is arg(dir) + 2*pi*lap with arg in [0, 2*pi).
    """

    lap: int
    dir: Vec

    def __post_init__(self):
        if not is_primitive(self.dir):
            raise ValueError(f"direction must be primitive, got {self.dir}")

    def __lt__(self, other):
        return angle_less(self, other)

    def __le__(self, other):
        return self == other or angle_less(self, other)

    def __gt__(self, other):
        return angle_less(other, self)

    def __ge__(self, other):
        return self == other or angle_less(other, self)


@dataclass(frozen=True, slots=True)
class GenericAngle:
    """A cut sitting just counterclockwise of the angle of `dir` on lap `lap`.

    Generic cuts never equal the angle of any lattice direction; one compares
    strictly greater than its own ExtendedAngle and strictly less than every
    later angle.
    """

    lap: int
    dir: Vec

    def __post_init__(self):
        if not is_primitive(self.dir):
            raise ValueError(f"direction must be primitive, got {self.dir}")

    def __lt__(self, other):
        return angle_less(self, other)

    def __le__(self, other):
        return self == other or angle_less(self, other)

    def __gt__(self, other):
        return angle_less(other, self)

    def __ge__(self, other):
        return self == other or angle_less(other, self)


Angle = Union[ExtendedAngle, GenericAngle]


def _position_cmp(a: Angle, b: Angle) -> int:
    """Compare realized angle positions, ignoring the generic nudge."""
    if a.lap != b.lap:
        return -1 if a.lap < b.lap else 1
    ha, hb = half_of(a.dir), half_of(b.dir)
    if ha != hb:
        return -1 if ha < hb else 1
    if a.dir == b.dir:
        return 0
    # within one open half-circle the cross product orders directions
    return -1 if cross(a.dir, b.dir) > 0 else 1


def angle_less(a: Angle, b: Angle) -> bool:
    """Strict order on realized angles; a generic cut follows its direction."""
    c = _position_cmp(a, b)
    if c != 0:
        return c < 0
    return isinstance(a, ExtendedAngle) and isinstance(b, GenericAngle)


def angle_cmp(a: Angle, b: Angle) -> int:
    """Three-way comparison consistent with angle_less."""
    c = _position_cmp(a, b)
    if c != 0:
        return c
    if type(a) is type(b):
        return 0
    return -1 if isinstance(a, ExtendedAngle) else 1


angle_sort_key = cmp_to_key(angle_cmp)


def antipode(a: Angle) -> Angle:
    """The angle (or cut) exactly pi counterclockwise of a."""
    return type(a)(a.lap + half_of(a.dir), -a.dir)


def shift_laps(a: Angle, k: int) -> Angle:
    return type(a)(a.lap + k, a.dir)


def theta_order_less(p: Vec, q: Vec, cut: GenericAngle) -> bool:
    """Strict total preorder on lattice points induced by a generic cut.

    p precedes q when p is further to the left of the cut direction, ties
    broken by going against the cut direction.  Distinct points always
    compare, so this induces a total order on any finite point set.
    """
    w = p - q
    c = cross(cut.dir, w)
    return c > 0 or (c == 0 and dot(cut.dir, w) < 0)


def theta_sorted(points: Iterable[Vec], cut: GenericAngle) -> list[Vec]:
    """Distinct points sorted ascending by the theta order of `cut`."""
    pts = sorted(set(points))
    d = cut.dir
    pts.sort(key=lambda p: (-cross(d, p), dot(d, p)))
    return pts


def _strict_hull(pts: list[Vec]) -> list[Vec]:
    """Counterclockwise hull vertices (no collinear points), pts sorted unique."""
    if len(pts) <= 1:
        return list(pts)

    def build(seq):
        out: list[Vec] = []
        for p in seq:
            while len(out) >= 2 and cross(out[-1] - out[-2], p - out[-1]) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = build(pts)
    upper = build(reversed(pts))
    cycle = lower[:-1] + upper[:-1]
    if len(cycle) == 0:
        cycle = [pts[0]]
    return cycle


def _segment_interior(u: Vec, v: Vec, pts: Iterable[Vec]) -> list[Vec]:
    d = v - u
    out = [
        p
        for p in pts
        if p != u and p != v and cross(d, p - u) == 0 and 0 < dot(d, p - u) < dot(d, d)
    ]
    out.sort(key=lambda p: dot(d, p - u))
    return out


def boundary_cycle(points: Iterable[Vec]) -> list[Vec]:
    """All input points on the convex-hull boundary, in ccw cyclic order.

    Collinear boundary points are retained.  A degenerate (collinear) input
    produces the out-and-back cycle along the segment.
    """
    pts = sorted({Vec(*p) for p in points})
    if not pts:
        raise ValueError("empty point set")
    verts = _strict_hull(pts)
    if len(verts) == 1:
        return verts
    if len(verts) == 2:
        u, v = verts
        mids = _segment_interior(u, v, pts)
        return [u, *mids, v, *reversed(mids)]
    cycle: list[Vec] = []
    k = len(verts)
    for i in range(k):
        u, v = verts[i], verts[(i + 1) % k]
        cycle.append(u)
        cycle.extend(_segment_interior(u, v, pts))
    return cycle


def hull_chain(points: Iterable[Vec], frm: Vec, to: Vec) -> list[Vec]:
    """Walk the hull boundary counterclockwise from frm to to.

    Both endpoints must be extreme points of the set.  Consecutive collinear
    points are kept; the caller merges them into multi-step edges.
    """
    frm, to = Vec(*frm), Vec(*to)
    if frm == to:
        return [frm]
    cycle = boundary_cycle(points)
    try:
        i = cycle.index(frm)
    except ValueError:
        raise ValueError(f"{frm} is not on the hull boundary") from None
    out = [frm]
    for step in range(1, len(cycle) + 1):
        p = cycle[(i + step) % len(cycle)]
        out.append(p)
        if p == to:
            return out
    raise ValueError(f"{to} is not on the hull boundary")


def segment_lattice_points(u: Vec, v: Vec) -> set[Vec]:
    if u == v:
        return {u}
    d, m = primitive_of(v - u)
    return {u + i * d for i in range(m + 1)}


def lattice_points_in_hull(points: Iterable[Vec]) -> set[Vec]:
    """All lattice points inside or on the convex hull of the given points."""
    pts = sorted({Vec(*p) for p in points})
    if not pts:
        raise ValueError("empty point set")
    verts = _strict_hull(pts)
    if len(verts) == 1:
        return {verts[0]}
    if len(verts) == 2:
        return segment_lattice_points(verts[0], verts[1])
    out: set[Vec] = set()
    ys = [p.y for p in verts]
    k = len(verts)
    for y in range(min(ys), max(ys) + 1):
        xs: list[Fraction] = []
        for i in range(k):
            u, v = verts[i], verts[(i + 1) % k]
            if u.y == v.y:
                if u.y == y:
                    xs.extend((Fraction(u.x), Fraction(v.x)))
            elif min(u.y, v.y) <= y <= max(u.y, v.y):
                t = Fraction(y - u.y, v.y - u.y)
                xs.append(u.x + t * (v.x - u.x))
        if xs:
            for x in range(math.ceil(min(xs)), math.floor(max(xs)) + 1):
                out.add(Vec(x, y))
    return out


def lattice_points_in_triangle(a: Vec, b: Vec, c: Vec) -> set[Vec]:
    """Lattice points of the closed (possibly degenerate) triangle abc."""
    return lattice_points_in_hull([a, b, c])
