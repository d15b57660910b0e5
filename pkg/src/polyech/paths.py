"""Admissible lattice-polygon paths: construction, corners, rounding, order.

A path is stored as a finite multiplicity function on circle angles (one
multiplicity per primitive direction and lap) together with an anchor point
resolving the translation ambiguity.  Open paths live on an interval with
generic-cut endpoints; closed and periodic paths live on the circle of
circumference 2*pi*n.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Callable, Iterable, Mapping, Sequence, Union

from .lattice import (
    ExtendedAngle,
    GenericAngle,
    Vec,
    angle_less,
    angle_sort_key,
    antipode,
    cross,
    dot,
    hull_chain,
    lattice_points_in_hull,
    lattice_points_in_triangle,
    primitive_of,
    shift_laps,
)

GAMMA0 = GenericAngle(0, Vec(1, 0))


@dataclass(frozen=True, slots=True)
class Open:
    lo: GenericAngle
    hi: GenericAngle


@dataclass(frozen=True, slots=True)
class Closed:
    n: int


@dataclass(frozen=True, slots=True)
class Periodic:
    n: int
    gamma: Vec


Kind = Union[Open, Closed, Periodic]


@dataclass(frozen=True, slots=True)
class AdmissiblePath:
    """An admissible path: kind, sorted (angle, multiplicity) edges, anchor.

    For Closed/Periodic kinds the anchor is the path's value on the corner
    containing the cut just after direction (1,0) at lap 0; for Open kinds it
    is the left endpoint (the value at the interval's lo cut).
    """

    kind: Kind
    edges: tuple[tuple[ExtendedAngle, int], ...]
    anchor: Vec

    @property
    def rotation(self) -> int | None:
        if isinstance(self.kind, (Closed, Periodic)):
            return self.kind.n
        return None

    @property
    def gamma(self) -> Vec:
        """Displacement per full parameter period (zero for closed paths)."""
        if isinstance(self.kind, Periodic):
            return self.kind.gamma
        if isinstance(self.kind, Closed):
            return Vec(0, 0)
        raise ValueError("open paths have no period")

    @property
    def is_constant(self) -> bool:
        return not self.edges

    def mult(self, angle: ExtendedAngle) -> int:
        for a, m in self.edges:
            if a == angle:
                return m
        return 0

    def angles(self) -> tuple[ExtendedAngle, ...]:
        return tuple(a for a, _ in self.edges)

    def total_displacement(self) -> Vec:
        out = Vec(0, 0)
        for a, m in self.edges:
            out = out + m * a.dir
        return out

    def endpoints(self) -> tuple[Vec, Vec]:
        if not isinstance(self.kind, Open):
            raise ValueError("endpoints are defined for open paths only")
        return self.anchor, self.anchor + self.total_displacement()


def make_path(
    kind: Kind,
    edges: Iterable[tuple[ExtendedAngle, int]],
    anchor: Vec,
) -> AdmissiblePath:
    """Validate and build an admissible path.

    Angles must be distinct; multiplicities positive.  Closed paths must sum
    to zero displacement, periodic ones to their (nonzero) period; open-path
    angles must lie strictly inside the interval.
    """
    anchor = Vec(*anchor)
    edge_list = [(a, int(m)) for a, m in edges]
    for a, m in edge_list:
        if not isinstance(a, ExtendedAngle):
            raise ValueError(f"edge angle must be an ExtendedAngle, got {a!r}")
        if m < 1:
            raise ValueError(f"multiplicity must be >= 1, got {m} at {a}")
    if len({a for a, _ in edge_list}) != len(edge_list):
        raise ValueError("duplicate edge angles")
    edge_list.sort(key=lambda e: angle_sort_key(e[0]))

    if isinstance(kind, (Closed, Periodic)):
        n = kind.n
        if n < 1:
            raise ValueError("rotation number must be >= 1")
        for a, _ in edge_list:
            if not 0 <= a.lap < n:
                raise ValueError(f"angle lap {a.lap} outside fundamental domain [0,{n})")
        total = Vec(0, 0)
        for a, m in edge_list:
            total = total + m * a.dir
        if isinstance(kind, Closed):
            if total != Vec(0, 0):
                raise ValueError(f"closed path displacement {total} != 0")
        else:
            if kind.gamma == Vec(0, 0):
                raise ValueError("periodic path needs a nonzero period")
            if total != kind.gamma:
                raise ValueError(f"periodic displacement {total} != {kind.gamma}")
    elif isinstance(kind, Open):
        if not angle_less(kind.lo, kind.hi):
            raise ValueError("open interval must have lo < hi")
        for a, _ in edge_list:
            if not (angle_less(kind.lo, a) and angle_less(a, kind.hi)):
                raise ValueError(f"edge angle {a} outside the open interval")
    else:
        raise ValueError(f"unknown kind {kind!r}")

    return AdmissiblePath(kind, tuple(edge_list), anchor)


def _fund(angle, n: int | None):
    if n is None:
        return angle
    return type(angle)(angle.lap % n, angle.dir)


@dataclass(frozen=True, slots=True)
class Corner:
    """A maximal angle gap between consecutive edges.

    prev/next are the realized (unwrapped) angles of the adjacent edges, so
    next is strictly greater than prev; for the wrap-around corner of a
    closed or periodic path next exceeds the fundamental domain.  A constant
    closed path has a single corner with no adjacent edges.
    """

    prev: ExtendedAngle | None
    next: ExtendedAngle | None
    at: Vec
    is_kink: bool


@dataclass(frozen=True, slots=True)
class _TravEdge:
    real: ExtendedAngle
    fund: ExtendedAngle
    mult: int
    start: Vec


def traversal_edges(path: AdmissiblePath) -> list[_TravEdge]:
    """Edges in traversal order with realized angles and start positions.

    Closed/periodic traversal begins at the cut just after direction (1,0)
    on lap 0, so an edge exactly at that angle is traversed last, realized
    one full turn later.
    """
    n = path.rotation
    out: list[_TravEdge] = []
    pos = path.anchor
    if n is None:
        for a, m in path.edges:
            out.append(_TravEdge(a, a, m, pos))
            pos = pos + m * a.dir
        return out
    edges = list(path.edges)
    if edges and edges[0][0] == ExtendedAngle(0, Vec(1, 0)):
        first = edges.pop(0)
        edges.append((shift_laps(first[0], n), first[1]))
    for a, m in edges:
        out.append(_TravEdge(a, _fund(a, n), m, pos))
        pos = pos + m * a.dir
    return out


def corners(path: AdmissiblePath) -> tuple[Corner, ...]:
    """All corners of the path, with positions (internal gaps only for Open)."""
    trav = traversal_edges(path)
    n = path.rotation
    if n is not None and not trav:
        return (Corner(None, None, path.anchor, True),)
    out = []
    count = len(trav) - 1 if n is None else len(trav)
    for i in range(count):
        e1 = trav[i]
        if i + 1 < len(trav):
            nxt = trav[i + 1].real
        else:
            nxt = shift_laps(trav[0].real, n)
        at = e1.start + e1.mult * e1.real.dir
        kink = angle_less(antipode(e1.real), nxt)
        out.append(Corner(e1.real, nxt, at, kink))
    return tuple(out)


@dataclass(frozen=True, slots=True)
class Rounding:
    """Everything the chain level needs to know about one corner rounding."""

    path: AdmissiblePath
    theta1: ExtendedAngle  # fundamental angle of the incoming consumed edge
    theta2: ExtendedAngle  # fundamental angle of the outgoing consumed edge
    stub1: bool  # incoming edge survives with multiplicity one less
    stub2: bool
    inserted: tuple[tuple[ExtendedAngle, ExtendedAngle], ...]  # (fund, real)

    def in_interval(self) -> tuple[tuple[ExtendedAngle, ExtendedAngle], ...]:
        """(fund, real) for every rounded-path edge in the closed corner arc."""
        out = []
        if self.stub1:
            out.append((self.theta1, self.theta1))
        out.extend(self.inserted)
        if self.stub2:
            out.append((self.theta2, self.theta2))
        return tuple(out)


def _round_detail(path: AdmissiblePath, corner: Corner) -> Rounding:
    if corner.is_kink:
        raise ValueError("cannot round a kink")
    n = path.rotation
    th1r, th2r = corner.prev, corner.next
    th1f, th2f = _fund(th1r, n), _fund(th2r, n)
    d1, d2 = th1r.dir, th2r.dir
    p = corner.at
    a, b = p - d1, p + d2

    tri = lattice_points_in_triangle(a, p, b)
    chain = hull_chain(tri - {p}, a, b)
    segs: list[tuple[Vec, int]] = []
    for u, v in zip(chain, chain[1:]):
        d, m = primitive_of(v - u)
        if segs and segs[-1][0] == d:
            segs[-1] = (d, segs[-1][1] + m)
        else:
            segs.append((d, m))

    mults = {ang: m for ang, m in path.edges}
    for th in (th1f, th2f):
        if mults[th] == 1:
            del mults[th]
        else:
            mults[th] -= 1
    inserted = []
    for d, m in segs:
        real = _place_angle(d, th1r, th2r)
        fund = _fund(real, n)
        if fund in mults:
            raise AssertionError("inserted edge collides with an existing angle")
        mults[fund] = m
        inserted.append((fund, real))

    if n is None:
        anchor = path.anchor
    else:
        wraps = (th2r.lap - th2f.lap) // n
        gamma = path.gamma
        cut = GenericAngle(th2f.lap, th2f.dir)
        pos_at_cut = p + path.mult(th2f) * d2 - wraps * gamma
        anchor = pos_at_cut
        for ang, m in mults.items():
            if angle_less(GAMMA0, ang) and angle_less(ang, cut):
                anchor = anchor - m * ang.dir

    new_path = make_path(path.kind, mults.items(), anchor)
    return Rounding(
        path=new_path,
        theta1=th1f,
        theta2=th2f,
        stub1=th1f in mults,
        stub2=th2f in mults,
        inserted=tuple(inserted),
    )


def _place_angle(d: Vec, lo: ExtendedAngle, hi: ExtendedAngle) -> ExtendedAngle:
    """The unique realized angle of direction d strictly between lo and hi."""
    for lap in range(lo.lap, hi.lap + 1):
        cand = ExtendedAngle(lap, d)
        if angle_less(lo, cand) and angle_less(cand, hi):
            return cand
    raise AssertionError(f"direction {d} has no angle in ({lo}, {hi})")


def round_corner(path: AdmissiblePath, corner: Corner) -> AdmissiblePath:
    """Round a non-kink corner: decrement the adjacent edges, insert the hull
    chain of the corner triangle's lattice points, keep the rest unchanged."""
    return _round_detail(path, corner).path


def position_at_cut(path: AdmissiblePath, cut: GenericAngle) -> Vec:
    """The path's value at a generic cut.

    Open paths accept cuts within [lo, hi]; closed/periodic paths accept any
    lap (each full turn adds one period to the position).
    """
    n = path.rotation
    if n is None:
        kind = path.kind
        if angle_less(cut, kind.lo) or angle_less(kind.hi, cut):
            raise ValueError("cut outside the parametrizing interval")
        pos = path.anchor
        for a, m in path.edges:
            if angle_less(a, cut):
                pos = pos + m * a.dir
        return pos
    q, r = divmod(cut.lap, n)
    cutf = GenericAngle(r, cut.dir)
    pos = path.anchor + q * path.gamma
    for a, m in path.edges:
        if angle_less(GAMMA0, a) and angle_less(a, cutf):
            pos = pos + m * a.dir
    return pos


def restrict(path: AdmissiblePath, lo: GenericAngle, hi: GenericAngle) -> AdmissiblePath:
    """The open path tracing a closed or periodic path over the window (lo, hi).

    Edge angles are realized on unreduced laps, so a window of one full turn
    per rotation gives an open path with equal endpoints (for closed paths)
    and longer windows repeat edges one period up.

    >>> sq = n_convex([Vec(0, 0), Vec(1, 0), Vec(0, 1), Vec(1, 1)], 1)
    >>> piece = restrict(sq, GenericAngle(0, Vec(0, 1)), GenericAngle(0, Vec(-1, 0)))
    >>> [(a.dir, m) for a, m in piece.edges]
    [(Vec(x=-1, y=0), 1)]
    """
    n = path.rotation
    if n is None:
        raise ValueError("restriction applies to closed or periodic paths")
    if not angle_less(lo, hi):
        raise ValueError("empty restriction window")
    edges = []
    for te in traversal_edges(path):
        for k in range(lo.lap // n - 2, hi.lap // n + 3):
            a = shift_laps(te.real, k * n)
            if angle_less(lo, a) and angle_less(a, hi):
                edges.append((a, te.mult))
    return make_path(Open(lo, hi), edges, position_at_cut(path, lo))


def _same_type(lam: AdmissiblePath, big: AdmissiblePath) -> bool:
    if type(lam.kind) is not type(big.kind):
        return False
    if isinstance(lam.kind, Open):
        return (
            lam.kind == big.kind
            and lam.endpoints() == big.endpoints()
        )
    return lam.kind == big.kind


def leq(lam: AdmissiblePath, big: AdmissiblePath) -> bool:
    """Whether lam lies weakly to the left of every tangent line of big.

    Exact: on each maximal angle interval where the difference of values is
    constant, the left-of condition is checked against the interval's
    endpoint directions, with the interval lengths pi and above handled
    separately (an interval of length > pi forces equality; exactly pi
    forces the difference to point against the boundary direction).
    """
    if not _same_type(lam, big):
        raise ValueError("paths of different type are incomparable")
    n = lam.rotation
    bps = sorted({a for a, _ in lam.edges} | {a for a, _ in big.edges}, key=angle_sort_key)
    if not bps:
        return lam.anchor == big.anchor

    def w_after(angle: ExtendedAngle) -> Vec:
        cut = GenericAngle(angle.lap, angle.dir)
        return position_at_cut(lam, cut) - position_at_cut(big, cut)

    if n is None:
        lo, hi = lam.kind.lo, lam.kind.hi
        if position_at_cut(lam, lo) != position_at_cut(big, lo):
            return False
        diffs = [position_at_cut(lam, lo) - position_at_cut(big, lo)]
        intervals: list[tuple] = [(None, bps[0], diffs[0])]
        for i, a in enumerate(bps):
            nxt = bps[i + 1] if i + 1 < len(bps) else None
            intervals.append((a, nxt, w_after(a)))
    else:
        intervals = []
        for i, a in enumerate(bps):
            nxt = bps[i + 1] if i + 1 < len(bps) else shift_laps(bps[0], n)
            intervals.append((a, nxt, w_after(a)))

    for alpha, beta, w in intervals:
        if w == Vec(0, 0):
            continue
        if alpha is None or beta is None:
            # open-path end intervals: the difference must vanish there
            return False
        anti = antipode(alpha)
        if angle_less(anti, beta):
            return False
        if anti == beta:
            if not (cross(alpha.dir, w) == 0 and dot(alpha.dir, w) < 0):
                return False
        else:
            if cross(alpha.dir, w) < 0 or cross(beta.dir, w) < 0:
                return False
    return True


def enumerate_below(path: AdmissiblePath) -> set[AdmissiblePath]:
    """The full set of paths reachable from `path` by corner roundings."""
    seen = {path}
    frontier = [path]
    while frontier:
        nxt = []
        for p in frontier:
            for c in corners(p):
                if c.is_kink:
                    continue
                q = round_corner(p, c)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def translate(path: AdmissiblePath, w: Vec) -> AdmissiblePath:
    return replace(path, anchor=path.anchor + Vec(*w))


def canonical_translation(path: AdmissiblePath) -> AdmissiblePath:
    """The translate whose lexicographically minimal marked point is (0,0).

    Marked points are the corner positions (plus endpoints for open paths);
    the lexicographic minimum of a traversed edge is attained at one of its
    ends, so this normalizes the full traversed point set for closed and
    open paths.  For periodic paths the fundamental traversal window is
    normalized.
    """
    pts = [c.at for c in corners(path)]
    if isinstance(path.kind, Open):
        pts.extend(path.endpoints())
    if not pts:
        pts = [path.anchor]
    m = min(pts)
    return translate(path, -Vec(*m))


Matrix = tuple[tuple[int, int], tuple[int, int]]


def _apply_matrix(a: Matrix, v: Vec) -> Vec:
    return Vec(a[0][0] * v.x + a[0][1] * v.y, a[1][0] * v.x + a[1][1] * v.y)


def act_symmetry(
    path: AdmissiblePath,
    a: Matrix,
    lift: Callable[[Vec], int],
) -> AdmissiblePath:
    """Apply an orientation-preserving lattice symmetry.

    `a` is a determinant-one integer matrix acting on directions and the
    anchor; `lift` gives, for each original direction, the lap offset of its
    image (the combinatorial shadow of the circle map).  The image path is
    the symmetric path up to translation, re-anchored by the image of the
    anchor.
    """
    det = a[0][0] * a[1][1] - a[0][1] * a[1][0]
    if det != 1:
        raise ValueError(f"matrix determinant must be 1, got {det}")
    n = path.rotation

    def map_angle(ang):
        d2 = _apply_matrix(a, ang.dir)
        lap = ang.lap + lift(ang.dir)
        if n is not None:
            lap %= n
        return type(ang)(lap, d2)

    new_edges = [(map_angle(ang), m) for ang, m in path.edges]
    if isinstance(path.kind, Open):
        kind: Kind = Open(map_angle(path.kind.lo), map_angle(path.kind.hi))
    elif isinstance(path.kind, Closed):
        kind = path.kind
    else:
        kind = Periodic(path.kind.n, _apply_matrix(a, path.kind.gamma))
    return make_path(kind, new_edges, _apply_matrix(a, path.anchor))


def n_convex(points: Iterable[Vec], n: int) -> AdmissiblePath:
    """The closed path wrapping the convex hull of `points` n times.

    Degenerate hulls are allowed: two points give a 2-gon, one point the
    constant path.
    """
    if n < 1:
        raise ValueError("rotation number must be >= 1")
    pts = sorted({Vec(*p) for p in points})
    if not pts:
        raise ValueError("empty point set")
    from .lattice import _strict_hull

    verts = _strict_hull(pts)
    if len(verts) == 1:
        return make_path(Closed(n), [], verts[0])
    sides = []
    k = len(verts)
    for i in range(k):
        u, v = verts[i], verts[(i + 1) % k]
        d, m = primitive_of(v - u)
        sides.append((u, d, m))
    if len(verts) == 2:
        # out-and-back along the segment
        u, v = verts
        d, m = primitive_of(v - u)
        sides = [(u, d, m), (v, -d, m)]
    sides.sort(key=lambda s: angle_sort_key(ExtendedAngle(0, s[1])))
    first_start, first_dir, first_mult = sides[0]
    anchor = first_start + (first_mult * first_dir if first_dir == Vec(1, 0) else Vec(0, 0))
    edges = [
        (ExtendedAngle(lap, d), m)
        for (_, d, m) in sides
        for lap in range(n)
    ]
    return make_path(Closed(n), edges, anchor)


def lattice_point_count(path: AdmissiblePath) -> int:
    """Number of lattice points enclosed by a closed path (with its region)."""
    if not isinstance(path.kind, Closed):
        raise ValueError("lattice point count applies to closed paths")
    pts = [c.at for c in corners(path)] or [path.anchor]
    return len(lattice_points_in_hull(pts))


def box_path(a: int, b: int, k: int, n: int) -> AdmissiblePath:
    """The periodic path wrapping [0,a-1]x[0,b-1] with an x-axis slide of k.

    Each of the n laps goes once around the rectangle, except that the
    closing horizontal edge at the end of the final lap has length a-1+k;
    the period is (k, 0).
    """
    if min(a, b, k, n) < 1:
        raise ValueError("box parameters must be >= 1")
    edges = []
    for lap in range(n):
        for d, m in (
            (Vec(1, 0), (a - 1 + k) if lap == 0 else (a - 1)),
            (Vec(0, 1), b - 1),
            (Vec(-1, 0), a - 1),
            (Vec(0, -1), b - 1),
        ):
            if m > 0:
                edges.append((ExtendedAngle(lap, d), m))
    return make_path(Periodic(n, Vec(k, 0)), edges, Vec(a - 1, 0))


def x_axis_path(seq: Sequence[int], n: int) -> AdmissiblePath:
    """The closed rotation-n path on the x-axis with corner values `seq`.

    seq lists the 2n corner values (a_0, ..., a_{2n-1}); even slots travel
    from a_i down to a_{i+1}, odd slots back up, and the sequence closes with
    a_{2n} = a_0, so it must alternate a_0 >= a_1 <= a_2 >= ...
    """
    seq = [int(v) for v in seq]
    if len(seq) != 2 * n:
        raise ValueError(f"need {2 * n} corner values, got {len(seq)}")
    edges = []
    for i in range(2 * n):
        nxt = seq[(i + 1) % (2 * n)]
        if i % 2 == 0:
            m = seq[i] - nxt
            ang = ExtendedAngle(i // 2, Vec(-1, 0))
        else:
            m = nxt - seq[i]
            ang = ExtendedAngle(((i + 1) // 2) % n, Vec(1, 0))
        if m < 0:
            raise ValueError(f"corner values must alternate, bad slot {i}")
        if m > 0:
            edges.append((ang, m))
    return make_path(Closed(n), edges, Vec(seq[0], 0))


def x_axis_corner_values(path: AdmissiblePath) -> list[int]:
    """Recover the 2n corner values of an x-axis path (inverse of x_axis_path)."""
    n = path.rotation
    if n is None or not isinstance(path.kind, Closed):
        raise ValueError("x-axis paths are closed")
    vals = [path.anchor.x]
    for i in range(2 * n):
        ang, sign = _x_slot_angle(i, n)
        m = path.mult(ang)
        vals.append(vals[-1] + sign * m)
    if vals[-1] != vals[0] or path.anchor.y != 0:
        raise ValueError("path is not an x-axis path")
    for a, _ in path.edges:
        if a.dir.y != 0:
            raise ValueError("path is not an x-axis path")
    return vals[:-1]


def _x_slot_angle(i: int, n: int) -> tuple[ExtendedAngle, int]:
    if i % 2 == 0:
        return ExtendedAngle(i // 2, Vec(-1, 0)), -1
    return ExtendedAngle(((i + 1) // 2) % n, Vec(1, 0)), 1


# -- serialization -----------------------------------------------------------


def _angle_to_json(a) -> dict:
    return {"lap": a.lap, "dir": [a.dir.x, a.dir.y]}


def _angle_from_json(obj, cls):
    return cls(int(obj["lap"]), Vec(int(obj["dir"][0]), int(obj["dir"][1])))


def path_to_json(path: AdmissiblePath) -> dict:
    if isinstance(path.kind, Open):
        kind = {
            "type": "open",
            "lo": _angle_to_json(path.kind.lo),
            "hi": _angle_to_json(path.kind.hi),
        }
    elif isinstance(path.kind, Closed):
        kind = {"type": "closed", "n": path.kind.n}
    else:
        kind = {
            "type": "periodic",
            "n": path.kind.n,
            "gamma": [path.kind.gamma.x, path.kind.gamma.y],
        }
    return {
        "kind": kind,
        "edges": [
            {"dir": [a.dir.x, a.dir.y], "lap": a.lap, "mult": m}
            for a, m in path.edges
        ],
        "anchor": [path.anchor.x, path.anchor.y],
    }


def path_from_json(obj: Mapping) -> AdmissiblePath:
    kobj = obj["kind"]
    t = kobj["type"]
    if t == "open":
        kind: Kind = Open(
            _angle_from_json(kobj["lo"], GenericAngle),
            _angle_from_json(kobj["hi"], GenericAngle),
        )
    elif t == "closed":
        kind = Closed(int(kobj["n"]))
    elif t == "periodic":
        kind = Periodic(
            int(kobj["n"]), Vec(int(kobj["gamma"][0]), int(kobj["gamma"][1]))
        )
    else:
        raise ValueError(f"unknown path kind {t!r}")
    edges = [
        (
            ExtendedAngle(int(e["lap"]), Vec(int(e["dir"][0]), int(e["dir"][1]))),
            int(e["mult"]),
        )
        for e in obj["edges"]
    ]
    anchor = Vec(int(obj["anchor"][0]), int(obj["anchor"][1]))
    return make_path(kind, edges, anchor)


def path_sort_key(path: AdmissiblePath) -> str:
    """Deterministic serialization string, used to order path collections."""
    return json.dumps(path_to_json(path), sort_keys=True, separators=(",", ":"))
