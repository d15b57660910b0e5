"""Independent reference implementations used to pin expected test values.

Each function here is deliberately naive and uses a different algorithm from
the package under test, so that the two can cross-check each other.  Nothing
in this module imports the package.
"""

from __future__ import annotations

import itertools
import math


def _cross3(o, p, q):
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])


def bbox_triangle_points(a, b, c):
    """All lattice points of the closed triangle abc, by bounding-box scan.

    Degenerate input (collinear or repeated corners) yields the lattice
    points of the segment or single point.  Returns a set of (x, y) tuples.
    """
    pts = [tuple(a), tuple(b), tuple(c)]
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    area2 = _cross3(*pts)
    out = set()
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            p = (x, y)
            if area2 == 0:
                out_flag = _on_degenerate(pts, p)
            elif area2 > 0:
                out_flag = (
                    _cross3(pts[0], pts[1], p) >= 0
                    and _cross3(pts[1], pts[2], p) >= 0
                    and _cross3(pts[2], pts[0], p) >= 0
                )
            else:
                out_flag = (
                    _cross3(pts[0], pts[1], p) <= 0
                    and _cross3(pts[1], pts[2], p) <= 0
                    and _cross3(pts[2], pts[0], p) <= 0
                )
            if out_flag:
                out.add(p)
    return out


def _on_degenerate(pts, p):
    distinct = sorted(set(pts))
    if len(distinct) == 1:
        return p == distinct[0]
    # all points are collinear; the hull is the segment between the two
    # extremes of the projection onto the spanning direction
    u = distinct[0]
    v = max(distinct[1:], key=lambda w: abs(w[0] - u[0]) + abs(w[1] - u[1]))
    ux, uy = u
    dx, dy = v[0] - ux, v[1] - uy
    lo, hi = 0, dx * dx + dy * dy
    for w in distinct:
        t = (w[0] - ux) * dx + (w[1] - uy) * dy
        lo, hi = min(lo, t), max(hi, t)
    if _cross3(u, v, p) != 0:
        return False
    t = (p[0] - ux) * dx + (p[1] - uy) * dy
    return lo <= t <= hi


def det_int(rows):
    """Exact integer determinant of a square matrix (Bareiss elimination)."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(map(int, r)) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def minor_gcd_divisors(rows):
    """Invariant factors of an integer matrix via gcds of k×k minors.

    d_k = gcd of all k×k minors; the k-th invariant factor is d_k / d_{k-1}.
    Entirely different from elimination-based Smith reduction, so it serves
    as an oracle for it.  Returns the list of invariant factors (no 1-padding
    removed: leading 1s are included, zeros are not).
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    divisors = []
    prev = 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for ri in itertools.combinations(range(m), k):
            for ci in itertools.combinations(range(n), k):
                sub = [[rows[i][j] for j in ci] for i in ri]
                g = math.gcd(g, abs(det_int(sub)))
                if g == 1:
                    break
            if g == 1:
                break
        if g == 0:
            break
        divisors.append(g // prev)
        prev = g
    return divisors


def perm_sign_of(seq):
    """Sign of the permutation that sorts seq (distinct comparable entries)."""
    inversions = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[j] < seq[i]:
                inversions += 1
    return -1 if inversions % 2 else 1


def perm_sign_between(frm, to):
    """Sign of the permutation carrying the list frm onto the list to."""
    assert sorted(map(repr, frm)) == sorted(map(repr, to))
    index = {v: i for i, v in enumerate(to)}
    return perm_sign_of([index[v] for v in frm])


def hull_lattice_points(points):
    """Lattice points of the convex hull of the given points, naively.

    A point is in the hull iff it lies in some triangle (or degenerate
    triangle) spanned by three of the given points.
    """
    pts = sorted(set(map(tuple, points)))
    if len(pts) == 1:
        return {pts[0]}
    if len(pts) == 2:
        return bbox_triangle_points(pts[0], pts[1], pts[1])
    out = set()
    for tri in itertools.combinations(pts, 3):
        out |= bbox_triangle_points(*tri)
    return out


def distinct_subset_hulls(points):
    """All distinct convex-hull shapes spanned by nonempty subsets.

    Returns a set of frozensets of lattice points; two subsets with the same
    hull count once.  This enumerates, independently of any rounding logic,
    the closed rotation-1 paths lying inside the hull of `points`.
    """
    pts = sorted(set(map(tuple, points)))
    hulls = set()
    for r in range(1, len(pts) + 1):
        for sub in itertools.combinations(pts, r):
            hulls.add(frozenset(hull_lattice_points(sub)))
    return hulls
