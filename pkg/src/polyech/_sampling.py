"""Seeded random constructions shared by the verification suites and tests.

Every sampler takes a random.Random so a fixed seed reproduces the exact
sample sequence.  Closed paths are drawn as convex hulls of small point
sets wrapped to low rotation numbers; open paths are windows cut from
closed ones; periodic paths are corner walks with a nonzero period.
"""

from __future__ import annotations

import random
from typing import Sequence

from .lattice import GenericAngle, Vec
from .paths import (
    AdmissiblePath,
    corners,
    lattice_point_count,
    n_convex,
    restrict,
    traversal_edges,
)
from .chains import Generator


def closed_path(
    rng: random.Random,
    max_n: int = 3,
    max_points: int = 10,
    box: int = 6,
    min_edges: int = 0,
) -> AdmissiblePath:
    """One random n-convex closed path with at most max_points hull points."""
    while True:
        n = rng.randint(1, max_n)
        b = rng.randint(1, box)
        pts = [
            Vec(rng.randint(0, b), rng.randint(0, b))
            for _ in range(rng.randint(1, 6))
        ]
        path = n_convex(pts, n)
        if len(path.edges) < min_edges:
            continue
        if lattice_point_count(path) <= max_points:
            return path


def closed_paths(rng: random.Random, count: int, **kw) -> list[AdmissiblePath]:
    return [closed_path(rng, **kw) for _ in range(count)]


def open_path(
    rng: random.Random,
    equal_endpoints: bool = False,
    **kw,
) -> AdmissiblePath:
    """One random open path, cut out of a random closed path.

    With equal_endpoints the window spans one full turn starting at a random
    edge, so the two endpoints coincide; otherwise a proper sub-window with
    distinct endpoints is drawn.
    """
    while True:
        base = closed_path(rng, min_edges=2, **kw)
        tes = traversal_edges(base)
        n = base.rotation
        if equal_endpoints:
            e = rng.choice(tes)
            lo = GenericAngle(e.real.lap, e.real.dir)
            cut = restrict(base, lo, GenericAngle(lo.lap + n, lo.dir))
            if cut.edges:
                return cut
            continue
        i, j = sorted(rng.sample(range(len(tes)), 2))
        lo = GenericAngle(tes[i].real.lap, tes[i].real.dir)
        hi = GenericAngle(tes[j].real.lap, tes[j].real.dir)
        cut = restrict(base, lo, hi)
        a, b = cut.endpoints()
        if cut.edges and a != b:
            return cut


def open_paths(rng: random.Random, count: int, **kw) -> list[AdmissiblePath]:
    return [open_path(rng, **kw) for _ in range(count)]


def labeled(rng: random.Random, path: AdmissiblePath) -> Generator:
    """A generator over the path with independently random e/h labels."""
    return Generator(path, tuple(rng.choice("eh") for _ in path.edges))


def roundable_corners(path: AdmissiblePath) -> list[int]:
    """Indices of corners the rounding operation accepts (non-kink)."""
    return [i for i, c in enumerate(corners(path)) if not c.is_kink]


def periodic_paths(
    rng: random.Random,
    count: int,
    gammas: Sequence[Vec] = (Vec(1, 0), Vec(2, 0), Vec(1, 1)),
    max_n: int = 2,
) -> list[AdmissiblePath]:
    """Random periodic paths with small corner footprints."""
    from .homology import _box_corner_walks

    pool: list[AdmissiblePath] = []
    for gamma in gammas:
        for n in range(1, max_n + 1):
            pool.extend(_box_corner_walks(n, Vec(*gamma), ((0, 2), (0, 1))))
    return rng.choices(pool, k=count)


def generators(
    rng: random.Random,
    count: int,
    kinds: Sequence[str] = ("closed",),
    **kw,
) -> list[Generator]:
    """Random labeled generators over paths of the requested kinds."""
    out: list[Generator] = []
    periodic_pool: list[AdmissiblePath] = []
    while len(out) < count:
        kind = rng.choice(kinds)
        if kind == "closed":
            path = closed_path(rng, **kw)
        elif kind == "open":
            path = open_path(rng, equal_endpoints=rng.random() < 0.3, **kw)
        elif kind == "periodic":
            if not periodic_pool:
                periodic_pool = periodic_paths(rng, 64)
            path = periodic_pool.pop()
        else:
            raise ValueError(f"unknown sample kind {kind!r}")
        out.append(labeled(rng, path))
    return out
