"""Unit tests for the integer plane primitives and the unrolled angle order."""

from __future__ import annotations

import functools

import pytest
from hypothesis import given, strategies as st

from polyech.lattice import (
    ExtendedAngle,
    GenericAngle,
    Vec,
    angle_cmp,
    angle_less,
    angle_sort_key,
    antipode,
    boundary_cycle,
    cross,
    dot,
    half_of,
    hull_chain,
    is_primitive,
    lattice_points_in_hull,
    lattice_points_in_triangle,
    primitive_of,
    segment_lattice_points,
    shift_laps,
    theta_order_less,
    theta_sorted,
)

import helpers

coords = st.integers(min_value=-5, max_value=5)
points = st.builds(Vec, coords, coords)
nonzero_points = points.filter(lambda v: v != Vec(0, 0))
primitive_dirs = nonzero_points.map(lambda v: primitive_of(v)[0])
laps = st.integers(min_value=-2, max_value=3)
angles = st.one_of(
    st.builds(ExtendedAngle, laps, primitive_dirs),
    st.builds(GenericAngle, laps, primitive_dirs),
)


def test_vec_arithmetic():
    assert Vec(1, 2) + Vec(3, -1) == Vec(4, 1)
    assert Vec(1, 2) - Vec(3, -1) == Vec(-2, 3)
    assert -Vec(1, -2) == Vec(-1, 2)
    assert 3 * Vec(1, 2) == Vec(1, 2) * 3 == Vec(3, 6)
    x, y = Vec(7, 9)
    assert (x, y) == (7, 9)


def test_cross_and_dot():
    assert cross(Vec(1, 0), Vec(0, 1)) == 1
    assert cross(Vec(0, 1), Vec(1, 0)) == -1
    assert dot(Vec(2, 3), Vec(4, -1)) == 5


@given(points, points)
def test_cross_antisymmetry(u, v):
    assert cross(u, v) == -cross(v, u)


def test_primitive_of():
    assert primitive_of(Vec(4, -6)) == (Vec(2, -3), 2)
    assert primitive_of(Vec(0, 5)) == (Vec(0, 1), 5)
    assert primitive_of(Vec(-3, 0)) == (Vec(-1, 0), 3)
    with pytest.raises(ValueError):
        primitive_of(Vec(0, 0))


@given(nonzero_points)
def test_primitive_of_reconstructs(v):
    d, m = primitive_of(v)
    assert is_primitive(d)
    assert m >= 1
    assert m * d == v


def test_half_of():
    assert half_of(Vec(1, 0)) == 0
    assert half_of(Vec(0, 1)) == 0
    assert half_of(Vec(-1, 0)) == 1
    assert half_of(Vec(0, -1)) == 1
    assert half_of(Vec(-3, 1)) == 0
    assert half_of(Vec(3, -1)) == 1


def test_angles_require_primitive_direction():
    with pytest.raises(ValueError):
        ExtendedAngle(0, Vec(2, 2))
    with pytest.raises(ValueError):
        GenericAngle(0, Vec(0, 0))


def test_angle_order_basics():
    east = ExtendedAngle(0, Vec(1, 0))
    north = ExtendedAngle(0, Vec(0, 1))
    assert angle_less(east, north)
    assert angle_less(north, ExtendedAngle(0, Vec(-1, 0)))
    assert angle_less(east, ExtendedAngle(1, Vec(1, 0)))
    # a generic cut sits just past its own direction and before every later one
    cut = GenericAngle(0, Vec(1, 0))
    assert angle_less(east, cut)
    assert angle_less(cut, ExtendedAngle(0, Vec(2, 1)))
    assert not angle_less(cut, cut)


@given(angles, angles)
def test_angle_cmp_is_antisymmetric(a, b):
    c = angle_cmp(a, b)
    assert c == -angle_cmp(b, a)
    assert (c == 0) == (angle_cmp(a, b) == 0 and angle_cmp(b, a) == 0)
    assert angle_less(a, b) == (c < 0)


@given(st.lists(angles, min_size=2, max_size=8))
def test_angle_sort_is_stable_total_order(angs):
    ordered = sorted(angs, key=angle_sort_key)
    for a, b in zip(ordered, ordered[1:]):
        assert not angle_less(b, a)
    assert sorted(ordered, key=angle_sort_key) == ordered


@given(angles)
def test_antipode_advances_half_a_turn(a):
    b = antipode(a)
    assert type(b) is type(a)
    assert b.dir == -a.dir
    assert angle_less(a, b)
    assert angle_less(b, shift_laps(a, 1))
    assert antipode(b) == shift_laps(a, 1)


@given(angles, st.integers(min_value=-3, max_value=3))
def test_shift_laps_translates_the_order(a, k):
    b = shift_laps(a, k)
    assert b.dir == a.dir and b.lap == a.lap + k
    if k > 0:
        assert angle_less(a, b)
    elif k < 0:
        assert angle_less(b, a)


def test_theta_sorted_example():
    cut = GenericAngle(0, Vec(1, 0))
    pts = [Vec(1, 0), Vec(0, 1), Vec(-1, 0), Vec(1, 1)]
    assert theta_sorted(pts, cut) == [Vec(0, 1), Vec(1, 1), Vec(-1, 0), Vec(1, 0)]


@given(st.lists(points, min_size=1, max_size=8), st.builds(GenericAngle, laps, primitive_dirs))
def test_theta_sorted_agrees_with_comparator(pts, cut):
    out = theta_sorted(pts, cut)
    assert set(out) == set(pts)
    for p, q in zip(out, out[1:]):
        assert theta_order_less(p, q, cut)
        assert not theta_order_less(q, p, cut)


def test_segment_lattice_points():
    assert segment_lattice_points(Vec(0, 0), Vec(4, 6)) == {Vec(0, 0), Vec(2, 3), Vec(4, 6)}
    assert segment_lattice_points(Vec(1, 1), Vec(1, 1)) == {Vec(1, 1)}


@given(st.lists(points, min_size=1, max_size=6))
def test_hull_points_match_naive_oracle(pts):
    got = lattice_points_in_hull(pts)
    want = helpers.hull_lattice_points([tuple(p) for p in pts])
    assert {tuple(p) for p in got} == want


@given(points, points, points)
def test_triangle_points_match_bbox_oracle(a, b, c):
    got = lattice_points_in_triangle(a, b, c)
    want = helpers.bbox_triangle_points(tuple(a), tuple(b), tuple(c))
    assert {tuple(p) for p in got} == want


def test_boundary_cycle_of_square():
    pts = [Vec(0, 0), Vec(1, 0), Vec(0, 1), Vec(1, 1)]
    cyc = boundary_cycle(pts)
    assert cyc == [Vec(0, 0), Vec(1, 0), Vec(1, 1), Vec(0, 1)]


def test_boundary_cycle_is_counterclockwise_and_unimodular_steps():
    pts = [Vec(0, 0), Vec(3, 0), Vec(0, 2)]
    cyc = boundary_cycle(pts)
    assert set(cyc) <= {tuple(p) and p for p in lattice_points_in_hull(pts)}
    area2 = sum(cross(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
    assert area2 == 2 * 3  # twice the triangle area, positive means ccw
    for i in range(len(cyc)):
        step = cyc[(i + 1) % len(cyc)] - cyc[i]
        assert is_primitive(step)


def test_hull_chain_walks_the_ccw_boundary():
    pts = [Vec(0, 0), Vec(1, 0), Vec(0, 1), Vec(1, 1)]
    assert hull_chain(pts, Vec(0, 0), Vec(1, 1)) == [Vec(0, 0), Vec(1, 0), Vec(1, 1)]
    assert hull_chain(pts, Vec(1, 1), Vec(0, 0)) == [Vec(1, 1), Vec(0, 1), Vec(0, 0)]
