"""Generators, chains, gradings and the chain-level operations.

A generator is an admissible path with one label ('e' or 'h') per edge and an
implicit sign convention: reordering the h labels by an odd permutation of
the canonical (traversal) order negates the generator.  Chains are finite
combinations with integer or Laurent-polynomial coefficients.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence, Union

from .lattice import (
    ExtendedAngle,
    GenericAngle,
    Vec,
    angle_less,
    antipode,
    half_of,
    hull_chain,
    is_primitive,
    lattice_points_in_hull,
    primitive_of,
    shift_laps,
    theta_sorted,
)
from .paths import (
    GAMMA0,
    AdmissiblePath,
    Closed,
    Open,
    Periodic,
    _fund,
    _round_detail,
    _same_type,
    _x_slot_angle,
    act_symmetry,
    canonical_translation,
    corners,
    make_path,
    path_from_json,
    path_to_json,
    position_at_cut,
    translate,
    traversal_edges,
    x_axis_corner_values,
    x_axis_path,
)


class Laurent:
    """Integer Laurent polynomial in a formal variable t.

    >>> (Laurent({0: 1, 1: -1}) * Laurent({0: 1, 1: 1})) == Laurent({0: 1, 2: -1})
    True
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Union[int, Mapping[int, int]] = 0):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs}
        self.coeffs = {int(e): int(c) for e, c in coeffs.items() if c}

    @classmethod
    def t(cls, exp: int = 1) -> "Laurent":
        return cls({exp: 1})

    @staticmethod
    def _coerce(x):
        if isinstance(x, Laurent):
            return x
        if isinstance(x, int):
            return Laurent(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in o.coeffs.items():
            out[e] = out.get(e, 0) + c
        return Laurent(out)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Laurent({e: -c for e, c in self.coeffs.items()})

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in o.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return Laurent(out)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "Laurent(0)"
        return f"Laurent({dict(sorted(self.coeffs.items()))})"


@dataclass(frozen=True, slots=True)
class Generator:
    """A labeled admissible path; labels align with path.edges order."""

    path: AdmissiblePath
    labels: tuple[str, ...]

    def label_at(self, angle: ExtendedAngle) -> str:
        for (a, _), lab in zip(self.path.edges, self.labels):
            if a == angle:
                return lab
        raise KeyError(f"no edge at {angle}")

    @property
    def h_count(self) -> int:
        return sum(1 for lab in self.labels if lab == "h")

    def h_angles(self) -> list[ExtendedAngle]:
        """The h-labeled fundamental angles in canonical (traversal) order."""
        lab = dict(zip(self.path.angles(), self.labels))
        return [e.fund for e in traversal_edges(self.path) if lab[e.fund] == "h"]


def make_generator(
    path: AdmissiblePath,
    labels: Union[Sequence[str], Mapping[ExtendedAngle, str]],
    ordering: Sequence[ExtendedAngle] | None = None,
) -> tuple[Generator, int]:
    """Build a generator, returning it with the sign of the given h-ordering.

    `labels` is either a sequence aligned with path.edges or a mapping from
    edge angles.  `ordering`, if given, lists the h-labeled angles in the
    order the caller intends; the returned sign is the parity of the
    permutation carrying that order to the canonical one.
    """
    if isinstance(labels, Mapping):
        lab_list = [labels[a] for a, _ in path.edges]
        if len(labels) != len(path.edges):
            raise ValueError("labels must cover exactly the path's edges")
    else:
        lab_list = list(labels)
        if len(lab_list) != len(path.edges):
            raise ValueError(
                f"got {len(lab_list)} labels for {len(path.edges)} edges"
            )
    for lab in lab_list:
        if lab not in ("e", "h"):
            raise ValueError(f"label must be 'e' or 'h', got {lab!r}")
    gen = Generator(path, tuple(lab_list))
    if ordering is None:
        return gen, 1
    canon = gen.h_angles()
    ordering = list(ordering)
    if sorted(map(repr, ordering)) != sorted(map(repr, canon)):
        raise ValueError("ordering must list exactly the h-labeled angles")
    positions = [canon.index(a) for a in ordering]
    inversions = sum(
        1
        for i in range(len(positions))
        for j in range(i + 1, len(positions))
        if positions[i] > positions[j]
    )
    return gen, -1 if inversions % 2 else 1


class Chain:
    """A finite combination of generators with int or Laurent coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Generator, object] | None = None):
        d = {}
        if terms:
            for g, c in terms.items():
                if c:
                    d[g] = c
        self.terms = d

    @classmethod
    def single(cls, gen: Generator, coef=1) -> "Chain":
        return cls({gen: coef})

    def items(self):
        return self.terms.items()

    def coefficient(self, gen: Generator):
        return self.terms.get(gen, 0)

    def __add__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out[g] + c if g in out else c
        return Chain(out)

    def __sub__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Chain({g: -c for g, c in self.terms.items()})

    def __rmul__(self, coef):
        return Chain({g: coef * c for g, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return not (self - other)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def map_linear(self, f: Callable[[Generator], "Chain"]) -> "Chain":
        out = Chain()
        for g, c in self.terms.items():
            out = out + c * f(g)
        return out

    def __repr__(self):
        return f"Chain({len(self.terms)} terms)"


# -- gradings ----------------------------------------------------------------


def _area2(path: AdmissiblePath) -> int:
    """Twice the signed area integral x dy along the traversal."""
    total = 0
    for e in traversal_edges(path):
        w = e.mult * e.real.dir
        total += (2 * e.start.x + w.x) * w.y
    return total


def index(gen: Generator) -> int:
    """Absolute grading: twice the enclosed area plus length minus h count.

    Defined for closed paths and for open paths with equal endpoints; other
    paths only carry the relative grading.
    """
    path = gen.path
    if isinstance(path.kind, Periodic):
        raise ValueError("periodic paths have no absolute grading")
    if isinstance(path.kind, Open):
        a, b = path.endpoints()
        if a != b:
            raise ValueError("open paths need equal endpoints for an absolute grading")
    ell = sum(m for _, m in path.edges)
    return _area2(path) + ell - gen.h_count


def relative_index(a: Generator, b: Generator) -> int:
    """Grading difference I(a) - I(b) for generators on same-type paths.

    Computed from the closed loop that follows a, jumps to b's translate at
    the period's end, follows b backwards, and jumps back.
    """
    if not _same_type(a.path, b.path):
        raise ValueError("relative grading needs paths of the same type")
    a0, b0 = a.path.anchor, b.path.anchor
    a1 = a0 + a.path.total_displacement()
    b1 = b0 + b.path.total_displacement()
    loop2 = (
        _area2(a.path)
        - _area2(b.path)
        + (a1.x + b1.x) * (b1.y - a1.y)
        + (b0.x + a0.x) * (a0.y - b0.y)
    )

    def tail(g):
        return sum(m for _, m in g.path.edges) - g.h_count

    return loop2 + tail(a) - tail(b)


def component_grading(gen: Generator) -> int:
    """The rounding-invariant grading: absolute index minus the h count."""
    return index(gen) - gen.h_count


# -- the differential --------------------------------------------------------


def differential(gen: Generator) -> Chain:
    """Sum over non-kink corners with an adjacent h of the rounded generators.

    At each corner the consumed h is removed (for two adjacent h's the one on
    the outgoing edge is consumed and the survivor is placed on each edge of
    the rounded arc in turn); signs come from the consumed label's position
    in the canonical order, its side of the corner, and the canonicalization
    of the induced ordering.
    """
    path = gen.path
    acc: dict[Generator, int] = {}
    canon = gen.h_angles()
    for corner in corners(path):
        if corner.is_kink:
            continue
        det = _round_detail(path, corner)
        l1, l2 = gen.label_at(det.theta1), gen.label_at(det.theta2)
        if l1 == "e" and l2 == "e":
            continue
        interval = det.in_interval()
        interval_funds = {f for f, _ in interval}
        if l1 == "h" and l2 == "h":
            consumed, survivor = det.theta2, det.theta1
            placements: list = [f for f, _ in interval]
        else:
            consumed = det.theta1 if l1 == "h" else det.theta2
            survivor, placements = None, [None]
        after_consumed = len(canon) - 1 - canon.index(consumed)
        sign = -1 if after_consumed % 2 else 1
        if consumed == det.theta1:
            sign = -sign
        for pl in placements:
            labels = {}
            for a2, _ in det.path.edges:
                if a2 in interval_funds:
                    labels[a2] = "h" if a2 == pl else "e"
                else:
                    labels[a2] = gen.label_at(a2)
            ordering = [
                pl if (survivor is not None and a == survivor) else a
                for a in canon
                if a != consumed
            ]
            g2, s2 = make_generator(det.path, labels, ordering)
            acc[g2] = acc.get(g2, 0) + sign * s2
    return Chain(acc)


# -- the degree -2 map and homotopies ----------------------------------------


def _locate_corner(path: AdmissiblePath, cut: GenericAngle):
    """The corner whose angle arc contains the cut, with the cut shifted
    into that arc's realized laps."""
    n = path.rotation
    if n is not None:
        cut = GenericAngle(cut.lap % n, cut.dir)
    for c in corners(path):
        if c.prev is None:
            return c, cut
        shifts = (0,) if n is None else (0, n)
        for j in shifts:
            cj = shift_laps(cut, j)
            if angle_less(c.prev, cj) and angle_less(cj, c.next):
                return c, cj
    raise ValueError(f"no corner contains the cut {cut}")


def u_map(gen: Generator, cut: GenericAngle) -> Chain:
    """Round at the corner containing the cut, splitting labels across it.

    An h adjacent to the distinguished corner is re-placed on the rounded
    edges on its own side of the cut (summing over placements); everything
    else keeps its label.  A kinked distinguished corner gives zero.
    """
    path = gen.path
    corner, cutj = _locate_corner(path, cut)
    if corner.is_kink:
        return Chain()
    det = _round_detail(path, corner)
    interval_funds = {f for f, _ in det.in_interval()}
    before = [f for f, real in det.inserted if angle_less(real, cutj)]
    after = [f for f, real in det.inserted if angle_less(cutj, real)]
    if det.stub1:
        before.insert(0, det.theta1)
    if det.stub2:
        after.append(det.theta2)
    l1, l2 = gen.label_at(det.theta1), gen.label_at(det.theta2)
    before_pl = before if l1 == "h" else [None]
    after_pl = after if l2 == "h" else [None]
    canon = gen.h_angles()
    acc: dict[Generator, int] = {}
    for pb in before_pl:
        for pa in after_pl:
            labels = {}
            for a2, _ in det.path.edges:
                if a2 in interval_funds:
                    labels[a2] = "h" if a2 in (pb, pa) else "e"
                else:
                    labels[a2] = gen.label_at(a2)
            ordering = []
            for a in canon:
                if a == det.theta1:
                    ordering.append(pb)
                elif a == det.theta2:
                    ordering.append(pa)
                else:
                    ordering.append(a)
            g2, s = make_generator(det.path, labels, ordering)
            acc[g2] = acc.get(g2, 0) + s
    return Chain(acc)


def _in_cyclic_arc(a, c1, c2, n) -> bool:
    if n is None:
        return angle_less(c1, a) and angle_less(a, c2)
    if c1 == c2:
        return False
    if angle_less(c1, c2):
        return angle_less(c1, a) and angle_less(a, c2)
    return angle_less(c1, a) or angle_less(a, c2)


def k_homotopy(gen: Generator, cut1: GenericAngle, cut2: GenericAngle) -> Chain:
    """Relabel to h, one at a time, the e edges in the arc from cut1 to cut2.

    The new h is ordered last; for closed/periodic paths the arc is cyclic
    (it wraps when cut2 precedes cut1).  This is a chain homotopy between
    the cut maps at the two cuts.
    """
    path = gen.path
    n = path.rotation
    if n is not None:
        cut1 = GenericAngle(cut1.lap % n, cut1.dir)
        cut2 = GenericAngle(cut2.lap % n, cut2.dir)
    canon = gen.h_angles()
    labels0 = dict(zip(path.angles(), gen.labels))
    acc: dict[Generator, int] = {}
    for a, _ in path.edges:
        if labels0[a] != "e":
            continue
        if not _in_cyclic_arc(a, cut1, cut2, n):
            continue
        labels = dict(labels0)
        labels[a] = "h"
        g2, s = make_generator(path, labels, canon + [a])
        acc[g2] = acc.get(g2, 0) + s
    return Chain(acc)


def delta_prime(gen: Generator) -> Chain:
    """Relabel each e edge to h (ordered last), summed over all edges."""
    path = gen.path
    canon = gen.h_angles()
    labels0 = dict(zip(path.angles(), gen.labels))
    acc: dict[Generator, int] = {}
    for a, _ in path.edges:
        if labels0[a] != "e":
            continue
        labels = dict(labels0)
        labels[a] = "h"
        g2, s = make_generator(path, labels, canon + [a])
        acc[g2] = acc.get(g2, 0) + s
    return Chain(acc)


ONE_MINUS_T = Laurent({0: 1, 1: -1})


def delta_twisted(gen: Generator) -> Chain:
    """The deformed differential over Laurent polynomials: d + (1-t) d'."""
    out: dict[Generator, Laurent] = {}
    for g, c in differential(gen).items():
        out[g] = Laurent({0: c})
    for g, c in delta_prime(gen).items():
        out[g] = out.get(g, Laurent()) + ONE_MINUS_T * c
    return Chain(out)


# -- distinguished cycles ----------------------------------------------------


def e_cycle(path: AdmissiblePath) -> Chain:
    gen, _ = make_generator(path, ["e"] * len(path.edges))
    return Chain.single(gen)


def h_cycle(path: AdmissiblePath) -> Chain:
    """Sum of the single-h relabelings of the all-e generator."""
    out = Chain()
    k = len(path.edges)
    for i in range(k):
        labels = ["e"] * k
        labels[i] = "h"
        gen, _ = make_generator(path, labels)
        out = out + Chain.single(gen)
    return out


def _two_gon(n: int, a: Vec, d: Vec) -> AdmissiblePath:
    """The rotation-n out-and-back path between a and a+d (d primitive)."""
    edges = [(ExtendedAngle(lap, e), 1) for lap in range(n) for e in (d, -d)]
    p0 = make_path(Closed(n), edges, a)
    if traversal_edges(p0)[0].real.dir == d:
        return p0
    return make_path(Closed(n), edges, a + d)


def _z_primitive(n: int, a: Vec, d: Vec) -> Chain:
    path = _two_gon(n, a, d)
    trav = [e.fund for e in traversal_edges(path)]
    i0 = trav.index(ExtendedAngle(0, d))
    ordering = trav[i0:] + trav[:i0]
    gen, s = make_generator(path, ["h"] * len(trav), ordering)
    return Chain.single(gen, s)


def z_cycle(n: int, a: Vec, b: Vec) -> Chain:
    """The all-h segment cycle from a to b (zero when a == b).

    Splits b - a into primitive steps; each step contributes the fully
    h-labeled out-and-back path, ordered starting with its lap-0 forward
    edge.
    """
    a, b = Vec(*a), Vec(*b)
    if a == b:
        return Chain()
    d, m = primitive_of(b - a)
    out = Chain()
    for i in range(m):
        out = out + _z_primitive(n, a + i * d, d)
    return out


def _antipode_power(theta: ExtendedAngle, k: int) -> ExtendedAngle:
    for _ in range(k):
        theta = antipode(theta)
    return theta


def p_gen(a: Vec, theta: ExtendedAngle, n: int) -> Chain:
    """The (n-1)-fold all-h wrap of the 2-gon from a along theta.

    Edges sit at angles theta, theta+pi, ..., theta+(2n-3)pi, ordered that
    way; for n = 1 this is the constant path at a.
    """
    a = Vec(*a)
    if n == 1:
        gen, _ = make_generator(make_path(Closed(1), [], a), [])
        return Chain.single(gen)
    d = theta.dir
    b = a + d
    reals = [_antipode_power(theta, i) for i in range(2 * n - 2)]
    funds = [_fund(r, n) for r in reals]
    starts = {funds[i]: (a if i % 2 == 0 else b) for i in range(len(funds))}
    p0 = make_path(Closed(n), [(f, 1) for f in funds], a)
    first = traversal_edges(p0)[0].fund
    path = make_path(Closed(n), [(f, 1) for f in funds], starts[first])
    gen, s = make_generator(path, ["h"] * len(funds), funds)
    return Chain.single(gen, s)


def e_gen(a: Vec, theta: ExtendedAngle, n: int) -> Chain:
    """The full 2n-gon between a and a+theta.dir with one e half-turn before theta."""
    a = Vec(*a)
    d = theta.dir
    path = _two_gon(n, a, d)
    prev = ExtendedAngle(theta.lap - half_of(-d), -d)
    ef = _fund(prev, n)
    labels = {ang: ("e" if ang == ef else "h") for ang in path.angles()}
    gen, s = make_generator(path, labels)
    return Chain.single(gen, s)


def q_cycle(a: Vec, b: Vec, n: int) -> Chain:
    """Alternating sum of the one-e 2n-gons along a primitive segment."""
    a, b = Vec(*a), Vec(*b)
    d = b - a
    if not is_primitive(d):
        raise ValueError("endpoints must differ by a primitive vector")
    theta = ExtendedAngle(0, d)
    out = Chain()
    for i in range(n):
        out = out + e_gen(a, _antipode_power(theta, 2 * i), n)
        out = out + e_gen(b, _antipode_power(theta, 2 * i + 1), n)
    return out


# -- x-axis complexes and splicing -------------------------------------------


def x_axis_data(gen: Generator) -> tuple[int, list[int], list[str]]:
    """(rotation, corner values, slot labels) of an x-axis generator.

    Empty slots report label 'e' (an h on an empty slot is not a generator).
    """
    path = gen.path
    n = path.rotation
    vals = x_axis_corner_values(path)
    slots = []
    for i in range(2 * n):
        ang, _ = _x_slot_angle(i, n)
        slots.append(gen.label_at(ang) if path.mult(ang) else "e")
    return n, vals, slots


def x_axis_generator(seq: Sequence[int], slot_labels: Sequence[str], n: int) -> Chain:
    """The canonical x-axis generator with the given slot labels.

    Returns the zero chain when an h label sits on an empty slot.
    """
    path = x_axis_path(seq, n)
    labels = {}
    for i in range(2 * n):
        ang, _ = _x_slot_angle(i, n)
        if path.mult(ang) == 0:
            if slot_labels[i] == "h":
                return Chain()
            continue
        labels[ang] = slot_labels[i]
    gen, _ = make_generator(path, labels)
    return Chain.single(gen)


def splice(gen: Generator, n: int | None = None) -> Chain:
    """Replace the last two slots l1_a^b l2_b^c by the double-h spread.

    Sums l1_a^i h_i^{i+j-b+1} h_{i+j-b+1}^j l2_j^c over b <= i <= a and
    b <= j <= c, with the upper bound dropped by one on the side whose
    original label is h.  Raises rotation by one and degree by -2.
    """
    nn, seq, slots = x_axis_data(gen)
    if n is not None and n != nn:
        raise ValueError(f"generator has rotation {nn}, not {n}")
    n = nn
    a, b, c = seq[2 * n - 2], seq[2 * n - 1], seq[0]
    l1, l2 = slots[2 * n - 2], slots[2 * n - 1]
    hi_i = a - 1 if l1 == "h" else a
    hi_j = c - 1 if l2 == "h" else c
    out = Chain()
    for i in range(b, hi_i + 1):
        for j in range(b, hi_j + 1):
            newseq = list(seq[: 2 * n - 1]) + [i, i + j - b + 1, j]
            newlabels = list(slots[: 2 * n - 2]) + [l1, "h", "h", l2]
            out = out + x_axis_generator(newseq, newlabels, n + 1)
    return out


# -- flattening ---------------------------------------------------------------


def theta_corner_sequence(path: AdmissiblePath, cut: GenericAngle) -> list[Vec]:
    """The path's values at cut, cut+pi, ..., cut+2n*pi (2n+1 points)."""
    n = path.rotation
    if n is None:
        raise ValueError("theta corner sequences need closed or periodic paths")
    out = []
    c = cut
    for _ in range(2 * n + 1):
        out.append(position_at_cut(path, c))
        c = antipode(c)
    return out


def _place_real(d: Vec, lo, hi) -> ExtendedAngle:
    for lap in range(lo.lap, hi.lap + 1):
        cand = ExtendedAngle(lap, d)
        if angle_less(lo, cand) and angle_less(cand, hi):
            return cand
    raise AssertionError(f"direction {d} has no angle in ({lo}, {hi})")


def flatten(alpha0: Generator, lam: AdmissiblePath, cut: GenericAngle) -> Chain:
    """Transport an x-axis generator onto the theta-sorted points of lam.

    The k enclosed lattice points of lam, sorted by the cut's height order,
    replace the x-axis values 0..k-1; each slot's monotone run becomes the
    counterclockwise hull walk between the corresponding points, its edges
    realized in the slot's half-turn arc.  Slot labels transport with h
    labels summed over each slot's edges.
    """
    n = lam.rotation
    if n is None or not isinstance(lam.kind, Closed):
        raise ValueError("the target path must be closed")
    if not 0 <= cut.lap < n:
        raise ValueError("cut must lie in the fundamental domain")
    nn, seq, slots = x_axis_data(alpha0)
    if nn != n:
        raise ValueError("rotation mismatch")
    corner_pts = [c.at for c in corners(lam)] or [lam.anchor]
    pts = theta_sorted(lattice_points_in_hull(corner_pts), cut)
    k = len(pts)
    if any(not 0 <= v < k for v in seq):
        raise ValueError(f"corner values must lie in [0, {k})")

    cuts = [cut]
    for _ in range(2 * n):
        cuts.append(antipode(cuts[-1]))
    bvals = list(seq) + [seq[0]]
    mults: dict[ExtendedAngle, int] = {}
    block_edges: list[list[ExtendedAngle]] = []
    for i in range(2 * n):
        s_pt, t_pt = pts[bvals[i]], pts[bvals[i + 1]]
        lo_l, hi_l = min(bvals[i], bvals[i + 1]), max(bvals[i], bvals[i + 1])
        walk = hull_chain(pts[lo_l : hi_l + 1], s_pt, t_pt)
        segs: list[tuple[Vec, int]] = []
        for u, v in zip(walk, walk[1:]):
            d, m = primitive_of(v - u)
            if segs and segs[-1][0] == d:
                segs[-1] = (d, segs[-1][1] + m)
            else:
                segs.append((d, m))
        funds = []
        for d, m in segs:
            f = _fund(_place_real(d, cuts[i], cuts[i + 1]), n)
            if f in mults:
                raise AssertionError("slot blocks collide")
            mults[f] = m
            funds.append(f)
        block_edges.append(funds)

    anchor = pts[seq[0]]
    for f, m in mults.items():
        if angle_less(GAMMA0, f) and angle_less(f, cut):
            anchor = anchor - m * f.dir
    path = make_path(Closed(n), mults.items(), anchor)

    h_slots = [i for i in range(2 * n) if slots[i] == "h"]
    acc: dict[Generator, int] = {}
    for combo in itertools.product(*[block_edges[i] for i in h_slots]):
        labels = {f: "e" for f in mults}
        for f in combo:
            labels[f] = "h"
        gen, s = make_generator(path, labels, list(combo))
        acc[gen] = acc.get(gen, 0) + s
    return Chain(acc)


# -- symmetries ----------------------------------------------------------------


def translate_generator(gen: Generator, w: Vec) -> Generator:
    return Generator(translate(gen.path, Vec(*w)), gen.labels)


def canonical_generator(gen: Generator) -> Generator:
    """The translate of gen normalized by canonical_translation (sign +1)."""
    return Generator(canonical_translation(gen.path), gen.labels)


def canonical_chain(chain: Chain) -> Chain:
    """Canonically translate every generator of a chain (coefficients kept)."""
    out: dict[Generator, object] = {}
    for g, c in chain.items():
        g2 = canonical_generator(g)
        out[g2] = out[g2] + c if g2 in out else c
    return Chain(out)


def act_symmetry_generator(gen, a, lift) -> tuple[Generator, int]:
    """Transport a generator through an orientation-preserving symmetry."""
    path2 = act_symmetry(gen.path, a, lift)
    n = gen.path.rotation

    def map_angle(ang):
        d2 = Vec(a[0][0] * ang.dir.x + a[0][1] * ang.dir.y,
                 a[1][0] * ang.dir.x + a[1][1] * ang.dir.y)
        lap = ang.lap + lift(ang.dir)
        if n is not None:
            lap %= n
        return type(ang)(lap, d2)

    labels = {map_angle(ang): gen.label_at(ang) for ang in gen.path.angles()}
    ordering = [map_angle(x) for x in gen.h_angles()]
    return make_generator(path2, labels, ordering)


# -- serialization -------------------------------------------------------------


def generator_to_json(gen: Generator) -> dict:
    out = path_to_json(gen.path)
    out["labels"] = list(gen.labels)
    return out


def generator_from_json(obj: Mapping) -> Generator:
    path = path_from_json(obj)
    gen, _ = make_generator(path, list(obj["labels"]))
    return gen


def generator_sort_key(gen: Generator) -> str:
    return json.dumps(generator_to_json(gen), sort_keys=True, separators=(",", ":"))


def _coef_to_json(c):
    if isinstance(c, Laurent):
        return {"laurent": {str(e): v for e, v in sorted(c.coeffs.items())}}
    return int(c)


def _coef_from_json(obj):
    if isinstance(obj, Mapping):
        return Laurent({int(e): int(v) for e, v in obj["laurent"].items()})
    return int(obj)


def chain_to_json(chain: Chain) -> list:
    items = sorted(chain.items(), key=lambda t: generator_sort_key(t[0]))
    return [
        {"coefficient": _coef_to_json(c), "generator": generator_to_json(g)}
        for g, c in items
    ]


def chain_from_json(obj: Iterable) -> Chain:
    out = Chain()
    for term in obj:
        gen = generator_from_json(term["generator"])
        out = out + Chain.single(gen, _coef_from_json(term["coefficient"]))
    return out
