"""Randomized verification suites for the chain and homology layers.

Each named suite bundles related checks into a SuiteReport.  Runs are
deterministic for a fixed seed: every check draws from its own stream
seeded by (seed, suite, check id), so results do not depend on thread
scheduling.  Expensive stabilizations watch a wall-clock budget and
degrade to a "flagged" status instead of failing when it runs out.
"""

from __future__ import annotations

import itertools
import os
import time
import traceback
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from random import Random
from typing import Callable, Mapping

from .lattice import ExtendedAngle, GenericAngle, Vec, angle_sort_key, antipode, cross
from .paths import (
    AdmissiblePath,
    Closed,
    GAMMA0,
    Periodic,
    corners,
    enumerate_below,
    lattice_point_count,
    leq,
    make_path,
    n_convex,
    path_sort_key,
    path_to_json,
    round_corner,
    traversal_edges,
    _round_detail,
)
from .chains import (
    Chain,
    Generator,
    canonical_chain,
    component_grading,
    differential,
    delta_prime,
    delta_twisted,
    e_cycle,
    e_gen,
    flatten,
    h_cycle,
    k_homotopy,
    make_generator,
    p_gen,
    q_cycle,
    relative_index,
    splice,
    u_map,
    z_cycle,
    _locate_corner,
)
from .homology import (
    GradedComplex,
    HomologyGroup,
    SparseIntMatrix,
    build_complex,
    induced_map,
    smith_normal_form,
    stabilize,
)
from . import _sampling as sampling

DEFAULT_BUDGET = 300.0


# -- reports and the suite engine ---------------------------------------------


class _Fail(Exception):
    def __init__(self, data: dict):
        super().__init__(str(data))
        self.data = data


class _Flag(Exception):
    def __init__(self, data: dict):
        super().__init__(str(data))
        self.data = data


class _Deadline:
    """Wall-clock budget shared by the checks of one suite."""

    def __init__(self, budget: float):
        self.t0 = time.monotonic()
        self.budget = budget

    @property
    def exceeded(self) -> bool:
        return time.monotonic() - self.t0 > self.budget

    @property
    def remaining(self) -> float:
        return max(0.0, self.budget - (time.monotonic() - self.t0))

    def flag_if_exceeded(self, **data) -> None:
        if self.exceeded:
            raise _Flag({"reason": "budget exhausted", **data})


@dataclass(frozen=True)
class CheckResult:
    check: str
    description: str
    status: str  # "pass" | "fail" | "flagged"
    data: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "description": self.description,
            "status": self.status,
            "data": self.data,
        }


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    seed: int
    budget: float
    elapsed: float
    checks: tuple[CheckResult, ...]

    @property
    def status(self) -> str:
        if any(c.status == "fail" for c in self.checks):
            return "fail"
        if any(c.status == "flagged" for c in self.checks):
            return "flagged"
        return "pass"

    def exit_status(self, strict: bool = False) -> int:
        if strict:
            return 0 if self.status == "pass" else 1
        return 0 if self.status != "fail" else 1

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "budget": self.budget,
            "elapsed": round(self.elapsed, 3),
            "status": self.status,
            "checks": [c.to_json() for c in self.checks],
        }


@dataclass(frozen=True)
class _Suite:
    name: str
    description: str
    checks: tuple[tuple[str, str, Callable], ...]
    setup: Callable | None = None


def _check_rng(seed: int, suite: str, check: str) -> Random:
    return Random(f"{seed}|{suite}|{check}")


def _thread_count() -> int:
    env = os.environ.get("POLYECH_THREADS", "").strip()
    if env:
        return max(1, int(env))
    return min(8, os.cpu_count() or 1)


def _run_check(cid: str, desc: str, fn, ctx, rng: Random, deadline: _Deadline) -> CheckResult:
    try:
        data = fn(ctx, rng, deadline)
        return CheckResult(cid, desc, "pass", data or {})
    except _Fail as e:
        return CheckResult(cid, desc, "fail", e.data)
    except _Flag as e:
        return CheckResult(cid, desc, "flagged", e.data)
    except Exception:
        return CheckResult(cid, desc, "fail", {"error": traceback.format_exc(limit=8)})


def run_suite(
    name: str,
    seed: int = 0,
    budget: float = DEFAULT_BUDGET,
    threads: int | None = None,
) -> SuiteReport:
    """Run one named suite and return its report (checks sorted by id)."""
    if name not in SUITES:
        raise KeyError(f"unknown suite: {name!r}")
    suite = SUITES[name]
    t0 = time.monotonic()
    deadline = _Deadline(budget)
    ctx: object = {}
    setup_error: CheckResult | None = None
    if suite.setup is not None:
        try:
            ctx = suite.setup(_check_rng(seed, name, "setup"), deadline)
        except _Flag as e:
            setup_error = CheckResult("00-setup", "shared sampling", "flagged", e.data)
        except Exception:
            setup_error = CheckResult(
                "00-setup", "shared sampling", "fail",
                {"error": traceback.format_exc(limit=8)},
            )
    if setup_error is not None:
        results = [setup_error]
        results += [
            CheckResult(cid, desc, setup_error.status, {"reason": "setup did not finish"})
            for cid, desc, _ in suite.checks
        ]
        return SuiteReport(name, seed, budget, time.monotonic() - t0, tuple(results))

    workers = threads if threads else _thread_count()
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(_run_check, cid, desc, fn, ctx, _check_rng(seed, name, cid), deadline)
            for cid, desc, fn in suite.checks
        ]
        results = [f.result() for f in futures]
    results.sort(key=lambda r: r.check)
    return SuiteReport(name, seed, budget, time.monotonic() - t0, tuple(results))


def run_suites(
    names,
    seed: int = 0,
    budget: float = DEFAULT_BUDGET,
    threads: int | None = None,
) -> list[SuiteReport]:
    return [run_suite(n, seed=seed, budget=budget, threads=threads) for n in names]


def suite_names() -> list[str]:
    return list(SUITES)


# -- shared helpers ------------------------------------------------------------


def _labelings(path: AdmissiblePath):
    for labs in itertools.product("eh", repeat=len(path.edges)):
        yield Generator(path, labs)


def _below_generator_count(below) -> int:
    return sum(2 ** len(p.edges) for p in below)


def _bounded_below(rng: Random, deadline: _Deadline, count: int, open_share: float = 0.0, cap: int = 1500):
    """Sample paths whose below sets stay desk sized, with their below sets.

    Closed paths keep the wrap count and point count jointly bounded so the
    below set cannot explode; open paths come from windows of closed ones.
    """
    out = []
    while len(out) < count:
        deadline.flag_if_exceeded(paths_sampled=len(out), wanted=count)
        if rng.random() < open_share:
            p = sampling.open_path(rng, equal_endpoints=rng.random() < 0.4, max_points=8)
        else:
            n = rng.choice((1, 1, 1, 1, 2, 2, 3))
            kmax = {1: 10, 2: 5, 3: 3}[n]
            p = sampling.closed_path(rng, max_n=n, max_points=kmax)
        below = enumerate_below(p)
        if _below_generator_count(below) > cap:
            continue
        out.append((p, sorted(below, key=path_sort_key)))
    return out


def _safe_cut(rng: Random, paths, lap_span: int) -> GenericAngle:
    """A cut direction no rounding of the given paths can ever collide with."""
    extent = 1 + max(
        (sum(m * (abs(a.dir.x) + abs(a.dir.y)) for a, m in p.edges) for p in paths),
        default=0,
    )
    d = rng.choice((Vec(extent, 1), Vec(-1, extent), Vec(-extent, -1), Vec(1, -extent)))
    return GenericAngle(rng.randrange(max(1, lap_span)), d)


def _chain_repr(chain: Chain, limit: int = 4) -> str:
    parts = [f"{c}*{g.labels}@{path_sort_key(g.path)[:40]}" for g, c in chain.items()]
    return "; ".join(parts[:limit]) + ("..." if len(parts) > limit else "")


def _gen_repr(g: Generator) -> str:
    return f"{''.join(g.labels)}|{path_sort_key(g.path)}"


def _matrix_product_is_zero(a: SparseIntMatrix, b: SparseIntMatrix) -> bool:
    for j in range(b.cols):
        if any(a.matvec(b.column(j))):
            return False
    return True


def _class_generates(cx: GradedComplex, chain: Chain) -> bool:
    """Whether the cycle's class, together with the boundaries, spans the
    whole cycle lattice in its degree (a unimodular generator test)."""
    d = cx.degree_of(chain)
    free = cx.dim(d) - cx.snf(d).rank
    cols = [cx.kernel_coords(cx.chain_vector(chain, d), d)]
    up = cx.matrix(d + 1)
    for j in range(up.cols):
        cols.append(cx.kernel_coords(up.column(j), d))
    span = SparseIntMatrix(free, len(cols))
    for j, col in enumerate(cols):
        for i, v in enumerate(col):
            if v:
                span[i, j] = v
    f = smith_normal_form(span)
    return f.rank == free and all(x == 1 for x in f.divisors)


def _exact_point_path(rng: Random, k: int, n: int = 1) -> AdmissiblePath:
    """A rotation-n convex closed path enclosing exactly k lattice points."""
    while True:
        pts = [Vec(rng.randint(0, 3), rng.randint(0, 3)) for _ in range(rng.randint(1, 5))]
        p = n_convex(pts, n)
        if lattice_point_count(p) == k:
            return p


def _simple_triangle(rng: Random, box: int = 4) -> tuple[Vec, Vec, Vec]:
    """A counterclockwise lattice triangle enclosing no other lattice points."""
    while True:
        a, b, c = (Vec(rng.randint(0, box), rng.randint(0, box)) for _ in range(3))
        ar = cross(b - a, c - a)
        if ar < 0:
            b, c = c, b
            ar = -ar
        if ar == 1:
            return a, b, c


# -- matching, difference sets, and locality -----------------------------------


def _edge_map(path: AdmissiblePath) -> dict:
    return {te.real: te for te in traversal_edges(path)}


def _match_table(pa: AdmissiblePath, pb: AdmissiblePath) -> dict:
    """Classify the shared edge angles of two paths.

    An angle maps to "agree" when both edges trace the same segment,
    "partial" when they lie on one line, and "clash" otherwise.
    """
    ta, tb = _edge_map(pa), _edge_map(pb)
    out = {}
    for ang in set(ta) & set(tb):
        ea, eb = ta[ang], tb[ang]
        if ea.start == eb.start and ea.mult == eb.mult:
            out[ang] = "agree"
        elif cross(ang.dir, eb.start - ea.start) == 0:
            out[ang] = "partial"
        else:
            out[ang] = "clash"
    return out


def _difference_atoms(pa: AdmissiblePath, pb: AdmissiblePath):
    """The closed set where two same-shape paths differ, as marked atoms.

    Atoms alternate edge angles and the gaps after them, in angle order (a
    leading gap is added for open paths; combinatorially the list is cyclic
    for closed and periodic ones).  A gap atom is in the difference set
    when the two paths pause at different points there; an angle atom is in
    it unless both paths have that edge and the edges agree.
    """
    match = _match_table(pa, pb)
    ta, tb = _edge_map(pa), _edge_map(pb)
    angles = sorted(set(ta) | set(tb), key=angle_sort_key)
    cyclic = pa.rotation is not None
    atoms = []
    if not cyclic:
        atoms.append(("gap", None, pa.anchor != pb.anchor))
    pos_a, pos_b = pa.anchor, pb.anchor
    for ang in angles:
        both = ang in ta and ang in tb
        atoms.append(("angle", ang, not (both and match[ang] == "agree")))
        if ang in ta:
            pos_a = ta[ang].start + ta[ang].mult * ang.dir
        if ang in tb:
            pos_b = tb[ang].start + tb[ang].mult * ang.dir
        atoms.append(("gap", ang, pos_a != pos_b))
    return atoms, cyclic


def _single_run(flags, cyclic: bool) -> bool:
    k = sum(flags)
    if k == 0 or k == len(flags):
        return True
    starts = 0
    for i, f in enumerate(flags):
        prev = flags[i - 1] if (i > 0 or cyclic) else False
        if f and not prev:
            starts += 1
    return starts == 1


def _strip_matching(ga: Generator, gb: Generator):
    """Drop agreements and shorten partial agreements from a nested pair.

    Returns (ga2, gb2, outer_sign, inner_sign) where the outer sign reorders
    both original orderings so the matched h edges (agreeing, or partially
    agreeing with h on both sides) come first, and the inner sign relates
    the surviving h order to the canonical orders of the stripped pair.  Anchors are kept, so the two paths' pointwise difference
    is unchanged.  Returns None when a partial agreement cannot shorten.
    """
    pa, pb = ga.path, gb.path
    match = _match_table(pa, pb)
    ta, tb = _edge_map(pa), _edge_map(pb)
    lab_a = dict(zip(pa.angles(), ga.labels))
    lab_b = dict(zip(pb.angles(), gb.labels))

    edges_a, labs_a = [], {}
    for te in traversal_edges(pa):
        kind = match.get(te.real)
        if kind == "agree":
            continue
        if kind == "partial":
            m2 = te.mult - tb[te.real].mult
            la, lb = lab_a[te.fund], lab_b[te.fund]
            new_lab = "h" if (la == "h" and lb == "e") else "e"
            if m2 < 0 or (m2 == 0 and new_lab == "h"):
                return None
            if m2 == 0:
                continue
            edges_a.append((te.fund, m2))
            labs_a[te.fund] = new_lab
        else:
            edges_a.append((te.fund, te.mult))
            labs_a[te.fund] = lab_a[te.fund]

    edges_b, labs_b = [], {}
    for te in traversal_edges(pb):
        if match.get(te.real) in ("agree", "partial"):
            continue
        edges_b.append((te.fund, te.mult))
        labs_b[te.fund] = lab_b[te.fund]

    def rebuild(path, edges, labs):
        if path.rotation is None:
            kind = path.kind
        else:
            disp = Vec(0, 0)
            for ang, m in edges:
                disp = disp + m * ang.dir
            kind = Closed(path.rotation) if disp == Vec(0, 0) else Periodic(path.rotation, disp)
        return make_path(kind, edges, path.anchor)

    p2a = rebuild(pa, edges_a, labs_a)
    p2b = rebuild(pb, edges_b, labs_b)

    matched_h = [
        te.fund
        for te in traversal_edges(pa)
        if lab_a.get(te.fund) == "h"
        and (
            match.get(te.real) == "agree"
            or (match.get(te.real) == "partial" and lab_b[te.fund] == "h")
        )
    ]
    rest_a = [a for a in ga.h_angles() if a not in matched_h]
    rest_b = [a for a in gb.h_angles() if a not in matched_h]
    _, sa = make_generator(pa, ga.labels, matched_h + rest_a)
    _, sb = make_generator(pb, gb.labels, matched_h + rest_b)
    g2a, sa2 = make_generator(p2a, labs_a, [a for a in rest_a if labs_a.get(a) == "h"])
    g2b, sb2 = make_generator(p2b, labs_b, [a for a in rest_b if labs_b.get(a) == "h"])
    return g2a, g2b, sa * sb, sa2 * sb2


def _label_matching_ok(ga: Generator, gb: Generator) -> bool:
    match = _match_table(ga.path, gb.path)
    ta = _edge_map(ga.path)
    lab_a = dict(zip(ga.path.angles(), ga.labels))
    lab_b = dict(zip(gb.path.angles(), gb.labels))
    for ang, kind in match.items():
        fund = ta[ang].fund
        if kind == "agree" and lab_a[fund] != lab_b[fund]:
            return False
        if kind == "partial" and lab_b[fund] == "h" and lab_a[fund] != "h":
            return False
    return True


def _locality_identity(ga: Generator, gb: Generator, coeff: int):
    """Compare a differential coefficient against its stripped-down pair.

    Returns (holds, data); the index difference must also be preserved.
    """
    stripped = _strip_matching(ga, gb)
    if stripped is None:
        return False, {"reason": "partial agreement could not shorten"}
    g2a, g2b, s_outer, s_inner = stripped
    lhs = s_outer * coeff
    rhs = s_inner * differential(g2a).coefficient(g2b)
    if lhs != rhs:
        return False, {"lhs": lhs, "rhs": rhs, "stripped": _gen_repr(g2a)}
    if coeff and relative_index(ga, gb) != relative_index(g2a, g2b):
        return False, {"reason": "index changed under stripping"}
    return True, {}


def _rounding_sites(pa: AdmissiblePath, pb: AdmissiblePath):
    return [c for c in corners(pa) if not c.is_kink and round_corner(pa, c) == pb]


def _site_coefficient(ga: Generator, gb: Generator, corner) -> int:
    """The one-corner differential coefficient, recomputed from the stated
    convention: the consumed h contributes its parity from the end of the
    canonical order, negated on the incoming side, times the sign of the
    inherited ordering."""
    det = _round_detail(ga.path, corner)
    l1, l2 = ga.label_at(det.theta1), ga.label_at(det.theta2)
    canon = ga.h_angles()
    arc = [f for f, _ in det.in_interval()]
    arc_h = [f for f in arc if gb.label_at(f) == "h"]
    outside_ok = all(
        gb.label_at(a) == ga.label_at(a)
        for a, _ in gb.path.edges
        if a not in arc
    )
    if not outside_ok:
        return 0
    if l1 == "h" and l2 == "h":
        if len(arc_h) != 1:
            return 0
        consumed, survivor, placed = det.theta2, det.theta1, arc_h[0]
    elif "h" in (l1, l2):
        if arc_h:
            return 0
        consumed = det.theta1 if l1 == "h" else det.theta2
        survivor, placed = None, None
    else:
        return 0
    after = len(canon) - 1 - canon.index(consumed)
    sign = -1 if after % 2 else 1
    if consumed == det.theta1:
        sign = -sign
    ordering = [
        placed if (survivor is not None and a == survivor) else a
        for a in canon
        if a != consumed
    ]
    g2, s2 = make_generator(det.path, dict(zip(gb.path.angles(), gb.labels)), ordering)
    if g2 != gb:
        return 0
    return sign * s2


# -- suite: delta-squared ------------------------------------------------------


def _dd_over_paths(pairs, deadline: _Deadline):
    seen = set()
    checked = 0
    for _, below in pairs:
        for p in below:
            if p in seen:
                continue
            seen.add(p)
            for g in _labelings(p):
                dd = differential(g).map_linear(differential)
                if dd:
                    raise _Fail({"generator": _gen_repr(g), "dd": _chain_repr(dd)})
                checked += 1
        deadline.flag_if_exceeded(generators_checked=checked)
    return checked


def _check_dd_closed(ctx, rng, deadline):
    pairs = _bounded_below(rng, deadline, 60)
    n = _dd_over_paths(pairs, deadline)
    return {"paths": len(pairs), "generators": n}


def _check_dd_open(ctx, rng, deadline):
    pairs = _bounded_below(rng, deadline, 40, open_share=1.0)
    n = _dd_over_paths(pairs, deadline)
    return {"paths": len(pairs), "generators": n}


def _check_dd_bar(ctx, rng, deadline):
    cx = build_complex({"kind": "bar", "n": 1, "max_diameter": 3, "degrees": [0, 5]})
    bad = []
    for d in cx.degrees():
        if not _matrix_product_is_zero(cx.matrix(d), cx.matrix(d + 1)):
            bad.append(d)
    if bad:
        raise _Fail({"nonzero_products_at": bad})
    return {"total_dim": cx.total_dim(), "degrees": cx.degrees()}


def _check_degree_rule(ctx, rng, deadline):
    pairs = _bounded_below(rng, deadline, 30, open_share=0.3, cap=800)
    terms = 0
    for _, below in pairs:
        for p in below:
            for g in _labelings(p):
                for g2, c in differential(g).items():
                    if relative_index(g, g2) != 1:
                        raise _Fail({
                            "generator": _gen_repr(g),
                            "term": _gen_repr(g2),
                            "relative_index": relative_index(g, g2),
                        })
                    terms += 1
        deadline.flag_if_exceeded(terms_checked=terms)
    return {"paths": len(pairs), "nonzero_terms": terms}


def _check_rounding_index(ctx, rng, deadline):
    checked = 0
    for _ in range(40):
        deadline.flag_if_exceeded(pairs_checked=checked)
        p = sampling.closed_path(rng, max_n=2, max_points=8, min_edges=2)
        for corner in corners(p):
            if corner.is_kink:
                continue
            q = round_corner(p, corner)
            gens_p = list(_labelings(p))
            if len(gens_p) > 64:
                gens_p = [sampling.labeled(rng, p) for _ in range(64)]
            gens_q = list(_labelings(q))
            if len(gens_q) > 16:
                gens_q = [sampling.labeled(rng, q) for _ in range(16)]
            for ga in gens_p:
                for gb in gens_q:
                    want = 2 - ga.h_count + gb.h_count
                    if relative_index(ga, gb) != want:
                        raise _Fail({
                            "path_pair": (_gen_repr(ga), _gen_repr(gb)),
                            "got": relative_index(ga, gb),
                            "want": want,
                        })
                    checked += 1
    return {"labelled_pairs": checked}


# -- suite: axioms ---------------------------------------------------------------


def _axioms_setup(rng, deadline):
    paths = []
    while len(paths) < 50:
        deadline.flag_if_exceeded(paths_sampled=len(paths))
        if len(paths) % 5 < 3:
            n = rng.choice((1, 1, 2))
            p = sampling.closed_path(rng, max_n=n, max_points=6 if n == 1 else 4)
        else:
            p = sampling.open_path(rng, equal_endpoints=rng.random() < 0.4, max_points=7)
        below = enumerate_below(p)
        if _below_generator_count(below) > 600:
            continue
        paths.append(sorted(below, key=path_sort_key))
    pairs = []
    complexes = []
    for below in paths:
        gens = [g for p in below for g in _labelings(p)]
        complexes.append(gens)
        for g in gens:
            for g2, c in differential(g).items():
                pairs.append((g, g2, c))
        deadline.flag_if_exceeded(pairs_collected=len(pairs))
    return {"pairs": pairs, "complexes": complexes}


def _check_ax_index(ctx, rng, deadline):
    for ga, gb, _ in ctx["pairs"]:
        if relative_index(ga, gb) != 1:
            raise _Fail({"pair": (_gen_repr(ga), _gen_repr(gb))})
    return {"pairs": len(ctx["pairs"])}


def _check_ax_nesting(ctx, rng, deadline):
    for ga, gb, _ in ctx["pairs"]:
        if not leq(gb.path, ga.path):
            raise _Fail({"pair": (_gen_repr(ga), _gen_repr(gb))})
    return {"pairs": len(ctx["pairs"])}


def _check_ax_labels(ctx, rng, deadline):
    for ga, gb, _ in ctx["pairs"]:
        if not _label_matching_ok(ga, gb):
            raise _Fail({"pair": (_gen_repr(ga), _gen_repr(gb))})
    return {"pairs": len(ctx["pairs"])}


def _check_ax_connected(ctx, rng, deadline):
    seen = set()
    for ga, gb, _ in ctx["pairs"]:
        key = (ga.path, gb.path)
        if key in seen:
            continue
        seen.add(key)
        atoms, cyclic = _difference_atoms(*key)
        if not _single_run([a[2] for a in atoms], cyclic):
            raise _Fail({"pair": (_gen_repr(ga), _gen_repr(gb))})
    return {"path_pairs": len(seen)}


def _check_ax_two_edges(ctx, rng, deadline):
    seen = set()
    for ga, gb, _ in ctx["pairs"]:
        key = (ga.path, gb.path)
        if key in seen:
            continue
        seen.add(key)
        atoms, _ = _difference_atoms(*key)
        in_d = {ang for kind, ang, f in atoms if kind == "angle" and f}
        mine = sum(1 for te in traversal_edges(ga.path) if te.real in in_d)
        if mine > 2:
            raise _Fail({"pair": (_gen_repr(ga), _gen_repr(gb)), "edges_in_d": mine})
    return {"path_pairs": len(seen)}


def _check_ax_locality(ctx, rng, deadline):
    done = 0
    for ga, gb, c in ctx["pairs"]:
        ok, data = _locality_identity(ga, gb, c)
        if not ok:
            raise _Fail({"pair": (_gen_repr(ga), _gen_repr(gb)), **data})
        done += 1
        if done % 500 == 0:
            deadline.flag_if_exceeded(pairs_checked=done)
    return {"pairs": done}


def _check_ax_locality_null(ctx, rng, deadline):
    checked = 0
    for gens in ctx["complexes"]:
        by_path: dict = {}
        for g in gens:
            by_path.setdefault(g.path, []).append(g)
        paths = sorted(by_path, key=path_sort_key)
        for pb in paths:
            deadline.flag_if_exceeded(zero_pairs=checked)
            for pa in paths:
                if pa is pb or not leq(pb, pa):
                    continue
                for ga in by_path[pa]:
                    dga = differential(ga)
                    for gb in by_path[pb]:
                        if relative_index(ga, gb) != 1 or dga.coefficient(gb):
                            continue
                        if not _label_matching_ok(ga, gb):
                            continue
                        ok, data = _locality_identity(ga, gb, 0)
                        if not ok:
                            raise _Fail({
                                "pair": (_gen_repr(ga), _gen_repr(gb)),
                                **data,
                            })
                        checked += 1
                        if checked >= 1500:
                            return {"zero_pairs": checked, "capped": True}
                deadline.flag_if_exceeded(zero_pairs=checked)
    return {"zero_pairs": checked}


def _classified_sites(pairs):
    for ga, gb, c in pairs:
        sites = _rounding_sites(ga.path, gb.path)
        if len(sites) != 1:
            continue
        det = _round_detail(ga.path, sites[0])
        if not det.inserted:
            yield ga, gb, c, sites[0], "degenerate"
        elif len(det.inserted) == 1 and gb.path.mult(det.inserted[0][0]) == 1:
            yield ga, gb, c, sites[0], "simple"


def _check_ax_rounding(kind):
    def check(ctx, rng, deadline):
        n = 0
        for ga, gb, c, site, cls in _classified_sites(ctx["pairs"]):
            if cls != kind:
                continue
            if abs(c) != 1:
                raise _Fail({"pair": (_gen_repr(ga), _gen_repr(gb)), "coefficient": c})
            if _site_coefficient(ga, gb, site) != c:
                raise _Fail({
                    "pair": (_gen_repr(ga), _gen_repr(gb)),
                    "coefficient": c,
                    "recomputed": _site_coefficient(ga, gb, site),
                })
            n += 1
        if n == 0:
            raise _Flag({"reason": f"no {kind} rounding pairs sampled"})
        return {"pairs": n}

    return check


# -- suite: rounding-commute -----------------------------------------------------


def _corner_cut(corner) -> GenericAngle:
    return GenericAngle(corner.prev.lap, corner.prev.dir)


def _check_rounding_commute(ctx, rng, deadline):
    paths = []
    for i in range(200):
        if i % 3 == 0:
            paths.append(sampling.open_path(rng, equal_endpoints=rng.random() < 0.3, max_points=9))
        else:
            paths.append(sampling.closed_path(rng, max_n=2, max_points=8))
    paths += sampling.periodic_paths(rng, 30)
    def relocate(rounded, corner):
        # The induced corner, or None when rounding consumed its whole arc
        # (possible near the free end of an open path) or left a kink.
        try:
            c2, _ = _locate_corner(rounded, _corner_cut(corner))
        except ValueError:
            return None
        return None if c2.is_kink else c2

    pairs = skipped = 0
    for p in paths:
        deadline.flag_if_exceeded(corner_pairs=pairs)
        cs = [c for c in corners(p) if not c.is_kink and c.prev is not None]
        for i, a in enumerate(cs):
            ra = round_corner(p, a)
            for b in cs[i + 1:]:
                rb = round_corner(p, b)
                b_in_ra = relocate(ra, b)
                a_in_rb = relocate(rb, a)
                if (b_in_ra is None) != (a_in_rb is None):
                    raise _Fail({
                        "path": path_sort_key(p),
                        "corners": (str(a.at), str(b.at)),
                        "reason": "definedness is one sided",
                    })
                if b_in_ra is None:
                    skipped += 1
                    continue
                if round_corner(ra, b_in_ra) != round_corner(rb, a_in_rb):
                    raise _Fail({
                        "path": path_sort_key(p),
                        "corners": (str(a.at), str(b.at)),
                    })
                pairs += 1
    return {"paths": len(paths), "corner_pairs": pairs, "undefined_pairs": skipped}


# -- suite: u-chainmap -----------------------------------------------------------


def _u_samples(rng, count):
    return sampling.generators(rng, count, kinds=("closed", "closed", "periodic"), max_points=8)


def _check_u_degree(ctx, rng, deadline):
    terms = 0
    for g in _u_samples(rng, 100):
        cut = _safe_cut(rng, [g.path], g.path.rotation)
        for g2, _ in u_map(g, cut).items():
            if relative_index(g, g2) != 2:
                raise _Fail({"generator": _gen_repr(g), "term": _gen_repr(g2)})
            terms += 1
        deadline.flag_if_exceeded(terms=terms)
    return {"generators": 100, "nonzero_terms": terms}


def _check_u_chainmap(ctx, rng, deadline):
    for i, g in enumerate(_u_samples(rng, 110)):
        cut = _safe_cut(rng, [g.path], g.path.rotation)
        lhs = u_map(g, cut).map_linear(differential)
        rhs = differential(g).map_linear(lambda t: u_map(t, cut))
        if lhs != rhs:
            raise _Fail({"generator": _gen_repr(g), "cut": str(cut)})
        if i % 20 == 0:
            deadline.flag_if_exceeded(generators_checked=i)
    return {"generators": 110}


def _check_u_eh(ctx, rng, deadline):
    rounded = 0
    for _ in range(60):
        p = sampling.closed_path(rng, max_n=2, max_points=8, min_edges=2)
        cut = _safe_cut(rng, [p], p.rotation)
        corner, _ = _locate_corner(p, cut)
        ue = u_map(Generator(p, ("e",) * len(p.edges)), cut)
        uh = h_cycle(p).map_linear(lambda t: u_map(t, cut))
        if corner.is_kink:
            if ue or uh:
                raise _Fail({"path": path_sort_key(p), "reason": "kinked corner must give zero"})
            continue
        q = round_corner(p, corner)
        if ue != e_cycle(q) or uh != h_cycle(q):
            raise _Fail({"path": path_sort_key(p), "cut": str(cut)})
        rounded += 1
        deadline.flag_if_exceeded(paths_checked=rounded)
    return {"paths": 60, "non_kink_cases": rounded}


# -- suite: homotopy -------------------------------------------------------------


def _check_homotopy(ctx, rng, deadline):
    for i, g in enumerate(_u_samples(rng, 100)):
        n = g.path.rotation
        c1 = _safe_cut(rng, [g.path], n)
        c2 = _safe_cut(rng, [g.path], n)
        if (c1.lap, c1.dir) == (c2.lap, c2.dir):
            continue
        k = lambda t: k_homotopy(t, c1, c2)
        lhs = k(g).map_linear(differential) + differential(g).map_linear(k)
        rhs = u_map(g, c1) - u_map(g, c2)
        if lhs != rhs:
            raise _Fail({"generator": _gen_repr(g), "cuts": (str(c1), str(c2))})
        if i % 20 == 0:
            deadline.flag_if_exceeded(generators_checked=i)
    return {"generators": 100}


def _check_twisted(ctx, rng, deadline):
    for i, g in enumerate(_u_samples(rng, 100)):
        anti = delta_prime(g).map_linear(differential) + differential(g).map_linear(delta_prime)
        if anti:
            raise _Fail({"generator": _gen_repr(g), "identity": "dd' + d'd"})
        if delta_prime(g).map_linear(delta_prime):
            raise _Fail({"generator": _gen_repr(g), "identity": "d'd'"})
        if delta_twisted(g).map_linear(delta_twisted):
            raise _Fail({"generator": _gen_repr(g), "identity": "twisted square"})
        if i % 20 == 0:
            deadline.flag_if_exceeded(generators_checked=i)
    return {"generators": 100}


# -- suite: cycles ---------------------------------------------------------------


def _check_cycles_eh(ctx, rng, deadline):
    for i in range(50):
        if i % 3 == 2:
            p = sampling.open_path(rng, equal_endpoints=rng.random() < 0.3, max_points=8)
        else:
            p = sampling.closed_path(rng, max_n=2, max_points=8)
        if e_cycle(p).map_linear(differential):
            raise _Fail({"path": path_sort_key(p), "cycle": "all-e"})
        if h_cycle(p).map_linear(differential):
            raise _Fail({"path": path_sort_key(p), "cycle": "one-h sum"})
        deadline.flag_if_exceeded(paths_checked=i)
    return {"paths": 50}


def _check_cycles_z(ctx, rng, deadline):
    for i in range(40):
        n = rng.randint(1, 3)
        a = Vec(rng.randint(-3, 3), rng.randint(-3, 3))
        b = Vec(rng.randint(-3, 3), rng.randint(-3, 3))
        if z_cycle(n, a, b).map_linear(differential):
            raise _Fail({"n": n, "a": list(a), "b": list(b)})
        if z_cycle(n, a, b) + z_cycle(n, b, a):
            raise _Fail({"n": n, "a": list(a), "b": list(b), "identity": "antisymmetry"})
        deadline.flag_if_exceeded(segments_checked=i)
    return {"segments": 40}


def _check_cycles_q(ctx, rng, deadline):
    prims = [Vec(1, 0), Vec(0, 1), Vec(1, 1), Vec(2, 1), Vec(1, -2), Vec(-1, 1), Vec(3, 2)]
    for i in range(40):
        n = rng.randint(1, 2)
        a = Vec(rng.randint(-2, 2), rng.randint(-2, 2))
        d = rng.choice(prims)
        if q_cycle(a, a + d, n).map_linear(differential):
            raise _Fail({"n": n, "a": list(a), "step": list(d)})
        deadline.flag_if_exceeded(steps_checked=i)
    return {"steps": 40}


def _check_cycles_pe(ctx, rng, deadline):
    prims = [Vec(1, 0), Vec(0, 1), Vec(1, 1), Vec(2, 1), Vec(1, -2), Vec(-1, 1)]
    for i in range(40):
        n = rng.randint(1, 3)
        a = Vec(rng.randint(-2, 2), rng.randint(-2, 2))
        d = rng.choice(prims)
        theta = ExtendedAngle(rng.randrange(n), d)
        want = p_gen(a + d, antipode(theta), n) - p_gen(a, theta, n)
        if e_gen(a, theta, n).map_linear(differential) != want:
            raise _Fail({"n": n, "a": list(a), "theta": str(theta)})
        deadline.flag_if_exceeded(two_gons_checked=i)
    return {"two_gons": 40}


def _check_cycles_triangle(ctx, rng, deadline):
    done = 0
    for i in range(12):
        n = 2 if i % 3 == 2 else 1
        a, b, c = _simple_triangle(rng)
        tri = n_convex([a, b, c], n)
        cx = build_complex({"kind": "below", "path": path_to_json(tri)})
        ch = z_cycle(n, a, b) + z_cycle(n, b, c) + z_cycle(n, c, a)
        if not cx.is_cycle(ch):
            raise _Fail({"n": n, "triangle": [list(a), list(b), list(c)], "reason": "not a cycle"})
        ok, witness = cx.is_boundary(ch)
        if not ok or witness.map_linear(differential) != ch:
            raise _Fail({"n": n, "triangle": [list(a), list(b), list(c)], "reason": "no witness"})
        done += 1
        deadline.flag_if_exceeded(triangles_checked=done)
    return {"triangles": done}


# -- suite: theorem-5 ------------------------------------------------------------


def _check_open_distinct(ctx, rng, deadline):
    # Convex hypothesis: the window must stay within one full turn.
    for i in range(20):
        p = sampling.open_path(rng, max_points=8, max_n=1)
        cx = build_complex({"kind": "below", "path": path_to_json(p)})
        hs = {d: cx.homology(d) for d in cx.degrees()}
        rank = sum(h.rank for h in hs.values())
        torsion = [h for h in hs.values() if h.torsion]
        if rank != 2 or torsion:
            raise _Fail({"path": path_sort_key(p), "ranks": {d: h.rank for d, h in hs.items()}})
        for name, ch in (("all-e", e_cycle(p)), ("one-h sum", h_cycle(p))):
            if not cx.is_cycle(ch) or cx.is_boundary(ch)[0]:
                raise _Fail({"path": path_sort_key(p), "class": name})
            if not _class_generates(cx, ch):
                raise _Fail({"path": path_sort_key(p), "class": name, "reason": "not a generator"})
        deadline.flag_if_exceeded(paths_checked=i)
    return {"paths": 20}


def _check_open_equal(ctx, rng, deadline):
    # Convex hypothesis: the window spans exactly one full turn.
    for i in range(10):
        p = sampling.open_path(rng, equal_endpoints=True, max_points=8, max_n=1)
        cx = build_complex({"kind": "below", "path": path_to_json(p)})
        hs = {d: cx.homology(d) for d in cx.degrees()}
        rank = sum(h.rank for h in hs.values())
        torsion = [h for h in hs.values() if h.torsion]
        if rank != 3 or torsion:
            raise _Fail({"path": path_sort_key(p), "ranks": {d: h.rank for d, h in hs.items()}})
        for name, ch in (("all-e", e_cycle(p)), ("one-h sum", h_cycle(p))):
            if not cx.is_cycle(ch) or cx.is_boundary(ch)[0]:
                raise _Fail({"path": path_sort_key(p), "class": name})
            if not _class_generates(cx, ch):
                raise _Fail({"path": path_sort_key(p), "class": name, "reason": "not a generator"})
        deadline.flag_if_exceeded(paths_checked=i)
    return {"paths": 10}


def _zero_homology_pattern(k: int, hs: Mapping[int, HomologyGroup]) -> dict | None:
    for d, h in hs.items():
        want = k if d == 0 else (1 if 1 <= d <= 2 * (k - 1) else 0)
        if h.rank != want or h.torsion:
            return {"degree": d, "got": str(h), "want_rank": want}
    for d in range(0, 2 * (k - 1) + 1):
        if d not in hs:
            return {"degree": d, "got": "missing", "want_rank": k if d == 0 else 1}
    return None


def _check_closed_zero(ctx, rng, deadline):
    ks = {}
    for k in range(2, 7):
        p = _exact_point_path(rng, k)
        cx = build_complex({"kind": "below", "path": path_to_json(p)})
        hs = {d: cx.homology(d) for d in cx.degrees()}
        bad = _zero_homology_pattern(k, hs)
        if bad:
            raise _Fail({"k": k, "path": path_sort_key(p), **bad})
        ks[k] = cx.total_dim()
        deadline.flag_if_exceeded(points_done=k)
    return {"dims": ks}


def _check_closed_component(ctx, rng, deadline):
    for k in range(2, 7):
        p = _exact_point_path(rng, k)
        cx = build_complex({"kind": "below", "path": path_to_json(p), "j": -2})
        h = cx.homology(0)
        if h.rank != k - 1 or h.torsion:
            raise _Fail({"k": k, "path": path_sort_key(p), "got": str(h)})
        deadline.flag_if_exceeded(points_done=k)
    return {"checked_k": list(range(2, 7))}


def _check_j_preserved(ctx, rng, deadline):
    terms = 0
    for i in range(30):
        g = sampling.labeled(rng, sampling.closed_path(rng, max_n=2, max_points=8))
        j = component_grading(g)
        for g2, _ in differential(g).items():
            if component_grading(g2) != j:
                raise _Fail({"generator": _gen_repr(g), "term": _gen_repr(g2)})
            terms += 1
        deadline.flag_if_exceeded(terms=terms)
    return {"generators": 30, "terms": terms}


# -- suite: flattening -----------------------------------------------------------


_FLATTEN_SHAPES = (
    (1, (Vec(0, 0), Vec(1, 0), Vec(0, 1))),
    (1, (Vec(0, 0), Vec(1, 0), Vec(0, 1), Vec(1, 1))),
    (1, (Vec(0, 0), Vec(2, 0), Vec(0, 1))),
    (2, (Vec(0, 0), Vec(1, 0), Vec(0, 1))),
    (2, (Vec(0, 0), Vec(1, 0), Vec(0, 1), Vec(1, 1))),
)


def _flatten_cases():
    for n, pts in _FLATTEN_SHAPES:
        lam = n_convex(list(pts), n)
        yield n, lam, lattice_point_count(lam)


def _check_flatten_chainmap(ctx, rng, deadline):
    cases = 0
    for n, lam, k in _flatten_cases():
        cut = GAMMA0
        dst = build_complex({"kind": "below", "path": path_to_json(lam)})
        dd = dst.degrees()
        src = build_complex({"kind": "xaxis", "n": n, "m": k - 1, "degrees": [min(dd), max(dd)]})
        f = lambda g: flatten(g, lam, cut)
        for d in src.degrees():
            for g in src.basis[d]:
                if f(g).map_linear(differential) != differential(g).map_linear(f):
                    raise _Fail({"n": n, "k": k, "generator": _gen_repr(g)})
            deadline.flag_if_exceeded(cases_done=cases, at_degree=d)
        cases += 1
    return {"cases": cases}


def _check_flatten_iso(ctx, rng, deadline):
    cells = 0
    for n, lam, k in _flatten_cases():
        cut = GAMMA0
        dst_full = build_complex({"kind": "below", "path": path_to_json(lam)})
        dd = dst_full.degrees()
        lo, hi = min(dd), max(dd)
        f = lambda g: flatten(g, lam, cut)
        js = sorted({component_grading(g) for d in dd for g in dst_full.basis[d]})
        for j in js:
            deadline.flag_if_exceeded(cells_done=cells)
            src = build_complex(
                {"kind": "xaxis", "n": n, "m": k - 1, "degrees": [lo, hi], "j": j}
            )
            dst = build_complex(
                {"kind": "below", "path": path_to_json(lam), "j": j}
            )
            degs = sorted(set(dst.degrees()) | {d for d in src.degrees() if lo <= d <= hi})
            for d in degs:
                res = induced_map(src, dst, f, d)
                if not res.is_iso:
                    raise _Fail({
                        "n": n, "k": k, "j": j, "degree": d,
                        "src": str(res.src), "dst": str(res.dst),
                    })
                cells += 1
    return {"cells": cells}


# -- suite: splicing -------------------------------------------------------------


def _xaxis_samples(rng, count, n):
    cx = build_complex({"kind": "xaxis", "n": n, "m": 3, "degrees": [0, 5]})
    gens = [g for d in cx.degrees() for g in cx.basis[d]]
    return [rng.choice(gens) for _ in range(count)]


def _check_splice_chainmap(ctx, rng, deadline):
    gens = _xaxis_samples(rng, 40, 1) + _xaxis_samples(rng, 20, 2)
    for i, g in enumerate(gens):
        if splice(g).map_linear(differential) != differential(g).map_linear(splice):
            raise _Fail({"generator": _gen_repr(g)})
        if i % 10 == 0:
            deadline.flag_if_exceeded(generators_checked=i)
    return {"generators": len(gens)}


def _check_splice_u(ctx, rng, deadline):
    gens = _xaxis_samples(rng, 40, 1) + _xaxis_samples(rng, 20, 2)
    for i, g in enumerate(gens):
        spliced = [t.path for t, _ in splice(g).items()]
        cut = _safe_cut(rng, [g.path] + spliced, g.path.rotation)
        lhs = u_map(g, cut).map_linear(splice)
        rhs = splice(g).map_linear(lambda t: u_map(t, cut))
        if lhs != rhs:
            raise _Fail({"generator": _gen_repr(g), "cut": str(cut)})
        if i % 10 == 0:
            deadline.flag_if_exceeded(generators_checked=i)
    return {"generators": len(gens)}


def _xaxis_pattern(n: int, i: int, j: int) -> int:
    if (i, j) == (0, -2 * n):
        return 0
    return 1 if j == 2 * (i // 2) - 2 * n + 2 else 0


def _check_xaxis_pattern(n):
    def check(ctx, rng, deadline):
        cells = []
        flagged = []
        for i in range(0, 5):
            for j in range(-2 * n, 2 * (i // 2) - 2 * n + 4, 2):
                if (i, j) == (0, -2 * n):
                    continue
                res = stabilize(
                    {"kind": "xaxis", "n": n, "m": 1, "degrees": [max(i - 1, 0), i + 1], "j": j},
                    i,
                    window=2,
                    max_steps=8,
                    time_budget=deadline.remaining,
                )
                want = _xaxis_pattern(n, i, j)
                if res.certified and (res.homology.rank, res.homology.torsion) != (want, ()):
                    raise _Fail({"i": i, "j": j, "got": str(res.homology), "want_rank": want})
                if not res.certified:
                    flagged.append([i, j])
                else:
                    cells.append([i, j])
        if flagged:
            raise _Flag({"stabilized": cells, "not_stabilized": flagged})
        return {"cells": len(cells)}

    return check


def _check_splice_iso(ctx, rng, deadline):
    cells = [(0, 0), (1, 0), (2, 2), (3, 2), (4, 4), (0, 2)]
    done, flagged = [], []
    for i, j in cells:
        res = stabilize(
            {"kind": "xaxis", "n": 1, "m": 1, "degrees": [max(i - 1, 0), i + 1], "j": j},
            i,
            window=2,
            max_steps=8,
            time_budget=deadline.remaining,
        )
        if not res.certified:
            flagged.append([i, j])
            continue
        m = res.spec["m"]
        src = build_complex(res.spec)
        dst = build_complex(
            {"kind": "xaxis", "n": 2, "m": 2 * m + 1,
             "degrees": [max(i - 1, 0), i + 1], "j": j - 2}
        )
        check2 = stabilize(
            {"kind": "xaxis", "n": 2, "m": 1, "degrees": [max(i - 1, 0), i + 1], "j": j - 2},
            i,
            window=2,
            max_steps=8,
            time_budget=deadline.remaining,
        )
        res2 = induced_map(src, dst, splice, i)
        if not res2.is_iso:
            raise _Fail({"i": i, "j": j, "src": str(res2.src), "dst": str(res2.dst)})
        if check2.certified and check2.homology.invariants != res2.dst.invariants:
            raise _Fail({"i": i, "j": j, "reason": "target truncation not stable"})
        done.append([i, j])
        deadline.flag_if_exceeded(cells_done=done, not_stabilized=flagged)
    if flagged:
        raise _Flag({"cells_done": done, "not_stabilized": flagged})
    return {"cells": done}


# -- suite: vanishing ------------------------------------------------------------


def _check_vanishing(gamma):
    def check(ctx, rng, deadline):
        ranks = {}
        for d in (0, 1):
            res = stabilize(
                {
                    "kind": "periodic",
                    "n": 1,
                    "gamma": list(gamma),
                    "window": [[0, 1], [0, 1]],
                    "degrees": [d - 1, d + 1],
                },
                d,
                window=2,
                max_steps=6,
                time_budget=deadline.remaining,
            )
            if res.certified and (res.homology.rank or res.homology.torsion):
                raise _Fail({"degree": d, "got": str(res.homology)})
            if not res.certified:
                raise _Flag({
                    "degree": d,
                    "trend": [str(h) for _, h in res.history],
                    "reason": "not stabilized within budget",
                })
            ranks[d] = res.homology.rank
        return {"degrees": ranks}

    return check


# -- suite: hbar -----------------------------------------------------------------


def _check_hbar_degree(d, stretch=False):
    def check(ctx, rng, deadline):
        res = stabilize(
            {"kind": "bar", "n": 1, "max_diameter": 1, "degrees": [max(d - 1, 0), d + 1]},
            d,
            window=2,
            max_steps=6,
            time_budget=deadline.remaining,
        )
        if res.certified:
            if res.homology.rank != 3 or res.homology.torsion:
                raise _Fail({"degree": d, "got": str(res.homology)})
            return {"degree": d, "group": str(res.homology), "stage": res.spec["max_diameter"]}
        data = {
            "degree": d,
            "trend": [str(h) for _, h in res.history],
            "reason": "not stabilized within budget",
        }
        if stretch:
            data["stretch_goal"] = True
        raise _Flag(data)

    return check


def _check_hbar_u(ctx, rng, deadline):
    cx = build_complex({"kind": "bar", "n": 1, "max_diameter": 3, "degrees": [0, 3]})
    f = lambda g: canonical_chain(u_map(g, GAMMA0))
    res = induced_map(cx, cx, f, degree=2, shift=-2)
    if not res.is_iso:
        raise _Fail({"src": str(res.src), "dst": str(res.dst), "surjective": res.surjective})
    return {"src": str(res.src), "dst": str(res.dst)}


# -- registry --------------------------------------------------------------------


SUITES: dict[str, _Suite] = {}


def _register(name, description, checks, setup=None):
    SUITES[name] = _Suite(name, description, tuple(checks), setup)


_register(
    "delta-squared",
    "The differential squares to zero and drops the grading by one.",
    [
        ("01-closed-paths", "differential squares to zero below random closed paths", _check_dd_closed),
        ("02-open-paths", "differential squares to zero below random open paths", _check_dd_open),
        ("03-bar-truncation", "boundary matrices of a translation-reduced complex compose to zero", _check_dd_bar),
        ("04-degree-rule", "every nonzero differential coefficient drops the index by one", _check_degree_rule),
        ("05-single-rounding-index", "index change under one rounding matches the label counts", _check_rounding_index),
    ],
)

_register(
    "axioms",
    "Structural properties of every nonzero differential coefficient.",
    [
        ("01-index", "coefficients connect generators one index apart", _check_ax_index),
        ("02-nesting", "targets are nested below sources", _check_ax_nesting),
        ("03-label-matching", "agreeing edges keep labels; partial agreement never drops an h", _check_ax_labels),
        ("04-connected", "the difference set of each coefficient pair is connected", _check_ax_connected),
        ("05-two-edges", "at most two source edges meet the difference set", _check_ax_two_edges),
        ("06-locality", "coefficients only depend on the pair's difference", _check_ax_locality),
        ("07-locality-null", "zero coefficients stay zero after stripping matches", _check_ax_locality_null),
        ("08-simple-rounding", "one new primitive edge gives coefficient exactly +-1", _check_ax_rounding("simple")),
        ("09-degenerate-rounding", "roundings that shorten a straight angle give exactly +-1", _check_ax_rounding("degenerate")),
    ],
    setup=_axioms_setup,
)

_register(
    "rounding-commute",
    "Rounding distinct corners in either order gives the same path.",
    [("01-corner-pairs", "both rounding orders agree and are defined together", _check_rounding_commute)],
)

_register(
    "u-chainmap",
    "The corner-cut map: degree, chain map property, and canonical cycles.",
    [
        ("01-index-drop", "every corner-cut term sits two indices down", _check_u_degree),
        ("02-chain-map", "the corner-cut map commutes with the differential", _check_u_chainmap),
        ("03-eh-cycles", "corner cutting rounds the all-e and one-h cycles", _check_u_eh),
    ],
)

_register(
    "homotopy",
    "Cut maps at different angles are chain homotopic; twisted differentials square to zero.",
    [
        ("01-k-homotopy", "the relabeling homotopy interpolates between two cut maps", _check_homotopy),
        ("02-twisted", "the relabeling map anticommutes and the deformed differential squares to zero", _check_twisted),
    ],
)

_register(
    "cycles",
    "Distinguished cycles close up and satisfy their chain-level relations.",
    [
        ("01-eh", "all-e and one-h sums are cycles", _check_cycles_eh),
        ("02-z", "segment cycles close and are antisymmetric", _check_cycles_z),
        ("03-q", "alternating one-e sums along a primitive step are cycles", _check_cycles_q),
        ("04-pe", "the boundary of a marked two-gon telescopes between wrapped points", _check_cycles_pe),
        ("05-triangle", "triangle sums of segment cycles bound with an exact witness", _check_cycles_triangle),
    ],
)

_register(
    "theorem-5",
    "Homology of below complexes at desk scale: open paths and closed paths.",
    [
        ("01-open-distinct", "open paths with distinct endpoints: free rank two, generated by the canonical cycles", _check_open_distinct),
        ("02-open-equal", "open paths with equal endpoints: free rank three", _check_open_equal),
        ("03-closed-pattern", "closed paths: rank matches the enclosed point count pattern", _check_closed_zero),
        ("04-closed-component", "the lowest component piece has rank one less than the point count", _check_closed_component),
        ("05-j-preserved", "the differential preserves the component grading", _check_j_preserved),
    ],
)

_register(
    "flattening",
    "Flattening onto sorted enclosed points is a chain map inducing isomorphisms.",
    [
        ("01-chain-map", "flattening commutes with the differential on every generator", _check_flatten_chainmap),
        ("02-induced-iso", "flattening induces isomorphisms in every degree and component", _check_flatten_iso),
    ],
)

_register(
    "splicing",
    "The corner-splice map: chain map, compatibility, and stable rank pattern.",
    [
        ("01-chain-map", "splicing commutes with the differential", _check_splice_chainmap),
        ("02-u-commute", "splicing commutes with the corner-cut map", _check_splice_u),
        ("03-pattern-n1", "stable flat-complex ranks match the staircase pattern, one wrap", _check_xaxis_pattern(1)),
        ("04-pattern-n2", "stable flat-complex ranks match the staircase pattern, two wraps", _check_xaxis_pattern(2)),
        ("05-splice-iso", "splicing induces isomorphisms between stable truncations", _check_splice_iso),
    ],
)

_register(
    "vanishing",
    "Nonzero-period complexes drain to zero homology as the window grows down.",
    [
        ("01-gamma-1-0", "period (1,0): stable rank zero in low degrees", _check_vanishing(Vec(1, 0))),
        ("02-gamma-2-0", "period (2,0): stable rank zero in low degrees", _check_vanishing(Vec(2, 0))),
        ("03-gamma-1-1", "period (1,1): stable rank zero in low degrees", _check_vanishing(Vec(1, 1))),
    ],
)

_register(
    "hbar",
    "Translation-reduced homology stabilizes at rank three with a degree-two periodicity map.",
    [
        ("01-degree-0", "stable rank three in degree zero", _check_hbar_degree(0)),
        ("02-degree-1", "stable rank three in degree one", _check_hbar_degree(1)),
        ("03-degree-2", "stable rank three in degree two", _check_hbar_degree(2)),
        ("04-degree-3", "stable rank three in degree three (stretch)", _check_hbar_degree(3, stretch=True)),
        ("05-u-iso", "the corner-cut map induces an isomorphism from degree two to zero", _check_hbar_u),
    ],
)
