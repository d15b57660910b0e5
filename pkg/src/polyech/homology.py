"""Integer chain complexes over the path generators, with exact homology.

The pieces here are deliberately elementary: sparse integer matrices, a
Smith normal form over Z computed by gcd elimination, graded complexes
assembled from a declarative build description, and a stabilization loop
that grows a truncated complex until consecutive inclusions induce
isomorphisms on homology.
"""

from __future__ import annotations

import copy
import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from .lattice import ExtendedAngle, Vec, angle_sort_key, primitive_of
from .paths import (
    AdmissiblePath,
    Closed,
    Open,
    Periodic,
    act_symmetry,
    box_path,
    canonical_translation,
    enumerate_below,
    make_path,
    n_convex,
    path_from_json,
    path_sort_key,
    translate,
    x_axis_path,
)
from .chains import (
    Chain,
    Generator,
    canonical_generator,
    differential,
    generator_sort_key,
    generator_to_json,
    index,
    relative_index,
)


class SparseIntMatrix:
    """Sparse integer matrix stored as a dict of (row, col) -> value."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Mapping | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        self.entries: dict[tuple[int, int], int] = {}
        if entries:
            for (i, j), v in entries.items():
                self[i, j] = v

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def __setitem__(self, key: tuple[int, int], value: int) -> None:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(key)
        value = int(value)
        if value:
            self.entries[i, j] = value
        else:
            self.entries.pop((i, j), None)

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (
            other.rows,
            other.cols,
            other.entries,
        )

    def __repr__(self) -> str:
        return f"SparseIntMatrix({self.rows}x{self.cols}, nnz={self.nnz})"

    def matvec(self, vec: Sequence[int]) -> list[int]:
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        out = [0] * self.rows
        for (i, j), v in self.entries.items():
            c = vec[j]
            if c:
                out[i] += v * c
        return out

    def column(self, j: int) -> list[int]:
        out = [0] * self.rows
        for (i, j2), v in self.entries.items():
            if j2 == j:
                out[i] = v
        return out

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def to_text(self) -> str:
        """Serialize as a header line "rows cols nnz" plus triplet lines."""
        lines = [f"{self.rows} {self.cols} {self.nnz}"]
        for (i, j) in sorted(self.entries):
            lines.append(f"{i} {j} {self.entries[i, j]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SparseIntMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty matrix text")
        rows, cols, nnz = (int(t) for t in lines[0].split())
        if len(lines) - 1 != nnz:
            raise ValueError("triplet count does not match header")
        mat = cls(rows, cols)
        for ln in lines[1:]:
            i, j, v = (int(t) for t in ln.split())
            if mat[i, j]:
                raise ValueError(f"duplicate triplet at ({i}, {j})")
            mat[i, j] = v
        return mat

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]], cols: int | None = None):
        rows = len(dense)
        if cols is None:
            cols = len(dense[0]) if rows else 0
        mat = cls(rows, cols)
        for i, row in enumerate(dense):
            for j, v in enumerate(row):
                if v:
                    mat[i, j] = v
        return mat


@dataclass(frozen=True)
class SmithForm:
    """Smith normal form data: divisors d_1 | d_2 | ... | d_r, all positive.

    When transforms were requested, u @ M @ v is the diagonal matrix with
    the divisors on the leading diagonal, and uinv, vinv are the exact
    integer inverses of u and v.
    """

    shape: tuple[int, int]
    divisors: tuple[int, ...]
    u: list[list[int]] | None = None
    uinv: list[list[int]] | None = None
    v: list[list[int]] | None = None
    vinv: list[list[int]] | None = None

    @property
    def rank(self) -> int:
        return len(self.divisors)


def _identity(n: int) -> list[list[int]]:
    return [[int(i == k) for k in range(n)] for i in range(n)]


def smith_normal_form(mat: SparseIntMatrix, with_transforms: bool = False) -> SmithForm:
    """Diagonalize an integer matrix by unimodular row and column operations.

    Gcd elimination with smallest-pivot selection; a final pass repairs the
    divisibility chain with 2x2 gcd/lcm reductions run through the same
    elimination engine.
    """
    m, n = mat.rows, mat.cols
    rows: dict[int, dict[int, int]] = {}
    colrows: dict[int, set[int]] = {}
    for (i, j), v in mat.entries.items():
        rows.setdefault(i, {})[j] = v
        colrows.setdefault(j, set()).add(i)
    if with_transforms:
        U, Uinv, V, Vinv = _identity(m), _identity(m), _identity(n), _identity(n)
    else:
        U = Uinv = V = Vinv = None

    def row_axpy(dst: int, src: int, q: int) -> None:
        # row_dst -= q * row_src
        if not q:
            return
        rd = rows.setdefault(dst, {})
        for j, v in list(rows.get(src, {}).items()):
            nv = rd.get(j, 0) - q * v
            if nv:
                rd[j] = nv
                colrows.setdefault(j, set()).add(dst)
            elif j in rd:
                del rd[j]
                colrows[j].discard(dst)
        if not rd:
            rows.pop(dst, None)
        if U is not None:
            us, ud = U[src], U[dst]
            for k in range(m):
                ud[k] -= q * us[k]
            for k in range(m):
                Uinv[k][src] += q * Uinv[k][dst]

    def col_axpy(dst: int, src: int, q: int) -> None:
        # col_dst -= q * col_src
        if not q:
            return
        for i in list(colrows.get(src, set())):
            ri = rows[i]
            nv = ri.get(dst, 0) - q * ri[src]
            if nv:
                ri[dst] = nv
                colrows.setdefault(dst, set()).add(i)
            elif dst in ri:
                del ri[dst]
                colrows[dst].discard(i)
        if V is not None:
            for k in range(n):
                V[k][dst] -= q * V[k][src]
            for k in range(n):
                Vinv[src][k] += q * Vinv[dst][k]

    active_rows = set(range(m))
    active_cols = set(range(n))
    pivots: list[tuple[int, int]] = []

    def pick_pivot():
        best = None
        for i in active_rows:
            for j, v in rows.get(i, {}).items():
                a = abs(v)
                if a == 1:
                    return (i, j)
                if best is None or a < best[2]:
                    best = (i, j, a)
        return None if best is None else (best[0], best[1])

    while True:
        p = pick_pivot()
        if p is None:
            # Diagonal reached; repair the divisibility chain if needed.
            vals = sorted(pivots, key=lambda ij: abs(rows[ij[0]][ij[1]]))
            fix = None
            for a, b in zip(vals, vals[1:]):
                if abs(rows[b[0]][b[1]]) % abs(rows[a[0]][a[1]]):
                    fix = (a, b)
                    break
            if fix is None:
                break
            (ia, ja), (ib, jb) = fix
            pivots.remove((ia, ja))
            pivots.remove((ib, jb))
            active_rows.update((ia, ib))
            active_cols.update((ja, jb))
            row_axpy(ia, ib, -1)
            continue
        i, j = p
        while True:
            pval = rows[i][j]
            switched = False
            for i2 in list(colrows.get(j, set())):
                if i2 == i:
                    continue
                row_axpy(i2, i, rows[i2][j] // pval)
                if rows.get(i2, {}).get(j):
                    i = i2
                    switched = True
                    break
            if switched:
                continue
            pval = rows[i][j]
            for j2 in list(rows[i].keys()):
                if j2 == j:
                    continue
                col_axpy(j2, j, rows[i][j2] // pval)
                if rows[i].get(j2):
                    j = j2
                    switched = True
                    break
            if switched:
                continue
            break
        active_rows.discard(i)
        active_cols.discard(j)
        pivots.append((i, j))

    # Normalize signs.
    for (i, j) in pivots:
        if rows[i][j] < 0:
            rows[i][j] = -rows[i][j]
            if U is not None:
                for k in range(m):
                    U[i][k] = -U[i][k]
                for k in range(m):
                    Uinv[k][i] = -Uinv[k][i]

    pivots.sort(key=lambda ij: rows[ij[0]][ij[1]])
    divisors = tuple(rows[i][j] for (i, j) in pivots)

    if U is not None:
        # Permute so that pivot k lands on diagonal cell (k, k).
        row_order = [i for (i, _) in pivots]
        row_order += sorted(set(range(m)) - set(row_order))
        col_order = [j for (_, j) in pivots]
        col_order += sorted(set(range(n)) - set(col_order))
        U = [U[i] for i in row_order]
        Uinv = [[Uinv[a][i] for i in row_order] for a in range(m)]
        V = [[V[a][j] for j in col_order] for a in range(n)]
        Vinv = [Vinv[j] for j in col_order]
    return SmithForm((m, n), divisors, U, Uinv, V, Vinv)


@dataclass(frozen=True)
class HomologyGroup:
    """A finitely generated abelian group: free rank plus torsion divisors."""

    rank: int
    torsion: tuple[int, ...] = ()
    partial: bool = False

    def __str__(self) -> str:
        parts = []
        if self.rank:
            parts.append(f"Z^{self.rank}" if self.rank > 1 else "Z")
        parts.extend(f"Z/{d}" for d in self.torsion)
        body = " + ".join(parts) if parts else "0"
        return body + (" (partial)" if self.partial else "")

    @property
    def invariants(self) -> tuple:
        return (self.rank, self.torsion)


class GradedComplex:
    """A finite piece of a Z-graded chain complex with integer boundary maps.

    basis[d] lists the degree-d generators; boundary[d] is the matrix of
    the boundary map C_d -> C_{d-1} in those bases.  trusted is the closed
    degree interval on which homology is complete, or None when every
    degree of the complex is complete (finite complexes).
    """

    def __init__(
        self,
        spec: Mapping,
        basis: Mapping[int, Sequence[Generator]],
        boundary: Mapping[int, SparseIntMatrix],
        trusted: tuple[int, int] | None,
        normalize: Callable[[Generator], Generator] | None = None,
    ):
        self.spec = dict(spec)
        self.basis = {d: list(gens) for d, gens in basis.items() if gens}
        self.boundary = dict(boundary)
        self.trusted = trusted
        self.normalize = normalize or (lambda g: g)
        self._index: dict[Generator, tuple[int, int]] = {}
        for d, gens in self.basis.items():
            for k, g in enumerate(gens):
                self._index[g] = (d, k)
        self._snf_cache: dict[tuple[int, bool], SmithForm] = {}

    def degrees(self) -> list[int]:
        return sorted(self.basis)

    def dim(self, d: int) -> int:
        return len(self.basis.get(d, ()))

    def total_dim(self) -> int:
        return sum(len(g) for g in self.basis.values())

    def generator_index(self, gen: Generator) -> tuple[int, int]:
        g = self.normalize(gen)
        if g not in self._index:
            raise KeyError(f"generator not in complex: {g}")
        return self._index[g]

    def __contains__(self, gen: Generator) -> bool:
        try:
            self.generator_index(gen)
        except KeyError:
            return False
        return True

    def degree_of(self, chain: Chain) -> int:
        ds = {self.generator_index(g)[0] for g, _ in chain.items()}
        if len(ds) != 1:
            raise ValueError("chain is not homogeneous")
        return ds.pop()

    def chain_vector(self, chain: Chain, d: int) -> list[int]:
        vec = [0] * self.dim(d)
        for g, c in chain.items():
            if not isinstance(c, int):
                raise TypeError("complex coefficients must be integers")
            d2, k = self.generator_index(g)
            if d2 != d:
                raise ValueError(f"generator at degree {d2}, expected {d}")
            vec[k] += c
        return vec

    def vector_chain(self, vec: Sequence[int], d: int) -> Chain:
        gens = self.basis.get(d, ())
        return Chain({g: v for g, v in zip(gens, vec) if v})

    def matrix(self, d: int) -> SparseIntMatrix:
        if d in self.boundary:
            return self.boundary[d]
        return SparseIntMatrix(self.dim(d - 1), self.dim(d))

    def snf(self, d: int, transforms: bool = False) -> SmithForm:
        key = (d, transforms)
        if key not in self._snf_cache:
            if not transforms and (d, True) in self._snf_cache:
                return self._snf_cache[d, True]
            self._snf_cache[key] = smith_normal_form(self.matrix(d), transforms)
        return self._snf_cache[key]

    def _degree_complete(self, d: int) -> bool:
        if self.trusted is None:
            return True
        lo, hi = self.trusted
        return lo <= d <= hi

    def homology(self, d: int) -> HomologyGroup:
        n_d = self.dim(d)
        r_d = self.snf(d).rank if d in self.boundary or self.trusted is None else 0
        f_up = self.snf(d + 1)
        torsion = tuple(x for x in f_up.divisors if x > 1)
        rank = n_d - r_d - f_up.rank
        return HomologyGroup(rank, torsion, not self._degree_complete(d))

    def is_cycle(self, chain: Chain) -> bool:
        if not chain:
            return True
        d = self.degree_of(chain)
        return not any(self.matrix(d).matvec(self.chain_vector(chain, d)))

    def is_boundary(self, chain: Chain) -> tuple[bool, Chain | None]:
        """Decide whether chain bounds; on success also return a witness w
        with boundary(w) == chain (in this complex's normalized basis)."""
        if not chain:
            return True, Chain({})
        d = self.degree_of(chain)
        z = self.chain_vector(chain, d)
        f = self.snf(d + 1, transforms=True)
        m = self.dim(d)
        zp = [sum(f.u[i][k] * z[k] for k in range(m) if z[k]) for i in range(m)]
        for i, v in enumerate(zp):
            if i < f.rank:
                if v % f.divisors[i]:
                    return False, None
            elif v:
                return False, None
        w = [zp[i] // f.divisors[i] for i in range(f.rank)]
        n_up = self.dim(d + 1)
        y = [sum(f.v[r][i] * w[i] for i in range(f.rank)) for r in range(n_up)]
        return True, self.vector_chain(y, d + 1)

    def kernel_vectors(self, d: int) -> list[list[int]]:
        """Integer basis of the kernel of the boundary map at degree d."""
        f = self.snf(d, transforms=True)
        n_d = self.dim(d)
        return [[f.v[r][k] for r in range(n_d)] for k in range(f.rank, n_d)]

    def kernel_coords(self, vec: Sequence[int], d: int) -> list[int]:
        """Coordinates of a degree-d cycle in the kernel basis."""
        f = self.snf(d, transforms=True)
        n_d = self.dim(d)
        w = [sum(f.vinv[r][k] * vec[k] for k in range(n_d) if vec[k]) for r in range(n_d)]
        if any(w[: f.rank]):
            raise ValueError("vector is not a cycle")
        return w[f.rank :]


def _all_labelings(path: AdmissiblePath) -> Iterable[Generator]:
    for labels in itertools.product("eh", repeat=len(path.edges)):
        yield Generator(path, labels)


def _periodic_reference(n: int, gamma: Vec) -> Generator:
    d, m = primitive_of(gamma)
    path = make_path(Periodic(n, gamma), [(ExtendedAngle(0, d), m)], Vec(0, 0))
    return Generator(path, ("e",))


def _absolute_degrees(path: AdmissiblePath) -> bool:
    if isinstance(path.kind, Closed):
        return True
    if isinstance(path.kind, Open):
        a, b = path.endpoints()
        return a == b
    return False


def _assemble(
    spec: Mapping,
    graded: Mapping[int, list[Generator]],
    trusted: tuple[int, int] | None,
    boundary_degrees: Iterable[int],
    normalize: Callable[[Generator], Generator] | None = None,
    boundary_chain: Callable[[Generator], Chain] | None = None,
) -> GradedComplex:
    basis = {d: sorted(gens, key=generator_sort_key) for d, gens in graded.items() if gens}
    pos: dict[Generator, tuple[int, int]] = {}
    for d, gens in basis.items():
        for k, g in enumerate(gens):
            pos[g] = (d, k)
    bmap = boundary_chain or differential
    boundary: dict[int, SparseIntMatrix] = {}
    for d in boundary_degrees:
        mat = SparseIntMatrix(len(basis.get(d - 1, ())), len(basis.get(d, ())))
        for k, g in enumerate(basis.get(d, ())):
            for g2, c in bmap(g).items():
                if g2 not in pos:
                    raise AssertionError(
                        f"boundary leaves the complex at degree {d}: {g2}"
                    )
                d2, i = pos[g2]
                if d2 != d - 1:
                    raise AssertionError(
                        f"boundary term at degree {d2}, expected {d - 1}"
                    )
                mat[i, k] = mat[i, k] + c
        boundary[d] = mat
    return GradedComplex(spec, basis, boundary, trusted, normalize)


def _build_below(spec: Mapping) -> GradedComplex:
    top = path_from_json(spec["path"])
    paths = sorted(enumerate_below(top), key=path_sort_key)
    want_j = spec.get("j")
    if _absolute_degrees(top):
        deg = index
    else:
        if want_j is not None:
            raise ValueError("component grading needs an absolute degree")
        if isinstance(top.kind, Periodic):
            ref = _periodic_reference(top.kind.n, Vec(*top.kind.gamma))
        else:
            ref = Generator(paths[0], ("e",) * len(paths[0].edges))
        deg = lambda g: relative_index(g, ref)
    graded: dict[int, list[Generator]] = {}
    for p in paths:
        for g in _all_labelings(p):
            if want_j is not None and index(g) - g.h_count != want_j:
                continue
            graded.setdefault(deg(g), []).append(g)
    degrees = sorted(graded)
    bdeg = range(degrees[0], degrees[-1] + 1) if degrees else ()
    return _assemble(spec, graded, None, bdeg)


def _box_corner_walks(
    n: int,
    gamma: Vec,
    box: tuple[tuple[int, int], tuple[int, int]],
    two_area_max: int | None = None,
) -> list[AdmissiblePath]:
    """All rotation-n paths with total displacement gamma whose corner
    positions all lie in the closed box.

    Walks corners in traversal order (a lap-0 horizontal edge closes the
    walk), so the walk start is the anchor and the visited positions are
    exactly the path's corner positions.  For closed walks (gamma = 0) the
    vertex-fan area from the anchor grows monotonically, so two_area_max
    prunes every branch whose doubled area already exceeds it.
    """
    (x0, x1), (y0, y1) = box
    pts = [Vec(x, y) for x in range(x0, x1 + 1) for y in range(y0, y1 + 1)]
    # Edge steps run corner to corner inside the box, except the step out of
    # the anchor, which lands one period later: include gamma-shifted diffs.
    dirs = sorted(
        {
            primitive_of(p + s - q)[0]
            for p in pts
            for q in pts
            for s in (Vec(0, 0), gamma)
            if p + s != q
        }
    )
    zero = ExtendedAngle(0, Vec(1, 0))
    angles = [
        a
        for a in sorted(
            (ExtendedAngle(lap, d) for lap in range(n) for d in dirs),
            key=angle_sort_key,
        )
        if a != zero
    ]

    def inside(p: Vec) -> bool:
        return x0 <= p.x <= x1 and y0 <= p.y <= y1

    closed = gamma == Vec(0, 0)
    kind = Closed(n) if closed else Periodic(n, gamma)
    out: list[AdmissiblePath] = []

    def rec(anchor: Vec, posn: Vec, start: int, edges: list, fan: int) -> None:
        rem = anchor + gamma - posn
        if rem == Vec(0, 0) and edges:
            out.append(make_path(kind, list(edges), anchor))
        if rem.y == 0 and rem.x >= 1 and inside(anchor + gamma):
            out.append(make_path(kind, list(edges) + [(zero, rem.x)], anchor))
        for idx in range(start, len(angles)):
            d = angles[idx].dir
            mult = 1
            while inside(posn + mult * d):
                npos = posn + mult * d
                nfan = fan + (
                    (posn.x - anchor.x) * (npos.y - anchor.y)
                    - (posn.y - anchor.y) * (npos.x - anchor.x)
                )
                if two_area_max is not None and nfan > two_area_max:
                    break
                edges.append((angles[idx], mult))
                rec(anchor, npos, idx + 1, edges, nfan)
                edges.pop()
                mult += 1

    for ax in range(x0 - max(gamma.x, 0), x1 - min(gamma.x, 0) + 1):
        for ay in range(y0 - max(gamma.y, 0), y1 - min(gamma.y, 0) + 1):
            a = Vec(ax, ay)
            if closed and not inside(a):
                continue
            rec(a, a, 0, [], 0)
    if closed:
        out.extend(make_path(kind, [], p) for p in pts)
    return out


def _build_bar(spec: Mapping) -> GradedComplex:
    n = spec["n"]
    diam = spec["max_diameter"]
    lo, hi = spec["degrees"]
    walks = _box_corner_walks(
        n, Vec(0, 0), ((0, diam), (0, diam)), two_area_max=hi + 1
    )
    paths = {canonical_translation(p) for p in walks}
    graded: dict[int, list[Generator]] = {}
    for p in sorted(paths, key=path_sort_key):
        for g in _all_labelings(p):
            d = index(g)
            if lo - 1 <= d <= hi + 1:
                graded.setdefault(d, []).append(g)
    return _assemble(
        spec, graded, (lo, hi), range(lo, hi + 2), canonical_generator, _canonical_boundary
    )


def _canonical_boundary(gen: Generator) -> Chain:
    out: dict[Generator, int] = {}
    for g, c in differential(gen).items():
        g2 = canonical_generator(g)
        out[g2] = out.get(g2, 0) + c
    return Chain({g: c for g, c in out.items() if c})


def _build_xaxis(spec: Mapping) -> GradedComplex:
    n = spec["n"]
    m = spec["m"]
    lo, hi = spec["degrees"]
    want_j = spec.get("j")
    graded: dict[int, list[Generator]] = {}
    for seq in itertools.product(range(m + 1), repeat=2 * n):
        if any(
            (seq[i] < seq[(i + 1) % (2 * n)])
            if i % 2 == 0
            else (seq[i] > seq[(i + 1) % (2 * n)])
            for i in range(2 * n)
        ):
            continue
        path = x_axis_path(list(seq), n)
        for g in _all_labelings(path):
            if want_j is not None and index(g) - g.h_count != want_j:
                continue
            d = index(g)
            if lo - 1 <= d <= hi + 1:
                graded.setdefault(d, []).append(g)
    return _assemble(spec, graded, (lo, hi), range(lo, hi + 2))


def _direction_frame(d: Vec) -> tuple[tuple[int, int], tuple[int, int]]:
    """A determinant-one matrix whose first column is the primitive vector d."""
    a, b = d
    if a == 0 and b == 0:
        raise ValueError("direction must be nonzero")
    # Bezout: s*a + t*b == 1, so the matrix ((a, -t), (b, s)) has det 1.
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    assert old_r == 1, "direction must be primitive"
    return ((a, -old_t), (b, old_s))


def _frame_lift(a: tuple[tuple[int, int], tuple[int, int]]) -> Callable[[Vec], int]:
    """Lap offsets for act_symmetry: the lift fixing the first column's angle."""

    def image_key(d: Vec):
        img = Vec(a[0][0] * d.x + a[0][1] * d.y, a[1][0] * d.x + a[1][1] * d.y)
        return angle_sort_key(ExtendedAngle(0, primitive_of(img)[0]))

    base = image_key(Vec(1, 0))
    return lambda d: 0 if not image_key(d) < base else 1


def _bounding_path(n: int, gamma: Vec, rect) -> AdmissiblePath:
    """The box wrap whose below-set carries a periodic region complex.

    rect = ((x0, x1), (y0, y1)) spans the wrap rectangle in the frame where
    the period is horizontal; for a non-horizontal period the whole picture
    is moved by the determinant-one frame taking (1, 0) to the primitive
    period direction.
    """
    d, k = primitive_of(gamma)
    (x0, x1), (y0, y1) = rect
    base = translate(box_path(x1 - x0 + 1, y1 - y0 + 1, k, n), Vec(x0, y0))
    if d == Vec(1, 0):
        return base
    frame = _direction_frame(d)
    return act_symmetry(base, frame, _frame_lift(frame))


def _build_periodic(spec: Mapping) -> GradedComplex:
    n = spec["n"]
    gamma = Vec(*spec["gamma"])
    rect = spec["window"]
    lo, hi = spec["degrees"]
    if gamma == Vec(0, 0):
        raise ValueError("periodic complexes need a nonzero period displacement")
    bound = _bounding_path(n, gamma, rect)
    ref = _periodic_reference(n, gamma)
    graded: dict[int, list[Generator]] = {}
    for p in sorted(enumerate_below(bound), key=path_sort_key):
        for g in _all_labelings(p):
            d = relative_index(g, ref)
            if lo - 1 <= d <= hi + 1:
                graded.setdefault(d, []).append(g)
    return _assemble(spec, graded, (lo, hi), range(lo, hi + 2))


_BUILDERS = {
    "below": _build_below,
    "below-component": _build_below,
    "bar": _build_bar,
    "xaxis": _build_xaxis,
    "periodic": _build_periodic,
}


def build_complex(spec: Mapping) -> GradedComplex:
    """Build a graded complex from a declarative description.

    Kinds:
      {"kind": "below", "path": <path json>}
      {"kind": "below-component", "path": <path json>, "j": <int>}
      {"kind": "bar", "n": n, "max_diameter": D, "degrees": [lo, hi]}
      {"kind": "xaxis", "n": n, "m": M, "degrees": [lo, hi]}
      {"kind": "periodic", "n": n, "gamma": [x, y],
       "window": [[x0, x1], [y0, y1]], "degrees": [lo, hi]}

    A periodic complex is the span of all labelings of the paths weakly
    below a rectangle wrap of period gamma; the window spans the wrap
    rectangle in the frame where the period is horizontal.  Degrees are
    relative to the all-e single-edge path anchored at the origin.
    """
    kind = spec.get("kind")
    if kind not in _BUILDERS:
        raise ValueError(f"unknown complex kind: {kind!r}")
    return _BUILDERS[kind](spec)


@dataclass(frozen=True)
class InducedMap:
    """Result of pushing a chain map to homology in a fixed degree."""

    degree: int
    shift: int
    src: HomologyGroup
    dst: HomologyGroup
    surjective: bool

    @property
    def is_iso(self) -> bool:
        return self.surjective and self.src.invariants == self.dst.invariants


def induced_map(
    src_cx: GradedComplex,
    dst_cx: GradedComplex,
    f: Callable[[Generator], Chain],
    degree: int,
    shift: int = 0,
) -> InducedMap:
    """Check that f is a chain map near the given degree and compare the
    homology it induces from src degree d to dst degree d + shift.

    Surjectivity is decided exactly: the induced map is onto iff the image
    vectors of a kernel basis, together with the boundaries, generate the
    whole destination kernel over Z.  Combined with equal invariants this
    certifies an isomorphism of finitely generated abelian groups.
    """

    def f_chain(chain: Chain) -> Chain:
        out = Chain({})
        for g, c in chain.items():
            out = out + c * f(g)
        return out

    for d in (degree + 1, degree):
        mat = src_cx.matrix(d)
        for k, g in enumerate(src_cx.basis.get(d, ())):
            dg = src_cx.vector_chain(mat.column(k), d - 1)
            lhs = f_chain(dg)
            rhs_vec = dst_cx.matrix(d + shift).matvec(
                dst_cx.chain_vector(f(g), d + shift)
            )
            lhs_vec = dst_cx.chain_vector(lhs, d + shift - 1)
            if lhs_vec != rhs_vec:
                raise ValueError(f"not a chain map at {g}")

    hs = src_cx.homology(degree)
    hd = dst_cx.homology(degree + shift)
    dd = degree + shift
    n_dst = dst_cx.dim(dd)
    fdst = dst_cx.snf(dd, transforms=True)
    free = n_dst - fdst.rank

    cols: list[list[int]] = []
    for kv in src_cx.kernel_vectors(degree):
        chain = f_chain(src_cx.vector_chain(kv, degree))
        cols.append(dst_cx.kernel_coords(dst_cx.chain_vector(chain, dd), dd))
    up = dst_cx.matrix(dd + 1)
    for j in range(up.cols):
        cols.append(dst_cx.kernel_coords(up.column(j), dd))

    span = SparseIntMatrix(free, len(cols))
    for j, col in enumerate(cols):
        for i, v in enumerate(col):
            if v:
                span[i, j] = v
    f_span = smith_normal_form(span)
    surj = f_span.rank == free and all(d == 1 for d in f_span.divisors)
    return InducedMap(degree, shift, hs, hd, surj)


def inclusion_map(dst_cx: GradedComplex) -> Callable[[Generator], Chain]:
    """Chain map that sends a generator to itself inside a larger complex."""
    return lambda g: Chain({dst_cx.normalize(g): 1})


def grow_spec(spec: Mapping) -> dict:
    """One truncation step outward for a stabilizable complex description."""
    s = copy.deepcopy(dict(spec))
    kind = s.get("kind")
    if kind == "bar":
        s["max_diameter"] += 1
    elif kind == "xaxis":
        s["m"] += 1
    elif kind == "periodic":
        (a, b), (c, d) = s["window"]
        # Lowering the floor is what forces the homology of a periodic
        # region to drain: every class above a floor at height y has degree
        # at least -n - 2*|gamma|*y relative to the flat reference.
        s["window"] = [[a, b], [c - 1, d]]
    else:
        raise ValueError(f"complex kind {kind!r} does not stabilize")
    return s


@dataclass
class StabilizeResult:
    """Final homology of a stabilization run.

    certified is True when the last `window` consecutive inclusions all
    induced isomorphisms in the requested degree; otherwise the budget ran
    out and the reported group is the best available truncation.
    """

    homology: HomologyGroup
    spec: dict
    certified: bool
    history: list[tuple[dict, HomologyGroup]] = field(default_factory=list)


def stabilize(
    spec: Mapping,
    degree: int,
    window: int = 2,
    max_steps: int = 8,
    time_budget: float | None = None,
) -> StabilizeResult:
    """Grow a truncated complex until homology at one degree stops moving.

    Growth is certified by inclusion-induced isomorphisms over `window`
    consecutive steps, not just by matching ranks.
    """
    t0 = time.monotonic()
    history: list[tuple[dict, HomologyGroup]] = []
    cur = copy.deepcopy(dict(spec))
    prev_cx: GradedComplex | None = None
    prev_h: HomologyGroup | None = None
    streak = 0
    while True:
        cx = build_complex(cur)
        h = cx.homology(degree)
        history.append((copy.deepcopy(cur), h))
        if prev_cx is not None:
            ok = not h.partial and h.invariants == prev_h.invariants
            if ok:
                res = induced_map(prev_cx, cx, inclusion_map(cx), degree)
                ok = res.is_iso
            streak = streak + 1 if ok else 0
        if streak >= window:
            return StabilizeResult(h, cur, True, history)
        out_of_time = time_budget is not None and time.monotonic() - t0 > time_budget
        if len(history) >= max_steps or out_of_time:
            final = HomologyGroup(h.rank, h.torsion, True)
            return StabilizeResult(final, cur, False, history)
        prev_cx, prev_h = cx, h
        cur = grow_spec(cur)


def write_complex(cx: GradedComplex, outdir) -> None:
    """Write a complex to a directory: meta.json, basis-d.json, boundary-d.txt."""
    import json
    from pathlib import Path

    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    meta = {
        "spec": cx.spec,
        "degrees": cx.degrees(),
        "dims": {str(d): cx.dim(d) for d in cx.degrees()},
        "trusted": list(cx.trusted) if cx.trusted else None,
    }
    (out / "meta.json").write_text(json.dumps(meta, indent=2) + "\n")
    for d in cx.degrees():
        gens = [generator_to_json(g) for g in cx.basis[d]]
        (out / f"basis-{d}.json").write_text(json.dumps(gens, indent=2) + "\n")
    for d, mat in sorted(cx.boundary.items()):
        (out / f"boundary-{d}.txt").write_text(mat.to_text())
