"""Singular sets of the six groups as exact shift-labeled periodic graphs."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import Disconnected, NotASubgroup, SignatureCountMismatch
from .lattices import (
    SubgroupHNF,
    Vec3,
    basis_matrix,
    coords_in,
    from_coords,
    hnf,
    index,
    is_subgroup,
    join,
    mat,
    mat_det,
    mat_inv,
    mat_transpose,
    matmul,
    matvec,
    member,
    primitive_integer,
    reduce_mod,
    reduce_mod_relative,
    relative_integer_basis,
    vadd,
    vneg,
    vscale,
    vsub,
    vec,
)
from .spacegroups import (
    Isometry,
    Axis,
    SpaceGroup,
    apply,
    fixed_axis,
    is_pure_translation,
    make_group,
    stabilizer,
)

IntVec = tuple[int, int, int]
Edge = tuple[int, int, IntVec]
Segment = tuple[Vec3, Vec3]


# ============================================================
# shift-labeled periodic graphs
# ============================================================


def _normalize_edge(i: int, j: int, s: IntVec) -> Edge:
    """Canonical orientation of an edge under (i, j, s) ≡ (j, i, -s)."""
    s = (int(s[0]), int(s[1]), int(s[2]))
    r = (-s[0], -s[1], -s[2])
    if j < i or (i == j and r > s):
        return (j, i, r)
    return (i, j, s)


@dataclass(frozen=True)
class PeriodicGraph:
    """Finite quotient graph over a rank-3 lattice, edges labeled by cell shifts."""

    group: str
    T0: SubgroupHNF
    vertices: tuple[Vec3, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        verts = tuple(tuple(Fraction(x) for x in v) for v in self.vertices)
        for v in verts:
            if any(x < 0 or x >= 1 for x in v):
                raise ValueError("vertex coordinates must lie in the cell [0,1)^3")
        edges = []
        for i, j, s in self.edges:
            if not (0 <= i < len(verts) and 0 <= j < len(verts)):
                raise ValueError("edge endpoint index out of range")
            edges.append(_normalize_edge(i, j, s))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(sorted(edges)))

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "t0": self.T0.to_json(),
            "vertices": [[str(x) for x in v] for v in self.vertices],
            "edges": [[i, j, list(s)] for i, j, s in self.edges],
        }


@dataclass(frozen=True)
class SingularEdge:
    """One straight segment of the singular set with its local rotation data."""

    segment: Segment
    edge_index: int
    link: tuple[int, int, int, int]
    orbit_id: int

    def __post_init__(self) -> None:
        seg = tuple(tuple(Fraction(x) for x in p) for p in self.segment)
        if seg[0] == seg[1]:
            raise ValueError("segment endpoints must be distinct")
        if self.edge_index < 2:
            raise ValueError("edge index must be at least 2")
        if len(self.link) != 4:
            raise ValueError("link must list exactly four germ indices")
        object.__setattr__(self, "segment", seg)
        object.__setattr__(self, "link", tuple(sorted(self.link)))

    def to_json(self) -> dict:
        return {
            "segment": [[str(x) for x in p] for p in self.segment],
            "edge_index": self.edge_index,
            "link": list(self.link),
            "orbit_id": self.orbit_id,
        }


# ============================================================
# exact line geometry
# ============================================================


def _heading(v: Sequence) -> IntVec:
    """Primitive integer vector pointing the same way as a nonzero rational v."""
    u = primitive_integer(v)
    f = [Fraction(x) for x in v]
    i0 = next(i for i in range(3) if u[i])
    if f[i0] * u[i0] < 0:
        return (-u[0], -u[1], -u[2])
    return u


def _collinear(a: Sequence, d: IntVec) -> bool:
    """True iff the rational vector a is parallel to the integer direction d."""
    return (
        a[1] * d[2] - a[2] * d[1] == 0
        and a[2] * d[0] - a[0] * d[2] == 0
        and a[0] * d[1] - a[1] * d[0] == 0
    )


def _transverse_rows(d1: IntVec, d2: IntVec) -> tuple[int, int, int, int]:
    """Row pair (r, q), spare row, and 2×2 minor for two non-parallel directions."""
    for r in range(3):
        for q in range(r + 1, 3):
            det2 = d2[r] * d1[q] - d1[r] * d2[q]
            if det2:
                return r, q, 3 - r - q, det2
    raise ValueError("directions are parallel")


def _line_intersection(
    b1: Vec3, d1: IntVec, b2: Vec3, d2: IntVec, rows: tuple[int, int, int, int]
) -> Vec3 | None:
    """Intersection point of two non-parallel exact lines, or None when skew."""
    r, q, spare, det2 = rows
    rhs = vsub(b2, b1)
    s = (d2[r] * rhs[q] - d2[q] * rhs[r]) / det2
    u = (d1[r] * rhs[q] - d1[q] * rhs[r]) / det2
    if s * d1[spare] - u * d2[spare] != rhs[spare]:
        return None
    return vadd(b1, vscale(s, vec(*d1)))


def _axis_period(T0: SubgroupHNF, d: IntVec) -> Fraction:
    """Smallest s > 0 with s·d in the lattice, for a primitive direction d."""
    c = coords_in(vec(*d), T0)
    lcm = math.lcm(*(x.denominator for x in c))
    g = math.gcd(*(int(x * lcm) for x in c))
    return Fraction(lcm, g)


@lru_cache(maxsize=None)
def _plane_lattice(T0: SubgroupHNF, d: IntVec) -> SubgroupHNF:
    """Rank-2 image of the lattice projected along d onto a transverse plane."""
    i0 = next(i for i in range(3) if d[i])
    gens = []
    for v in T0.vectors():
        gens.append(vsub(v, vscale(v[i0] / d[i0], vec(*d))))
    lam = hnf(gens)
    if lam.rank != 2:
        raise ValueError("projection of a rank-3 lattice must have rank 2")
    return lam


def _reduce_in_plane(p: Vec3, lam: SubgroupHNF) -> Vec3:
    """Translate p by plane-lattice vectors into the canonical fundamental cell."""
    vs = lam.vectors()
    pivots = [next(r for r in range(3) if col[r]) for col in lam.basis]
    w = list(p)
    for v, r in zip(vs, pivots):
        k = math.floor(w[r] / v[r])
        if k:
            w = [w[i] - k * v[i] for i in range(3)]
    return (w[0], w[1], w[2])


def _axis_class(T0: SubgroupHNF, base: Vec3, d: IntVec) -> tuple[IntVec, Vec3]:
    """Canonical (direction, base) representative of an axis modulo the lattice."""
    return d, _reduce_in_plane(base, _plane_lattice(T0, d))


@lru_cache(maxsize=None)
def _t0_window(T0: SubgroupHNF, radius: int) -> tuple[Vec3, ...]:
    """Lattice vectors with coefficients in a centered cube of the given radius."""
    rng = range(-radius, radius + 1)
    return tuple(from_coords((a, b, c), T0) for a in rng for b in rng for c in rng)


# ============================================================
# rotation axes and vertices modulo the lattice
# ============================================================


def _axis_index(G: SpaceGroup, base: Vec3, d: IntVec) -> int:
    """Order of the cyclic group of rotations in G fixing the line pointwise."""
    dv = vec(*d)
    n = 0
    for c in G.cosets:
        if matvec(mat(c.rot), dv) != dv:
            continue
        if member(vsub(base, apply(c, base)), G.T0):
            n += 1
    return n


def _axes_mod_t0(G: SpaceGroup, radius: int = 2) -> list[Axis]:
    """All rotation-axis classes modulo the lattice, with full rotation indices."""
    window = _t0_window(G.T0, radius)
    found: dict[tuple[IntVec, Vec3], int] = {}
    for c in G.cosets:
        if is_pure_translation(c):
            continue
        for w in window:
            ax = fixed_axis(Isometry(G.frame, c.rot, vadd(c.trans, w)))
            if ax is None:
                continue
            d, base = _axis_class(G.T0, ax.base, ax.direction)
            if (d, base) not in found:
                found[(d, base)] = _axis_index(G, base, d)
    return [
        Axis(base=base, direction=d, order=found[(d, base)])
        for d, base in sorted(found)
    ]


def _vertices_mod_t0(G: SpaceGroup, axes: Sequence[Axis], radius: int = 2) -> list[Vec3]:
    """Vertex classes: pairwise intersections of axis translates, reduced mod T0."""
    window = _t0_window(G.T0, radius)
    pts = set()
    for k, ax1 in enumerate(axes):
        for ax2 in axes[k + 1 :]:
            if ax1.direction == ax2.direction:
                continue
            rows = _transverse_rows(ax1.direction, ax2.direction)
            for w in window:
                p = _line_intersection(
                    ax1.base, ax1.direction, vadd(ax2.base, w), ax2.direction, rows
                )
                if p is not None:
                    pts.add(reduce_mod(p, G.T0)[0])
    return sorted(pts)


def _axis_segments(
    G: SpaceGroup, ax: Axis, verts: Sequence[Vec3], radius: int = 2
) -> list[Segment]:
    """Maximal vertex-free straight segments covering one period of an axis.

    Returns an empty list when no vertex meets the axis (a circle component).
    """
    d = ax.direction
    dv = vec(*d)
    i0 = next(i for i in range(3) if d[i])
    s0 = _axis_period(G.T0, d)
    window = _t0_window(G.T0, radius)
    offs: set[Fraction] = set()
    for v in verts:
        rel0 = vsub(v, ax.base)
        for w in window:
            rel = vadd(rel0, w)
            if _collinear(rel, d):
                offs.add((rel[i0] / d[i0]) % s0)
    if not offs:
        return []
    ss = sorted(offs)
    ss.append(ss[0] + s0)
    return [
        (vadd(ax.base, vscale(a, dv)), vadd(ax.base, vscale(b, dv)))
        for a, b in zip(ss, ss[1:])
    ]


# ============================================================
# germ orbits and local indices
# ============================================================


def _germ_orbits(p: Vec3, G: SpaceGroup) -> tuple[tuple[frozenset[IntVec], int], ...]:
    """Orbits of outgoing axis germs at a singular point, each with its index."""
    rots = [s for s in stabilizer(p, G) if not is_pure_translation(s)]
    by_dir: dict[IntVec, int] = {}
    for s in rots:
        ax = fixed_axis(s)
        by_dir[ax.direction] = by_dir.get(ax.direction, 0) + 1
    index_of: dict[IntVec, int] = {}
    for d, count in by_dir.items():
        index_of[d] = count + 1
        index_of[(-d[0], -d[1], -d[2])] = count + 1
    parent = {u: u for u in index_of}

    def find(u: IntVec) -> IntVec:
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    for s in rots:
        m = mat(s.rot)
        for u in index_of:
            v = tuple(int(x) for x in matvec(m, u))
            if v not in parent:
                raise ValueError("stabilizer does not permute the germ directions")
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
    groups: dict[IntVec, set[IntVec]] = {}
    for u in index_of:
        groups.setdefault(find(u), set()).add(u)
    orbits = []
    for members in groups.values():
        idx = {index_of[u] for u in members}
        if len(idx) != 1:
            raise ValueError("germ orbit mixes axes of different indices")
        orbits.append((frozenset(members), idx.pop()))
    return tuple(sorted(orbits, key=lambda o: (o[1], min(o[0]))))


def _edge_data(
    G: SpaceGroup,
    seg: Segment,
    germs,
) -> tuple[int, tuple[int, int, int, int]]:
    """Edge index and four-germ link signature of a singular segment."""
    own = set()
    others: list[int] = []
    for p, q in (seg, seg[::-1]):
        u = _heading(vsub(q, p))
        rest = []
        for dirs, idx in germs(p):
            if u in dirs:
                own.add(idx)
            else:
                rest.append(idx)
        if len(rest) != 2:
            raise ValueError("endpoint of a singular segment must be trivalent")
        others.extend(rest)
    if len(own) != 1:
        raise ValueError("segment endpoints disagree on the edge index")
    return own.pop(), tuple(sorted(others))


# ============================================================
# the singular graph and its edge orbits
# ============================================================


def _canon_segment(T0: SubgroupHNF, a: Vec3, b: Vec3) -> Segment:
    """Canonical lattice translate of the unordered segment (a, b)."""
    best = None
    for p, q in ((a, b), (b, a)):
        rep, _ = reduce_mod(p, T0)
        cand = (rep, vsub(q, vsub(p, rep)))
        if best is None or cand < best:
            best = cand
    return best


def _segment_image(c: Isometry, seg: Segment, T0: SubgroupHNF) -> Segment:
    """Canonical form of the image of a segment under a group element."""
    return _canon_segment(T0, apply(c, seg[0]), apply(c, seg[1]))


@dataclass
class _SingularData:
    """Cached singular-set decomposition of one space group."""

    G: SpaceGroup
    axes: list[Axis]
    vertices: list[Vec3]
    circles: list[Axis]
    orbit_of: dict[Segment, int]
    orbits: list[list[Segment]]
    edges: tuple[SingularEdge, ...]


@lru_cache(maxsize=None)
def _singular_data(name: str) -> _SingularData:
    G = make_group(name)
    axes = _axes_mod_t0(G)
    verts = _vertices_mod_t0(G, axes)
    segments: dict[Segment, None] = {}
    circles = []
    for ax in axes:
        segs = _axis_segments(G, ax, verts)
        if not segs:
            circles.append(ax)
            continue
        for a, b in segs:
            segments.setdefault(_canon_segment(G.T0, a, b), None)
    orbit_of: dict[Segment, int] = {}
    orbits: list[list[Segment]] = []
    for key in sorted(segments):
        if key in orbit_of:
            continue
        oid = len(orbits)
        orbit_of[key] = oid
        queue, members = [key], [key]
        while queue:
            cur = queue.pop()
            for c in G.cosets:
                img = _segment_image(c, cur, G.T0)
                if img not in segments:
                    raise ValueError("segment orbit escapes the enumerated window")
                if img not in orbit_of:
                    orbit_of[img] = oid
                    members.append(img)
                    queue.append(img)
        orbits.append(sorted(members))

    memo: dict[Vec3, tuple] = {}

    def germs(p: Vec3):
        rep = reduce_mod(p, G.T0)[0]
        if rep not in memo:
            memo[rep] = _germ_orbits(rep, G)
        return memo[rep]

    edges = []
    for oid, members in enumerate(orbits):
        edge_index, link = _edge_data(G, members[0], germs)
        edges.append(
            SingularEdge(
                segment=members[0], edge_index=edge_index, link=link, orbit_id=oid
            )
        )
    return _SingularData(
        G=G,
        axes=axes,
        vertices=verts,
        circles=circles,
        orbit_of=orbit_of,
        orbits=orbits,
        edges=tuple(edges),
    )


def singular_graph(G: SpaceGroup) -> list[SingularEdge]:
    """All singular segments modulo the lattice, grouped into group orbits."""
    data = _singular_data(G.name)
    out = []
    for rep in data.edges:
        for seg in data.orbits[rep.orbit_id]:
            out.append(
                SingularEdge(
                    segment=seg,
                    edge_index=rep.edge_index,
                    link=rep.link,
                    orbit_id=rep.orbit_id,
                )
            )
    return out


# ============================================================
# marked edges
# ============================================================

_MARKED_LINK = (2, 2, 2, 3)

_EXPECTED_MARKED = {
    "P432": 1,
    "F4_132": 1,
    "I4_132": 2,
    "I432": 2,
    "P4_232": 2,
    "P622": 1,
}


IntMat = tuple[tuple[int, int, int], ...]

_GRID = 24


@lru_cache(maxsize=None)
def _frame_symmetries(frame) -> tuple[IntMat, ...]:
    """Integer matrices of determinant ±1 preserving the frame metric."""
    out = []
    for entries in itertools.product((-1, 0, 1), repeat=9):
        rows = (entries[0:3], entries[3:6], entries[6:9])
        m = mat(rows)
        if abs(mat_det(m)) != 1:
            continue
        if matmul(matmul(mat_transpose(m), frame.gram), m) != frame.gram:
            continue
        out.append(rows)
    return tuple(out)


@lru_cache(maxsize=None)
def _normalizer_maps(name: str) -> tuple[tuple[IntMat, Vec3], ...]:
    """Affine maps x ↦ Sx + t normalizing the group, up to lattice translations.

    S runs over the integer isometries of the frame (improper ones included);
    the translation part is solved on a (1/24)-grid of lattice coordinates via
    the congruences (I − SRS⁻¹)t ≡ τ' − Sτ (mod T0) over the rotation generators.
    """
    G = make_group(name)
    basis = basis_matrix(G.T0)
    inv = mat_inv(basis)
    gens = [g for g in G.generators if not is_pure_translation(g)]
    coset_of = {c.rot: c for c in G.cosets}
    grid = np.array(
        [(a, b, c) for a in range(_GRID) for b in range(_GRID) for c in range(_GRID)],
        dtype=np.int64,
    )
    out = []
    for rows in _frame_symmetries(G.frame):
        s = mat(rows)
        s_inv = mat_inv(s)
        if hnf([matvec(s, v) for v in G.T0.vectors()]) != G.T0:
            continue
        mask = np.ones(len(grid), dtype=bool)
        valid = True
        for g in gens:
            conj = matmul(matmul(s, mat(g.rot)), s_inv)
            rot = tuple(tuple(int(e) for e in row) for row in conj)
            target = coset_of.get(rot)
            if target is None:
                valid = False
                break
            delta = tuple(
                tuple(conj[i][j] - (1 if i == j else 0) for j in range(3))
                for i in range(3)
            )
            m = matmul(matmul(inv, mat(delta)), basis)
            if any(x.denominator != 1 for row in m for x in row):
                raise ValueError("lattice is not invariant under a conjugated rotation")
            w = coords_in(vsub(target.trans, matvec(s, g.trans)), G.T0)
            r = [x * _GRID for x in w]
            if any(x.denominator != 1 for x in r):
                valid = False
                break
            m_arr = np.array([[int(x) for x in row] for row in m], dtype=np.int64)
            r_arr = np.array([int(x) for x in r], dtype=np.int64)
            mask &= ((grid @ m_arr.T + r_arr) % _GRID == 0).all(axis=1)
            if not mask.any():
                valid = False
                break
        if not valid:
            continue
        for u in grid[mask]:
            t = from_coords(
                (Fraction(int(u[0]), _GRID), Fraction(int(u[1]), _GRID), Fraction(int(u[2]), _GRID)),
                G.T0,
            )
            out.append((rows, reduce_mod(t, G.T0)[0]))
    return tuple(sorted(set(out)))


def marked_edges(G: SpaceGroup) -> list[SingularEdge]:
    """One representative per orbit class whose neighborhood boundary is S²(2,2,2,3)."""
    data = _singular_data(G.name)
    qualifying = [e for e in data.edges if e.link == _MARKED_LINK]
    parent = {e.orbit_id: e.orbit_id for e in qualifying}

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for rows, t in _normalizer_maps(G.name):
        s = mat(rows)
        for e in qualifying:
            a, b = e.segment
            img = _canon_segment(
                G.T0, vadd(matvec(s, a), t), vadd(matvec(s, b), t)
            )
            other = data.orbit_of.get(img)
            if other is None or other not in parent:
                raise ValueError("normalizer map does not preserve the marked edges")
            ra, rb = find(e.orbit_id), find(other)
            if ra != rb:
                parent[min(ra, rb)] = max(ra, rb)
    classes: dict[int, list[int]] = {}
    for e in qualifying:
        classes.setdefault(find(e.orbit_id), []).append(e.orbit_id)
    reps = sorted(
        (data.edges[min(ids)] for ids in classes.values()),
        key=lambda e: e.orbit_id,
    )
    if len(reps) != _EXPECTED_MARKED[G.name]:
        raise SignatureCountMismatch(
            f"{G.name}: found {len(reps)} marked edge classes, "
            f"expected {_EXPECTED_MARKED[G.name]}"
        )
    return reps


# ============================================================
# quotient graphs of edge orbits
# ============================================================


def edge_orbit_graph(G: SpaceGroup, e: SingularEdge, suppress: bool = True) -> PeriodicGraph:
    """Quotient graph of the full orbit of one singular edge, modulo the lattice."""
    data = _singular_data(G.name)
    key = _canon_segment(G.T0, e.segment[0], e.segment[1])
    oid = data.orbit_of.get(key)
    if oid is None:
        raise ValueError("edge does not belong to this group's singular graph")
    members = data.orbits[oid]
    cells: dict[Vec3, int] = {}
    reduced = []
    for a, b in members:
        pair = []
        for p in (a, b):
            c = coords_in(p, G.T0)
            k = tuple(math.floor(x) for x in c)
            frac = tuple(x - f for x, f in zip(c, k))
            pair.append((frac, k))
            cells.setdefault(frac, 0)
        reduced.append(pair)
    order = {v: i for i, v in enumerate(sorted(cells))}
    edges = []
    for (va, ka), (vb, kb) in reduced:
        shift = tuple(x - y for x, y in zip(kb, ka))
        edges.append(_normalize_edge(order[va], order[vb], shift))
    if len(set(edges)) != len(edges):
        raise ValueError("distinct straight segments produced a duplicate edge")
    g = PeriodicGraph(
        group=G.name,
        T0=G.T0,
        vertices=tuple(sorted(cells)),
        edges=tuple(edges),
    )
    return suppress_valence_two(g) if suppress else g


def suppress_valence_two(g: PeriodicGraph) -> PeriodicGraph:
    """Smooth out valence-2 vertices, concatenating their edge shifts."""
    edges = list(g.edges)
    alive = [True] * len(g.vertices)
    while True:
        incident: dict[int, list[int]] = {}
        for pos, (i, j, _) in enumerate(edges):
            incident.setdefault(i, []).append(pos)
            incident.setdefault(j, []).append(pos)
        target = None
        for v in range(len(g.vertices)):
            if not alive[v]:
                continue
            pos = incident.get(v, [])
            if len(pos) == 2 and pos[0] != pos[1]:
                target = v
                break
        if target is None:
            break
        p1, p2 = incident[target]
        i1, j1, s1 = edges[p1]
        if j1 != target:
            i1, j1, s1 = j1, i1, vneg(s1)
        i2, j2, s2 = edges[p2]
        if i2 != target:
            i2, j2, s2 = j2, i2, vneg(s2)
        merged = _normalize_edge(
            i1, j2, tuple(int(x + y) for x, y in zip(s1, s2))
        )
        edges = [e for pos, e in enumerate(edges) if pos not in (p1, p2)]
        edges.append(merged)
        alive[target] = False
    keep = [v for v in range(len(g.vertices)) if alive[v]]
    order = {v: i for i, v in enumerate(keep)}
    return PeriodicGraph(
        group=g.group,
        T0=g.T0,
        vertices=tuple(g.vertices[v] for v in keep),
        edges=tuple(_normalize_edge(order[i], order[j], s) for i, j, s in edges),
    )


# ============================================================
# lifting criteria
# ============================================================


def cycle_image_lattice(g: PeriodicGraph) -> SubgroupHNF:
    """Lattice generated by the net shifts of the graph's fundamental cycles."""
    n = len(g.vertices)
    if n == 0:
        raise Disconnected("graph has no vertices")
    adjacency: dict[int, list[tuple[int, IntVec]]] = {i: [] for i in range(n)}
    for i, j, s in g.edges:
        adjacency[i].append((j, s))
        adjacency[j].append((i, (-s[0], -s[1], -s[2])))
    potential: dict[int, IntVec] = {0: (0, 0, 0)}
    stack = [0]
    while stack:
        i = stack.pop()
        for j, s in adjacency[i]:
            if j not in potential:
                potential[j] = tuple(a + b for a, b in zip(potential[i], s))
                stack.append(j)
    if len(potential) != n:
        raise Disconnected("graph is not connected modulo the lattice")
    gens = []
    for i, j, s in g.edges:
        cyc = tuple(potential[i][k] + s[k] - potential[j][k] for k in range(3))
        gens.append(from_coords(cyc, g.T0))
    return hnf(gens)


def _check_sublattice(g: PeriodicGraph, T: SubgroupHNF) -> None:
    if T.rank != 3 or not is_subgroup(T, g.T0):
        raise NotASubgroup("lift lattice must be a finite-index subgroup of T0")


def lift_connected(g: PeriodicGraph, T: SubgroupHNF) -> bool:
    """True iff the graph's preimage in the T-quotient torus is connected."""
    _check_sublattice(g, T)
    return join(cycle_image_lattice(g), T) == g.T0


def lift_connected_bruteforce(g: PeriodicGraph, T: SubgroupHNF) -> bool:
    """Union-find connectivity of one vertex copy per coset of T in T0."""
    _check_sublattice(g, T)
    rel = relative_integer_basis(T, g.T0)
    labels = [
        (a, b, c)
        for a in range(rel[0][0])
        for b in range(rel[1][1])
        for c in range(rel[2][2])
    ]
    nodes = {(v, lab): (v, lab) for v in range(len(g.vertices)) for lab in labels}

    def find(x):
        while nodes[x] != x:
            nodes[x] = nodes[nodes[x]]
            x = nodes[x]
        return x

    for i, j, s in g.edges:
        for lab in labels:
            shifted = reduce_mod_relative(
                (lab[0] + s[0], lab[1] + s[1], lab[2] + s[2]), rel
            )
            a, b = find((i, lab)), find((j, shifted))
            if a != b:
                nodes[a] = b
    roots = {find(x) for x in list(nodes)}
    return len(roots) == 1


def lift_genus(g: PeriodicGraph, T: SubgroupHNF) -> int:
    """Genus of the boundary of a regular neighborhood of the connected lift."""
    if not lift_connected(g, T):
        raise Disconnected("lift of the graph is not connected")
    k = index(T, g.T0)
    return (len(g.edges) - len(g.vertices)) * k + 1


# ============================================================
# optional geometry export
# ============================================================


def to_obj_lines(g: PeriodicGraph) -> list[str]:
    """Wavefront OBJ polyline description of one fundamental cell of the lift."""
    frame = make_group(g.group).frame
    hexagonal = frame.gram[0][1] != 0

    def xyz(c: Vec3) -> tuple[float, float, float]:
        u, v, w = from_coords(c, g.T0)
        if hexagonal:
            return (float(-u / 2 + v), float(u) * math.sqrt(3) / 2, float(w))
        return (float(u), float(v), float(w))

    lines = ["# periodic graph fundamental cell"]
    count = 0
    for i, j, s in g.edges:
        a = xyz(g.vertices[i])
        b = xyz(vadd(g.vertices[j], vec(*s)))
        lines.append("v %.6f %.6f %.6f" % a)
        lines.append("v %.6f %.6f %.6f" % b)
        count += 2
        lines.append("l %d %d" % (count - 1, count))
    return lines
