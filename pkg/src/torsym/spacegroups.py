"""Exact affine isometries in lattice coordinates and six cubic/hexagonal
space-group presentations, with coset closure, rotation-axis extraction and
point stabilizers.

Hexagonal arithmetic uses the oblique basis (first two basis vectors at 120°,
unit length, third orthogonal) so every rotation matrix stays integral and
square roots never appear.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import ClosureOverflow, FrameMismatch, UnknownGroup
from .lattices import (
    MAT_IDENTITY,
    SubgroupHNF,
    Vec3,
    hnf,
    hnf_columns,
    mat,
    mat_det,
    mat_inv,
    matmul,
    mat_transpose,
    matvec,
    member,
    primitive_integer,
    solve_linear,
    vadd,
    vec,
    vneg,
    vsub,
)

# ============================================================
# frames
# ============================================================


@dataclass(frozen=True)
class Frame:
    """Coordinate frame: basis name plus the Gram matrix of pairwise inner products."""

    name: str
    gram: tuple[tuple[Fraction, ...], ...]


CUBIC_FRAME = Frame("CUBIC", mat([[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
HEX_FRAME = Frame(
    "HEXAGONAL",
    mat(
        [
            [1, Fraction(-1, 2), 0],
            [Fraction(-1, 2), 1, 0],
            [0, 0, 1],
        ]
    ),
)


# ============================================================
# isometries
# ============================================================


@dataclass(frozen=True)
class Isometry:
    """Affine map x ↦ rot·x + trans with integer rotation entries in frame coordinates."""

    frame: Frame
    rot: tuple[tuple[int, ...], ...]
    trans: Vec3

    def __post_init__(self) -> None:
        rot = tuple(tuple(int(e) for e in row) for row in self.rot)
        object.__setattr__(self, "rot", rot)
        object.__setattr__(self, "trans", tuple(Fraction(t) for t in self.trans))
        m = mat(rot)
        if mat_det(m) != 1:
            raise ValueError("rotation part must have determinant +1")
        if matmul(matmul(mat_transpose(m), self.frame.gram), m) != self.frame.gram:
            raise ValueError("rotation part must preserve the frame metric")


def identity(frame: Frame) -> Isometry:
    return Isometry(frame, ((1, 0, 0), (0, 1, 0), (0, 0, 1)), vec(0, 0, 0))


def translation(frame: Frame, v: Sequence) -> Isometry:
    return Isometry(frame, ((1, 0, 0), (0, 1, 0), (0, 0, 1)), vec(*v))


def is_pure_translation(g: Isometry) -> bool:
    return g.rot == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def compose(g: Isometry, h: Isometry) -> Isometry:
    """The map p ↦ g(h(p))."""
    if g.frame != h.frame:
        raise FrameMismatch("cannot compose isometries from different frames")
    rot = tuple(
        tuple(sum(g.rot[i][k] * h.rot[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )
    trans = vadd(matvec(mat(g.rot), h.trans), g.trans)
    return Isometry(g.frame, rot, trans)


def inverse(g: Isometry) -> Isometry:
    inv = mat_inv(mat(g.rot))
    rot = tuple(tuple(int(e) for e in row) for row in inv)
    return Isometry(g.frame, rot, vneg(matvec(inv, g.trans)))


def apply(g: Isometry, p: Sequence) -> Vec3:
    return vadd(matvec(mat(g.rot), tuple(Fraction(x) for x in p)), g.trans)


def conjugate_translation(g: Isometry, u: Sequence) -> Vec3:
    """Translation vector of g⁻¹·t_u·g, namely rot(g)⁻¹·u; independent of trans(g)."""
    return matvec(mat_inv(mat(g.rot)), tuple(Fraction(x) for x in u))


def rotation_order(rot: Sequence[Sequence[int]]) -> int:
    m = mat(rot)
    p = m
    for k in range(1, 7):
        if p == MAT_IDENTITY:
            return k
        p = matmul(p, m)
    raise ValueError("rotation order exceeds 6; not a crystallographic rotation")


# ============================================================
# rotation and translation constants
# ============================================================

# cubic frame: (x,y,z) ↦ (-x,y,-z), (-x,-y,z), (y,x,-z), (z,x,y)
ROT_Y = ((-1, 0, 0), (0, 1, 0), (0, 0, -1))
ROT_Z = ((-1, 0, 0), (0, -1, 0), (0, 0, 1))
ROT_XY = ((0, 1, 0), (1, 0, 0), (0, 0, -1))
ROT_XYZ = ((0, 0, 1), (1, 0, 0), (0, 1, 0))

# hexagonal frame (e1, e2 at 120°): 120° rotation about the vertical axis
# sends e1 ↦ -e1-e2, e2 ↦ e1, e3 ↦ e3; the two π-rotations are the
# horizontal axes through e1+2e2 (cartesian y) and the origin-fixing diagonal
ROT_OMEGA = ((-1, 1, 0), (-1, 0, 0), (0, 0, 1))
ROT_Y_HEX = ((1, 0, 0), (1, -1, 0), (0, 0, -1))
ROT_Z_HEX = ((-1, 0, 0), (0, -1, 0), (0, 0, 1))

T_X = (1, 0, 0)
T_Y = (0, 1, 0)
T_Z = (0, 0, 1)
T_HALF = (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))


# ============================================================
# space groups
# ============================================================


@dataclass(frozen=True)
class SpaceGroup:
    name: str
    frame: Frame
    generators: tuple[Isometry, ...]
    T0: SubgroupHNF
    point_order: int
    cosets: tuple[Isometry, ...]


def _sum_t(*vs) -> tuple:
    out = vec(0, 0, 0)
    for v in vs:
        out = vadd(out, vec(*v))
    return out


# generators: translation lattice basis plus rotational generators (rot, translation part)
_PRESENTATIONS: dict[str, tuple[Frame, list, list]] = {
    "P432": (
        CUBIC_FRAME,
        [T_X, T_Y, T_Z],
        [(ROT_Y, (0, 0, 0)), (ROT_Z, (0, 0, 0)), (ROT_XY, (0, 0, 0)), (ROT_XYZ, (0, 0, 0))],
    ),
    "F4_132": (
        CUBIC_FRAME,
        [_sum_t(T_X, T_X), _sum_t(T_Y, T_X), _sum_t(T_Z, T_X)],
        [(ROT_Y, (0, 0, 0)), (ROT_Z, (0, 0, 0)), (ROT_XY, T_HALF), (ROT_XYZ, (0, 0, 0))],
    ),
    "I4_132": (
        CUBIC_FRAME,
        [_sum_t(T_X, T_X), _sum_t(T_Y, T_Y), _sum_t(T_HALF, T_HALF)],
        [
            (ROT_Y, _sum_t(T_Z, T_Y)),
            (ROT_Z, _sum_t(T_X, T_Z)),
            (ROT_XY, _sum_t(T_X, T_HALF)),
            (ROT_XYZ, (0, 0, 0)),
        ],
    ),
    "I432": (
        CUBIC_FRAME,
        [T_X, T_Y, T_HALF],
        [(ROT_Y, (0, 0, 0)), (ROT_Z, (0, 0, 0)), (ROT_XY, (0, 0, 0)), (ROT_XYZ, (0, 0, 0))],
    ),
    "P4_232": (
        CUBIC_FRAME,
        [T_X, T_Y, T_Z],
        [(ROT_Y, (0, 0, 0)), (ROT_Z, (0, 0, 0)), (ROT_XY, T_HALF), (ROT_XYZ, (0, 0, 0))],
    ),
    "P622": (
        HEX_FRAME,
        [(1, 0, 0), (0, 1, 0), (0, 0, 1)],
        [(ROT_Y_HEX, (0, 0, 0)), (ROT_Z_HEX, (0, 0, 0)), (ROT_OMEGA, (0, 0, 0))],
    ),
}

GROUP_NAMES = tuple(_PRESENTATIONS)

_ALIASES = {name.lower().replace("_", ""): name for name in GROUP_NAMES}


def canonical_group_name(name: str) -> str:
    key = name.lower().replace("_", "")
    if key not in _ALIASES:
        raise UnknownGroup(f"unknown group {name!r}; expected one of {', '.join(GROUP_NAMES)}")
    return _ALIASES[key]


def _closure(
    generators: Sequence[Isometry],
    seed: SubgroupHNF,
    grow: bool,
    cap: int = 96,
) -> tuple[dict, SubgroupHNF]:
    """Close coset representatives under composition, splitting off translations.

    Returns (reps, lattice): reps maps each rotation matrix to a representative
    translation reduced into the fundamental cell of the final lattice by
    pivot-ordered triangular reduction.  In grow mode, translation
    discrepancies enlarge the lattice; otherwise any discrepancy or more than
    `cap` cosets raises ClosureOverflow.

    All arithmetic happens on integer vectors scaled by the common denominator
    of the seed lattice and every generator translation; composition cannot
    introduce new denominators, so this is exact.
    """
    if seed.rank != 3:
        raise ValueError("coset closure needs a full-rank seed lattice")
    gens_inv: list[Isometry] = []
    for g in generators:
        gens_inv.append(g)
        gens_inv.append(inverse(g))
    dens = [seed.scale.denominator]
    for g in gens_inv:
        dens.extend(t.denominator for t in g.trans)
    d_all = math.lcm(*dens)
    k = d_all * seed.scale
    assert k.denominator == 1
    mcols = [tuple(int(e) * k.numerator for e in col) for col in seed.basis]

    def red(w: tuple[int, int, int]) -> tuple[int, int, int]:
        w0, w1, w2 = w
        q = w0 // mcols[0][0]
        w0 -= q * mcols[0][0]
        w1 -= q * mcols[0][1]
        w2 -= q * mcols[0][2]
        q = w1 // mcols[1][1]
        w1 -= q * mcols[1][1]
        w2 -= q * mcols[1][2]
        w2 -= (w2 // mcols[2][2]) * mcols[2][2]
        return (w0, w1, w2)

    reps: dict[tuple, tuple[int, int, int]] = {((1, 0, 0), (0, 1, 0), (0, 0, 1)): (0, 0, 0)}
    raw = [
        (g.rot, tuple(int(t * d_all) for t in g.trans))
        for g in gens_inv
    ]

    def merge(rot, trans) -> bool:
        nonlocal mcols
        trans = red(trans)
        have = reps.get(rot)
        if have is None:
            if len(reps) >= cap:
                raise ClosureOverflow(f"more than {cap} cosets; translation lattice is wrong")
            reps[rot] = trans
            return True
        delta = (trans[0] - have[0], trans[1] - have[1], trans[2] - have[2])
        if red(delta) == (0, 0, 0):
            return False
        if not grow:
            raise ClosureOverflow(
                "translation discrepancy: lattice is not the full translation subgroup"
            )
        mcols = list(hnf_columns(list(mcols) + [delta]))
        for r in list(reps):
            reps[r] = red(reps[r])
        return True

    guard = 0
    changed = True
    while changed:
        changed = False
        guard += 1
        if guard > 100:
            raise ClosureOverflow("coset closure failed to stabilise")
        for rot, trans in raw:
            if merge(rot, trans):
                changed = True
        snapshot = list(reps.items())
        for rot_a, trans_a in snapshot:
            for rot_b, trans_b in snapshot:
                rot_c = tuple(
                    tuple(
                        rot_a[i][0] * rot_b[0][j]
                        + rot_a[i][1] * rot_b[1][j]
                        + rot_a[i][2] * rot_b[2][j]
                        for j in range(3)
                    )
                    for i in range(3)
                )
                trans_c = tuple(
                    rot_a[i][0] * trans_b[0]
                    + rot_a[i][1] * trans_b[1]
                    + rot_a[i][2] * trans_b[2]
                    + trans_a[i]
                    for i in range(3)
                )
                if merge(rot_c, trans_c):
                    changed = True
    lattice = hnf([vec(*(Fraction(e, d_all) for e in col)) for col in mcols])
    out = {
        rot: vec(*(Fraction(t, d_all) for t in trans)) for rot, trans in reps.items()
    }
    return out, lattice


def maximal_translation_lattice(generators: Sequence[Isometry]) -> SubgroupHNF:
    """The subgroup of all pure translations in the group generated by the given isometries."""
    seed = hnf([g.trans for g in generators if is_pure_translation(g)])
    if seed.rank != 3:
        raise ValueError("generators must include a full-rank translation lattice")
    _, lattice = _closure(generators, seed, grow=True)
    return lattice


def point_group_cosets(generators: Sequence[Isometry], T0: SubgroupHNF) -> list[Isometry]:
    """Coset representatives modulo T0, translation parts reduced into its fundamental cell."""
    frame = generators[0].frame
    reps, _ = _closure(generators, T0, grow=False)
    out = [Isometry(frame, rot, trans) for rot, trans in reps.items()]
    out.sort(key=lambda g: (g.rot, g.trans))
    return out


def make_group(name: str) -> SpaceGroup:
    """Build one of the six space groups from its embedded presentation."""
    return _make_group(canonical_group_name(name))


@lru_cache(maxsize=None)
def _make_group(name: str) -> SpaceGroup:
    frame, lat_gens, rot_gens = _PRESENTATIONS[name]
    gens = [translation(frame, v) for v in lat_gens]
    gens += [Isometry(frame, rot, vec(*t)) for rot, t in rot_gens]
    seed = hnf([g.trans for g in gens if is_pure_translation(g)])
    reps, T0 = _closure(gens, seed, grow=True)
    cosets = [Isometry(frame, rot, trans) for rot, trans in reps.items()]
    cosets.sort(key=lambda g: (g.rot, g.trans))
    return SpaceGroup(
        name=name,
        frame=frame,
        generators=tuple(gens),
        T0=T0,
        point_order=len(cosets),
        cosets=tuple(cosets),
    )


def contains(G: SpaceGroup, g: Isometry) -> bool:
    """True iff the isometry belongs to the group."""
    if g.frame != G.frame:
        raise FrameMismatch("isometry frame does not match the group frame")
    for c in G.cosets:
        if c.rot == g.rot:
            return member(vsub(g.trans, c.trans), G.T0)
    return False


# ============================================================
# axes and stabilizers
# ============================================================


@dataclass(frozen=True)
class Axis:
    """Fixed line of a rotation: base point, primitive direction, rotational order."""

    base: Vec3
    direction: tuple[int, int, int]
    order: int


def canonical_line(point: Sequence, direction: Sequence) -> tuple[Vec3, tuple[int, int, int]]:
    """Canonical (base, direction) for the line through `point` along `direction`.

    The direction is primitive with its first nonzero entry positive, and the
    base is the unique point on the line whose coordinate at that entry is zero.
    """
    d = primitive_integer(direction)
    i0 = next(i for i in range(3) if d[i])
    p = tuple(Fraction(x) for x in point)
    s = p[i0] / d[i0]
    base = tuple(p[i] - s * d[i] for i in range(3))
    return base, d  # type: ignore[return-value]


def fixed_axis(g: Isometry) -> Axis | None:
    """Fixed line of a non-trivial isometry, or None for a screw motion."""
    if is_pure_translation(g):
        raise ValueError("fixed_axis requires a non-identity rotation part")
    a = mat(g.rot)
    m = tuple(
        tuple(a[i][j] - (1 if i == j else 0) for j in range(3)) for i in range(3)
    )
    sol = solve_linear(m, vneg(g.trans))
    if sol is None:
        return None
    part, kernel = sol
    if len(kernel) != 1:
        raise ValueError("fixed set is not a line")
    base, d = canonical_line(part, kernel[0])
    return Axis(base=base, direction=d, order=rotation_order(g.rot))


def stabilizer(p: Sequence, G: SpaceGroup) -> list[Isometry]:
    """All group elements fixing the point p (one per coset at most)."""
    p = tuple(Fraction(x) for x in p)
    out = []
    for c in G.cosets:
        delta = vsub(p, apply(c, p))
        if member(delta, G.T0):
            out.append(Isometry(G.frame, c.rot, vadd(c.trans, delta)))
    return out


def stabilizer_order(p: Sequence, G: SpaceGroup) -> int:
    return len(stabilizer(p, G))
