"""Finite-index invariant sublattices and their closed-form families."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .errors import NotASubgroup, RankDeficient, UnmatchedLattice
from .lattices import (
    Mat3,
    SubgroupHNF,
    basis_matrix,
    covolume,
    from_coords,
    hnf,
    intersect,
    is_subgroup,
    mat,
    mat_inv,
    matmul,
    member,
)
from .spacegroups import Frame, SpaceGroup, conjugate_translation

# ============================================================
# closed-form lattice families
# ============================================================

CUBIC_TAGS = ("CUBIC_PRIMITIVE", "CUBIC_FACE", "CUBIC_BODY")
HEX_TAGS = ("HEX_PRIMITIVE", "HEX_ROT")
FAMILY_TAGS = CUBIC_TAGS + HEX_TAGS

T_HALF = (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))


@dataclass(frozen=True)
class LatticeFamily:
    """A closed-form translation-lattice family instance (tag plus parameters)."""

    tag: str
    n: int
    m: int | None = None

    def __post_init__(self) -> None:
        if self.tag not in FAMILY_TAGS:
            raise ValueError(f"unknown family tag {self.tag!r}")
        if self.n < 1:
            raise ValueError("family parameter n must be positive")
        if self.tag in HEX_TAGS:
            if self.m is None or self.m < 1:
                raise ValueError("hexagonal families require a positive parameter m")
        elif self.m is not None:
            raise ValueError("cubic families take a single parameter")

    def instantiate(self) -> SubgroupHNF:
        return instantiate(self.tag, self.n, self.m)

    def to_json(self) -> dict:
        out = {"tag": self.tag, "n": self.n}
        if self.m is not None:
            out["m"] = self.m
        return out


def instantiate(tag: str, n: int, m: int | None = None) -> SubgroupHNF:
    """Canonical subgroup for a family tag and parameters."""
    if tag == "CUBIC_PRIMITIVE":
        gens = [(n, 0, 0), (0, n, 0), (0, 0, n)]
    elif tag == "CUBIC_FACE":
        gens = [(2 * n, 0, 0), (n, n, 0), (n, 0, n)]
    elif tag == "CUBIC_BODY":
        gens = [(n, 0, 0), (0, n, 0), tuple(n * t for t in T_HALF)]
    elif tag == "HEX_PRIMITIVE":
        gens = [(n, 0, 0), (0, n, 0), (0, 0, m)]
    elif tag == "HEX_ROT":
        gens = [(2 * n, n, 0), (n, 2 * n, 0), (0, 0, m)]
    else:
        raise ValueError(f"unknown family tag {tag!r}")
    if tag in HEX_TAGS and (m is None or m < 1):
        raise ValueError("hexagonal families require a positive parameter m")
    return hnf(gens)


# ============================================================
# exhaustive enumeration at fixed index
# ============================================================


def _divisors(d: int) -> list[int]:
    out = [k for k in range(1, d + 1) if d % k == 0]
    return out


def _pivot_triples(d: int) -> list[tuple[int, int, int]]:
    """All (a, b, c) with a·b·c = d, the diagonal of a lower-triangular HNF."""
    out = []
    for a in _divisors(d):
        for b in _divisors(d // a):
            out.append((a, b, d // (a * b)))
    return out


def enumerate_sublattices(T0: SubgroupHNF, d: int) -> list[SubgroupHNF]:
    """All index-d sublattices of a rank-3 subgroup, each in canonical form."""
    if T0.rank != 3:
        raise RankDeficient("enumerate_sublattices requires a rank-3 subgroup")
    if d < 1:
        raise ValueError("index must be a positive integer")
    out = []
    for a, b, c in _pivot_triples(d):
        for x in range(b):
            for y in range(c):
                for z in range(c):
                    cols = [(a, x, y), (0, b, z), (0, 0, c)]
                    out.append(hnf([from_coords(col, T0) for col in cols]))
    return out


# ============================================================
# invariance under the point-group action
# ============================================================


_ROT_IDENTITY = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def is_invariant(L: SubgroupHNF, G: SpaceGroup) -> bool:
    """True iff conjugation by every group element maps L into itself."""
    if not is_subgroup(L, G.T0):
        raise NotASubgroup("lattice is not contained in the translation lattice")
    # generator rotations suffice: conjugation acts linearly and multiplicatively
    for g in G.generators:
        if g.rot == _ROT_IDENTITY:
            continue
        for b in L.vectors():
            if not member(conjugate_translation(g, b), L):
                return False
    return True


def _coord_rotations(T0: SubgroupHNF, rotations: Iterable[Mat3]) -> tuple:
    """Rotation matrices rewritten in T0-coordinates (must be integral)."""
    b0 = basis_matrix(T0)
    b0_inv = mat_inv(b0)
    out = []
    for r in rotations:
        rt = matmul(b0_inv, matmul(mat(r), b0))
        if any(x.denominator != 1 for row in rt for x in row):
            raise ValueError("subgroup is not invariant under the given rotation")
        out.append(tuple(tuple(int(x) for x in row) for row in rt))
    return tuple(out)


def _triples_array(d: int) -> np.ndarray:
    """All lower-triangular HNF triples (a, b, c, x, y, z) of determinant d."""
    blocks = []
    for a, b, c in _pivot_triples(d):
        x, y, z = np.meshgrid(
            np.arange(b, dtype=np.int64),
            np.arange(c, dtype=np.int64),
            np.arange(c, dtype=np.int64),
            indexing="ij",
        )
        blk = np.empty((b * c * c, 6), dtype=np.int64)
        blk[:, 0] = a
        blk[:, 1] = b
        blk[:, 2] = c
        blk[:, 3] = x.ravel()
        blk[:, 4] = y.ravel()
        blk[:, 5] = z.ravel()
        blocks.append(blk)
    return np.concatenate(blocks)


def _invariant_mask(t: np.ndarray, rot: Sequence[Sequence[int]]) -> np.ndarray:
    """Which HNF triples span a lattice mapped into itself by an integer matrix."""
    a, b, c, x, y, z = (t[:, i] for i in range(6))
    zero = np.zeros_like(a)
    ok = np.ones(len(t), dtype=bool)
    for u in ((a, x, y), (zero, b, z), (zero, zero, c)):
        p = rot[0][0] * u[0] + rot[0][1] * u[1] + rot[0][2] * u[2]
        q = rot[1][0] * u[0] + rot[1][1] * u[1] + rot[1][2] * u[2]
        r = rot[2][0] * u[0] + rot[2][1] * u[1] + rot[2][2] * u[2]
        ok &= p % a == 0
        alpha = p // a
        q = q - alpha * x
        ok &= q % b == 0
        beta = q // b
        r = r - alpha * y - beta * z
        ok &= r % c == 0
    return ok


def _filtered_triples(T0: SubgroupHNF, coord_rots: tuple, d: int) -> list[SubgroupHNF]:
    t = _triples_array(d)
    ok = np.ones(len(t), dtype=bool)
    for rot in coord_rots:
        ok &= _invariant_mask(t, rot)
    out = []
    for row in t[ok]:
        a, b, c, x, y, z = (int(v) for v in row)
        cols = [(a, x, y), (0, b, z), (0, 0, c)]
        out.append(hnf([from_coords(col, T0) for col in cols]))
    out.sort(key=lambda L: (L.scale, L.basis))
    return out


def _prime_power_parts(d: int) -> list[int]:
    parts = []
    p = 2
    while p * p <= d:
        if d % p == 0:
            q = 1
            while d % p == 0:
                q *= p
                d //= p
            parts.append(q)
        p += 1
    if d > 1:
        parts.append(d)
    return parts


@lru_cache(maxsize=None)
def _invariant_primary(T0: SubgroupHNF, coord_rots: tuple, q: int) -> tuple:
    return tuple(_filtered_triples(T0, coord_rots, q))


def invariant_sublattices(
    T0: SubgroupHNF, rotations: Iterable[Mat3], d: int, method: str = "primary"
) -> list[SubgroupHNF]:
    """Index-d sublattices of T0 invariant under a set of integer rotations.

    With method="primary", a lattice of composite index is split uniquely into
    its prime-power parts, so only prime-power indices are enumerated directly
    and composite indices are recombined by intersection.  method="literal"
    filters the full HNF enumeration at index d with no recombination.
    """
    if T0.rank != 3:
        raise RankDeficient("invariant_sublattices requires a rank-3 subgroup")
    if d < 1:
        raise ValueError("index must be a positive integer")
    coord_rots = _coord_rotations(T0, rotations)
    if method == "literal":
        return _filtered_triples(T0, coord_rots, d)
    if method != "primary":
        raise ValueError(f"unknown method {method!r}")
    if d == 1:
        return [T0]
    parts = [_invariant_primary(T0, coord_rots, q) for q in _prime_power_parts(d)]
    if len(parts) == 1:
        return list(parts[0])
    out = []
    for combo in product(*parts):
        acc = combo[0]
        for L in combo[1:]:
            acc = intersect(acc, L)
        out.append(acc)
    out.sort(key=lambda L: (L.scale, L.basis))
    return out


# ============================================================
# family matching
# ============================================================


def _exact_cbrt(x: Fraction) -> int | None:
    if x <= 0 or x.denominator != 1:
        return None
    n = round(x.numerator ** (1 / 3))
    for k in (n - 1, n, n + 1):
        if k >= 1 and k**3 == x.numerator:
            return k
    return None


def match_family(L: SubgroupHNF, frame: Frame) -> LatticeFamily:
    """The unique closed-form family instance equal to L, if one exists."""
    if L.rank != 3:
        raise RankDeficient("match_family requires a rank-3 subgroup")
    v = covolume(L)
    if frame.name == "CUBIC":
        for tag, cube in (
            ("CUBIC_PRIMITIVE", v),
            ("CUBIC_FACE", v / 2),
            ("CUBIC_BODY", 2 * v),
        ):
            n = _exact_cbrt(cube)
            if n is not None and instantiate(tag, n) == L:
                return LatticeFamily(tag, n)
    else:
        for tag, quad in (("HEX_PRIMITIVE", v), ("HEX_ROT", v / 3)):
            if quad.denominator != 1:
                continue
            q = int(quad)
            n = 1
            while n * n <= q:
                if q % (n * n) == 0 and instantiate(tag, n, q // (n * n)) == L:
                    return LatticeFamily(tag, n, q // (n * n))
                n += 1
    raise UnmatchedLattice(f"no closed-form family matches covolume {v}")


# ============================================================
# the full normal-subgroup survey
# ============================================================


def _rotation_generators(G: SpaceGroup) -> tuple[Mat3, ...]:
    seen = []
    for g in G.generators:
        if g.rot != ((1, 0, 0), (0, 1, 0), (0, 0, 1)) and mat(g.rot) not in seen:
            seen.append(mat(g.rot))
    return tuple(seen)


def normal_translation_subgroups(
    G: SpaceGroup, max_index: int
) -> list[tuple[SubgroupHNF, LatticeFamily, int]]:
    """All invariant sublattices of T0 up to max_index, with family and total index.

    The total index is the index in the full space group: point order times
    the lattice index inside T0.
    """
    if max_index < 1:
        raise ValueError("max_index must be a positive integer")
    rots = _rotation_generators(G)
    out = []
    for d in range(1, max_index + 1):
        for L in invariant_sublattices(G.T0, rots, d):
            out.append((L, match_family(L, G.frame), G.point_order * d))
    return out
