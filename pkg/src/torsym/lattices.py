"""Exact rational vector/matrix arithmetic and canonical subgroup (lattice) algebra.

All subgroups of translation vectors are kept in a canonical Hermite normal
form so that equality, membership, index, join and intersection are exact and
deterministic.  Convention: column-style HNF, lower triangular, pivot rows
ascending, positive pivots, entries left of a pivot reduced into [0, pivot).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import NotASubgroup, RankDeficient

Vec3 = tuple[Fraction, Fraction, Fraction]
Mat3 = tuple[tuple[Fraction, ...], ...]

# ============================================================
# rational vectors and matrices (row-major storage; for linear
# maps the columns are the images of the basis vectors)
# ============================================================


def vec(x, y, z) -> Vec3:
    return (Fraction(x), Fraction(y), Fraction(z))


ZERO3: Vec3 = vec(0, 0, 0)


def vadd(a: Vec3, b: Vec3) -> Vec3:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def vsub(a: Vec3, b: Vec3) -> Vec3:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def vneg(a: Vec3) -> Vec3:
    return (-a[0], -a[1], -a[2])


def vscale(c, a: Vec3) -> Vec3:
    c = Fraction(c)
    return (c * a[0], c * a[1], c * a[2])


def mat(rows: Sequence[Sequence]) -> Mat3:
    return tuple(tuple(Fraction(e) for e in row) for row in rows)


MAT_IDENTITY: Mat3 = mat([[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def matvec(m: Mat3, v: Sequence) -> Vec3:
    return tuple(sum(m[i][j] * Fraction(v[j]) for j in range(3)) for i in range(3))  # type: ignore[return-value]


def matmul(a: Mat3, b: Mat3) -> Mat3:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def mat_transpose(m: Mat3) -> Mat3:
    return tuple(tuple(m[j][i] for j in range(3)) for i in range(3))


def mat_det(m: Mat3) -> Fraction:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def mat_inv(m: Mat3) -> Mat3:
    d = mat_det(m)
    if d == 0:
        raise ZeroDivisionError("singular matrix")
    cof = [
        [
            m[(i + 1) % 3][(j + 1) % 3] * m[(i + 2) % 3][(j + 2) % 3]
            - m[(i + 1) % 3][(j + 2) % 3] * m[(i + 2) % 3][(j + 1) % 3]
            for i in range(3)
        ]
        for j in range(3)
    ]
    return tuple(tuple(c / d for c in row) for row in cof)


def mat_cols(m: Mat3) -> tuple[Vec3, Vec3, Vec3]:
    return tuple((m[0][j], m[1][j], m[2][j]) for j in range(3))  # type: ignore[return-value]


def mat_from_cols(cols: Sequence[Sequence]) -> Mat3:
    return tuple(tuple(Fraction(cols[j][i]) for j in range(3)) for i in range(3))


def solve_linear(a: Mat3, b: Sequence) -> tuple[Vec3, list[Vec3]] | None:
    """Solve a·x = b exactly; returns (particular solution, kernel basis) or None."""
    rows = [[Fraction(a[i][j]) for j in range(3)] + [Fraction(b[i])] for i in range(3)]
    pivots: list[int] = []
    r = 0
    for c in range(3):
        pr = next((i for i in range(r, 3) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        rows[r] = [e / rows[r][c] for e in rows[r]]
        for i in range(3):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [e - f * p for e, p in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    for i in range(r, 3):
        if rows[i][3] != 0:
            return None
    free = [c for c in range(3) if c not in pivots]
    part = [Fraction(0)] * 3
    for i, c in enumerate(pivots):
        part[c] = rows[i][3]
    kernel: list[Vec3] = []
    for f in free:
        k = [Fraction(0)] * 3
        k[f] = Fraction(1)
        for i, c in enumerate(pivots):
            k[c] = -rows[i][f]
        kernel.append(tuple(k))  # type: ignore[arg-type]
    return tuple(part), kernel  # type: ignore[return-value]


def primitive_integer(v: Sequence) -> tuple[int, int, int]:
    """Scale a nonzero rational vector to a primitive integer vector, first nonzero entry positive."""
    fr = [Fraction(x) for x in v]
    den = math.lcm(*(f.denominator for f in fr))
    ints = [int(f * den) for f in fr]
    g = math.gcd(*ints)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    ints = [e // g for e in ints]
    lead = next(e for e in ints if e)
    if lead < 0:
        ints = [-e for e in ints]
    return (ints[0], ints[1], ints[2])


# ============================================================
# canonical subgroups of rational translation vectors
# ============================================================


@dataclass(frozen=True)
class SubgroupHNF:
    """A finitely generated subgroup of rational 3-vectors in canonical form.

    The stored value is the pair (scale, basis) with scale = 1/D for the
    minimal positive integer D such that D·L is an integer lattice, and basis
    the canonical integer column HNF of D·L.  Equal subgroups always have
    bit-identical representations.
    """

    rank: int
    basis: tuple[tuple[int, int, int], ...]
    scale: Fraction

    def __post_init__(self) -> None:
        if self.rank != len(self.basis):
            raise ValueError("rank must equal the number of basis columns")
        if self.scale <= 0:
            raise ValueError("scale must be positive")

    def vectors(self) -> list[Vec3]:
        """Actual basis vectors (scale applied)."""
        return [vscale(self.scale, vec(*col)) for col in self.basis]

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "scale": str(self.scale),
            "basis": [list(col) for col in self.basis],
        }


TRIVIAL_SUBGROUP = SubgroupHNF(rank=0, basis=(), scale=Fraction(1))


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, x, y) with g = a·x + b·y and g ≥ 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hnf_columns(cols: Iterable[Sequence[int]]) -> tuple[tuple[int, int, int], ...]:
    """Canonical column HNF of the integer lattice generated by the given columns."""
    work = [list(c) for c in cols if any(c)]
    npiv = 0
    for row in range(3):
        j0 = next((j for j in range(npiv, len(work)) if work[j][row]), None)
        if j0 is None:
            continue
        work[npiv], work[j0] = work[j0], work[npiv]
        for j in range(npiv + 1, len(work)):
            a, b = work[npiv][row], work[j][row]
            if b == 0:
                continue
            g, x, y = _xgcd(a, b)
            u, v = a // g, b // g
            colp, colj = work[npiv], work[j]
            for r in range(3):
                p, q = colp[r], colj[r]
                colp[r] = x * p + y * q
                colj[r] = -v * p + u * q
        if work[npiv][row] < 0:
            work[npiv] = [-e for e in work[npiv]]
        p = work[npiv][row]
        for j in range(npiv):
            q = work[j][row] // p
            if q:
                for r in range(3):
                    work[j][r] -= q * work[npiv][r]
        npiv += 1
    return tuple(tuple(c) for c in work[:npiv])  # type: ignore[return-value]


def hnf(generators: Iterable[Sequence]) -> SubgroupHNF:
    """Canonical form of the subgroup generated by rational (or integer) 3-vectors."""
    gens = [tuple(Fraction(x) for x in g) for g in generators]
    gens = [g for g in gens if any(g)]
    if not gens:
        return TRIVIAL_SUBGROUP
    # minimal D clearing denominators: every generator lies in the subgroup,
    # so no smaller D can make the whole subgroup integral
    d = math.lcm(*(x.denominator for g in gens for x in g))
    cols = [[int(x * d) for x in g] for g in gens]
    basis = hnf_columns(cols)
    return SubgroupHNF(rank=len(basis), basis=basis, scale=Fraction(1, d))


def _pivot_rows(basis: Sequence[Sequence[int]]) -> list[int]:
    return [next(r for r in range(3) if col[r]) for col in basis]


def member(v: Sequence, sub: SubgroupHNF) -> bool:
    """True iff the rational vector v lies in the subgroup."""
    d = sub.scale.denominator if sub.scale.numerator == 1 else None
    w: list[int] = []
    for x in v:
        y = Fraction(x) / sub.scale if d is None else Fraction(x) * d
        if y.denominator != 1:
            return False
        w.append(y.numerator)
    rows = _pivot_rows(sub.basis)
    for col, r in zip(sub.basis, rows):
        q, rem = divmod(w[r], col[r])
        if rem:
            return False
        if q:
            for i in range(3):
                w[i] -= q * col[i]
    return not any(w)


def covolume(sub: SubgroupHNF) -> Fraction:
    """Absolute determinant of the actual basis (rank 3 only)."""
    if sub.rank != 3:
        raise RankDeficient("covolume requires rank 3")
    p = 1
    for col, r in zip(sub.basis, _pivot_rows(sub.basis)):
        p *= col[r]
    return sub.scale**3 * p


def is_subgroup(sub: SubgroupHNF, sup: SubgroupHNF) -> bool:
    return all(member(v, sup) for v in sub.vectors())


def index(sub: SubgroupHNF, sup: SubgroupHNF) -> int:
    """Index of sub inside sup; both must be rank 3 with sub ⊆ sup."""
    if sub.rank != 3 or sup.rank != 3:
        raise RankDeficient("index requires two rank-3 subgroups")
    if not is_subgroup(sub, sup):
        raise NotASubgroup("first argument is not contained in the second")
    ratio = covolume(sub) / covolume(sup)
    assert ratio.denominator == 1
    return ratio.numerator


def join(a: SubgroupHNF, b: SubgroupHNF) -> SubgroupHNF:
    """Smallest canonical subgroup containing both arguments."""
    return hnf(a.vectors() + b.vectors())


@lru_cache(maxsize=None)
def basis_matrix(sub: SubgroupHNF) -> Mat3:
    """Actual basis as a 3×3 matrix with basis vectors as columns (rank 3 only)."""
    if sub.rank != 3:
        raise RankDeficient("basis_matrix requires rank 3")
    return mat_from_cols(sub.vectors())


@lru_cache(maxsize=None)
def _basis_inverse(sub: SubgroupHNF) -> Mat3:
    return mat_inv(basis_matrix(sub))


def dual(sub: SubgroupHNF) -> SubgroupHNF:
    """Dual lattice {y : y·x ∈ Z for all x in sub} (rank 3 only)."""
    inv = _basis_inverse(sub)
    return hnf(list(inv))  # rows of the inverse are the dual basis columns


def intersect(a: SubgroupHNF, b: SubgroupHNF) -> SubgroupHNF:
    """Intersection of two rank-3 subgroups, via duality: (A ∩ B)* = A* + B*."""
    if a.rank != 3 or b.rank != 3:
        raise RankDeficient("intersect requires two rank-3 subgroups")
    return dual(join(dual(a), dual(b)))


def coords_in(v: Sequence, sub: SubgroupHNF) -> Vec3:
    """Coordinates of a rational vector in the actual basis of a rank-3 subgroup."""
    return matvec(_basis_inverse(sub), tuple(Fraction(x) for x in v))


def from_coords(c: Sequence, sub: SubgroupHNF) -> Vec3:
    """Vector with the given coordinates in the actual basis of a rank-3 subgroup."""
    return matvec(basis_matrix(sub), tuple(Fraction(x) for x in c))


def reduce_mod(v: Sequence, sub: SubgroupHNF) -> tuple[Vec3, tuple[int, int, int]]:
    """Reduce v into the fundamental cell [0,1)³ of a rank-3 subgroup.

    Returns (representative, k) with v = representative + sub-basis·k.
    """
    c = coords_in(v, sub)
    k = tuple(math.floor(x) for x in c)
    rep = from_coords(tuple(x - f for x, f in zip(c, k)), sub)
    return rep, k  # type: ignore[return-value]


def coset_reps(sub: SubgroupHNF, sup: SubgroupHNF) -> list[Vec3]:
    """Representatives of sup/sub, one per coset, in a triangular fundamental cell."""
    if sub.rank != 3 or sup.rank != 3:
        raise RankDeficient("coset_reps requires two rank-3 subgroups")
    if not is_subgroup(sub, sup):
        raise NotASubgroup("first argument is not contained in the second")
    rel = relative_integer_basis(sub, sup)
    d1, d2, d3 = rel[0][0], rel[1][1], rel[2][2]
    sup_mat = basis_matrix(sup)
    reps = []
    for x1 in range(d1):
        for x2 in range(d2):
            for x3 in range(d3):
                reps.append(matvec(sup_mat, (x1, x2, x3)))
    return reps


def relative_integer_basis(sub: SubgroupHNF, sup: SubgroupHNF) -> tuple[tuple[int, int, int], ...]:
    """HNF of sub expressed in integer coordinates of sup's basis (rank 3, sub ⊆ sup)."""
    inv = _basis_inverse(sup)
    cols = []
    for v in sub.vectors():
        c = matvec(inv, v)
        if any(x.denominator != 1 for x in c):
            raise NotASubgroup("first argument is not contained in the second")
        cols.append([int(x) for x in c])
    basis = hnf_columns(cols)
    if len(basis) != 3:
        raise RankDeficient("relative basis is not full rank")
    return basis


def reduce_mod_relative(x: Sequence[int], rel: Sequence[Sequence[int]]) -> tuple[int, int, int]:
    """Reduce an integer coordinate vector modulo a full-rank triangular HNF basis."""
    w = [int(e) for e in x]
    for j in range(3):
        q = w[j] // rel[j][j]
        if q:
            for i in range(3):
                w[i] -= q * rel[j][i]
    return (w[0], w[1], w[2])
