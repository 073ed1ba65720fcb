"""Isometry arithmetic, the six group presentations, axes and stabilizers."""

import random
from fractions import Fraction

import pytest

from torsym.errors import ClosureOverflow, FrameMismatch, UnknownGroup
from torsym.lattices import hnf, matvec, mat, member
from torsym.spacegroups import (
    CUBIC_FRAME,
    GROUP_NAMES,
    HEX_FRAME,
    Isometry,
    ROT_OMEGA,
    ROT_XY,
    ROT_XYZ,
    ROT_Y,
    ROT_Z,
    ROT_Z_HEX,
    apply,
    canonical_group_name,
    canonical_line,
    compose,
    conjugate_translation,
    contains,
    fixed_axis,
    identity,
    inverse,
    make_group,
    maximal_translation_lattice,
    point_group_cosets,
    rotation_order,
    stabilizer,
    stabilizer_order,
    translation,
)


def rand_rational(rng, den=(1, 2, 3, 4, 6)):
    return Fraction(rng.randint(-12, 12), rng.choice(den))


def rand_vec(rng):
    return (rand_rational(rng), rand_rational(rng), rand_rational(rng))


# ============================================================
# isometry arithmetic
# ============================================================


def test_rejects_orientation_reversing():
    with pytest.raises(ValueError):
        Isometry(CUBIC_FRAME, ((1, 0, 0), (0, 1, 0), (0, 0, -1)), (0, 0, 0))


def test_rejects_metric_breaking_rotation():
    # a cyclic axis permutation preserves the cubic metric but not the hexagonal one
    Isometry(CUBIC_FRAME, ROT_XYZ, (0, 0, 0))
    with pytest.raises(ValueError):
        Isometry(HEX_FRAME, ROT_XYZ, (0, 0, 0))


def test_frame_mismatch():
    g = Isometry(CUBIC_FRAME, ROT_Y, (0, 0, 0))
    h = Isometry(HEX_FRAME, ROT_OMEGA, (0, 0, 0))
    with pytest.raises(FrameMismatch):
        compose(g, h)


def test_compose_apply_inverse_consistency():
    rng = random.Random(2)
    pool = [
        Isometry(CUBIC_FRAME, ROT_Y, (0, 1, 0)),
        Isometry(CUBIC_FRAME, ROT_Z, (Fraction(1, 2), 0, Fraction(3, 2))),
        Isometry(CUBIC_FRAME, ROT_XY, (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))),
        Isometry(CUBIC_FRAME, ROT_XYZ, (1, 2, 3)),
    ]
    for _ in range(30):
        g = rng.choice(pool)
        h = rng.choice(pool)
        p = rand_vec(rng)
        assert apply(compose(g, h), p) == apply(g, apply(h, p))
        assert apply(inverse(g), apply(g, p)) == tuple(Fraction(x) for x in p)
    e = identity(CUBIC_FRAME)
    for g in pool:
        assert compose(g, e) == g
        assert compose(e, g) == g
        assert compose(g, inverse(g)) == e


def test_apply_known_values():
    r_xyz = Isometry(CUBIC_FRAME, ROT_XYZ, (0, 0, 0))
    assert apply(r_xyz, (1, 2, 3)) == (3, 1, 2)
    # the 120° vertical rotation maps the second hexagonal basis vector to the first
    r_om = Isometry(HEX_FRAME, ROT_OMEGA, (0, 0, 0))
    assert apply(r_om, (0, 1, 0)) == (1, 0, 0)


def test_rotation_orders():
    assert rotation_order(ROT_Y) == 2
    assert rotation_order(ROT_XY) == 2
    assert rotation_order(ROT_XYZ) == 3
    assert rotation_order(ROT_OMEGA) == 3
    # 6-fold: vertical rotation composed with the in-plane point inversion
    r6 = compose(
        Isometry(HEX_FRAME, ROT_OMEGA, (0, 0, 0)),
        Isometry(HEX_FRAME, ROT_Z_HEX, (0, 0, 0)),
    )
    assert rotation_order(r6.rot) == 6


# ============================================================
# conjugation formulas
# ============================================================


def test_conjugation_closed_forms_cubic():
    rng = random.Random(5)
    r_y = Isometry(CUBIC_FRAME, ROT_Y, (0, 0, 0))
    r_z = Isometry(CUBIC_FRAME, ROT_Z, (0, 0, 0))
    r_xy = Isometry(CUBIC_FRAME, ROT_XY, (0, 0, 0))
    r_xyz = Isometry(CUBIC_FRAME, ROT_XYZ, (0, 0, 0))
    for _ in range(100):
        a, b, c = rand_vec(rng)
        assert conjugate_translation(r_y, (a, b, c)) == (-a, b, -c)
        assert conjugate_translation(r_z, (a, b, c)) == (-a, -b, c)
        assert conjugate_translation(r_xy, (a, b, c)) == (b, a, -c)
        assert conjugate_translation(r_xyz, (a, b, c)) == (b, c, a)


def test_conjugation_ignores_translation_part():
    rng = random.Random(6)
    with_t = Isometry(CUBIC_FRAME, ROT_XY, (Fraction(3, 2), Fraction(1, 2), Fraction(1, 2)))
    without = Isometry(CUBIC_FRAME, ROT_XY, (0, 0, 0))
    for _ in range(20):
        u = rand_vec(rng)
        assert conjugate_translation(with_t, u) == conjugate_translation(without, u)


def test_conjugation_closed_form_hex_frame():
    rng = random.Random(7)
    r_om = Isometry(HEX_FRAME, ROT_OMEGA, (0, 0, 0))
    for _ in range(100):
        u, v, w = rand_vec(rng)
        assert conjugate_translation(r_om, (u, v, w)) == (-v, u - v, w)


class Q3:
    """Exact element p + q·√3 of the quadratic field, for the cartesian cross-check."""

    __slots__ = ("p", "q")

    def __init__(self, p, q=0):
        self.p = Fraction(p)
        self.q = Fraction(q)

    def __add__(self, other):
        return Q3(self.p + other.p, self.q + other.q)

    def __sub__(self, other):
        return Q3(self.p - other.p, self.q - other.q)

    def __mul__(self, other):
        return Q3(self.p * other.p + 3 * self.q * other.q, self.p * other.q + self.q * other.p)

    def __eq__(self, other):
        return self.p == other.p and self.q == other.q

    def __repr__(self):
        return f"({self.p}+{self.q}√3)"


def hex_to_cartesian(u, v, w):
    # e1 = (-1/2, √3/2, 0), e2 = (1, 0, 0), e3 = (0, 0, 1)
    x = Q3(-Fraction(u) / 2 + Fraction(v))
    y = Q3(0, Fraction(u) / 2)
    z = Q3(Fraction(w))
    return (x, y, z)


def test_hex_conjugation_matches_cartesian_formula():
    # conjugating a translation by the 120° rotation must agree with the exact
    # cartesian closed form (a,b,c) ↦ (-a/2 + (√3/2)b, -(√3/2)a - b/2, c)
    rng = random.Random(8)
    r_om = Isometry(HEX_FRAME, ROT_OMEGA, (0, 0, 0))
    half = Q3(Fraction(-1, 2))
    root3_half = Q3(0, Fraction(1, 2))
    neg_root3_half = Q3(0, Fraction(-1, 2))
    for _ in range(100):
        u, v, w = rand_vec(rng)
        a, b, c = hex_to_cartesian(u, v, w)
        expected_cart = (
            half * a + root3_half * b,
            neg_root3_half * a + half * b,
            c,
        )
        got_hex = conjugate_translation(r_om, (u, v, w))
        assert hex_to_cartesian(*got_hex) == expected_cart


# ============================================================
# group presentations
# ============================================================

EXPECTED_T0 = {
    "P432": hnf([(1, 0, 0), (0, 1, 0), (0, 0, 1)]),
    "F4_132": hnf([(2, 0, 0), (1, 1, 0), (1, 0, 1)]),
    "I4_132": hnf([(2, 0, 0), (0, 2, 0), (1, 1, 1)]),
    "I432": hnf([(1, 0, 0), (0, 1, 0), (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))]),
    "P4_232": hnf([(1, 0, 0), (0, 1, 0), (0, 0, 1)]),
    "P622": hnf([(1, 0, 0), (0, 1, 0), (0, 0, 1)]),
}

EXPECTED_POINT_ORDER = {
    "P432": 24,
    "F4_132": 24,
    "I4_132": 24,
    "I432": 24,
    "P4_232": 24,
    "P622": 12,
}


def test_point_orders_and_translation_lattices():
    for name in GROUP_NAMES:
        g = make_group(name)
        assert g.point_order == EXPECTED_POINT_ORDER[name]
        assert g.T0 == EXPECTED_T0[name]
        assert len(g.cosets) == g.point_order


def test_unknown_group_and_aliases():
    with pytest.raises(UnknownGroup):
        make_group("P213")
    assert canonical_group_name("p432") == "P432"
    assert canonical_group_name("i4132") == "I4_132"
    assert make_group("f4_132") is make_group("F4_132")


def test_coset_rotations_form_a_group():
    for name in GROUP_NAMES:
        g = make_group(name)
        rots = {c.rot for c in g.cosets}
        assert len(rots) == g.point_order
        for a in rots:
            ma = mat(a)
            for b in rots:
                prod = tuple(
                    tuple(int(sum(ma[i][k] * b[k][j] for k in range(3))) for j in range(3))
                    for i in range(3)
                )
                assert prod in rots


def test_split_and_nonsplit_cosets():
    p432 = make_group("P432")
    assert all(c.trans == (0, 0, 0) for c in p432.cosets)
    i4132 = make_group("I4_132")
    assert any(c.trans != (0, 0, 0) for c in i4132.cosets)


def test_t0_rederivation_and_cosets():
    for name in GROUP_NAMES:
        g = make_group(name)
        assert maximal_translation_lattice(g.generators) == g.T0
        cs = point_group_cosets(g.generators, g.T0)
        assert len(cs) == g.point_order
        assert {c.rot for c in cs} == {c.rot for c in g.cosets}


def test_t0_normal_under_cosets():
    for name in GROUP_NAMES:
        g = make_group(name)
        for c in g.cosets:
            for b in g.T0.vectors():
                assert member(conjugate_translation(c, b), g.T0)


def test_wrong_t0_raises_closure_overflow():
    g = make_group("I432")
    too_small = hnf([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    with pytest.raises(ClosureOverflow):
        point_group_cosets(g.generators, too_small)


def test_contains():
    g = make_group("I4_132")
    elem = Isometry(CUBIC_FRAME, ROT_Y, (1, 0, 0))
    assert contains(g, elem)
    assert contains(g, translation(CUBIC_FRAME, (2, 0, 0)))
    assert not contains(g, translation(CUBIC_FRAME, (1, 0, 0)))
    p432 = make_group("P432")
    with pytest.raises(FrameMismatch):
        contains(p432, Isometry(HEX_FRAME, ROT_OMEGA, (0, 0, 0)))


# ============================================================
# axes and stabilizers
# ============================================================


def test_fixed_axis_linear_rotation():
    ax = fixed_axis(Isometry(CUBIC_FRAME, ROT_Y, (0, 0, 0)))
    assert ax is not None
    assert ax.base == (0, 0, 0)
    assert ax.direction == (0, 1, 0)
    assert ax.order == 2


def test_fixed_axis_translated_half_turn():
    # this element of the body-centred screw group fixes the line x = 1/2, z = 0
    g = make_group("I4_132")
    elem = Isometry(CUBIC_FRAME, ROT_Y, (1, 0, 0))
    assert contains(g, elem)
    ax = fixed_axis(elem)
    assert ax is not None
    assert ax.direction == (0, 1, 0)
    assert ax.base == (Fraction(1, 2), 0, 0)
    assert ax.order == 2


def test_fixed_axis_screw_and_diagonal():
    screw = Isometry(
        CUBIC_FRAME, ROT_XY, (Fraction(3, 2), Fraction(1, 2), Fraction(1, 2))
    )
    assert fixed_axis(screw) is None
    # subtracting a lattice translation turns it into a π-rotation about
    # the diagonal line x - y = 1/2, z = -1/4
    g = make_group("I4_132")
    elem = Isometry(
        CUBIC_FRAME, ROT_XY, (Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2))
    )
    assert contains(g, elem)
    ax = fixed_axis(elem)
    assert ax is not None
    assert ax.direction == (1, 1, 0)
    assert ax.base == (0, Fraction(-1, 2), Fraction(-1, 4))
    assert ax.order == 2


def test_fixed_axis_rejects_pure_translation():
    with pytest.raises(ValueError):
        fixed_axis(translation(CUBIC_FRAME, (1, 0, 0)))


def test_stabilizer_orders():
    assert stabilizer_order((Fraction(1, 7), Fraction(2, 11), Fraction(3, 13)), make_group("P432")) == 1
    assert stabilizer_order((0, 0, 0), make_group("P432")) == 24
    i4132 = make_group("I4_132")
    stab = stabilizer((0, 0, 0), i4132)
    assert len(stab) == 3
    assert {rotation_order(s.rot) for s in stab} == {1, 3}
    assert all(apply(s, (0, 0, 0)) == (0, 0, 0) for s in stab)


def test_axis_equivariance_under_conjugation():
    rng = random.Random(17)
    for name in GROUP_NAMES:
        g = make_group(name)
        rotational = [c for c in g.cosets if c.rot != identity(g.frame).rot]
        for _ in range(10):
            a = rng.choice(rotational)
            h = rng.choice(g.cosets)
            ax = fixed_axis(a)
            if ax is None:
                continue
            conj = compose(compose(h, a), inverse(h))
            ax2 = fixed_axis(conj)
            assert ax2 is not None
            moved_base, moved_dir = canonical_line(
                apply(h, ax.base), matvec(mat(h.rot), ax.direction)
            )
            assert ax2.base == moved_base
            assert ax2.direction == moved_dir
            assert ax2.order == ax.order
