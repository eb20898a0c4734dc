"""Pseudodifferential calculus, cube roots, KdV flows, and the flow diagram."""

import random
from fractions import Fraction as F

import pytest

from mkdv_a22.exact import ONE, X, Poly, RatFunc
from mkdv_a22.generation import generate_multistep
from mkdv_a22.miura import DiffOp3, embed_a1, miura_from_trace, miura_map
from mkdv_a22.psdo import (
    PsDO,
    consistency_check,
    cube_root,
    frac_power_plus,
    from_diffop3,
    kdv_field,
    psdo_mul,
)


def rf(num, den=None):
    return RatFunc(num) if den is None else RatFunc(num, den)


def rand_ratfunc(rng, num_deg=2, den_deg=2):
    num = Poly([F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(num_deg + 1)])
    den = Poly([F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(den_deg)] + [F(1)])
    return rf(num if not num.is_zero() else ONE, den)


# --- composition -------------------------------------------------------------------

def test_psdo_mul_leibniz():
    d = PsDO.d()
    u = PsDO({0: rf(X)})
    assert psdo_mul(d, u) == PsDO({1: rf(X), 0: rf(ONE)})


def test_psdo_mul_inverse_of_d():
    got = psdo_mul(PsDO.d(-1), PsDO.d(1))
    assert got == PsDO.one()
    # and with a truncation marker the tail stays tracked
    t = PsDO({-1: rf(ONE)}, floor=-3)
    got2 = psdo_mul(t, PsDO.d(1))
    assert got2.coeff(0) == rf(ONE) and got2.floor == -2


def test_psdo_mul_first_order_factors():
    v = rf(X, X * X + ONE)
    a = PsDO({1: rf(ONE), 0: v})
    b = PsDO({1: rf(ONE), 0: -v})
    got = psdo_mul(a, b)
    assert got == PsDO({2: rf(ONE), 0: -(v * v) - v.derivative()})


def test_psdo_mul_untruncated_infinite_expansion_rejected():
    with pytest.raises(ValueError):
        psdo_mul(PsDO.d(-1), PsDO({0: rf(ONE, X + 1)}))


def test_floor_tracking_worst_case():
    a = PsDO({1: rf(ONE), -1: rf(X)}, floor=-1)
    b = PsDO({2: rf(X)}, floor=None)
    prod = psdo_mul(a, b)
    assert prod.floor == -1 + 2
    prod2 = psdo_mul(b, a)
    assert prod2.floor == -1 + 2


# --- cube roots and fractional powers ------------------------------------------------

def test_cube_root_of_pure_derivative():
    root = cube_root(DiffOp3(RatFunc.zero(), RatFunc.zero()), 6)
    assert root.terms == {1: rf(ONE)}
    assert root.floor == -5


def test_cube_root_first_coefficients():
    u1 = rf(X, X * X + ONE)
    root = cube_root(DiffOp3(u1, RatFunc.zero()), 4)
    assert root.coeff(0).is_zero()
    assert root.coeff(-1) == u1 * F(1, 3)


def test_cube_root_recomposition_random():
    rng = random.Random(51)
    for _ in range(10):
        op = DiffOp3(rand_ratfunc(rng), rand_ratfunc(rng))
        root = cube_root(op, 8)
        cube = root * root * root
        target = from_diffop3(op)
        assert cube.floor == root.floor + 2
        for order in range(cube.floor, 4):
            assert cube.coeff(order) == target.coeff(order)


def test_frac_power_plus_shapes():
    d3 = DiffOp3(RatFunc.zero(), RatFunc.zero())
    assert frac_power_plus(d3, 1) == PsDO.d(1)
    assert frac_power_plus(d3, 5) == PsDO.d(5)
    u1 = rf(X, X * X + ONE)
    assert frac_power_plus(DiffOp3(u1, RatFunc.zero()), 1) == PsDO.d(1)
    op = DiffOp3(rand_ratfunc(random.Random(52)), rand_ratfunc(random.Random(53)))
    for r in (1, 2, 4, 5):
        plus = frac_power_plus(op, r)
        assert plus.top() == r and plus.coeff(r) == rf(ONE)
        assert plus.floor is None
    with pytest.raises(ValueError):
        frac_power_plus(op, 3)
    with pytest.raises(ValueError):
        frac_power_plus(op, 0)


def test_cube_root_truncation_is_stable():
    # deeper runs extend the coefficient list without changing earlier terms
    op = DiffOp3(rand_ratfunc(random.Random(54)), rand_ratfunc(random.Random(55)))
    shallow = cube_root(op, 6)
    deep = cube_root(op, 8)
    assert deep.truncate(shallow.floor) == shallow


# --- KdV flows ------------------------------------------------------------------------

def test_kdv_field_on_pure_third_derivative():
    d3 = DiffOp3(RatFunc.zero(), RatFunc.zero())
    for r in (1, 2, 5):
        assert kdv_field(d3, r) == (RatFunc.zero(), RatFunc.zero())


def test_kdv_field_r1_is_translation():
    rng = random.Random(56)
    op = DiffOp3(rand_ratfunc(rng), rand_ratfunc(rng))
    u1_dot, u0_dot = kdv_field(op, 1)
    assert u1_dot == -op.u1.derivative()
    assert u0_dot == -op.u0.derivative()


def test_kdv_field_r2_second_flow():
    # [L, (L^{2/3})+] with (L^{2/3})+ = d^2 + (2/3) u1, expanded by hand and
    # cross-checked symbolically:
    #   u1_dot = u1'' - 2 u0',   u0_dot = (2/3) u1''' + (2/3) u1 u1' - u0''
    rng = random.Random(57)
    op = DiffOp3(rand_ratfunc(rng), rand_ratfunc(rng))
    u1_dot, u0_dot = kdv_field(op, 2)
    u1, u0 = op.u1, op.u0
    assert u1_dot == u1.derivative().derivative() - u0.derivative() * 2
    assert u0_dot == (
        u1.derivative().derivative().derivative() * F(2, 3)
        + u1 * u1.derivative() * F(2, 3)
        - u0.derivative().derivative()
    )


def test_kdv_field_vanishes_on_stationary_rational_operator():
    # the scalar operator attached to the one-step family is a rational
    # solution fixed by every higher flow
    t = generate_multistep((0,), (F(3),))
    op = miura_map(0, embed_a1(miura_from_trace(t)))
    assert op.u1 == rf(-ONE * 3, (X + 3) ** 2)
    assert op.u0 == rf(ONE * 3, (X + 3) ** 3)
    for r in (5, 7):
        assert kdv_field(op, r) == (RatFunc.zero(), RatFunc.zero())


def test_commutator_closes_at_order_one():
    rng = random.Random(58)
    for _ in range(5):
        op = DiffOp3(rand_ratfunc(rng, 1, 1), rand_ratfunc(rng, 1, 1))
        for r in (1, 2, 4, 5):
            plus = frac_power_plus(op, r)
            lop = from_diffop3(op)
            comm = lop * plus - plus * lop
            top = comm.top()
            assert top is None or top <= 1


# --- the mKdV-to-KdV diagram -------------------------------------------------------------

def test_consistency_one_and_two_steps():
    t0 = generate_multistep((0,), (F(3),))
    for r in (1, 5):
        for i in (0, 1, 2):
            assert consistency_check(t0, r, i)
    # past the vanishing threshold both sides are zero
    assert consistency_check(t0, 7, 0)
    t01 = generate_multistep((0, 1), (F(2), F(5)))
    for i in (0, 1, 2):
        assert consistency_check(t01, 1, i)


def test_consistency_rejects_bad_flow_index():
    t0 = generate_multistep((0,), (F(3),))
    with pytest.raises(ValueError):
        consistency_check(t0, 3, 0)


def test_psdo_json():
    p = PsDO({1: rf(ONE), -1: rf(X)}, floor=-2)
    data = p.to_json()
    assert data["floor"] == -2
    assert data["terms"][0]["order"] == -1
