"""mKdV fields on generated families, exact tangents, and decomposition."""

import random
from fractions import Fraction as F

import pytest

from mkdv_a22.exact import ONE, X, RatFunc
from mkdv_a22.flows import (
    TangentVector,
    decompose_flow,
    dressing_product,
    family_tangents,
    flow_sample,
    mkdv_field,
    vanishing_threshold,
)
from mkdv_a22.generation import generate_multistep, sample_c
from mkdv_a22.loop import LaurentMat, exp_dressing


def rf(num, den=None):
    return RatFunc(num) if den is None else RatFunc(num, den)


def test_dressing_product_shapes():
    t_empty = generate_multistep((), ())
    p, p_inv = dressing_product(t_empty)
    assert p == LaurentMat.identity() and p_inv == LaurentMat.identity()

    c = F(3)
    t0 = generate_multistep((0,), (c,))
    p, p_inv = dressing_product(t0)
    g = rf(ONE, X + c)
    assert p == LaurentMat.identity() + LaurentMat({(2, 0, -1): g})
    assert p * p_inv == LaurentMat.identity()

    t01 = generate_multistep((0, 1), (F(2), F(5)))
    p, p_inv = dressing_product(t01)
    assert p * p_inv == LaurentMat.identity()
    # newest factor leftmost
    e1 = exp_dressing(t01.gs[0], 0)
    e2 = exp_dressing(t01.gs[1], 1)
    assert p == e2 * e1


def test_mkdv_field_one_step_families():
    c = F(3)
    t0 = generate_multistep((0,), (c,))
    assert mkdv_field(t0, 1).x_component == rf(-ONE, (X + c) ** 2)
    for r in (5, 7, 11, 13):
        assert mkdv_field(t0, r).is_zero()

    t1 = generate_multistep((1,), (c,))
    # twice the value of the 0-direction family, with opposite sign: the
    # attached potential is 2/(x+c) and the degree-1 flow is translation
    assert mkdv_field(t1, 1).x_component == rf(ONE * 2, (X + c) ** 2)
    for r in (5, 7, 11, 13):
        assert mkdv_field(t1, r).is_zero()

    with pytest.raises(ValueError):
        mkdv_field(t0, 2)
    with pytest.raises(ValueError):
        mkdv_field(t0, 6)


def test_family_tangents_one_step():
    c = F(3)
    assert family_tangents((0,), (c,))[0].x_component == rf(ONE, (X + c) ** 2)
    assert family_tangents((1,), (c,))[0].x_component == rf(-ONE * 2, (X + c) ** 2)


def test_family_tangents_match_difference_quotient_direction():
    # exact dual-number tangents agree with the first-order term of the
    # finite difference of v along each coordinate
    j_seq = (0, 1)
    c = (F(2), F(5))
    from mkdv_a22.miura import miura_from_trace

    tangents = family_tangents(j_seq, c)
    h = F(1, 1000000)
    for i in range(2):
        cp = list(c)
        cp[i] += h
        v_plus = miura_from_trace(generate_multistep(j_seq, cp)).v
        v0 = miura_from_trace(generate_multistep(j_seq, c)).v
        diff = (v_plus - v0) * (1 / h)
        # compare at a sample point to avoid exactness issues of the quotient
        x0 = F(7, 2)
        approx = diff(x0)
        exact = tangents[i].x_component(x0)
        assert abs(approx - exact) < F(1, 1000)


def test_decompose_flow_one_step():
    c = F(3)
    t0 = generate_multistep((0,), (c,))
    dec = decompose_flow(mkdv_field(t0, 1), family_tangents((0,), (c,)))
    assert dec.gamma == (F(-1),) and dec.residual_zero

    t1 = generate_multistep((1,), (c,))
    dec1 = decompose_flow(mkdv_field(t1, 1), family_tangents((1,), (c,)))
    assert dec1.gamma == (F(-1),) and dec1.residual_zero


def test_decompose_flow_two_step_regression():
    # gamma for the translation flow: the family moves along
    # (c1, c2) -> (c1 + h, c2 + 2 c1 h + h^2), so gamma = (-1, -2 c1)
    for c1, c2 in ((F(2), F(5)), (F(1, 2), F(3)), (F(-3), F(7, 4))):
        s = flow_sample((0, 1), (c1, c2), 1)
        assert s.residual_zero
        assert s.gamma == (F(-1), -2 * c1)


def test_decompose_flow_inconsistent_reports_witness():
    field = TangentVector(rf(ONE, X * X + ONE))
    tangents = [TangentVector(rf(ONE, X + 1))]
    dec = decompose_flow(field, tangents)
    assert not dec.residual_zero
    assert dec.witness is not None
    with pytest.raises(ValueError):
        decompose_flow(field, [])


def test_vanishing_threshold_values():
    assert vanishing_threshold((0,), 5)
    assert not vanishing_threshold((0,), 1)
    assert vanishing_threshold((1,), 5)
    assert vanishing_threshold((1,), 7)
    assert not vanishing_threshold((1,), 1)
    assert vanishing_threshold((0, 1), 7)
    assert not vanishing_threshold((0, 1), 5)
    assert vanishing_threshold((0, 1, 0), 11)
    assert not vanishing_threshold((0, 1, 0), 7)
    assert vanishing_threshold((1, 0, 1), 11)
    assert not vanishing_threshold((1, 0, 1), 7)
    with pytest.raises(ValueError):
        vanishing_threshold((0,), 3)


def test_threshold_fields_vanish_identically():
    rng = random.Random(41)
    for j_seq in ((0, 1), (1, 0), (0, 1, 0)):
        c = sample_c(j_seq, rng)
        t = generate_multistep(j_seq, c)
        for r in (1, 5, 7, 11, 13):
            if vanishing_threshold(j_seq, r):
                assert mkdv_field(t, r).is_zero()


def test_exact_decomposition_multi_step():
    rng = random.Random(42)
    for j_seq in ((0, 1), (1, 0), (0, 1, 0), (1, 0, 1)):
        c = sample_c(j_seq, rng)
        for r in (1, 5, 7):
            s = flow_sample(j_seq, c, r)
            assert s.residual_zero, (j_seq, r)


def test_gamma_prefix_independent_of_last_parameter():
    # the decomposition extends the shorter family's vector field by one
    # coordinate, so the leading coefficients cannot depend on c_m
    rng = random.Random(44)
    for j_seq, r in (((0, 1), 1), ((0, 1, 0), 5), ((1, 0, 1), 1)):
        c = list(sample_c(j_seq, rng))
        gammas = []
        for delta in (0, 1):
            c2 = list(c)
            c2[-1] += delta
            s = flow_sample(j_seq, c2, r)
            assert s.residual_zero
            gammas.append(s.gamma)
        assert gammas[0][:-1] == gammas[1][:-1]


def test_gamma_independent_of_sample_for_one_step():
    rng = random.Random(43)
    for j_seq in ((0,), (1,)):
        gammas = {flow_sample(j_seq, sample_c(j_seq, rng), 1).gamma for _ in range(3)}
        assert gammas == {(F(-1),)}


def test_flow_sample_json():
    s = flow_sample((0,), (F(3),), 1)
    data = s.to_json()
    assert data["J"] == [0] and data["c"] == ["3"] and data["r"] == 1
    assert data["gamma"] == ["-1"] and data["residual_zero"] is True
    assert data["field"] == {"num": ["-1"], "den": ["9", "6", "1"]}
