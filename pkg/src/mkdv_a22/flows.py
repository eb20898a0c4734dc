"""Evaluation of the twisted mKdV vector fields on generated families.

The oper attached to a generation run is the conjugate of d/dx + L1 by the
product of dressing factors P = E(g_m, j_m) ... E(g_1, j_1), so the value of
the r-th flow at that point is

    -(d/dx) of the degree-zero part of  P * L1**r * P**(-1),

a multiple of h0 = diag(1, 0, -1).  Family tangents come from re-running the
whole generation with one parameter seeded as a dual number, which makes the
partial derivatives of the attached oper exact.  Matching the flow value
against the span of the tangents is then one exact linear solve after
clearing denominators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .exact import (
    Dual,
    RatFunc,
    poly_lcm,
    rat_to_str,
    ratfunc_parts,
    ratfunc_to_json,
    solve_linear,
)
from .generation import GenerationTrace, check_basic, generate_multistep
from .loop import (
    DiagTraceless,
    LaurentMat,
    centralizer_power,
    conjugate,
    exp_dressing,
    grade_project,
)
from .miura import miura_from_trace


@dataclass(frozen=True)
class TangentVector:
    """A tangent x_component * h0 to the space of twisted Miura opers."""

    x_component: RatFunc

    def is_zero(self) -> bool:
        return self.x_component.is_zero()


@dataclass(frozen=True)
class DecomposeResult:
    gamma: Tuple[Fraction, ...]
    residual_zero: bool
    # first (x-power, coefficient) of the cleared-denominator residual when
    # the system is inconsistent
    witness: Optional[Tuple[int, Fraction]] = None


@dataclass(frozen=True)
class FlowSample:
    J: Tuple[int, ...]
    c: Tuple[Fraction, ...]
    r: int
    field: TangentVector
    gamma: Tuple[Fraction, ...]
    residual_zero: bool

    def to_json(self) -> dict:
        return {
            "J": list(self.J),
            "c": [rat_to_str(ci) for ci in self.c],
            "r": self.r,
            "field": ratfunc_to_json(self.field.x_component),
            "gamma": [rat_to_str(g) for g in self.gamma],
            "residual_zero": self.residual_zero,
        }


def admissible_r(r: int) -> bool:
    return r > 0 and r % 6 in (1, 5)


def _check_r(r: int) -> int:
    if not admissible_r(r):
        raise ValueError(f"flow index must be positive and 1 or 5 mod 6, got {r}")
    return r


def dressing_product(trace: GenerationTrace) -> Tuple[LaurentMat, LaurentMat]:
    """P = E(g_m, j_m) ... E(g_1, j_1) and its inverse (reversed, negated)."""
    p = LaurentMat.identity()
    p_inv = LaurentMat.identity()
    # later steps conjugate earlier ones, so each new factor goes on the left
    for j, g in zip(trace.J, trace.gs):
        p = exp_dressing(g, j) * p
        p_inv = p_inv * exp_dressing(-g, j)
    return p, p_inv


def mkdv_field(trace: GenerationTrace, r: int) -> TangentVector:
    """Value of the r-th flow at the oper attached to the trace."""
    _check_r(r)
    p, p_inv = dressing_product(trace)
    conj = conjugate(p, centralizer_power(r), p_inv)
    diag = DiagTraceless.from_matrix(grade_project(conj, 0))
    if not diag.middle.is_zero():
        raise ValueError(
            "twisted closure violated: degree-zero part has a middle entry"
        )
    return TangentVector(-diag.d1.derivative())


def family_tangents(j_seq: Sequence[int], c: Sequence[Fraction]) -> List[TangentVector]:
    """Exact partial derivatives of the attached oper in each parameter.

    Each coordinate is obtained by re-running the generation with that
    parameter seeded as Dual(c_i, 1) and reading off the derivative part of
    v.  The last coordinate has the closed form

        + a * y1(step m-1)**4 / y0(step m)**2     (last direction 0)
        - 2a * y0(step m-1) / y1(step m)**2       (last direction 1)

    with a the recorded Wronskian constant; it is asserted here as a guard
    on the dual-number pipeline.
    """
    js = check_basic(j_seq)
    if len(c) != len(js):
        raise ValueError(f"need {len(js)} parameters, got {len(c)}")
    tangents: List[TangentVector] = []
    for i in range(len(js)):
        seeded = [Dual(cj, 1 if k == i else 0) for k, cj in enumerate(c)]
        trace = generate_multistep(js, seeded)
        v = miura_from_trace(trace).v
        _, dv = ratfunc_parts(v)
        tangents.append(TangentVector(dv))
    if js:
        plain = generate_multistep(js, [Fraction(ci) for ci in c])
        a = plain.consts[-1]
        j_last = js[-1]
        prev, last = plain.pairs[-2], plain.pairs[-1]
        if j_last == 0:
            expected = RatFunc(prev.y1 ** 4 * a, last.y0 ** 2)
        else:
            expected = RatFunc(prev.y0 * (-2 * a), last.y1 ** 2)
        if tangents[-1].x_component != expected:
            raise AssertionError("last family tangent disagrees with its closed form")
    return tangents


def decompose_flow(
    field: TangentVector, tangents: Sequence[TangentVector]
) -> DecomposeResult:
    """Exact scalars gamma with field = sum gamma_i * tangent_i, if they exist.

    Denominators are cleared to a single polynomial identity whose
    x-coefficients give a linear system for gamma over the rationals.  When
    the system is inconsistent the returned gamma is the best-effort solution
    of its consistent rows and the witness records the first failing
    x-coefficient of the residual.
    """
    if not tangents:
        raise ValueError("need at least one tangent")
    den = field.x_component.den
    for t in tangents:
        den = poly_lcm(den, t.x_component.den)
    target = field.x_component.num * den.divexact(field.x_component.den)
    cleared = [
        t.x_component.num * den.divexact(t.x_component.den) for t in tangents
    ]
    ncoeffs = max([target.degree() + 1] + [p.degree() + 1 for p in cleared] + [1])
    rows = [[p.coeff(k) for p in cleared] for k in range(ncoeffs)]
    rhs = [target.coeff(k) for k in range(ncoeffs)]
    sol = solve_linear(rows, rhs)
    if sol is not None:
        gamma = tuple(Fraction(g) for g in sol)
        residual = field.x_component
        for g, t in zip(gamma, tangents):
            residual = residual - t.x_component * g
        if not residual.is_zero():
            raise AssertionError("consistent system left a nonzero residual")
        return DecomposeResult(gamma, True)
    # inconsistent: solve the consistent prefix for a best-effort gamma
    witness = None
    for keep in range(ncoeffs - 1, 0, -1):
        sol = solve_linear(rows[:keep], rhs[:keep])
        if sol is not None:
            gamma = tuple(Fraction(g) for g in sol)
            resid = target
            for g, p in zip(gamma, cleared):
                resid = resid - p * g
            k = next(i for i, cc in enumerate(resid.coeffs) if cc != 0)
            witness = (k, Fraction(resid.coeff(k)))
            return DecomposeResult(gamma, False, witness)
    return DecomposeResult(tuple(Fraction(0) for _ in tangents), False, witness)


def vanishing_threshold(j_seq: Sequence[int], r: int) -> bool:
    """True when the r-th flow is guaranteed to vanish on the whole family.

    The dressing factors reach at most one (direction 0) or two (direction 1)
    steps down in the principal grading, which bounds the top power of the
    cyclic generator whose conjugate can meet degree zero.
    """
    _check_r(r)
    js = check_basic(j_seq)
    m = len(js)
    if m % 2 == 0:
        return r > 3 * m
    if js[0] == 0:
        return r > 3 * m - 2
    return r > 3 * m + 1


def flow_sample(j_seq: Sequence[int], c: Sequence[Fraction], r: int) -> FlowSample:
    """Field, tangents, and decomposition for one (J, c, r) case."""
    js = check_basic(j_seq)
    _check_r(r)
    cs = tuple(Fraction(ci) for ci in c)
    trace = generate_multistep(js, cs)
    field = mkdv_field(trace, r)
    if not js:
        return FlowSample(js, cs, r, field, (), field.is_zero())
    if field.is_zero():
        gamma = tuple(Fraction(0) for _ in js)
        return FlowSample(js, cs, r, field, gamma, True)
    tangents = family_tangents(js, cs)
    dec = decompose_flow(field, tangents)
    return FlowSample(js, cs, r, field, dec.gamma, dec.residual_zero)
