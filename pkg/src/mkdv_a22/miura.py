"""Miura opers attached to polynomial pairs and their scalar reductions.

A twisted-type Miura oper is d/dx + L1 + v*h0 and is stored as the single
rational function v; for the pair (y0, y1) the attached oper has

    v = (ln y1**2 / y0)' = 2*(ln y1)' - (ln y0)'.

Embedded diagonally into the untwisted rank-two space, v becomes the
sum-zero triple (v, 0, -v), and the three ordered factorizations

    L_0 = (d - v3)(d - v2)(d - v1)
    L_1 = (d - v1)(d - v3)(d - v2)
    L_2 = (d - v2)(d - v1)(d - v3)

produce third-order operators d^3 + u1*d + u0 (the d^2 coefficient cancels
because the triple sums to zero).  Their derivative maps restricted to
tangents X*h0 collapse to the closed forms

    dm0 : X -> -(2X' + 2vX) d - (X'' + vX' + v'X)
    dm1 : X -> (X' - 2vX) d

which are also available for arbitrary sum-zero tangents via the product
rule over the ordered factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import List, NamedTuple, Sequence, Tuple

from .exact import RF_ONE, RF_ZERO, RatFunc, log_derivative, ratfunc_to_json
from .generation import GenerationTrace, PolyPair
from .loop import CARTAN

# coefficient of h0 in h_j (the two Cartan diagonals satisfy 2*h0 + h1 = 0)
_H0_COEFF = {0: 1, 1: -2}


@dataclass(frozen=True)
class MiuraOper:
    """d/dx + L1 + v*h0, determined by the rational function v."""

    v: RatFunc

    def to_json(self) -> dict:
        return {"v": ratfunc_to_json(self.v)}


@dataclass(frozen=True)
class MiuraOperA1:
    """Untwisted diagonal oper with sum-zero potential (v1, v2, v3)."""

    v1: RatFunc
    v2: RatFunc
    v3: RatFunc

    def __post_init__(self):
        if not (self.v1 + self.v2 + self.v3).is_zero():
            raise ValueError("diagonal potential must sum to zero")

    @property
    def vs(self) -> Tuple[RatFunc, RatFunc, RatFunc]:
        return (self.v1, self.v2, self.v3)


@dataclass(frozen=True)
class DiffOp3:
    """d^3 + u1*d + u0."""

    u1: RatFunc
    u0: RatFunc

    def to_json(self) -> dict:
        return {"u1": ratfunc_to_json(self.u1), "u0": ratfunc_to_json(self.u0)}


class OpTangent(NamedTuple):
    """Tangent to the space of operators d^3 + u1*d + u0."""

    u1: RatFunc
    u0: RatFunc


def miura_from_pair(pair: PolyPair) -> MiuraOper:
    v = log_derivative(pair.y1) * 2 - log_derivative(pair.y0)
    return MiuraOper(v)


def miura_from_trace(trace: GenerationTrace) -> MiuraOper:
    """d/dx + L1 - sum_l g_l * h_{j_l}, collapsed to the h0 coordinate."""
    v = RF_ZERO
    for j, g in zip(trace.J, trace.gs):
        v = v - g * _H0_COEFF[j]
    return MiuraOper(v)


def alpha_pairing(j: int, oper: MiuraOper) -> RatFunc:
    """<alpha_j, v*h0> = v * <alpha_j, h0>."""
    return oper.v * CARTAN.alpha_pairing(j, 0)


def ricatti_check(oper: MiuraOper, g: RatFunc, j: int) -> bool:
    """Exact test of g' - <alpha_j, V> g + g**2 = 0."""
    g = RatFunc.lift(g)
    return (g.derivative() - alpha_pairing(j, oper) * g + g * g).is_zero()


def gauge_step(oper: MiuraOper, g: RatFunc, j: int) -> MiuraOper:
    """Unipotent gauge move v -> v - g * (h_j in h0 units).

    Only Riccati solutions keep the result in Miura form, so anything else
    is rejected.
    """
    g = RatFunc.lift(g)
    if not ricatti_check(oper, g, j):
        raise ValueError("gauge parameter does not satisfy the Riccati equation")
    return MiuraOper(oper.v - g * _H0_COEFF[j])


def embed_a1(oper: MiuraOper) -> MiuraOperA1:
    """v*h0 as the diagonal (v, 0, -v)."""
    return MiuraOperA1(oper.v, RF_ZERO, -oper.v)


# --- differential operator composition --------------------------------------
#
# A differential operator is a list of RatFunc coefficients, ascending in the
# order of d/dx.  Composition uses d^i u = sum_s C(i, s) u^(s) d^(i-s).

DiffOp = List[RatFunc]


def _dop_trim(c: DiffOp) -> DiffOp:
    while c and c[-1].is_zero():
        c.pop()
    return c


def _dop_compose(a: Sequence[RatFunc], b: Sequence[RatFunc]) -> DiffOp:
    out: List[RatFunc] = [RF_ZERO] * (len(a) + len(b))
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b):
            if bj.is_zero():
                continue
            deriv = bj
            for s in range(i + 1):
                term = ai * deriv * comb(i, s)
                out[i + j - s] = out[i + j - s] + term
                if s < i:
                    deriv = deriv.derivative()
    return _dop_trim(out)


def _dop_chain(factors: Sequence[Sequence[RatFunc]]) -> DiffOp:
    acc: DiffOp = [RF_ONE]
    for f in factors:
        acc = _dop_compose(acc, f)
    return acc


# ordered factor positions (0-based indices into (v1, v2, v3)) per scalar map
_FACTOR_ORDER = {0: (2, 1, 0), 1: (0, 2, 1), 2: (1, 0, 2)}


def miura_map(i: int, oper: MiuraOperA1) -> DiffOp3:
    """Expand the i-th ordered factorization into d^3 + u1*d + u0."""
    if i not in _FACTOR_ORDER:
        raise ValueError("scalar map index must be 0, 1, or 2")
    vs = oper.vs
    factors = [[-vs[k], RF_ONE] for k in _FACTOR_ORDER[i]]
    coeffs = _dop_chain(factors)
    if len(coeffs) != 4 or coeffs[3] != RF_ONE or not coeffs[2].is_zero():
        raise ValueError("factorization did not produce d^3 + u1*d + u0")
    return DiffOp3(coeffs[1], coeffs[0])


def d_miura_map(i: int, oper: MiuraOper, x_comp: RatFunc) -> OpTangent:
    """Derivative of the i-th scalar map along the tangent X*h0, i in {0, 1}."""
    x = RatFunc.lift(x_comp)
    v = oper.v
    if i == 0:
        u1 = -(x.derivative() * 2 + v * x * 2)
        u0 = -(x.derivative().derivative() + v * x.derivative() + v.derivative() * x)
        return OpTangent(u1, u0)
    if i == 1:
        return OpTangent(x.derivative() - v * x * 2, RF_ZERO)
    raise ValueError("closed forms exist for maps 0 and 1 only")


def d_miura_map_a1(
    i: int, oper: MiuraOperA1, tangent: Sequence[RatFunc]
) -> OpTangent:
    """Derivative of the i-th scalar map along any sum-zero diagonal tangent,
    by the product rule over the three ordered factors."""
    if i not in _FACTOR_ORDER:
        raise ValueError("scalar map index must be 0, 1, or 2")
    xs = [RatFunc.lift(t) for t in tangent]
    if len(xs) != 3 or not (xs[0] + xs[1] + xs[2]).is_zero():
        raise ValueError("tangent must be a sum-zero triple")
    vs = oper.vs
    order = _FACTOR_ORDER[i]
    factors = [[-vs[k], RF_ONE] for k in order]
    total: DiffOp = []
    for pos in range(3):
        pieces = list(factors)
        pieces[pos] = [-xs[order[pos]]]
        term = _dop_chain(pieces)
        total = _dop_trim(
            [p + q for p, q in _zip_pad(total, term)]
        )
    if len(total) > 2:
        raise ValueError("tangent of a sum-zero factorization must have order <= 1")
    u0 = total[0] if len(total) > 0 else RF_ZERO
    u1 = total[1] if len(total) > 1 else RF_ZERO
    return OpTangent(u1, u0)


def _zip_pad(a: Sequence[RatFunc], b: Sequence[RatFunc]):
    n = max(len(a), len(b))
    for k in range(n):
        yield (a[k] if k < len(a) else RF_ZERO), (b[k] if k < len(b) else RF_ZERO)
