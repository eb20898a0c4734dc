"""Formal pseudodifferential calculus for d^3 + u1*d + u0.

Operators are finite sums a_i d^i with rational-function coefficients and a
truncation marker ``floor``: coefficients at orders >= floor are exact, the
tail below is unknown.  ``floor = None`` means the operator is exact at all
orders (every pure differential operator is).  Products track the worst case

    floor(a*b) = max(floor(a) + top(b), floor(b) + top(a))

so exactness claims never silently degrade.  Composition uses the
generalized Leibniz rule d^k u = sum_s C(k, s) u^(s) d^(k-s), valid for
negative k with the usual falling-factorial binomials.

The cube root of d^3 + u1*d + u0 is the unique d + sum_{i<=0} a_i d^i whose
cube reproduces it; coefficients are solved order by order, and fractional
powers keep enough depth that every nonnegative order of the result is
exact (checked, not assumed: recomputing two orders deeper must not change
the nonnegative part).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Tuple

from .exact import RF_ZERO, RatFunc, ratfunc_to_json
from .flows import mkdv_field
from .generation import GenerationTrace
from .miura import DiffOp3, OpTangent, d_miura_map_a1, embed_a1, miura_from_trace, miura_map


@lru_cache(maxsize=None)
def _binom(k: int, s: int) -> Fraction:
    """Falling-factorial binomial k(k-1)...(k-s+1)/s!, any integer k."""
    num = 1
    for t in range(s):
        num *= k - t
    den = 1
    for t in range(2, s + 1):
        den *= t
    return Fraction(num, den)


@dataclass(frozen=True)
class PsDO:
    """sum over orders i of terms[i] * d^i, exact at orders >= floor."""

    terms: Dict[int, RatFunc]
    floor: Optional[int] = None

    def __post_init__(self):
        cleaned = {
            i: c
            for i, c in self.terms.items()
            if not c.is_zero() and (self.floor is None or i >= self.floor)
        }
        object.__setattr__(self, "terms", cleaned)

    @staticmethod
    def zero() -> "PsDO":
        return PsDO({})

    @staticmethod
    def one() -> "PsDO":
        return PsDO({0: RatFunc.one()})

    @staticmethod
    def d(order: int = 1) -> "PsDO":
        return PsDO({order: RatFunc.one()})

    def coeff(self, i: int) -> RatFunc:
        return self.terms.get(i, RF_ZERO)

    def top(self) -> Optional[int]:
        return max(self.terms) if self.terms else None

    def is_zero(self) -> bool:
        return not self.terms

    def truncate(self, floor: int) -> "PsDO":
        new_floor = floor if self.floor is None else max(floor, self.floor)
        return PsDO({i: c for i, c in self.terms.items() if i >= new_floor}, new_floor)

    def plus_part(self) -> "PsDO":
        """Orders >= 0; exact (hence floor-free) only if floor <= 0."""
        if self.floor is not None and self.floor > 0:
            raise ValueError("positive part is not fully known at this truncation")
        return PsDO({i: c for i, c in self.terms.items() if i >= 0})

    def __add__(self, other: "PsDO") -> "PsDO":
        terms = dict(self.terms)
        for i, c in other.terms.items():
            s = terms.get(i)
            s = c if s is None else s + c
            if s.is_zero():
                terms.pop(i, None)
            else:
                terms[i] = s
        return PsDO(terms, _floor_max(self.floor, other.floor))

    def __sub__(self, other: "PsDO") -> "PsDO":
        return self + (-other)

    def __neg__(self) -> "PsDO":
        return PsDO({i: -c for i, c in self.terms.items()}, self.floor)

    def __mul__(self, other: "PsDO") -> "PsDO":
        return psdo_mul(self, other)

    def __eq__(self, other):
        if isinstance(other, PsDO):
            return self.terms == other.terms and self.floor == other.floor
        return NotImplemented

    def __repr__(self):
        body = " + ".join(f"({c})d^{i}" for i, c in sorted(self.terms.items(), reverse=True))
        tail = "" if self.floor is None else f"  [exact above {self.floor}]"
        return (body or "0") + tail

    def to_json(self) -> dict:
        return {
            "floor": self.floor,
            "terms": [
                {"order": i, **ratfunc_to_json(c)} for i, c in sorted(self.terms.items())
            ],
        }


def _floor_max(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return max(a, b)


def _mul_floor(a: PsDO, b: PsDO) -> Optional[int]:
    """Lowest surely-exact order of a product, from the unknown tails."""
    cands = []
    if a.floor is not None:
        top_b = b.top()
        cands.append(a.floor + (top_b if top_b is not None else (b.floor or 0) - 1))
    if b.floor is not None:
        top_a = a.top()
        cands.append(b.floor + (top_a if top_a is not None else (a.floor or 0) - 1))
    return max(cands) if cands else None


def psdo_mul(a: PsDO, b: PsDO) -> PsDO:
    """Composition; exact at all orders above the tracked floor."""
    floor = _mul_floor(a, b)
    out: Dict[int, RatFunc] = {}
    a_items = sorted(a.terms.items())
    for j, bj in b.terms.items():
        derivs = [bj]  # grown lazily; derivatives are the expensive part
        for i, ai in a_items:
            if i >= 0:
                s_max = i
            elif bj.is_polynomial():
                s_max = bj.num.degree()
            elif floor is not None:
                s_max = i + j - floor
            else:
                raise ValueError(
                    "product of untruncated operators has an infinite expansion; "
                    "truncate one factor first"
                )
            for s in range(s_max + 1):
                order = i + j - s
                if floor is not None and order < floor:
                    break
                while len(derivs) <= s:
                    derivs.append(derivs[-1].derivative())
                if derivs[s].is_zero():
                    continue
                val = ai * (derivs[s] * _binom(i, s))
                if val.is_zero():
                    continue
                prev = out.get(order)
                out[order] = val if prev is None else prev + val
    return PsDO(out, floor)


def from_diffop3(op: DiffOp3) -> PsDO:
    return PsDO({3: RatFunc.one(), 1: op.u1, 0: op.u0})


def cube_root(op: DiffOp3, depth: int) -> PsDO:
    """d + a_0 + a_{-1} d^{-1} + ... with (result)**3 = op at all retained
    orders; depth counts the coefficients a_0 .. a_{-(depth-1)}."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    target = from_diffop3(op)
    terms: Dict[int, RatFunc] = {1: RatFunc.one()}
    for k in range(depth):
        r = PsDO(dict(terms), -k)
        cube = r * r * r
        gap = target.coeff(2 - k) - cube.coeff(2 - k)
        if not gap.is_zero():
            terms[-k] = gap / 3
    return PsDO(terms, -(depth - 1))


def frac_power_plus(op: DiffOp3, r: int, *, check_stability: bool = True) -> PsDO:
    """Differential-operator part of the r/3 power, exact at every order.

    Depth r+3 leaves a three-order safety margin below zero; the stability
    check reruns the power two orders deeper and insists the nonnegative
    part is unchanged.
    """
    if r <= 0:
        raise ValueError("power must be positive")
    if r % 3 == 0:
        raise ValueError("powers divisible by 3 are plain polynomials in the operator")
    depth = r + 3
    root_deep = cube_root(op, depth + 2)
    plus = _power_plus(root_deep, r)
    if check_stability:
        shallow = _power_plus(root_deep.truncate(-(depth - 1)), r)
        if shallow != plus:
            raise ArithmeticError(
                "truncation instability: nonnegative orders changed with depth"
            )
    return plus


def _power_plus(root: PsDO, r: int) -> PsDO:
    acc = None
    base = root
    n = r
    while n:
        if n & 1:
            acc = base if acc is None else acc * base
        n >>= 1
        if n:
            base = base * base
    if acc.floor is not None and acc.floor > 0:
        raise ArithmeticError("insufficient depth for an exact nonnegative part")
    return acc.plus_part()


def kdv_field(op: DiffOp3, r: int) -> Tuple[RatFunc, RatFunc]:
    """Coefficients (u1_dot, u0_dot) of [L, (L^(r/3))+].

    The commutator of the full fractional power with L vanishes, so this
    bracket closes at order <= 1; anything higher signals a truncation bug
    and is an error.
    """
    plus = frac_power_plus(op, r)
    lop = from_diffop3(op)
    comm = lop * plus - plus * lop
    top = comm.top()
    if top is not None and top > 1:
        raise ArithmeticError(f"flow bracket has order {top}, expected <= 1")
    return comm.coeff(1), comm.coeff(0)


def consistency_check(trace: GenerationTrace, r: int, i: int) -> bool:
    """One point of the diagram: pushing the mKdV flow value through the
    derivative of the i-th scalar map must equal the KdV flow value at the
    image operator.  Exact equality of both coefficient pairs."""
    mk = consistency_sides(trace, r, i)
    (a1, a0), (b1, b0) = mk
    return a1 == b1 and a0 == b0


def consistency_sides(
    trace: GenerationTrace, r: int, i: int
) -> Tuple[OpTangent, Tuple[RatFunc, RatFunc]]:
    """Both sides of the consistency diagram, for inspection on mismatch."""
    oper = miura_from_trace(trace)
    x = mkdv_field(trace, r).x_component
    emb = embed_a1(oper)
    pushed = d_miura_map_a1(i, emb, (x, RF_ZERO, -x))
    scalar_op = miura_map(i, emb)
    kdv = kdv_field(scalar_op, r)
    return pushed, kdv
