"""Wronskian generation of critical-point families.

A critical point of the two-color logarithmic potential

    Phi(u) = 2 sum ln(u0_i - u0_i') + 8 sum ln(u1_i - u1_i')
             - 4 sum ln(u0_i - u1_i')

is encoded by the pair of monic polynomials (y0, y1) whose roots are the two
groups of coordinates.  New pairs grow from (1, 1) by replacing one
component through the first-order Wronskian equations

    Wr(y0, t0) = y1**4,        Wr(y1, t1) = y0,

whose exponents are read off the columns of the Cartan matrix.  Along the
alternating direction words (0,1,0,...) and (1,0,1,...) the replacement is
always degree increasing and is normalized so that every pair stays monic:
the new component is y_{j,0} + c*y_j where y_{j,0} is the unique monic
solution with vanishing coefficient at the old degree.

Everything is exact over the rationals (or dual numbers, which give exact
parameter derivatives of the whole pipeline); the only numerics live in
``bethe_residuals``, a floating-point spot check of the critical equations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Sequence, Tuple

from .exact import (
    ONE,
    Poly,
    RatFunc,
    _one_over,
    log_derivative,
    poly_gcd,
    poly_to_json,
    rat_to_str,
    ratfunc_to_json,
    solve_linear,
)
from .loop import CARTAN
from .roots import durand_kerner


class InfertileError(Exception):
    """A Wronskian equation admits no polynomial solution."""


class DegreeVector(NamedTuple):
    k0: int
    k1: int


class PolyPair(NamedTuple):
    y0: Poly
    y1: Poly

    def degrees(self) -> DegreeVector:
        return DegreeVector(self.y0.degree(), self.y1.degree())

    def component(self, j: int) -> Poly:
        return self.y1 if j else self.y0

    def with_component(self, j: int, p: Poly) -> "PolyPair":
        return PolyPair(self.y0, p) if j else PolyPair(p, self.y1)


EMPTY_PAIR = PolyPair(ONE, ONE)


def check_basic(j_seq: Sequence[int]) -> Tuple[int, ...]:
    """Validate an alternating direction word over {0, 1}."""
    js = tuple(j_seq)
    for pos, j in enumerate(js):
        if j not in (0, 1):
            raise ValueError(f"direction entries must be 0 or 1, got {j}")
        if pos and j == js[pos - 1]:
            raise ValueError(f"direction word must alternate, got {js}")
    return js


def degree_transform(k: DegreeVector, j: int) -> DegreeVector:
    """Shifted reflection action on degree vectors."""
    k0, k1 = k
    if j == 0:
        return DegreeVector(4 * k1 + 1 - k0, k1)
    if j == 1:
        return DegreeVector(k0, k0 + 1 - k1)
    raise ValueError("direction must be 0 or 1")


def degree_vector(j_seq: Sequence[int]) -> DegreeVector:
    """Fold of degree_transform over a basic word, starting from (0, 0)."""
    k = DegreeVector(0, 0)
    for j in check_basic(j_seq):
        k = degree_transform(k, j)
    return k


def degree_walk(j_seq: Sequence[int]) -> List[DegreeVector]:
    """All intermediate degree vectors, from (0, 0) to the full word."""
    k = DegreeVector(0, 0)
    out = [k]
    for j in check_basic(j_seq):
        k = degree_transform(k, j)
        out.append(k)
    return out


def is_generic(pair: PolyPair) -> bool:
    """Square-free components with no common root."""
    y0, y1 = pair
    if y0.is_zero() or y1.is_zero():
        return False
    for y in (y0, y1):
        if y.degree() > 0 and poly_gcd(y, y.derivative()).degree() > 0:
            return False
    return poly_gcd(y0, y1).degree() <= 0


def wronskian_rhs(pair: PolyPair, j: int) -> Poly:
    """prod_{i != j} y_i ** (-a[i][j]) from the Cartan matrix columns."""
    i = 1 - j
    return pair.component(i) ** (-CARTAN.a[i][j])


def wronskian_solve(
    y: Poly, rhs: Poly, target_degree: int, zero_coeff_index: int
) -> Tuple[object, Poly]:
    """The unique monic y_base with Wr(y, y_base) = a * rhs.

    y_base has the requested degree, its coefficient at x**zero_coeff_index
    vanishes, and the constant a is pinned by the leading coefficients:
    a = lc(y) * (target_degree - deg y) / lc(rhs).  Requires a degree
    increasing configuration; raises InfertileError when the linear system
    for the remaining coefficients is inconsistent.
    """
    d = y.degree()
    if target_degree <= d:
        raise ValueError("generation must be degree increasing")
    if rhs.is_zero():
        raise ValueError("right-hand side must be nonzero")
    if not 0 <= zero_coeff_index < target_degree:
        raise ValueError("pinned coefficient index out of range")
    a = y.leading() * (target_degree - d) * _one_over(rhs.leading())

    def wr_basis(i: int) -> Poly:
        # Wr(y, x**i), linear in the basis monomial
        xi = Poly([0] * i + [1]) if i else ONE
        return y * xi.derivative() - y.derivative() * xi

    target = rhs * a - wr_basis(target_degree)
    unknowns = [i for i in range(target_degree) if i != zero_coeff_index]
    ncoeffs = d + target_degree  # x**0 .. x**(d + target_degree - 1)
    basis = [wr_basis(i) for i in unknowns]
    rows = [[w.coeff(k) for w in basis] for k in range(ncoeffs)]
    rhs_col = [target.coeff(k) for k in range(ncoeffs)]
    sol = solve_linear(rows, rhs_col)
    if sol is None:
        raise InfertileError(
            f"no degree-{target_degree} solution with pinned index {zero_coeff_index}"
        )
    coeffs = [Fraction(0)] * (target_degree + 1)
    coeffs[target_degree] = Fraction(1)
    for i, b in zip(unknowns, sol):
        coeffs[i] = b
    return a, Poly(coeffs)


def _step(pair: PolyPair, j: int, c) -> Tuple[PolyPair, object]:
    k = pair.degrees()
    target = degree_transform(k, j)[j]
    rhs = wronskian_rhs(pair, j)
    a, base = wronskian_solve(pair.component(j), rhs, target, k[j])
    new_component = base + pair.component(j) * c
    return pair.with_component(j, new_component), a


def generate_step(pair: PolyPair, j: int, c) -> PolyPair:
    """Replace component j by its normalized descendant y_{j,0} + c*y_j."""
    return _step(pair, j, c)[0]


@dataclass(frozen=True)
class GenerationTrace:
    """A full generation run: every intermediate pair plus the gauge data.

    pairs has length m+1 (from (1,1) to the final pair), gs[l] is the
    logarithmic-derivative increment of the component changed at step l+1,
    and consts[l] is the proportionality constant of that step's Wronskian
    identity Wr(old, new) = a * rhs.
    """

    J: Tuple[int, ...]
    c: Tuple
    pairs: Tuple[PolyPair, ...]
    gs: Tuple[RatFunc, ...]
    consts: Tuple

    @property
    def final(self) -> PolyPair:
        return self.pairs[-1]

    def degrees(self) -> List[DegreeVector]:
        return [p.degrees() for p in self.pairs]

    def to_json(self) -> dict:
        return {
            "J": list(self.J),
            "c": [rat_to_str(ci) for ci in self.c],
            "pairs": [[poly_to_json(p.y0), poly_to_json(p.y1)] for p in self.pairs],
            "gs": [ratfunc_to_json(g) for g in self.gs],
            "degrees": [[k.k0, k.k1] for k in self.degrees()],
        }


def generate_multistep(j_seq: Sequence[int], c: Sequence) -> GenerationTrace:
    """Iterate generate_step from (1, 1) along a basic word."""
    js = check_basic(j_seq)
    if len(c) != len(js):
        raise ValueError(f"need {len(js)} parameters, got {len(c)}")
    pairs = [EMPTY_PAIR]
    gs: List[RatFunc] = []
    consts: List = []
    for j, ci in zip(js, c):
        new_pair, a = _step(pairs[-1], j, ci)
        gs.append(
            log_derivative(new_pair.component(j)) - log_derivative(pairs[-1].component(j))
        )
        consts.append(a)
        pairs.append(new_pair)
    trace = GenerationTrace(js, tuple(c), tuple(pairs), tuple(gs), tuple(consts))
    if trace.final.degrees() != degree_vector(js):
        raise AssertionError("degree bookkeeping mismatch")
    return trace


def is_fertile(pair: PolyPair) -> bool:
    """Both Wronskian equations admit a polynomial solution.

    For each direction the solution degree is bounded by
    max(deg y_j, deg rhs + 1 - deg y_j), so solvability reduces to one exact
    linear system per direction over all coefficients up to that bound.
    """
    for j in (0, 1):
        y = pair.component(j)
        rhs = wronskian_rhs(pair, j)
        bound = max(y.degree(), rhs.degree() + 1 - y.degree())
        if bound < 0:
            return False
        basis = []
        for i in range(bound + 1):
            xi = Poly([0] * i + [1]) if i else ONE
            basis.append(y * xi.derivative() - y.derivative() * xi)
        ncoeffs = max([rhs.degree() + 1] + [w.degree() + 1 for w in basis])
        rows = [[w.coeff(k) for w in basis] for k in range(ncoeffs)]
        rhs_col = [rhs.coeff(k) for k in range(ncoeffs)]
        if solve_linear(rows, rhs_col) is None:
            return False
    return True


@dataclass(frozen=True)
class BetheReport:
    max_residual: float
    ok: bool
    n_roots: Tuple[int, int]


def bethe_residuals(pair: PolyPair, tolerance: float = 1e-8) -> BetheReport:
    """Numerically root both components and evaluate the critical equations.

    Residuals are

        sum_{i' != i} 2/(u0_i - u0_i') - sum_{i'} 4/(u0_i - u1_i')
        sum_{i' != i} 8/(u1_i - u1_i') - sum_{i'} 4/(u1_i - u0_i')

    at every root; the report carries the largest absolute value.
    """
    if not is_generic(pair):
        raise ValueError("residual check requires a generic pair")
    roots = []
    for y in pair:
        coeffs = [complex(Fraction(c)) for c in y.coeffs]
        roots.append(durand_kerner(coeffs) if y.degree() > 0 else [])
    u0, u1 = roots
    worst = 0.0
    for i, u in enumerate(u0):
        s = sum(2.0 / (u - v) for k, v in enumerate(u0) if k != i)
        s -= sum(4.0 / (u - w) for w in u1)
        worst = max(worst, abs(s))
    for i, w in enumerate(u1):
        s = sum(8.0 / (w - v) for k, v in enumerate(u1) if k != i)
        s -= sum(4.0 / (w - u) for u in u0)
        worst = max(worst, abs(s))
    return BetheReport(worst, worst <= tolerance, (len(u0), len(u1)))


def sample_rational(rng: random.Random, num_range=(-9, 9), den_range=(1, 4)) -> Fraction:
    return Fraction(rng.randint(*num_range), rng.randint(*den_range))


def sample_c(
    j_seq: Sequence[int],
    rng: random.Random,
    *,
    require_generic: bool = True,
    max_tries: int = 50,
) -> Tuple[Fraction, ...]:
    """Draw generation parameters that produce a (generic) trace.

    Degenerate draws are rare, so rejection sampling converges immediately
    in practice; the bound only guards against misuse.
    """
    js = check_basic(j_seq)
    for _ in range(max_tries):
        c = tuple(sample_rational(rng) for _ in js)
        try:
            trace = generate_multistep(js, c)
        except InfertileError:
            continue
        if require_generic and not all(is_generic(p) for p in trace.pairs):
            continue
        return c
    raise RuntimeError(f"could not sample parameters for {js} in {max_tries} tries")
