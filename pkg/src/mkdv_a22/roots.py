"""Simultaneous polynomial root finding (Durand-Kerner iteration).

This is the only floating-point code in the package; it backs the numeric
verification of the critical-point equations and nothing else.
"""

from __future__ import annotations

import cmath
from typing import Sequence


class RootFindingError(RuntimeError):
    def __init__(self, iterations: int, delta: float):
        super().__init__(
            f"root iteration did not converge after {iterations} steps "
            f"(last update {delta:.3e})"
        )
        self.iterations = iterations
        self.delta = delta


def durand_kerner(
    coeffs: Sequence[complex], tol: float = 1e-10, max_iter: int = 500
) -> list:
    """All complex roots of the monic polynomial sum coeffs[i] * x**i.

    Initial guesses are spread deterministically on the circle of radius
    1 + max|coeff| with a fixed angular offset that breaks the symmetry of
    real-coefficient inputs.
    """
    cs = [complex(c) for c in coeffs]
    if not cs or abs(cs[-1]) == 0:
        raise ValueError("leading coefficient must be nonzero")
    lead = cs[-1]
    cs = [c / lead for c in cs]
    n = len(cs) - 1
    if n == 0:
        return []
    radius = 1.0 + max(abs(c) for c in cs[:-1]) if n else 1.0

    def p(z: complex) -> complex:
        acc = 0j
        for c in reversed(cs):
            acc = acc * z + c
        return acc

    zs = [radius * cmath.exp(2j * cmath.pi * (k + 0.25) / n) for k in range(n)]
    for it in range(max_iter):
        delta = 0.0
        new = list(zs)
        for k in range(n):
            denom = 1.0 + 0j
            for m in range(n):
                if m != k:
                    denom *= zs[k] - zs[m]
            step = p(zs[k]) / denom
            new[k] = zs[k] - step
            delta = max(delta, abs(step))
        zs = new
        if delta < tol:
            return zs
    raise RootFindingError(max_iter, delta)
