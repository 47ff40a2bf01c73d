"""Enumeration of divisor classes satisfying the line-bundle conditions.

Three routes: an exact solver on lattices of rank at most 2 (parametrize
the integer solutions of the linear equation, then solve the induced
univariate quadratic over the rationals), the closed form on P^1 x P^1,
and a bounded exhaustive search usable on any rank as an independent
oracle.  Outputs are numerical candidates only and are always sorted
lexicographically by coefficient vector.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd, isqrt

from .errors import (
    BoxTooLarge,
    DegenerateForm,
    InvalidPolarization,
    RankTooHigh,
)
from .invariants import PolarizedSurface
from .lattice import DivisorClass
from .ulrich import line_numeric_check

__all__ = [
    "enumerate_rank2_exact",
    "p1xp1_closed_form",
    "enumerate_bounded",
    "DEFAULT_ITERATION_CEILING",
]

DEFAULT_ITERATION_CEILING = 10**8


def _required_linear(S: PolarizedSurface) -> Fraction:
    return Fraction(3 * S.h2 + S.hK, 2)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a x + b y = g = gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def _integer_roots(A: int, B: int, C: int) -> list[int] | None:
    """Integer roots of A t^2 + B t + C = 0; None if identically zero."""
    if A == 0:
        if B == 0:
            return None if C == 0 else []
        return [-C // B] if C % B == 0 else []
    disc = B * B - 4 * A * C
    if disc < 0:
        return []
    s = isqrt(disc)
    if s * s != disc:
        return []
    roots = []
    for sign in (1, -1) if s else (1,):
        num = -B + sign * s
        if num % (2 * A) == 0:
            roots.append(num // (2 * A))
    return sorted(set(roots))


def enumerate_rank2_exact(S: PolarizedSurface) -> list[DivisorClass]:
    """All integer solutions of the line-bundle conditions, rank <= 2 only.

    Raises RankTooHigh above rank 2 and DegenerateForm when D -> D.h is
    identically zero or the solution set is infinite.
    """
    rank = S.lattice.rank
    if rank > 2:
        raise RankTooHigh(f"exact enumeration needs rank <= 2, got {rank}")
    w = S.lattice.gram_apply(S.h)
    if all(wi == 0 for wi in w):
        raise DegenerateForm("pairing with h is identically zero")
    required = _required_linear(S)
    if required.denominator != 1:
        return []
    r = int(required)

    if rank == 1:
        (w0,) = w
        if r % w0 != 0:
            return []
        candidates = [DivisorClass((r // w0,))]
        return [D for D in candidates if line_numeric_check(S, D).passed]

    w0, w1 = w
    g, x, y = _ext_gcd(w0, w1)
    if r % g != 0:
        return []
    scale = r // g
    # Solution line of the linear equation: P + t V, t integer.
    P = (x * scale, y * scale)
    V = (w1 // g, -w0 // g)

    def pair(u, v):
        return S.pair(DivisorClass(u), DivisorClass(v))

    K = S.K.coeffs
    # Quadratic condition: D^2 - D.K - 2(h^2 - chi) = 0 along the line.
    A = pair(V, V)
    B = 2 * pair(P, V) - pair(V, K)
    C = pair(P, P) - pair(P, K) - 2 * (S.h2 - S.chi)
    roots = _integer_roots(A, B, C)
    if roots is None:
        raise DegenerateForm("infinitely many solutions along the linear locus")
    solutions = []
    for t in roots:
        D = DivisorClass((P[0] + t * V[0], P[1] + t * V[1]))
        report = line_numeric_check(S, D)
        assert report.passed, "solver produced a non-solution"
        solutions.append(D)
    return sorted(solutions, key=lambda D: D.coeffs)


def p1xp1_closed_form(a: int, b: int) -> tuple[DivisorClass, DivisorClass]:
    """The two solutions on P^1 x P^1 with h = a xi + b f:

    L = (a-1) xi + (2b-1) f  and  M = (2a-1) xi + (b-1) f.
    """
    if a < 1 or b < 1:
        raise InvalidPolarization(f"need a, b >= 1, got ({a}, {b})")
    L = DivisorClass((a - 1, 2 * b - 1))
    M = DivisorClass((2 * a - 1, b - 1))
    for u, v in (L.coeffs, M.coeffs):
        assert (u + 1) * (v + 1) == 2 * a * b
        assert a * (v + 1) + b * (u + 1) == 3 * a * b
    return L, M


def enumerate_bounded(
    S: PolarizedSurface,
    bound: int,
    iteration_ceiling: int = DEFAULT_ITERATION_CEILING,
) -> list[DivisorClass]:
    """Exhaustive search for solutions with all coefficients in [-bound, bound].

    The linear equation is used to solve one coordinate exactly, so the
    search iterates over the remaining rank - 1 coordinates.  Raises
    BoxTooLarge when that iteration count exceeds the ceiling.
    """
    if bound < 1:
        raise InvalidPolarization(f"bound must be >= 1, got {bound}")
    rank = S.lattice.rank
    w = S.lattice.gram_apply(S.h)
    if all(wi == 0 for wi in w):
        raise DegenerateForm("pairing with h is identically zero")
    required = _required_linear(S)
    if required.denominator != 1:
        return []
    r = int(required)
    width = 2 * bound + 1
    if width ** (rank - 1) > iteration_ceiling:
        raise BoxTooLarge(
            f"{width ** (rank - 1)} iterations exceed ceiling {iteration_ceiling}"
        )
    # Pivot on the largest coefficient of the linear form for best pruning.
    pivot = max(range(rank), key=lambda i: abs(w[i]))
    others = [i for i in range(rank) if i != pivot]
    solutions = []
    for values in product(range(-bound, bound + 1), repeat=rank - 1):
        rest = r - sum(w[i] * v for i, v in zip(others, values))
        if rest % w[pivot] != 0:
            continue
        x = rest // w[pivot]
        if abs(x) > bound:
            continue
        coeffs = [0] * rank
        for i, v in zip(others, values):
            coeffs[i] = v
        coeffs[pivot] = x
        D = DivisorClass(tuple(coeffs))
        if line_numeric_check(S, D).passed:
            solutions.append(D)
    return sorted(solutions, key=lambda D: D.coeffs)
