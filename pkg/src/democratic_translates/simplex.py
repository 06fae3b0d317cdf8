"""Exact phase-1 simplex for convex-hull membership.

Decides whether ``target`` is a convex combination of ``candidates``:

    gamma_j >= 0,  sum_j gamma_j = 1,  sum_j gamma_j c_j = target.

Columns are rescaled to integers (``mu_j = gamma_j / L_j``) so pricing is an
integer matrix product, and the basis inverse is updated fraction-free. With
``rule="bland"`` entering and leaving variables follow Bland's rule, which
guarantees termination on degenerate problems. Pure Bland pricing needs
thousands of pivots on hull problems of a few thousand columns, so the default
``rule="hybrid"`` prices by the largest coefficient and switches to Bland after
``DEGENERATE_RUN`` consecutive degenerate pivots; Bland stays in force until a
pivot strictly lowers the objective. Each objective value is left after
finitely many pivots, so the hybrid terminates as well. Leaving-variable ties
always go to the smallest basic index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

_INT64_SAFE = 1 << 62
DEGENERATE_RUN = 8


@dataclass(frozen=True)
class PhaseOneResult:
    feasible: bool
    basic_values: dict[int, Fraction]
    """Values of the basic structural variables (all others are zero)."""
    dual: tuple[Fraction, ...]
    """Final simplex multipliers y; when infeasible, y.b > 0 >= y.A_j for all j."""
    pivots: int


def _common_denominator(values: Sequence[Fraction]) -> tuple[list[int], int]:
    den = math.lcm(*(v.denominator for v in values)) if values else 1
    return [int(v * den) for v in values], den


def _price(A: np.ndarray, col_abs_sums: int, ints: list[int]) -> np.ndarray:
    """Exact integer products ints . A_j for every column j."""
    bound = max((abs(v) for v in ints), default=0) * col_abs_sums
    if bound < _INT64_SAFE:
        return np.asarray(ints, dtype=np.int64) @ A
    return np.asarray(ints, dtype=object) @ A.astype(object)


def phase_one(A: np.ndarray, b: Sequence[Fraction], rule: str = "hybrid") -> PhaseOneResult:
    """Minimize the sum of artificials for ``A mu = b, mu >= 0``.

    ``A`` is an ``(m, n)`` integer array and ``b`` must be non-negative.
    ``rule`` is ``"bland"`` or ``"hybrid"``.

    The basis inverse is held fraction-free: ``T = d * B^-1`` with the integer
    ``d = |det B|``, and ``xi = d * D * x_B`` where D clears the denominators of b.
    Pivot updates divide exactly by the previous determinant.
    """
    if rule not in ("bland", "hybrid"):
        raise ValueError(f"unknown pivot rule {rule!r}")
    A = np.asarray(A)
    m, n = A.shape
    b = [Fraction(x) for x in b]
    if len(b) != m:
        raise ValueError("right-hand side has the wrong length")
    if any(x < 0 for x in b):
        raise ValueError("phase one expects a non-negative right-hand side")
    if A.dtype != object:
        A = A.astype(np.int64)
    col_abs_sums = int(np.abs(A).sum(axis=0).max()) if n else 0
    b_int, b_den = _common_denominator(b)

    basis = [n + r for r in range(m)]  # artificials carry indices n..n+m-1
    T = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    xi = list(b_int)
    d = 1
    pivots = 0
    degenerate = 0
    while True:
        # y = c_B B^-1 up to the positive factor 1/d
        y = [0] * m
        for r in range(m):
            if basis[r] >= n:
                row = T[r]
                y = [a + c for a, c in zip(y, row)]
        if n:
            reduced = _price(A, col_abs_sums, y)
            entering = np.flatnonzero(reduced > 0)
        else:
            entering = ()
        if len(entering) == 0:
            break
        if rule == "bland" or degenerate >= DEGENERATE_RUN:
            # smallest index with negative reduced cost (-y.A_j < 0)
            q = int(entering[0])
        else:
            q = int(entering[np.argmax(reduced[entering])])
        col = [(i, int(a)) for i, a in enumerate(A[:, q]) if a]
        u = [sum(T[r][i] * a for i, a in col) for r in range(m)]
        # ratio x_r / u_r = xi_r / u_r; Bland tie-break on the basic index
        leave = None
        for r in range(m):
            if u[r] > 0:
                if leave is None:
                    leave = r
                    continue
                lhs, rhs = xi[r] * u[leave], xi[leave] * u[r]
                if lhs < rhs or (lhs == rhs and basis[r] < basis[leave]):
                    leave = r
        if leave is None:
            # unbounded direction cannot occur: the objective is bounded below by 0
            raise ArithmeticError("phase-one objective reported unbounded")
        degenerate = degenerate + 1 if xi[leave] == 0 else 0
        piv = u[leave]
        prow, pxi = T[leave], xi[leave]
        for r in range(m):
            if r == leave:
                continue
            f = u[r]
            if f:
                T[r] = [(piv * a - f * c) // d for a, c in zip(T[r], prow)]
                xi[r] = (piv * xi[r] - f * pxi) // d
            elif piv != d:
                T[r] = [piv * a // d for a in T[r]]
                xi[r] = piv * xi[r] // d
        d = piv
        basis[leave] = q
        pivots += 1

    scale = d * b_den
    objective = sum(xi[r] for r in range(m) if basis[r] >= n)
    basic = {basis[r]: Fraction(xi[r], scale) for r in range(m) if basis[r] < n}
    dual = tuple(Fraction(v, d) for v in y)
    return PhaseOneResult(objective == 0, basic, dual, pivots)


@dataclass(frozen=True)
class MembershipResult:
    feasible: bool
    weights: Optional[tuple[Fraction, ...]] = None
    """Convex weights, one per candidate, when feasible."""
    functional: Optional[tuple[Fraction, ...]] = None
    offset: Fraction = Fraction(0)
    """When infeasible: f(x) = functional . x + offset has f(target) > 0 >= f(c)."""
    pivots: int = 0

    def separation_value(self, point: Sequence[Fraction]) -> Fraction:
        return sum((a * Fraction(p) for a, p in zip(self.functional, point)), self.offset)


def _scale_columns(candidates: list[list[Fraction]], rows: list[int]):
    """Integer columns L_j * (1, c_j[rows]) and their scale factors L_j."""
    cols, scales = [], []
    for c in candidates:
        vals = [Fraction(1)] + [c[i] for i in rows]
        ints, den = _common_denominator(vals)
        g = math.gcd(*ints)
        cols.append([v // g for v in ints])
        scales.append(Fraction(den, g))
    return cols, scales


def lp_convex_membership(target: Sequence, candidates: Sequence[Sequence]) -> MembershipResult:
    """Exact decision of ``target in conv(candidates)`` with a certificate.

    Coordinates that equal 1 on the target and on every candidate duplicate
    the convexity constraint and are dropped before solving.
    """
    target = [Fraction(t) for t in target]
    cands = [[Fraction(v) for v in c] for c in candidates]
    dim = len(target)
    if any(len(c) != dim for c in cands):
        raise ValueError("dimension mismatch between target and candidates")
    if not cands:
        return MembershipResult(False, functional=(Fraction(0),) * dim, offset=Fraction(1))
    constant = [i for i in range(dim) if target[i] == 1 and all(c[i] == 1 for c in cands)]
    rows = [i for i in range(dim) if i not in constant]
    cols, scales = _scale_columns(cands, rows)
    A = np.array(cols, dtype=object).T
    if max(abs(int(v)) for v in A.ravel()) < (1 << 31):
        A = A.astype(np.int64)
    rhs = [Fraction(1)] + [target[i] for i in rows]
    signs = [(-1 if v < 0 else 1) for v in rhs]
    A = A * np.array(signs, dtype=A.dtype)[:, None]
    rhs = [s * v for s, v in zip(signs, rhs)]
    res = phase_one(A, rhs)
    if res.feasible:
        weights = [Fraction(0)] * len(cands)
        for j, mu in res.basic_values.items():
            weights[j] = mu * scales[j]
        return MembershipResult(True, weights=tuple(weights), pivots=res.pivots)
    y = [s * v for s, v in zip(signs, res.dual)]
    functional = [Fraction(0)] * dim
    for yi, i in zip(y[1:], rows):
        functional[i] = yi
    offset = y[0]
    if constant:
        functional[constant[0]] += offset
        offset = Fraction(0)
    return MembershipResult(False, functional=tuple(functional), offset=offset, pivots=res.pivots)


def verify_membership(target: Sequence, candidates: Sequence[Sequence], result: MembershipResult) -> bool:
    """Re-check a certificate with exact arithmetic."""
    target = [Fraction(t) for t in target]
    if result.feasible:
        w = result.weights
        if w is None or len(w) != len(candidates) or any(x < 0 for x in w) or sum(w) != 1:
            return False
        combo = [sum((wj * Fraction(c[i]) for wj, c in zip(w, candidates) if wj), Fraction(0))
                 for i in range(len(target))]
        return combo == target
    if result.functional is None:
        return False
    if result.separation_value(target) <= 0:
        return False
    return all(result.separation_value(c) <= 0 for c in candidates)
