"""Independent brute-force and closed-form cross-checks."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .autocorr import SubsetGamma, autocorr_vector
from .groups import FiniteAbelianGroup, ResourceBoundError, is_subgroup

PI_RATIO_TOL = 1e-9
PI_BRUTE_FORCE_MAX_N = 10


@dataclass(frozen=True)
class PsiTable:
    """A real, rational-valued function on a finite group, not identically zero."""

    group: FiniteAbelianGroup
    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        if len(vals) != self.group.cardinality:
            raise ValueError("one value per group element is required")
        if not any(vals):
            raise ValueError("psi must not vanish identically")
        object.__setattr__(self, "values", vals)

    def autocorrelation(self, k: int) -> Fraction:
        """a(k) = sum_x psi(x) psi(x - k)."""
        sub = self.group.subtraction_table
        return sum((self.values[x] * self.values[int(sub[x, k])] for x in self.group), Fraction(0))


@dataclass(frozen=True)
class ParsevalResult:
    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def parseval_check(psi: PsiTable, gamma: SubsetGamma) -> ParsevalResult:
    """Compare (1/card Gamma) ||sum_{k in Gamma} T_k psi||^2 with sum_k v_Gamma(k) a_psi(k)."""
    g = psi.group
    if gamma.group != g:
        raise ValueError("psi and Gamma live on different groups")
    sub = g.subtraction_table
    lhs = Fraction(0)
    for x in g:
        s = sum((psi.values[int(sub[x, k])] for k in gamma), Fraction(0))
        lhs += s * s
    lhs /= gamma.cardinality
    v = autocorr_vector(gamma)
    rhs = sum((v[k] * psi.autocorrelation(k) for k in g if v.counts[k]), Fraction(0))
    return ParsevalResult(lhs, rhs)


@dataclass(frozen=True)
class PiRatio:
    n: int
    subset_max: float
    full_sum: float
    ratio: float
    closed_form: float
    brute_force: bool


def _max_subset_sum(values: np.ndarray) -> float:
    """max over all subsets of |sum|, by splitting the index set in two halves."""
    half = len(values) // 2

    def all_sums(vals):
        sums = np.zeros(1, dtype=complex)
        for v in vals:
            sums = np.concatenate([sums, sums + v])
        return sums

    lo, hi = all_sums(values[:half]), all_sums(values[half:])
    return float(np.abs(lo[:, None] + hi[None, :]).max())


def pi_ratio(n: int) -> PiRatio:
    """Sharpness example for the pi constant in the subset-selection bound.

    f_k = exp(pi i k / n), alpha_k = exp(-pi i k / n), k = 0..2n-1.
    """
    if n < 1:
        raise ValueError("n must be positive")
    k = np.arange(2 * n)
    f = np.exp(1j * np.pi * k / n)
    alpha = np.exp(-1j * np.pi * k / n)
    full_sum = float(abs((alpha * f).sum()))
    closed = 1 / math.sin(math.pi / (2 * n))
    brute = n <= PI_BRUTE_FORCE_MAX_N
    if brute:
        subset_max = _max_subset_sum(f)
        if abs(subset_max - closed) > PI_RATIO_TOL:
            raise ArithmeticError(f"brute force {subset_max} disagrees with 1/sin(pi/2n) = {closed}")
    else:
        subset_max = closed
    return PiRatio(n, subset_max, full_sum, subset_max / full_sum, closed, brute)


def qbinomial(n: int, k: int, q: int) -> int:
    """Gaussian binomial coefficient, the number of k-dim subspaces of F_q^n."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if q < 2:
        raise ValueError("need q >= 2")
    num = math.prod(q ** (n - i) - 1 for i in range(k))
    den = math.prod(q ** (i + 1) - 1 for i in range(k))
    quotient, rem = divmod(num, den)
    assert rem == 0
    return quotient


def qbinomial_row_sum(n: int, q: int) -> int:
    return sum(qbinomial(n, k, q) for k in range(n + 1))


def subsets(g: FiniteAbelianGroup):
    """All nonempty subsets of ``g`` as sorted tuples."""
    card = g.cardinality
    for mask in range(1, 1 << card):
        yield tuple(x for x in range(card) if mask >> x & 1)


def is_coset(g: FiniteAbelianGroup, elements: Sequence[int]) -> bool:
    base = elements[0]
    return is_subgroup(g, [g.sub(x, base) for x in elements])


def coset_characterization_bruteforce(g: FiniteAbelianGroup, max_cardinality: int = 8) -> bool:
    """Check over every nonempty subset: v_Gamma is 0/1-valued iff Gamma is a coset."""
    if g.cardinality > max_cardinality:
        raise ResourceBoundError(f"limited to cardinality {max_cardinality}, got {g.cardinality}")
    for elems in subsets(g):
        v = autocorr_vector(SubsetGamma(g, elems))
        zero_one = all(c in (0, v.size) for c in v.counts)
        if zero_one != is_coset(g, elems):
            return False
    return True
