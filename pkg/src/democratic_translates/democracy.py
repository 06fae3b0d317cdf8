"""Periodization functions and the democracy functional int g_Gamma p.

A periodization function p lives on the dual group. Two presentations are
supported: ``ChainAnnuli`` assigns one weight to each annulus
M_m-perp minus M_{m+1}-perp of a subgroup chain (plus a tail on M_N-perp) and
is integrated exactly by pair counting; ``DualTable`` lists p pointwise and is
integrated through the spectrum of g_Gamma.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .autocorr import (
    SubsetGamma,
    canonicalize,
    enumerate_classes,
    g_spectrum,
    integral_over_perp,
)
from .groups import (
    FiniteAbelianGroup,
    Subgroup,
    enumerate_subgroups,
    generate_subgroup,
    orthogonal_complement,
    prufer_truncation,
)
from .hull import PointCloud, classify_vertices

Number = Union[Fraction, float]
FAMILIES = ("all", "extreme", "subgroups")


@dataclass(frozen=True)
class DualTable:
    group: FiniteAbelianGroup
    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        if len(vals) != self.group.cardinality:
            raise ValueError("one value per dual element is required")
        if any(v < 0 for v in vals):
            raise ValueError("periodization values must be non-negative")
        object.__setattr__(self, "values", vals)

    def to_table(self) -> "DualTable":
        return self

    @property
    def ess_sup(self) -> Fraction:
        return max(self.values)


@dataclass(frozen=True)
class ChainAnnuli:
    """p = weights[m] on M_m-perp minus M_{m+1}-perp and ``tail`` on M_N-perp.

    A chain not starting at {0} gets {0} prepended, in which case ``weights``
    must also cover the annulus between the whole dual and chain[0]-perp.
    """

    group: FiniteAbelianGroup
    chain: tuple[Subgroup, ...]
    weights: tuple[Fraction, ...]
    tail: Fraction = Fraction(0)

    def __post_init__(self):
        chain = tuple(self.chain)
        if not chain or not chain[0].is_trivial():
            chain = (generate_subgroup(self.group, ()),) + chain
        for a, b in zip(chain, chain[1:]):
            if not (a.element_set < b.element_set):
                raise ValueError("chain must be strictly nested")
        for h in chain:
            if h.group != self.group:
                raise ValueError("chain subgroups belong to another group")
        weights = tuple(Fraction(w) for w in self.weights)
        if len(weights) != len(chain) - 1:
            raise ValueError(f"expected {len(chain) - 1} annulus weights, got {len(weights)}")
        tail = Fraction(self.tail)
        if any(w < 0 for w in weights) or tail < 0:
            raise ValueError("periodization weights must be non-negative")
        object.__setattr__(self, "chain", chain)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "tail", tail)

    @property
    def levels(self) -> int:
        return len(self.chain) - 1

    @property
    def ess_sup(self) -> Fraction:
        return max(self.weights + (self.tail,))

    def to_table(self) -> DualTable:
        # walk from the outermost annulus inward; inner levels overwrite
        level = [0] * self.group.cardinality
        for m, h in enumerate(self.chain):
            for t in orthogonal_complement(self.group, h):
                level[t] = m
        values = [self.tail if m == self.levels else self.weights[m] for m in level]
        return DualTable(self.group, tuple(values))


PeriodizationSpec = Union[ChainAnnuli, DualTable]


def eval_functional(gamma: SubsetGamma, p: PeriodizationSpec) -> Number:
    """int g_Gamma p over the dual, normalized so the whole dual has measure 1."""
    if gamma.group != p.group:
        raise ValueError("Gamma and p live on different groups")
    if isinstance(p, ChainAnnuli):
        perp = [integral_over_perp(gamma, h) for h in p.chain]
        total = p.tail * perp[-1]
        for m, w in enumerate(p.weights):
            total += w * (perp[m] - perp[m + 1])
        return total
    spec = g_spectrum(gamma)
    if spec.exact:
        return sum((g * v for g, v in zip(spec.values, p.values)), Fraction(0)) / gamma.group.cardinality
    return sum(g * float(v) for g, v in zip(spec.values, p.values)) / gamma.group.cardinality


@dataclass
class DemocracyReport:
    family: str
    values: list[tuple[SubsetGamma, Number]]
    infimum: Number
    witness: SubsetGamma
    ess_sup: Fraction
    exact: bool = True


def family_members(g: FiniteAbelianGroup, family: str,
                   subgroups: Optional[Sequence[Subgroup]] = None,
                   workers: int = 1, classes=None) -> list[SubsetGamma]:
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}")
    if family == "subgroups":
        groups = subgroups if subgroups is not None else enumerate_subgroups(g)
        return [SubsetGamma(g, h.elements) for h in groups]
    if classes is None:
        classes = enumerate_classes(g)
    if family == "all":
        return [gamma for gamma, _ in classes]
    cloud = PointCloud.from_vectors([v for _, v in classes], [gm for gm, _ in classes])
    report = classify_vertices(cloud, workers=workers)
    return [classes.classes[i][0] for i in report.extreme_indices]


def inf_over_family(g: FiniteAbelianGroup, p: PeriodizationSpec, family: str = "all",
                    subgroups: Optional[Sequence[Subgroup]] = None,
                    workers: int = 1, classes=None) -> DemocracyReport:
    """Minimum of the functional over a family of subsets.

    Ties go to the lexicographically smallest canonical Gamma. ``classes`` may
    carry a precomputed class enumeration of ``g``.
    """
    if p.group != g:
        raise ValueError("p lives on a different group")
    members = family_members(g, family, subgroups, workers, classes)
    values = [(gamma, eval_functional(gamma, p)) for gamma in members]
    witness, infimum = min(values, key=lambda item: (item[1], canonicalize(item[0]).elements))
    exact = all(isinstance(v, Fraction) for _, v in values)
    return DemocracyReport(family, values, infimum, witness, p.ess_sup, exact)


def sufficient_condition_check(p: PeriodizationSpec, c, chain: Optional[Sequence[Subgroup]] = None) -> Optional[int]:
    """Least level m with p >= c on all of M_m-perp, or None.

    ChainAnnuli specs use their own chain; a DualTable needs ``chain``.
    """
    c = Fraction(c)
    if c <= 0:
        raise ValueError("c must be positive")
    if chain is None:
        if not isinstance(p, ChainAnnuli):
            raise ValueError("a subgroup chain is required for a DualTable")
        chain = p.chain
    table = p.to_table().values
    for m, h in enumerate(chain):
        if all(table[t] >= c for t in orthogonal_complement(p.group, h)):
            return m
    return None


# -- the Pruefer 2-group counterexample -------------------------------------


def counterexample_periodization(group: FiniteAbelianGroup, chain: Sequence[Subgroup]) -> ChainAnnuli:
    """Indicator of the even annuli M_{2i}-perp minus M_{2i+1}-perp.

    The truncation puts value 1 on M_N-perp exactly when N is even, continuing
    the alternating pattern.
    """
    levels = len(chain) - 1
    weights = tuple(Fraction(1 - m % 2) for m in range(levels))
    return ChainAnnuli(group, tuple(chain), weights, Fraction(1 - levels % 2))


def counterexample_gamma(n: int, level: int, group: FiniteAbelianGroup) -> SubsetGamma:
    """{0, s_1} + {0, s_3} + ... + {0, s_{2n-1}} with s_j = 2^(level - j)."""
    elems = {0}
    for j in range(1, 2 * n, 2):
        s = 2 ** (level - j)
        elems |= {(x + s) % group.cardinality for x in elems}
    return SubsetGamma(group, tuple(elems))


@dataclass
class CounterexampleReport:
    n: int
    level: int
    group: FiniteAbelianGroup
    chain: list[Subgroup]
    gamma: SubsetGamma
    p: ChainAnnuli
    perp_integrals: list[Fraction]
    """int over M_m-perp of g_Gamma for m = 0..level."""
    annulus_integrals: dict[int, Fraction]
    """i -> int over M_{2i-1}-perp minus M_{2i}-perp of g_Gamma."""
    gamma_value: Fraction
    subgroup_values: list[Fraction]
    bound: Fraction = field(init=False)

    def __post_init__(self):
        self.bound = Fraction(1, 2 ** (self.n - 1))

    @property
    def subgroup_infimum(self) -> Fraction:
        return min(self.subgroup_values)

    @property
    def within_bound(self) -> bool:
        return self.gamma_value <= self.bound


def build_counterexample(n: int, level: Optional[int] = None) -> CounterexampleReport:
    """Truncated Pruefer 2-group example at level N = 2n - 1 (or a larger ``level``)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if level is None:
        level = 2 * n - 1
    if level < 2 * n - 1:
        raise ValueError("level must be at least 2n - 1")
    group, chain = prufer_truncation(2, level)
    gamma = counterexample_gamma(n, level, group)
    p = counterexample_periodization(group, chain)
    perp = [integral_over_perp(gamma, h) for h in chain]
    annuli = {i: perp[2 * i - 1] - perp[2 * i] for i in range(1, level // 2 + 1)}
    sub_values = [eval_functional(SubsetGamma(group, h.elements), p) for h in chain]
    return CounterexampleReport(n, level, group, chain, gamma, p, perp, annuli,
                                eval_functional(gamma, p), sub_values)
