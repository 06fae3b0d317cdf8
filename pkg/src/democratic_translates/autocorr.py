"""Autocorrelation vectors v_Gamma and the spectra g_Gamma of finite subsets.

``v_Gamma(k) = card(Gamma & (k + Gamma)) / card(Gamma)`` are the Fourier
coefficients of ``g_Gamma(t) = |sum_{k in Gamma} chi_t(k)|^2 / card(Gamma)``.
Dual integrals use the normalized Haar measure, so every dual element carries
mass ``1 / cardinality``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional

import numpy as np

from .groups import (
    FiniteAbelianGroup,
    ResourceBoundError,
    Subgroup,
    is_subgroup,
    orthogonal_complement,
)

SPECTRUM_TOL = 1e-9


@dataclass(frozen=True)
class SubsetGamma:
    group: FiniteAbelianGroup
    elements: tuple[int, ...]

    def __post_init__(self):
        elems = tuple(sorted(set(int(x) for x in self.elements)))
        if not elems:
            raise ValueError("Gamma must be nonempty")
        for x in elems:
            self.group.check(x)
        object.__setattr__(self, "elements", elems)

    @property
    def cardinality(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def translate(self, m: int) -> "SubsetGamma":
        add = self.group.addition_table
        return SubsetGamma(self.group, tuple(int(add[m, x]) for x in self.elements))


def subset(group: FiniteAbelianGroup, elements: Iterable[int]) -> SubsetGamma:
    return SubsetGamma(group, tuple(elements))


@dataclass(frozen=True, eq=False)
class AutocorrVector:
    """Integer counts over a common scale; ``entries[k] = counts[k] / counts[0]``.

    Built from a subset, ``counts[k] = card(Gamma & (k + Gamma))`` and the scale
    is card(Gamma). Equality compares the rational entries.
    """

    group: FiniteAbelianGroup
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.group.cardinality:
            raise ValueError("vector length does not match the group")

    def __eq__(self, other):
        if not isinstance(other, AutocorrVector):
            return NotImplemented
        return self.group == other.group and self.entries == other.entries

    def __hash__(self):
        return hash((self.group, self.entries))

    @property
    def size(self) -> int:
        return self.counts[0]

    @cached_property
    def entries(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.size) for c in self.counts)

    def __getitem__(self, k: int) -> Fraction:
        return self.entries[k]

    def __len__(self) -> int:
        return len(self.counts)

    @classmethod
    def from_entries(cls, group: FiniteAbelianGroup, entries) -> "AutocorrVector":
        """Build from rationals, rejecting vectors that break the invariants."""
        entries = [Fraction(x) for x in entries]
        if len(entries) != group.cardinality:
            raise ValueError("vector length does not match the group")
        if entries[0] != 1:
            raise ValueError("entry at 0 must equal 1")
        if any(not 0 <= x <= 1 for x in entries):
            raise ValueError("entries must lie in [0, 1]")
        neg = group.negation_table
        if any(entries[k] != entries[int(neg[k])] for k in group):
            raise ValueError("vector must be symmetric under k -> -k")
        # candidate card(Gamma): smallest denominator clearing every entry
        size = math.lcm(*(x.denominator for x in entries))
        counts = tuple(int(x * size) for x in entries)
        return cls(group, counts)


def _pair_differences(gamma: SubsetGamma) -> np.ndarray:
    idx = list(gamma.elements)
    return gamma.group.subtraction_table[np.ix_(idx, idx)].ravel()


def autocorr_vector(gamma: SubsetGamma) -> AutocorrVector:
    counts = np.bincount(_pair_differences(gamma), minlength=gamma.group.cardinality)
    return AutocorrVector(gamma.group, tuple(int(c) for c in counts))


def canonicalize(gamma: SubsetGamma) -> SubsetGamma:
    """Lexicographically smallest translate of ``gamma`` that contains 0."""
    sub = gamma.group.subtraction_table
    best = min(
        tuple(sorted(int(sub[x, a]) for x in gamma.elements)) for a in gamma.elements
    )
    return SubsetGamma(gamma.group, best)


@dataclass(frozen=True)
class ClassEnumeration:
    group: FiniteAbelianGroup
    classes: list[tuple[SubsetGamma, AutocorrVector]]
    total: int

    @property
    def distinct(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __len__(self) -> int:
        return len(self.classes)


def _subset_indicators(card: int, start: int, stop: int) -> np.ndarray:
    """Indicator rows for the subsets containing 0, numbered start..stop-1."""
    masks = (np.arange(start, stop, dtype=np.int64) << 1) | 1
    bits = np.arange(card, dtype=np.int64)
    return ((masks[:, None] >> bits[None, :]) & 1).astype(np.int16)


def enumerate_classes(g: FiniteAbelianGroup, max_cardinality: int = 16,
                      chunk: int = 1 << 14) -> ClassEnumeration:
    """Distinct autocorrelation vectors over all nonempty subsets of ``g``.

    Only subsets containing 0 are visited; every translation class has such a
    member. Each class is represented by its lexicographically smallest member
    (as a sorted tuple), which is automatically canonical.
    """
    card = g.cardinality
    if card > max_cardinality:
        raise ResourceBoundError(
            f"class enumeration limited to cardinality {max_cardinality}, got {card}"
        )
    sub = g.subtraction_table
    best: dict[bytes, tuple[tuple[int, ...], np.ndarray]] = {}
    n_subsets = 1 << (card - 1)
    for start in range(0, n_subsets, chunk):
        ind = _subset_indicators(card, start, min(n_subsets, start + chunk))
        # counts[:, k] = sum_x 1[x] 1[x - k]
        counts = np.stack([(ind * ind[:, sub[:, k]]).sum(axis=1) for k in range(card)], axis=1)
        for row, c in zip(ind, counts):
            key = c.tobytes()
            members = tuple(int(x) for x in np.flatnonzero(row))
            held = best.get(key)
            if held is None or members < held[0]:
                best[key] = (members, c)
    classes = []
    for members, c in best.values():
        classes.append((SubsetGamma(g, members), AutocorrVector(g, tuple(int(x) for x in c))))
    classes.sort(key=lambda item: (item[0].cardinality, item[0].elements))
    return ClassEnumeration(g, classes, (1 << card) - 1)


@dataclass(frozen=True)
class GSpectrum:
    group: FiniteAbelianGroup
    values: tuple
    """g_Gamma at each dual element; Fractions when ``exact`` else floats."""
    exact: bool

    def __getitem__(self, t: int):
        return self.values[t]

    def __len__(self) -> int:
        return len(self.values)

    def total(self):
        return sum(self.values, Fraction(0) if self.exact else 0.0)


def _character_sum_spectrum(gamma: SubsetGamma) -> np.ndarray:
    chars = gamma.group.character_table[list(gamma.elements), :]
    return np.abs(chars.sum(axis=0)) ** 2 / gamma.cardinality


def g_spectrum(gamma: SubsetGamma) -> GSpectrum:
    """Evaluate g_Gamma from its coefficient expansion.

    Exact for groups of exponent <= 2, where every character is +-1; the
    result is cross-checked against the direct character-sum formula.
    """
    g = gamma.group
    v = autocorr_vector(gamma)
    counts = np.array(v.counts, dtype=np.int64)
    direct = _character_sum_spectrum(gamma)
    if g.exponent <= 2:
        signs = 1 - 2 * g.pairing_numerators
        sums = counts @ signs
        values = tuple(Fraction(int(s), v.size) for s in sums)
        approx = np.array([float(x) for x in values])
        exact = True
    else:
        phases = np.cos(2 * np.pi * g.pairing_numerators / g.exponent)
        approx = counts @ phases / v.size
        values = tuple(float(x) for x in approx)
        exact = False
    if not np.allclose(approx, direct, rtol=0, atol=SPECTRUM_TOL):
        raise ArithmeticError("coefficient expansion disagrees with the character sum")
    return GSpectrum(g, values, exact)


def pair_count_in(gamma: SubsetGamma, m: Subgroup) -> int:
    """card{(k, k') in Gamma x Gamma : k - k' in M}."""
    return int(m.mask[_pair_differences(gamma)].sum())


def integral_over_perp(gamma: SubsetGamma, m: Subgroup) -> Fraction:
    """Integral of g_Gamma over M-perp, by pair counting."""
    if m.group != gamma.group:
        raise ValueError("subgroup and Gamma live in different groups")
    return Fraction(pair_count_in(gamma, m), m.cardinality * gamma.cardinality)


def spectral_integral_over_perp(gamma: SubsetGamma, m: Subgroup):
    """Same integral summed from the spectrum over M-perp (mass 1/card G per point)."""
    spec = g_spectrum(gamma)
    perp = orthogonal_complement(gamma.group, m)
    zero = Fraction(0) if spec.exact else 0.0
    total = sum((spec[t] for t in perp), zero)
    return total / gamma.group.cardinality


def coset_from_zero_one_vector(
    v: AutocorrVector, gamma: Optional[SubsetGamma] = None
) -> Optional[tuple[int, Subgroup]]:
    """If v has only 0/1 entries return (m, M) with M = support of v.

    Any Gamma realizing such a v is the coset m + M. Without ``gamma`` the
    representative m = 0 is returned; with it, m = min(gamma) and the coset
    identity is verified.
    """
    g = v.group
    AutocorrVector.from_entries(g, v.entries)  # validates invariants
    if any(c not in (0, v.size) for c in v.counts):
        return None
    support = [k for k, c in enumerate(v.counts) if c]
    if not is_subgroup(g, support):
        return None
    mgroup = Subgroup(g, tuple(support))
    if gamma is None:
        return 0, mgroup
    m = gamma.elements[0]
    coset = tuple(sorted(g.add(m, k) for k in support))
    if coset != gamma.elements:
        raise ValueError("gamma does not realize v")
    return m, mgroup


def folner_defect(f: SubsetGamma, k: int) -> Fraction:
    """card(F minus (k + F)) / card F."""
    g = f.group
    g.check(k)
    shifted = {g.add(k, x) for x in f.elements}
    return Fraction(sum(1 for x in f.elements if x not in shifted), f.cardinality)
