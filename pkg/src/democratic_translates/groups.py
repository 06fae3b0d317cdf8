"""Finite abelian groups presented as direct sums of cyclic groups.

Elements are plain integers: the mixed-radix index
``sum_j r_j * prod_{i<j} n_i`` of the residue tuple ``(r_0, r_1, ...)``.
For groups of exponent 2 this index coincides with the nim labelling, so
addition is bitwise xor.

The dual group is identified with the same element set through the phase
``pairing(k, t) = sum_j k_j t_j / n_j mod 1``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


class ResourceBoundError(RuntimeError):
    """Raised when an exhaustive computation would exceed its configured bound."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """The group Z_{n_1} + ... + Z_{n_d}; ``orders == ()`` is the trivial group."""

    orders: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(int(n) for n in self.orders))
        for n in self.orders:
            if n < 2:
                raise ValueError(f"cyclic factor orders must be >= 2, got {n}")

    @property
    def cardinality(self) -> int:
        return math.prod(self.orders)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.orders) if self.orders else 1

    def __len__(self) -> int:
        return self.cardinality

    def __iter__(self):
        return iter(range(self.cardinality))

    def __repr__(self) -> str:
        inner = " + ".join(f"Z_{n}" for n in self.orders) or "{0}"
        return f"FiniteAbelianGroup({inner})"

    # -- encoding -----------------------------------------------------------

    def decode(self, index: int) -> tuple[int, ...]:
        self.check(index)
        residues = []
        for n in self.orders:
            index, r = divmod(index, n)
            residues.append(r)
        return tuple(residues)

    def encode(self, residues: Sequence[int]) -> int:
        if len(residues) != len(self.orders):
            raise ValueError("residue tuple has the wrong length")
        index, radix = 0, 1
        for r, n in zip(residues, self.orders):
            index += (r % n) * radix
            radix *= n
        return index

    def check(self, index: int) -> None:
        if not 0 <= index < self.cardinality:
            raise ValueError(f"{index} is not an element of {self!r}")

    # -- group law ----------------------------------------------------------

    @cached_property
    def residue_table(self) -> np.ndarray:
        """``(cardinality, d)`` array of residues, row k = decode(k)."""
        card = self.cardinality
        out = np.zeros((card, len(self.orders)), dtype=np.int64)
        idx = np.arange(card)
        for j, n in enumerate(self.orders):
            idx, out[:, j] = np.divmod(idx, n)
        return out

    @cached_property
    def addition_table(self) -> np.ndarray:
        """``table[a, b] = a + b`` for all pairs of elements."""
        res = self.residue_table
        orders = np.array(self.orders, dtype=np.int64)
        summed = (res[:, None, :] + res[None, :, :]) % orders
        return self._encode_array(summed)

    @cached_property
    def negation_table(self) -> np.ndarray:
        orders = np.array(self.orders, dtype=np.int64)
        return self._encode_array((-self.residue_table) % orders)

    @cached_property
    def subtraction_table(self) -> np.ndarray:
        """``table[a, b] = a - b``."""
        return self.addition_table[:, self.negation_table]

    def _encode_array(self, residues: np.ndarray) -> np.ndarray:
        radix = np.cumprod((1,) + self.orders[:-1], dtype=np.int64) if self.orders else np.zeros(0, np.int64)
        return (residues * radix).sum(axis=-1).astype(np.int64)

    def add(self, a: int, b: int) -> int:
        return int(self.addition_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.negation_table[a])

    def sub(self, a: int, b: int) -> int:
        return int(self.subtraction_table[a, b])

    def order_of(self, a: int) -> int:
        self.check(a)
        return math.lcm(*(n // math.gcd(n, r) for r, n in zip(self.decode(a), self.orders))) if self.orders else 1

    # -- duality ------------------------------------------------------------

    def pairing(self, k: int, t: int) -> Fraction:
        """Phase q in [0, 1) with chi_t(k) = exp(2 pi i q)."""
        q = sum(
            (Fraction(a * b, n) for a, b, n in zip(self.decode(k), self.decode(t), self.orders)),
            Fraction(0),
        )
        return q - math.floor(q)

    @cached_property
    def pairing_numerators(self) -> np.ndarray:
        """Integer matrix P with pairing(k, t) = P[k, t] / exponent mod 1."""
        e = self.exponent
        weights = np.array([e // n for n in self.orders], dtype=np.int64)
        res = self.residue_table
        return ((res * weights) @ res.T) % e if self.orders else np.zeros((1, 1), dtype=np.int64)

    @cached_property
    def character_table(self) -> np.ndarray:
        """Complex matrix ``X[k, t] = exp(2 pi i pairing(k, t))``."""
        return np.exp(2j * np.pi * self.pairing_numerators / self.exponent)


def make_group(orders: Iterable[int]) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(tuple(orders))


@dataclass(frozen=True)
class Subgroup:
    group: FiniteAbelianGroup
    elements: tuple[int, ...]
    generators: frozenset[int] = field(default=frozenset(), compare=False)

    @property
    def cardinality(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, k: int) -> bool:
        return k in self.element_set

    def __iter__(self):
        return iter(self.elements)

    @cached_property
    def element_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.group.cardinality, dtype=bool)
        m[list(self.elements)] = True
        return m

    def is_trivial(self) -> bool:
        return self.elements == (0,)


def generate_subgroup(g: FiniteAbelianGroup, gens: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing ``gens``, by breadth-first closure."""
    gens = frozenset(gens)
    for x in gens:
        g.check(x)
    add = g.addition_table
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = int(add[x, s])
            if y not in seen:
                seen.add(y)
                queue.append(y)
    # a finite set closed under adding generators is closed under negation too
    return Subgroup(g, tuple(sorted(seen)), gens)


def is_subgroup(g: FiniteAbelianGroup, elements: Iterable[int]) -> bool:
    s = set(elements)
    if 0 not in s:
        return False
    sub = g.subtraction_table
    return all(int(sub[a, b]) in s for a in s for b in s)


def enumerate_subgroups(g: FiniteAbelianGroup, max_cardinality: int = 64) -> list[Subgroup]:
    """All subgroups of ``g``, sorted by (cardinality, element list)."""
    if g.cardinality > max_cardinality:
        raise ResourceBoundError(
            f"subgroup enumeration limited to cardinality {max_cardinality}, got {g.cardinality}"
        )
    trivial = generate_subgroup(g, ())
    found = {trivial.elements: trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for h in frontier:
            for x in g:
                if x in h:
                    continue
                bigger = generate_subgroup(g, h.generators | {x})
                if bigger.elements not in found:
                    found[bigger.elements] = bigger
                    nxt.append(bigger)
        frontier = nxt
    return sorted(found.values(), key=lambda h: (h.cardinality, h.elements))


def orthogonal_complement(g: FiniteAbelianGroup, m: Subgroup) -> Subgroup:
    """Dual elements t with pairing(k, t) = 0 for every k in m."""
    phases = g.pairing_numerators[list(m.elements), :]
    perp = np.flatnonzero((phases == 0).all(axis=0))
    return Subgroup(g, tuple(int(t) for t in perp))


def whole_group(g: FiniteAbelianGroup) -> Subgroup:
    return Subgroup(g, tuple(range(g.cardinality)))


def exhausting_chain(g: FiniteAbelianGroup) -> list[Subgroup]:
    """Chain {0} = M_0 < M_1 < ... < M_N = g.

    Each step adjoins the element of smallest index not yet covered.
    """
    chain = [generate_subgroup(g, ())]
    while chain[-1].cardinality < g.cardinality:
        current = chain[-1]
        k = next(x for x in g if x not in current)
        chain.append(generate_subgroup(g, current.generators | {k}))
    return chain


def prufer_truncation(p: int, n: int) -> tuple[FiniteAbelianGroup, list[Subgroup]]:
    """Z_{p^n} with the chain M_m = multiples of p^(n-m), m = 0..n."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 0:
        raise ValueError("truncation level must be non-negative")
    g = make_group([p**n] if n > 0 else [])
    chain = []
    for m in range(n + 1):
        step = p ** (n - m)
        gens = frozenset({step % g.cardinality}) if m > 0 else frozenset()
        chain.append(Subgroup(g, tuple(range(0, g.cardinality, step)), gens))
    return g, chain
