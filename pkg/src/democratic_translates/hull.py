"""Extreme points among autocorrelation vectors, decided by exact LP."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .autocorr import AutocorrVector, SubsetGamma, enumerate_classes
from .groups import ResourceBoundError, make_group
from .simplex import phase_one


@dataclass(frozen=True)
class PointCloud:
    """Distinct rational points, each stored as integer counts over a scale."""

    counts: tuple[tuple[int, ...], ...]
    labels: tuple[Optional[SubsetGamma], ...] = ()

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", (None,) * len(self.counts))
        if len(self.labels) != len(self.counts):
            raise ValueError("one label per point is required")
        if len({self.point(i) for i in range(len(self))}) != len(self):
            raise ValueError("points must be pairwise distinct")
        for c in self.counts:
            if len(c) != self.dimension:
                raise ValueError("all points must share one dimension")
            if c[0] <= 0 or any(not 0 <= x <= c[0] for x in c):
                raise ValueError("points need coordinate 1 at index 0 and entries in [0, 1]")

    @property
    def dimension(self) -> int:
        return len(self.counts[0]) if self.counts else 0

    def __len__(self) -> int:
        return len(self.counts)

    def point(self, i: int) -> tuple[Fraction, ...]:
        c = self.counts[i]
        return tuple(Fraction(x, c[0]) for x in c)

    def is_zero_one(self, i: int) -> bool:
        c = self.counts[i]
        return all(x in (0, c[0]) for x in c)

    @classmethod
    def from_vectors(cls, vectors: Sequence[AutocorrVector], labels=()) -> "PointCloud":
        return cls(tuple(v.counts for v in vectors), tuple(labels))

    @classmethod
    def from_points(cls, points: Sequence[Sequence], labels=()) -> "PointCloud":
        counts = []
        for p in points:
            p = [Fraction(x) for x in p]
            if p[0] != 1:
                raise ValueError("coordinate 0 must be 1")
            den = math.lcm(*(x.denominator for x in p))
            counts.append(tuple(int(x * den) for x in p))
        return cls(tuple(counts), tuple(labels))


@dataclass(frozen=True)
class PointCertificate:
    """Either convex weights (sparse, over other points) proving a point is not
    extreme, or a functional f(x) = functional . x + offset with f > 0 at the
    point and f <= 0 at every other point."""

    extreme: bool
    weights: Optional[dict[int, Fraction]] = None
    functional: Optional[tuple[Fraction, ...]] = None
    offset: Fraction = Fraction(0)
    pivots: int = 0


@dataclass
class HullReport:
    extreme: list[bool]
    certificates: dict[int, PointCertificate] = field(default_factory=dict)
    """One entry per point that needed an LP (0/1 points are cube vertices)."""

    @property
    def extreme_indices(self) -> list[int]:
        return [i for i, e in enumerate(self.extreme) if e]

    @property
    def n_extreme(self) -> int:
        return sum(self.extreme)

    @property
    def n_points(self) -> int:
        return len(self.extreme)


class _HullLP:
    """Integer LP columns for a cloud; coordinate 0 doubles as the convexity row."""

    def __init__(self, cloud: PointCloud):
        self.cloud = cloud
        reduced, scales = [], []
        for c in cloud.counts:
            g = math.gcd(*c)
            reduced.append([x // g for x in c])
            scales.append(c[0] // g)
        self.columns = np.array(reduced, dtype=np.int64).T  # (dimension, n_points)
        self.scales = scales

    def test(self, i: int, active: Sequence[int]) -> PointCertificate:
        """Is point i in the hull of the points listed in ``active``?"""
        idx = [j for j in active if j != i]
        if not idx:
            return PointCertificate(True, functional=(Fraction(0),) * self.cloud.dimension,
                                    offset=Fraction(1))
        res = phase_one(self.columns[:, idx], self.cloud.point(i))
        if res.feasible:
            weights = {idx[local]: mu * self.scales[idx[local]]
                       for local, mu in res.basic_values.items() if mu}
            return PointCertificate(False, weights=weights, pivots=res.pivots)
        return PointCertificate(True, functional=tuple(res.dual), pivots=res.pivots)


def verify_certificate(cloud: PointCloud, i: int, cert: PointCertificate) -> bool:
    """Exact re-check of one certificate against every other point of the cloud."""
    target = cloud.counts[i]
    if not cert.extreme:
        w = cert.weights
        if i in w or any(x < 0 for x in w.values()) or sum(w.values()) != 1:
            return False
        for coord in range(cloud.dimension):
            combo = sum((wj * Fraction(cloud.counts[j][coord], cloud.counts[j][0])
                         for j, wj in w.items()), Fraction(0))
            if combo != Fraction(target[coord], target[0]):
                return False
        return True
    # integer form: scaling a point by counts[0] > 0 or f by a positive
    # denominator does not change any sign
    terms = list(cert.functional) + [cert.offset]
    den = math.lcm(*(t.denominator for t in terms))
    f = np.array([int(t * den) for t in terms], dtype=object)
    counts = np.array(cloud.counts, dtype=object)
    values = counts @ f[:-1] + counts[:, 0] * f[-1]
    if values[i] <= 0:
        return False
    return all(v <= 0 for j, v in enumerate(values) if j != i)


_POOL_LP: Optional[_HullLP] = None


def _pool_init(cloud: PointCloud) -> None:
    global _POOL_LP
    _POOL_LP = _HullLP(cloud)


def _pool_test(args):
    i, active = args
    return i, _POOL_LP.test(i, active)


def _run_tests(lp: _HullLP, points: Sequence[int], active: Sequence[int],
               workers: int, prune: bool) -> dict[int, PointCertificate]:
    """Test each point against ``active``; sequential runs drop points found inside."""
    if workers > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=workers, initializer=_pool_init,
                                 initargs=(lp.cloud,)) as pool:
            return dict(pool.map(_pool_test, [(i, list(active)) for i in points], chunksize=16))
    active = list(active)
    results = {}
    for i in points:
        res = lp.test(i, active)
        results[i] = res
        if not res.extreme and prune and i in active:
            active.remove(i)
    return results


def classify_vertices(cloud: PointCloud, workers: int = 1, prune: bool = True,
                      order: Optional[Sequence[int]] = None) -> HullReport:
    """Mark each point extreme or non-extreme, with verified certificates.

    0/1 points are cube vertices and therefore extreme without an LP. With
    ``prune`` the remaining points are first tested against the 0/1 points
    alone (inside means non-extreme, and the certificate stands as is); the
    survivors are then tested against the 0/1 points plus the survivors, and in
    sequential mode each point shown non-extreme leaves the candidate set.
    Non-extreme points lie in the hull of the extreme ones, so none of this
    changes the classification, only which certificates are found.
    Without ``prune`` every point is tested against all others.
    """
    n = len(cloud)
    extreme = [False] * n
    zero_one, pending = [], []
    for i in range(n):
        if cloud.is_zero_one(i):
            extreme[i] = True
            zero_one.append(i)
        else:
            pending.append(i)
    if order is not None:
        rank = {j: r for r, j in enumerate(order)}
        pending.sort(key=lambda j: rank.get(j, n + j))

    lp = _HullLP(cloud)
    if prune:
        results = _run_tests(lp, pending, zero_one, workers, prune=False)
        survivors = [i for i in pending if results[i].extreme]
        results.update(_run_tests(lp, survivors, zero_one + survivors, workers, prune=True))
    else:
        results = _run_tests(lp, pending, range(n), workers, prune=False)

    certs: dict[int, PointCertificate] = {}
    for i in pending:
        res = results[i]
        if not verify_certificate(cloud, i, res):
            raise ArithmeticError(f"certificate for point {i} failed verification")
        extreme[i] = res.extreme
        certs[i] = res
    return HullReport(extreme, certs)


@dataclass(frozen=True)
class Table3Row:
    n: int
    total: int
    distinct: int
    extreme: int

    def csv(self) -> str:
        return f"{self.n},{self.total},{self.distinct},{self.extreme}"


def dyadic_cloud(n: int) -> PointCloud:
    classes = enumerate_classes(make_group([2] * n))
    return PointCloud.from_vectors([v for _, v in classes], [g for g, _ in classes])


def table3(max_n: int = 4, workers: int = 1, progress=None, classes_for=None) -> list[Table3Row]:
    """Counts of subsets, distinct points and extreme points for Z_2^n, n = 0..max_n.

    ``classes_for(n)`` may supply the class enumeration (e.g. from a cache).
    """
    if not 0 <= max_n <= 4:
        raise ResourceBoundError("max_n must lie in 0..4")
    rows = []
    for n in range(max_n + 1):
        if classes_for is not None:
            classes = classes_for(n)
        else:
            classes = enumerate_classes(make_group([2] * n))
        cloud = PointCloud.from_vectors([v for _, v in classes], [g for g, _ in classes])
        report = classify_vertices(cloud, workers=workers)
        row = Table3Row(n, classes.total, classes.distinct, report.n_extreme)
        rows.append(row)
        if progress:
            progress(row)
    return rows
