"""Independent brute-force oracles shared by the tests.

Nothing here calls the package's numpy tables; group arithmetic is redone on
residue tuples so the checks do not share code paths with the library.
"""

import cmath
import itertools
import math
from fractions import Fraction

import pytest


def residues(orders, index):
    out = []
    for n in orders:
        out.append(index % n)
        index //= n
    return tuple(out)


def index_of(orders, res):
    idx, radix = 0, 1
    for r, n in zip(res, orders):
        idx += (r % n) * radix
        radix *= n
    return idx


def card(orders):
    return math.prod(orders)


def naive_add(orders, a, b):
    return index_of(orders, [x + y for x, y in zip(residues(orders, a), residues(orders, b))])


def naive_sub(orders, a, b):
    return index_of(orders, [x - y for x, y in zip(residues(orders, a), residues(orders, b))])


def naive_v(orders, gamma):
    gset = set(gamma)
    return [Fraction(len(gset & {naive_add(orders, k, x) for x in gset}), len(gset))
            for k in range(card(orders))]


def naive_phase(orders, k, t):
    return sum(Fraction(a * b, n) for a, b, n in zip(residues(orders, k), residues(orders, t), orders)) % 1


def naive_g(orders, gamma, t):
    s = sum(cmath.exp(2j * math.pi * float(naive_phase(orders, k, t))) for k in gamma)
    return abs(s) ** 2 / len(gamma)


def naive_subgroups(orders):
    """Every subset closed under addition and containing 0 (exhaustive, tiny groups only)."""
    n = card(orders)
    found = []
    for r in range(n):
        for rest in itertools.combinations(range(1, n), r):
            s = {0, *rest}
            if all(naive_add(orders, a, b) in s for a in s for b in s):
                found.append(tuple(sorted(s)))
    return found


def all_nonempty(n):
    for mask in range(1, 1 << n):
        yield tuple(i for i in range(n) if mask >> i & 1)


SMALL_ORDERS = [[], [2], [3], [4], [2, 2], [5], [6], [7], [8], [2, 4], [4, 2], [2, 2, 2], [2, 3]]


@pytest.fixture(params=SMALL_ORDERS, ids=lambda o: ",".join(map(str, o)) or "1")
def small_orders(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
