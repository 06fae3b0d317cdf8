import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from democratic_translates.autocorr import SubsetGamma, subset
from democratic_translates.groups import ResourceBoundError, make_group
from democratic_translates.oracles import (
    PI_RATIO_TOL,
    PsiTable,
    coset_characterization_bruteforce,
    parseval_check,
    pi_ratio,
    qbinomial,
    qbinomial_row_sum,
)

F = Fraction


def test_parseval_examples():
    g = make_group([2, 2])
    res = parseval_check(PsiTable(g, (1, 0, 0, 0)), subset(g, [0, 2, 3]))
    assert res.lhs == res.rhs == 1
    res = parseval_check(PsiTable(g, (1, 1, 1, 1)), subset(g, [0, 1]))
    assert res.lhs == res.rhs == 8


def test_zero_psi_rejected():
    with pytest.raises(ValueError):
        PsiTable(make_group([2]), (0, 0))


rationals = st.fractions(min_value=-4, max_value=4, max_denominator=6)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([[2, 2, 2], [8], [2, 4], [6], [3], [2, 2]]), st.data())
def test_parseval_identity(orders, data):
    g = make_group(orders)
    n = g.cardinality
    values = data.draw(st.lists(rationals, min_size=n, max_size=n).filter(any))
    elems = data.draw(st.sets(st.integers(0, n - 1), min_size=1))
    res = parseval_check(PsiTable(g, values), SubsetGamma(g, tuple(elems)))
    assert res.equal and res.lhs >= 0


def test_pi_ratio_small():
    r = pi_ratio(1)
    assert (r.subset_max, r.full_sum, r.ratio) == pytest.approx((1, 2, 0.5), abs=1e-12)


def _naive_subset_max(n):
    f = [complex(math.cos(math.pi * k / n), math.sin(math.pi * k / n)) for k in range(2 * n)]
    return max(abs(sum(c for c, b in zip(f, bits) if b)) for bits in itertools.product((0, 1), repeat=2 * n))


@pytest.mark.parametrize("n", range(1, 8))
def test_pi_ratio_bruteforce_against_naive_search(n):
    assert pi_ratio(n).subset_max == pytest.approx(_naive_subset_max(n), abs=1e-9)


@pytest.mark.parametrize("n", range(1, 11))
def test_pi_ratio_closed_form(n):
    r = pi_ratio(n)
    assert r.brute_force
    assert abs(r.subset_max - 1 / math.sin(math.pi / (2 * n))) <= PI_RATIO_TOL
    assert r.full_sum == pytest.approx(2 * n)


def test_pi_ratio_limit_and_monotone():
    ratios = [pi_ratio(n).ratio for n in range(1, 101)]
    assert all(a > b for a, b in zip(ratios, ratios[1:]))
    assert abs(ratios[-1] - 1 / math.pi) <= 1e-4
    assert not pi_ratio(11).brute_force


def test_qbinomial_examples():
    assert qbinomial(4, 2, 2) == 35
    assert [qbinomial(4, k, 2) for k in range(5)] == [1, 15, 35, 15, 1]
    assert qbinomial_row_sum(4, 2) == 67
    assert qbinomial(2, 1, 3) == 4
    assert all(qbinomial(n, 0, q) == 1 for n in range(6) for q in (2, 3, 5))
    for bad in ((2, 3, 2), (2, -1, 2), (2, 1, 1)):
        with pytest.raises(ValueError):
            qbinomial(*bad)


@given(st.integers(0, 12), st.integers(2, 7), st.data())
def test_qbinomial_symmetry_and_pascal(n, q, data):
    k = data.draw(st.integers(0, n))
    assert qbinomial(n, k, q) == qbinomial(n, n - k, q)
    if 0 < k < n:
        # q-Pascal rule
        assert qbinomial(n, k, q) == qbinomial(n - 1, k - 1, q) + q**k * qbinomial(n - 1, k, q)


@pytest.mark.parametrize("orders", [[2, 2, 2], [6], [], [4], [2, 4], [7]], ids=str)
def test_coset_characterization(orders):
    assert coset_characterization_bruteforce(make_group(orders)) is True


def test_coset_characterization_bound():
    with pytest.raises(ResourceBoundError):
        coset_characterization_bruteforce(make_group([2] * 4))
