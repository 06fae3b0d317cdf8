import itertools
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from democratic_translates.simplex import lp_convex_membership, phase_one, verify_membership

F = Fraction


def test_two_thirds_identity_is_feasible():
    target = (1, F(2, 3), F(2, 3), F(2, 3))
    cands = [(1, 0, 0, 0), (1, 1, 1, 1), (1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1)]
    res = lp_convex_membership(target, cands)
    assert res.feasible
    assert verify_membership(target, cands, res)
    given_weights = (F(1, 3), F(2, 3), 0, 0, 0)
    assert sum(given_weights) == 1
    assert all(sum(w * c[i] for w, c in zip(given_weights, cands)) == target[i] for i in range(4))


def test_only_two_candidates_forces_one_third_two_thirds():
    res = lp_convex_membership((1, F(2, 3), F(2, 3), F(2, 3)), [(1, 0, 0, 0), (1, 1, 1, 1)])
    assert res.feasible and res.weights == (F(1, 3), F(2, 3))


def test_cube_vertex_is_separated():
    target = (1, 1, 0, 1)
    cands = [(1, F(1, 2), F(1, 2), F(1, 2)), (1, F(1, 3), 0, F(2, 3)), (1, 0, 0, 0), (1, 1, 0, 0)]
    res = lp_convex_membership(target, cands)
    assert not res.feasible
    assert verify_membership(target, cands, res)
    assert res.separation_value(target) > 0


def test_midpoint():
    res = lp_convex_membership((F(1, 2), F(1, 2)), [(0, 1), (1, 0)])
    assert res.feasible and res.weights == (F(1, 2), F(1, 2))


def test_dimension_mismatch_rejected():
    with pytest.raises(ValueError):
        lp_convex_membership((1, 0), [(1, 0, 0)])


def test_empty_candidates_infeasible():
    res = lp_convex_membership((1, 2), [])
    assert not res.feasible and verify_membership((1, 2), [], res)


def test_negative_coordinates():
    cands = [(-1, -1), (1, -1), (0, 2)]
    assert lp_convex_membership((0, 0), cands).feasible
    res = lp_convex_membership((-2, 0), cands)
    assert not res.feasible and verify_membership((-2, 0), cands, res)


def _brute_in_hull_2d(target, pts):
    """Target inside a triangle of candidates or on a segment, by exact barycentric solve."""
    for a, b, c in itertools.combinations(pts, 3):
        det = (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1])
        if det == 0:
            continue
        l1 = ((target[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (target[1] - a[1])) / det
        l2 = ((b[0] - a[0]) * (target[1] - a[1]) - (target[0] - a[0]) * (b[1] - a[1])) / det
        if l1 >= 0 and l2 >= 0 and l1 + l2 <= 1:
            return True
    for a, b in itertools.combinations(pts, 2):
        cross = (b[0] - a[0]) * (target[1] - a[1]) - (b[1] - a[1]) * (target[0] - a[0])
        if cross == 0 and min(a[0], b[0]) <= target[0] <= max(a[0], b[0]) \
                and min(a[1], b[1]) <= target[1] <= max(a[1], b[1]):
            return True
    return tuple(target) in {tuple(p) for p in pts}


@settings(max_examples=150, deadline=None)
@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=1, max_size=7),
       st.tuples(st.integers(-4, 4), st.integers(-4, 4)))
def test_planar_membership_matches_brute_force(pts, target):
    pts = [tuple(F(x) for x in p) for p in pts]
    target = tuple(F(x) for x in target)
    res = lp_convex_membership(target, pts)
    assert verify_membership(target, pts, res)
    assert res.feasible == _brute_in_hull_2d(target, pts)


@pytest.mark.parametrize("rule", ["hybrid", "bland"])
def test_phase_one_rules_agree(rule):
    rng = random.Random(7)
    for _ in range(40):
        m, n = rng.randint(1, 5), rng.randint(1, 9)
        A = np.array([[rng.randint(0, 4) for _ in range(n)] for _ in range(m)], dtype=np.int64)
        x = [F(rng.randint(0, 3), rng.randint(1, 3)) for _ in range(n)]
        b = [sum(int(A[i, j]) * x[j] for j in range(n)) for i in range(m)]
        res = phase_one(A, b, rule=rule)
        assert res.feasible
        sol = [res.basic_values.get(j, F(0)) for j in range(n)]
        assert all(v >= 0 for v in sol)
        assert [sum(int(A[i, j]) * sol[j] for j in range(n)) for i in range(m)] == b


def test_phase_one_infeasible_dual_certificate():
    A = np.array([[1, 1], [1, 1]], dtype=np.int64)
    b = [F(1), F(2)]
    res = phase_one(A, b)
    assert not res.feasible
    y = res.dual
    assert sum(yi * bi for yi, bi in zip(y, b)) > 0
    assert all(sum(y[i] * int(A[i, j]) for i in range(2)) <= 0 for j in range(2))


def test_degenerate_cycling_example():
    # Beale-style degenerate data; both rules must terminate with a correct answer
    A = np.array([[1, 0, 0, F(1, 4), -8, -1, 9],
                  [0, 1, 0, F(1, 2), -12, F(-1, 2), 3],
                  [0, 0, 1, 0, 0, 1, 0]], dtype=object) * 4
    A = A.astype(np.int64)
    b = [F(0), F(0), F(4)]
    for rule in ("hybrid", "bland"):
        res = phase_one(A, b, rule=rule)
        assert res.feasible
        sol = [res.basic_values.get(j, F(0)) for j in range(7)]
        assert [sum(int(A[i, j]) * sol[j] for j in range(7)) for i in range(3)] == b
