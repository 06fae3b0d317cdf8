"""
One convex identity, three ways
===============================

On Z_2 + Z_2 the set {0,1,2} has autocorrelation (1, 2/3, 2/3, 2/3), which
sits between the vectors of {0} and of the whole group.
"""

from fractions import Fraction

from democratic_translates import autocorr_vector, lp_convex_membership, make_group, subset
from democratic_translates.formats import format_rational

g = make_group([2, 2])
v = {elems: autocorr_vector(subset(g, elems)).entries for elems in [(0,), (0, 1, 2), (0, 1, 2, 3)]}
for elems, entries in v.items():
    print(f"v{elems} =", [format_rational(x) for x in entries])

# by hand
combo = [Fraction(1, 3) * a + Fraction(2, 3) * b for a, b in zip(v[(0,)], v[(0, 1, 2, 3)])]
print("\n1/3 v(0,) + 2/3 v(0,1,2,3) == v(0,1,2):", tuple(combo) == v[(0, 1, 2)])

# by the exact LP
res = lp_convex_membership(v[(0, 1, 2)], [v[(0,)], v[(0, 1, 2, 3)]])
print("LP weights:", [format_rational(w) for w in res.weights])

# and the other way round: a subgroup vector can be separated from everything else
others = [autocorr_vector(subset(g, e)).entries for e in [(0,), (0, 1), (0, 2), (0, 1, 2), (0, 1, 2, 3)]]
res = lp_convex_membership(autocorr_vector(subset(g, (0, 3))).entries, others)
print("\nv(0,3) in hull of the rest?", res.feasible)
print("separating functional:", [format_rational(a) for a in res.functional], "offset", format_rational(res.offset))
