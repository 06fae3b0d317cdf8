"""
Brute-force cross-checks
========================
"""

import math
import random
from fractions import Fraction

from democratic_translates import (
    PsiTable,
    SubsetGamma,
    coset_characterization_bruteforce,
    enumerate_subgroups,
    make_group,
    parseval_check,
    pi_ratio,
    qbinomial,
)

# Subgroup counts of Z_2^n against Gaussian binomials
for n in range(5):
    row = [qbinomial(n, k, 2) for k in range(n + 1)]
    print(f"Z_2^{n}: {len(enumerate_subgroups(make_group([2] * n)))} subgroups, q-binomial row {row}")

# Parseval on a random rational psi
rng = random.Random(1)
g = make_group([2, 4])
psi = PsiTable(g, [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in g])
gamma = SubsetGamma(g, (0, 1, 5))
res = parseval_check(psi, gamma)
print(f"\nParseval on Z_2+Z_4: lhs={res.lhs} rhs={res.rhs}")

# Coset characterization
for orders in ([2, 2, 2], [6]):
    print(f"0/1 autocorrelation <=> coset on {orders}:", coset_characterization_bruteforce(make_group(orders)))

# The pi constant
print("\n   n   subset max   ratio")
for n in (1, 2, 5, 10, 100, 1000):
    r = pi_ratio(n)
    print(f"{n:4d}  {r.subset_max:11.6f}  {r.ratio:.6f}")
print(f"1/pi = {1 / math.pi:.6f}")
