"""
Subgroups are not enough
========================

On the truncated Pruefer 2-group Z_{2^N}, N = 2n - 1, take p equal to 1 on
the even annuli of the dual chain. Every subgroup M_m sees a functional value
near 2/3 or 1/3, while the sumset Gamma_n = {0,s_1} + {0,s_3} + ... gets
at most 2^(1-n).
"""

from democratic_translates import build_counterexample
from democratic_translates.formats import format_rational

for n in range(1, 6):
    rep = build_counterexample(n)
    print(f"n={n}  N={rep.level}  |Gamma_n|={rep.gamma.cardinality}")
    print("   annulus integrals:", {i: format_rational(x) for i, x in rep.annulus_integrals.items()})
    print("   subgroup values:  ", " ".join(format_rational(x) for x in rep.subgroup_values))
    print(f"   Gamma_n value: {format_rational(rep.gamma_value)}  (bound {format_rational(rep.bound)})")

# M_N is the whole truncated group and has value 0 here: at odd N the tail
# point carries p = 0. The subgroups well inside the chain stay near 1/3 and 2/3.
