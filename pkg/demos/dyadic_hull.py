"""
Autocorrelation vectors of the dyadic groups Z_2^n
==================================================

Count subsets, distinct autocorrelation vectors and extreme points of their
convex hull, then look at which subsets produce the extreme points.
"""

import sys
from collections import Counter

from democratic_translates import classify_vertices, enumerate_classes, make_group, table3
from democratic_translates.hull import PointCloud

max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 3

print("n,total,distinct,extreme")
table3(max_n, progress=lambda row: print(row.csv(), flush=True))

# Which subsets are extreme?  0/1 vectors come from subgroups (and cosets);
# for n <= 3 nothing else survives.
g = make_group([2] * max_n)
classes = enumerate_classes(g)
cloud = PointCloud.from_vectors([v for _, v in classes], [gm for gm, _ in classes])
report = classify_vertices(cloud)
zero_one = [i for i in report.extreme_indices if cloud.is_zero_one(i)]
print(f"\nZ_2^{max_n}: {report.n_extreme} extreme points, {len(zero_one)} of them 0/1 vectors")
sizes = Counter(classes.classes[i][0].cardinality for i in report.extreme_indices)
print("extreme points by |Gamma|:", dict(sorted(sizes.items())))

# A non-extreme point comes with explicit convex weights.
i = next(i for i, c in sorted(report.certificates.items()) if not c.extreme)
gamma = classes.classes[i][0]
print(f"\n{gamma.elements} is a convex combination of")
for j, w in sorted(report.certificates[i].weights.items()):
    print(f"  {w} * v{classes.classes[j][0].elements}")
