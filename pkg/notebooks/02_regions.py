"""
Positive but not decomposable: the (p1, p2) plane
==================================================

W_p1 (x) (theta o W_p2) is classified into three regions. The middle class,
positive yet not decomposable, is what we are after.
"""

from fractions import Fraction

import numpy as np

from wernerdec import RegionClass, classify_region
from wernerdec.bounds import nondecomposable_interval

grid = 101
labels = list(RegionClass)

for d in (2, 3, 10, 100):
    counts = np.zeros(len(labels), dtype=int)
    for i in range(grid):
        for j in range(grid):
            cls = classify_region(d, Fraction(i, grid - 1), Fraction(j, grid - 1))
            counts[labels.index(cls)] += 1
    print(d, dict(zip((c.value for c in labels), counts.tolist())))

# Along the diagonal p1 = p2 the middle class is a half-open interval.
for d in (2, 3, 10, 100):
    lo, hi = nondecomposable_interval(d)
    width = max(0.0, hi - lo)
    print(f"d={d:>3}: [{lo:.6f}, {hi:.6f})  width {width:.6f}")

# For d = 2 the two endpoints coincide, so the region is empty; the width
# grows with d.
