"""
Decomposability thresholds for equal Werner parameters
=======================================================

For each local dimension d and number of copies n we bisect the exact LP for
the smallest p at which W_p^{(x)n} (x) (theta o W_p)^{(x)n} is decomposable,
and compare it with the closed-form lower bound.
"""

from fractions import Fraction

from wernerdec import analytic_threshold, lp_threshold
from wernerdec._rational import truncate

tol = Fraction(1, 10**6)

print(f"{'d':>3} {'n':>2} {'LP':>8} {'bound':>8} {'gap':>9}")
for d in (2, 3, 10):
    for n in (1, 2, 4, 8):
        res = lp_threshold(n, d, tol)
        bound = analytic_threshold(n, d)
        gap = float(res.midpoint) - bound
        print(f"{d:>3} {n:>2} {truncate(res.lower):>8} {truncate(bound):>8} {gap:9.2e}")

# At n = 1 the bound is exact, so the gap there is only the bisection width.
# For n >= 2 the LP threshold sits strictly above the bound, and both creep
# toward 1/2 as n grows.

# The bracket is exact: just below `lower` the LP certifies non-decomposability.
res = lp_threshold(3, 2, tol)
print("bracket for n=3, d=2:", res.lower, "to", res.upper)
