"""
mu of Werner maps and the symmetrization interval
=================================================

mu(P) is the smallest generalized eigenvalue of (C_P, I (x) P(1)). For a
completely positive map it is nonnegative; composing with the transpose can
push it down to -1.
"""

from fractions import Fraction

from wernerdec import MapDescriptor, mu_of_map, quantitative_bound
from wernerdec.mu import symmetrization_interval

d = 2
for k in range(0, 11, 2):
    p = Fraction(k, 10)
    plain = mu_of_map(MapDescriptor.werner(d, p))
    flipped = MapDescriptor.werner(d, p, transposed=True)
    print(f"p={float(p):.1f}  mu(W)={plain:+.4f}  mu(theta W)={mu_of_map(flipped):+.4f}"
          f"  interval={symmetrization_interval(flipped)}")

# Any n-tensor-stable decomposable map has max(mu(P), mu(theta o P)) above
# this bound, which tends to 0 from below.
for n in (2, 4, 8, 16, 64):
    print(n, round(quantitative_bound(n, d), 6))
