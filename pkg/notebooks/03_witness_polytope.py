"""
Where the one-copy LP attains its minimum
=========================================

With n = m = 1 the feasible Q form a 3-dimensional polytope with five
vertices. The optimum always sits on one of them; which one depends on p.
"""

from fractions import Fraction

from wernerdec.lp import is_decomposable_werner
from wernerdec.polytope import build_system, enumerate_vertices, extreme_points, point_from_q

d = 3
verts = enumerate_vertices(build_system(d))
print("vertices:", [tuple(str(x) for x in v) for v in verts])
assert verts == sorted(extreme_points(d))

names = {v: f"vertex {i + 1}" for i, v in enumerate(extreme_points(d))}
for k in range(0, 11):
    p = Fraction(k, 20)
    dec = is_decomposable_werner(1, 1, d, p, p)
    print(f"p={str(p):>5}  value={str(dec.value):>14}  at {names[point_from_q(dec.outcome.witness_q)]}")

# For small p the optimum is the first vertex, the only one with a negative
# entry; its value changes sign at the threshold, and for larger p the
# optimum moves to another vertex.
