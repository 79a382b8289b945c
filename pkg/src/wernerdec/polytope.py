"""Feasible set of the n = m = 1 program in coordinates Q = [[x, y], [1-x-y-z, z]].

Each halfspace is ``a . point >= rhs`` with exact rational data.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from ._rational import as_fraction
from .symmetric import alpha


@dataclass(frozen=True)
class Halfspace:
    coeffs: tuple
    rhs: Fraction

    def slack(self, point):
        return sum(a * x for a, x in zip(self.coeffs, point)) - self.rhs

    def holds(self, point):
        return self.slack(point) >= 0


@dataclass(frozen=True)
class HalfspaceSystem:
    rows: tuple
    d: int

    def contains(self, point):
        return all(h.holds(point) for h in self.rows)

    def active(self, point):
        return [i for i, h in enumerate(self.rows) if h.slack(point) == 0]


def _h(coeffs, rhs):
    return Halfspace(tuple(Fraction(c) for c in coeffs), Fraction(rhs))


def build_system(d):
    """The eight inequalities equivalent to positivity and PPT of H_Q at n = m = 1."""
    a = alpha(d)
    return HalfspaceSystem((
        _h((1, -1, 0), 0),               # x - y >= 0
        _h((1, a, 0), 0),                # x + a y >= 0
        _h((0, 1, -1), 0),               # y - z >= 0
        _h((0, 1, a), 0),                # y + a z >= 0
        _h((-1, -1, -2), -1),            # 1 - x - y - 2z >= 0
        _h((-1, -1, a - 1), -1),         # 1 - x - y + (a-1) z >= 0
        _h((2, 1, 1), 1),                # 2x + y + z >= 1
        _h((-(a - 1), -a, -a), -a),      # -(a-1) x - a (y + z) >= -a
    ), d)


def q_from_point(point):
    x, y, z = (as_fraction(c) for c in point)
    return np.array([[x, y], [1 - x - y - z, z]], dtype=object)


def point_from_q(Q):
    return (Fraction(Q[0, 0]), Fraction(Q[0, 1]), Fraction(Q[1, 1]))


def _solve(A, b):
    """Exact Gaussian solve of a small square system; None if singular."""
    M = [list(r) + [v] for r, v in zip(A, b)]
    k = len(M)
    for c in range(k):
        r = next((r for r in range(c, k) if M[r][c] != 0), None)
        if r is None:
            return None
        M[c], M[r] = M[r], M[c]
        piv = M[c][c]
        M[c] = [v / piv for v in M[c]]
        for r in range(k):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [u - f * v for u, v in zip(M[r], M[c])]
    return tuple(M[i][k] for i in range(k))


def enumerate_vertices(system):
    """Vertices by intersecting every subset of ``dim`` hyperplanes; sorted, deduplicated."""
    dim = len(system.rows[0].coeffs)
    found = set()
    for subset in combinations(system.rows, dim):
        pt = _solve([h.coeffs for h in subset], [h.rhs for h in subset])
        if pt is not None and system.contains(pt):
            found.add(pt)
    return sorted(found)


def extreme_points(d):
    """Closed-form list of the five extreme points; the first is the scaled ``canonical_q(1, d)``."""
    c = Fraction(1, 2 * (d + 2))
    return [
        (c * (d + 1), c * (d + 1), -c * (d - 1)),
        (Fraction(1), Fraction(0), Fraction(0)),
        (Fraction(1, 4),) * 3,
        (Fraction(1, 2), Fraction(0), Fraction(0)),
        (Fraction(1, 2), Fraction(1, 2), Fraction(0)),
    ]


def _normalize(h):
    """Scale a halfspace so its first nonzero entry has absolute value one."""
    lead = next(abs(v) for v in (*h.coeffs, h.rhs) if v != 0)
    return Halfspace(tuple(v / lead for v in h.coeffs), h.rhs / lead)


def plane_section(d):
    """Restrict the system to the plane y = (1 - x - z)/2, in (x, z) coordinates.

    Substitution collapses the eight rows onto four distinct halfspaces,
    returned in the order ``3x + z >= 1``, ``-x - 3z >= -1``,
    ``(2-a) x - a z >= -a`` and ``-x + (2a-1) z >= -1``.
    """
    seen = []
    for h in build_system(d).rows:
        ax, ay, az = h.coeffs
        # a_x x + a_y (1-x-z)/2 + a_z z >= rhs
        sub = Halfspace((ax - ay / 2, az - ay / 2), h.rhs - ay / 2)
        sub = _normalize(sub)
        if sub not in seen:
            seen.append(sub)
    a = alpha(d)
    order = [
        _normalize(_h((3, 1), 1)),
        _normalize(_h((-1, -3), -1)),
        _normalize(_h((2 - a, -a), -a)),
        _normalize(_h((-1, 2 * a - 1), -1)),
    ]
    if sorted(seen, key=repr) != sorted(order, key=repr):
        raise ArithmeticError("plane substitution did not reproduce the reduced system")
    return HalfspaceSystem(tuple(order), d)


def plane_point(point):
    """Project (x, y, z) on the plane to its (x, z) coordinates."""
    x, _, z = point
    return (x, z)
