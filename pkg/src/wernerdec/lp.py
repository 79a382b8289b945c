"""Exact linear program deciding decomposability of W_p1^{(x)n} (x) (theta o W_p2)^{(x)m}.

The program minimises ``<v^n_p1| Q |v^m_p2>`` over real ``(n+1)x(m+1)``
matrices ``Q`` with ``Q V^m_d >= 0``, ``Q^T V^n_d >= 0`` entrywise and
``sum(Q) = 1``.  The map is decomposable iff the minimum is ``>= 0``.

The solver substitutes ``Y = Q V^m_d`` (V is invertible), which turns the free
variables into nonnegative ones:

    minimise   c'.Y
    subject to G Y - s = 0,   r.Y = 1,   Y, s >= 0

and runs a dense two-phase tableau simplex in exact rationals with Bland's
rule.  The feasible region does not depend on ``(p1, p2)``, so an optimal
tableau from one solve is a valid primal-feasible start for the next.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import numpy as np

try:
    from gmpy2 import mpq as _num
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _num = Fraction

from ._rational import as_fraction
from .symmetric import v_matrix, v_vector
from .werner import _check_dim


class Status(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPInstance:
    n: int
    m: int
    d: int
    p1: Fraction
    p2: Fraction
    v1: np.ndarray  # v^n_{p1}
    v2: np.ndarray  # v^m_{p2}
    v_m: np.ndarray  # V^m_d, positivity system Q V^m_d >= 0
    v_n: np.ndarray  # V^n_d, PPT system Q^T V^n_d >= 0

    @property
    def num_variables(self):
        return (self.n + 1) * (self.m + 1)

    @property
    def num_constraints(self):
        """Inequalities of both systems plus the normalization."""
        return 2 * self.num_variables + 1

    @property
    def objective(self):
        """Coefficients ``c[k, l] = v1[k] * v2[l]``."""
        return np.outer(self.v1, self.v2)

    def constraint_values(self, Q):
        """``(Q V^m_d, Q^T V^n_d, sum(Q))`` for a candidate Q."""
        Q = np.asarray(Q, dtype=object)
        return Q @ self.v_m, Q.T @ self.v_n, sum(Q.ravel())

    def is_feasible(self, Q):
        pos, ppt, total = self.constraint_values(Q)
        return (all(x >= 0 for x in pos.ravel()) and all(x >= 0 for x in ppt.ravel())
                and total == 1)

    def evaluate(self, Q):
        Q = np.asarray(Q, dtype=object)
        return Fraction(self.v1 @ Q @ self.v2)


@dataclass(frozen=True)
class LPOutcome:
    status: Status
    value: Fraction | None = None
    witness_q: np.ndarray | None = None
    pivots: int = 0
    _tableau: object = field(default=None, repr=False, compare=False)


def build_lp(n, m, d, p1, p2):
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    d = _check_dim(d)
    p1, p2 = as_fraction(p1), as_fraction(p2)
    for p in (p1, p2):
        if not 0 <= p <= 1:
            raise ValueError(f"Werner parameter must lie in [0, 1], got {p}")
    return LPInstance(n, m, d, p1, p2, v_vector(n, p1, d), v_vector(m, p2, d),
                      v_matrix(m, d), v_matrix(n, d))


def _inverse(M):
    """Exact inverse of a square object-array matrix by Gauss-Jordan elimination."""
    size = M.shape[0]
    A = [[Fraction(M[i, j]) for j in range(size)] + [Fraction(int(i == j)) for j in range(size)]
         for i in range(size)]
    for c in range(size):
        r = next((r for r in range(c, size) if A[r][c] != 0), None)
        if r is None:
            raise ZeroDivisionError("matrix is singular")
        A[c], A[r] = A[r], A[c]
        piv = A[c][c]
        A[c] = [x / piv for x in A[c]]
        for r in range(size):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    out = np.empty((size, size), dtype=object)
    for i in range(size):
        out[i, :] = A[i][size:]
    return out


class _Tableau:
    """Dense simplex tableau ``T x = b`` with an explicit basis.

    Columns ``0..N-1`` are Y (row-major over (k, w)), ``N..2N-1`` the PPT
    slacks, and ``2N`` the phase-one artificial variable.
    """

    def __init__(self, rows, rhs, basis):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.pivots = 0

    def copy(self):
        t = _Tableau([r[:] for r in self.rows], self.rhs[:], self.basis[:])
        return t

    def pivot(self, r, e, z=None):
        """Pivot on (r, e); ``z`` is an optional reduced-cost row updated alongside."""
        row = self.rows[r]
        piv = row[e]
        if piv != 1:
            inv = 1 / piv
            row = [x * inv for x in row]
            self.rows[r] = row
            self.rhs[r] = self.rhs[r] * inv
        nz = [j for j, x in enumerate(row) if x != 0]
        b = self.rhs[r]
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            f = other[e]
            if f == 0:
                continue
            for j in nz:
                other[j] -= f * row[j]
            self.rhs[i] -= f * b
        if z is not None and z[e] != 0:
            f = z[e]
            for j in nz:
                z[j] -= f * row[j]
        self.basis[r] = e
        self.pivots += 1

    def reduced_costs(self, cost):
        z = list(cost)
        for c, row in zip((cost[j] for j in self.basis), self.rows):
            if c != 0:
                for j, x in enumerate(row):
                    if x != 0:
                        z[j] -= c * x
        return z

    def minimize(self, cost, allowed):
        """Bland's-rule primal simplex over columns in ``allowed``; returns a Status."""
        z = self.reduced_costs(cost)
        allowed = sorted(allowed)
        while True:
            basic = set(self.basis)
            entering = next((j for j in allowed if j not in basic and z[j] < 0), None)
            if entering is None:
                return Status.OPTIMAL
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    key = (self.rhs[i] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return Status.UNBOUNDED
            self.pivot(best[1], entering, z)

    def solution(self, ncols):
        x = [_num(0)] * ncols
        for i, j in enumerate(self.basis):
            x[j] = self.rhs[i]
        return x


class _Problem:
    """Y-space data for one ``(n, m, d)``; independent of the Werner parameters."""

    _cache = {}

    def __init__(self, n, m, d):
        self.n, self.m, self.d = n, m, d
        V_m, V_n = v_matrix(m, d), v_matrix(n, d)
        self.V_m_inv = _inverse(V_m)
        N = (n + 1) * (m + 1)
        self.N = N
        idx = [(k, w) for k in range(n + 1) for w in range(m + 1)]
        self.idx = idx
        # PPT row (j, i): sum_{k,w} Y[k,w] Vinv[w, j] V_n[k, i]
        G = []
        for j in range(m + 1):
            for i in range(n + 1):
                G.append([_num(self.V_m_inv[w, j] * V_n[k, i]) for (k, w) in idx])
        self.G = G
        ones = self.V_m_inv @ np.array([Fraction(1)] * (m + 1), dtype=object)
        self.r = [_num(ones[w]) for (_, w) in idx]
        self._feasible = None

    @classmethod
    def get(cls, n, m, d):
        key = (n, m, d)
        if key not in cls._cache:
            cls._cache[key] = cls(n, m, d)
        return cls._cache[key]

    def feasible_tableau(self):
        """Phase one, cached: a primal-feasible basis without the artificial column."""
        if self._feasible is not None:
            return self._feasible.copy()
        N = self.N
        ncols = 2 * N + 1
        zero, one = _num(0), _num(1)
        rows, rhs, basis = [], [], []
        for i, g in enumerate(self.G):
            # -G_i Y + s_i = 0 keeps s_i basic at zero
            row = [-x for x in g] + [zero] * (N + 1)
            row[N + i] = one
            rows.append(row)
            rhs.append(zero)
            basis.append(N + i)
        rows.append(self.r[:] + [zero] * N + [one])
        rhs.append(one)
        basis.append(2 * N)
        t = _Tableau(rows, rhs, basis)
        cost = [zero] * (2 * N) + [one]
        t.minimize(cost, range(ncols))
        if 2 * N in t.basis:
            r = t.basis.index(2 * N)
            if t.rhs[r] != 0:
                raise RuntimeError("phase one found no feasible point")
            e = next((j for j in range(2 * N) if t.rows[r][j] != 0), None)
            if e is None:
                raise RuntimeError("redundant normalization row")
            t.pivot(r, e)
        self._feasible = t
        return t.copy()

    def cost(self, c):
        """Objective in Y-space: ``c'[k,w] = sum_l c[k,l] Vinv[w,l]``."""
        CV = c @ self.V_m_inv.T
        return [_num(CV[k, w]) for (k, w) in self.idx] + [_num(0)] * (self.N + 1)

    def q_from_y(self, y):
        Y = np.empty((self.n + 1, self.m + 1), dtype=object)
        for (k, w), val in zip(self.idx, y):
            Y[k, w] = as_fraction(val)
        return Y @ self.V_m_inv


class _SymmetricProblem:
    """Reduced program for ``n = m`` and ``p1 = p2``.

    Transposition maps the feasible set onto itself and fixes the objective
    there, so ``(Q + Q^T)/2`` is optimal whenever ``Q`` is.  Restricting to
    symmetric Q makes the PPT system a copy of the positivity system; in
    Y-space the program is

        minimise   c'.Y
        subject to (Y W)[i, j] - (Y W)[j, i] = 0  (i < j),   r.Y = 1,   Y >= 0

    with ``W = (V^n_d)^-1``.  Phase one attaches an artificial to every row.
    """

    _cache = {}

    def __init__(self, n, d):
        self.n, self.d = n, d
        W = _inverse(v_matrix(n, d))
        self.V_m_inv = W
        size = n + 1
        self.N = size * size
        self.idx = [(k, w) for k in range(size) for w in range(size)]
        rows = []
        for i in range(size):
            for j in range(i + 1, size):
                row = [_num(0)] * self.N
                for w in range(size):
                    row[i * size + w] += _num(W[w, j])
                    row[j * size + w] -= _num(W[w, i])
                rows.append(row)
        ones = W @ np.array([Fraction(1)] * size, dtype=object)
        rows.append([_num(ones[w]) for (_, w) in self.idx])
        self.E = rows
        self._feasible = None

    @classmethod
    def get(cls, n, d):
        key = (n, d)
        if key not in cls._cache:
            cls._cache[key] = cls(n, d)
        return cls._cache[key]

    def feasible_tableau(self):
        if self._feasible is not None:
            return self._feasible.copy()
        N, R = self.N, len(self.E)
        zero, one = _num(0), _num(1)
        rows, rhs = [], []
        for i, e in enumerate(self.E):
            art = [zero] * R
            art[i] = one
            rows.append(e[:] + art)
            rhs.append(one if i == R - 1 else zero)
        t = _Tableau(rows, rhs, list(range(N, N + R)))
        t.minimize([zero] * N + [one] * R, range(N + R))
        if any(t.rhs[i] != 0 for i, j in enumerate(t.basis) if j >= N):
            raise RuntimeError("phase one found no feasible point")
        # drive zero-level artificials out; rows with no real entry are redundant
        keep = []
        for i in range(R):
            if t.basis[i] >= N:
                e = next((j for j in range(N) if t.rows[i][j] != 0), None)
                if e is None:
                    continue
                t.pivot(i, e)
            keep.append(i)
        t = _Tableau([t.rows[i][:N] for i in keep], [t.rhs[i] for i in keep],
                     [t.basis[i] for i in keep])
        self._feasible = t
        return t.copy()

    def cost(self, c):
        CV = c @ self.V_m_inv.T
        return [_num(CV[k, w]) for (k, w) in self.idx]

    q_from_y = _Problem.q_from_y

    @property
    def m(self):
        return self.n


def solve_lp(inst, warm_start=None, symmetric=None):
    """Solve an :class:`LPInstance` exactly.

    ``warm_start`` may be a previous :class:`LPOutcome` for the same
    ``(n, m, d)``; its optimal basis seeds phase two.
    """
    eligible = inst.n == inst.m and inst.p1 == inst.p2
    if symmetric is None:
        symmetric = eligible
    elif symmetric and not eligible:
        raise ValueError("the symmetric reduction needs n == m and p1 == p2")
    if symmetric:
        prob = _SymmetricProblem.get(inst.n, inst.d)
        ncols = prob.N
    else:
        prob = _Problem.get(inst.n, inst.m, inst.d)
        ncols = 2 * prob.N
    key = (inst.n, inst.m, inst.d, symmetric)
    if (warm_start is not None and warm_start._tableau is not None
            and warm_start._tableau[0] == key):
        t = warm_start._tableau[1].copy()
    else:
        t = prob.feasible_tableau()
    t.pivots = 0
    cost = prob.cost(inst.objective)
    cost = cost[:ncols] + [_num(0)] * (len(t.rows[0]) - ncols)
    status = t.minimize(cost, range(ncols))
    if status is not Status.OPTIMAL:
        return LPOutcome(status, pivots=t.pivots)
    x = t.solution(len(t.rows[0]))
    Q = prob.q_from_y(x[:prob.N])
    if not inst.is_feasible(Q):
        raise ArithmeticError("simplex returned an infeasible witness")
    value = inst.evaluate(Q)
    return LPOutcome(Status.OPTIMAL, value, Q, t.pivots, (key, t))


@dataclass(frozen=True)
class Decision:
    decomposable: bool
    value: Fraction
    boundary: bool
    outcome: LPOutcome


def is_decomposable_werner(n, m, d, p1, p2, warm_start=None, symmetric=None):
    """Exact verdict; an optimal value of exactly zero counts as decomposable."""
    out = solve_lp(build_lp(n, m, d, p1, p2), warm_start, symmetric)
    if out.status is not Status.OPTIMAL:
        raise RuntimeError(f"LP construction error: solver returned {out.status.value}")
    return Decision(out.value >= 0, out.value, out.value == 0, out)


def pairing_scale(n, m, d):
    """Positive factor relating the trace pairing to the LP objective."""
    return Fraction(2 ** (n + m), d ** (n + m) * (d + 1) ** (n + m))


def pairing_closed_form(n, m, d, p1, p2, Q):
    """``2^(n+m) / (d(d+1))^(n+m) * <v^n_p1| Q |v^m_p2>``, exactly."""
    Q = np.asarray(Q, dtype=object)
    return pairing_scale(n, m, d) * Fraction(v_vector(n, p1, d) @ Q @ v_vector(m, p2, d))
