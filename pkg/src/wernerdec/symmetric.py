"""Exact combinatorics of the permutation- and twirl-symmetric family H_Q.

``H_Q = sum_{k,l} Q[k,l] F(k,l)`` lives on ``(C^d (x) C^d)^{(x)(n+m)}``; the
first ``n`` pairs carry symmetric/antisymmetric projectors and the last ``m``
pairs their partial transposes.  Positivity and PPT of ``H_Q`` reduce to sign
conditions on ``Q @ V(m, d)`` and ``Q.T @ V(n, d)``.

Rational matrices are numpy object arrays holding :class:`fractions.Fraction`
entries, so ``@``, ``.T`` and slicing keep exact arithmetic.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from ._rational import as_fraction
from .werner import _check_dim, d_asym, d_sym


class ShapeError(ValueError):
    pass


def rational_matrix(rows):
    """Object array of Fractions from nested sequences of exact numbers."""
    arr = np.array(rows, dtype=object)
    flat = [as_fraction(x) for x in arr.ravel()]
    out = np.empty(arr.shape, dtype=object)
    out.ravel()[:] = flat
    return out


def alpha(d):
    """(d+1)/(d-1)."""
    d = _check_dim(d)
    return Fraction(d + 1, d - 1)


def v_matrix(m, d):
    """The (m+1)x(m+1) matrix V^m_d; 1-based entry (a, b) is

    ``(-1)^(a-1) sum_t C(a-1,t) C(m-a+1, b-t-1) (-(d+1)/(d-1))^t``.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    neg_alpha = -alpha(d)
    V = np.empty((m + 1, m + 1), dtype=object)
    for a in range(1, m + 2):
        sign = -1 if (a - 1) % 2 else 1
        for b in range(1, m + 2):
            lo, hi = max(0, a + b - m - 2), min(a - 1, b - 1)
            s = sum(comb(a - 1, t) * comb(m - a + 1, b - t - 1) * neg_alpha**t
                    for t in range(lo, hi + 1))
            V[a - 1, b - 1] = sign * Fraction(s)
    return V


def v_vector(n, p, d):
    """Entries ``alpha^(k-1) (1-p)^(k-1) p^(n-k+1)`` for k = 1..n+1."""
    p = as_fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    a = alpha(d)
    v = np.empty(n + 1, dtype=object)
    for k in range(n + 1):
        v[k] = a**k * (1 - p)**k * p**(n - k)
    return v


def _check_q(Q, n, m):
    Q = np.asarray(Q, dtype=object)
    if Q.shape != (n + 1, m + 1):
        raise ShapeError(f"Q must be {(n + 1, m + 1)}, got {Q.shape}")
    return Q


def eigen_multiplicity(n, m, d, k, w):
    """Degeneracy of the eigenvalue indexed by (k, w) in the product eigenbasis."""
    return (comb(n, k - 1) * d_sym(d) ** (n - k + 1) * d_asym(d) ** (k - 1)
            * comb(m, w) * (d * d - 1) ** w)


@dataclass(frozen=True)
class SpectrumTable:
    """Eigenvalues of H_Q indexed by k = 1..n+1 (rows) and w = 0..m (columns).

    ``k - 1`` counts antisymmetric factors among the first n pairs; ``w`` counts
    factors among the last m pairs orthogonal to the maximally entangled vector.
    """

    n: int
    m: int
    d: int
    values: np.ndarray

    def value(self, k, w):
        return self.values[k - 1, w]

    def multiplicity(self, k, w):
        return eigen_multiplicity(self.n, self.m, self.d, k, w)

    def multiset(self):
        """Sorted list of (eigenvalue, multiplicity), equal values merged."""
        acc = {}
        for k in range(1, self.n + 2):
            for w in range(self.m + 1):
                v = self.values[k - 1, w]
                acc[v] = acc.get(v, 0) + self.multiplicity(k, w)
        return sorted(acc.items())

    def as_float_array(self):
        """Every eigenvalue repeated by multiplicity, sorted ascending."""
        out = []
        for v, mult in self.multiset():
            out.extend([float(v)] * mult)
        return np.array(out)


def hq_spectrum(Q, n, m, d):
    Q = _check_q(Q, n, m)
    d = _check_dim(d)
    QV = Q @ v_matrix(m, d)
    vals = np.empty((n + 1, m + 1), dtype=object)
    for k in range(1, n + 2):
        for w in range(m + 1):
            denom = (comb(n, k - 1) * comb(m, w) * d_sym(d) ** (n - k + 1)
                     * d_asym(d) ** (k - 1) * d**m * (d + 1) ** w)
            vals[k - 1, w] = Fraction(QV[k - 1, w]) / denom
    return SpectrumTable(n, m, d, vals)


def is_hq_positive(Q, n, m, d):
    Q = _check_q(Q, n, m)
    return all(x >= 0 for x in (Q @ v_matrix(m, d)).ravel())


def is_hq_ppt(Q, n, m, d):
    Q = _check_q(Q, n, m)
    return all(x >= 0 for x in (Q.T @ v_matrix(n, d)).ravel())


def canonical_q(n, d):
    """Sparse feasible point generalising the n = 1 extreme point Q_1.

    Nonzero only at the four corners; ``Q @ V(n, d)`` vanishes outside the first
    and last rows.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    d = _check_dim(d)
    Q = np.full((n + 1, n + 1), Fraction(0), dtype=object)
    Q[0, 0] = Fraction((d - 1) * (d + 1) ** (2 * n))
    Q[n, 0] = Q[0, n] = Fraction((d - 1) ** n * (d + 1) ** (n + 1))
    Q[n, n] = Fraction(-((d - 1) ** (2 * n)) * (d + 1))
    return Q


def canonical_qv(n, d):
    """Closed form of ``canonical_q(n, d) @ v_matrix(n, d)``.

    Row 1 holds ``C(n,l-1) (d+1)^(n+l-1) [(d-1)(d+1)^e + (1-d)^e (d+1)]`` and
    row n+1 holds ``C(n,l-1) (d+1)^l (d-1)^n [(d+1)^e - (1-d)^e]`` with
    ``e = n-l+1``; all other rows vanish. Both brackets are nonnegative.
    """
    d = _check_dim(d)
    out = np.full((n + 1, n + 1), Fraction(0), dtype=object)
    for l in range(1, n + 2):
        e = n - l + 1
        out[0, l - 1] = Fraction(comb(n, l - 1) * (d + 1) ** (n + l - 1)
                                 * ((d - 1) * (d + 1) ** e + (1 - d) ** e * (d + 1)))
        out[n, l - 1] = Fraction(comb(n, l - 1) * (d + 1) ** l * (d - 1) ** n
                                 * ((d + 1) ** e - (1 - d) ** e))
    return out
