"""Closed-form decomposability and positivity criteria, thresholds and region labels.

Irrational thresholds come back as a float together with an exact rational
bracket; the brackets are found by bisection on exact sign evaluations.

For equal parameters the n = m = 1 criterion reads
``-((2d+4)/(d+1)) p^2 + 4p - 1 >= 0``.  With ``s = sqrt(2d/(d+1))`` the
leading coefficient is ``4 - s^2``, so the smaller root is
``(2 - s)/((2 - s)(2 + s)) = 1/(2 + s)``.  Dividing the n-fold criterion by
``p^(2n)`` and writing ``r = ((1-p)/p)^n`` gives ``(d-1)/(d+1) + 2r - r^2``,
negative exactly when ``r > 1 + s``; hence the analytic n-fold bound.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import sqrt

from ._rational import as_fraction
from .lp import is_decomposable_werner
from .werner import _check_dim, p_to_t


class RegionClass(Enum):
    NOT_POSITIVE = "NotPositive"
    POSITIVE_NON_DECOMPOSABLE = "PositiveNonDecomposable"
    DECOMPOSABLE = "Decomposable"


@dataclass(frozen=True)
class Bracket:
    value: float
    lower: Fraction
    upper: Fraction

    @property
    def width(self):
        return self.upper - self.lower


@dataclass(frozen=True)
class ThresholdResult:
    """LP threshold bracket: non-decomposable at ``lower``, decomposable at ``upper``."""

    n: int
    d: int
    lower: Fraction
    upper: Fraction

    @property
    def width(self):
        return self.upper - self.lower

    @property
    def midpoint(self):
        return (self.lower + self.upper) / 2


def _s(d):
    return sqrt(2 * d / (d + 1))


def n1m1_criterion(d, p1, p2):
    """Sign decides decomposability of W_p1 (x) (theta o W_p2); zero counts as decomposable."""
    d = _check_dim(d)
    p1, p2 = as_fraction(p1), as_fraction(p2)
    return (Fraction(d - 1, d + 1) * p1 * p2 + (1 - p1) * p2 + p1 * (1 - p2)
            - (1 - p1) * (1 - p2))


def analytic_criterion(n, d, p1, p2):
    """n-fold generalization; negative values certify non-decomposability."""
    d = _check_dim(d)
    p1, p2 = as_fraction(p1), as_fraction(p2)
    return (Fraction(d - 1, d + 1) * p1**n * p2**n + (1 - p1)**n * p2**n
            + p1**n * (1 - p2)**n - (1 - p1)**n * (1 - p2)**n)


def analytic_nondecomp(n, d, p1, p2):
    return analytic_criterion(n, d, p1, p2) < 0


def _bisect_sign(f, lo, hi, tol):
    """Shrink [lo, hi] with f(lo) < 0 <= f(hi) until its width is at most tol."""
    lo, hi = Fraction(lo), Fraction(hi)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def threshold_n1(d, tol=Fraction(1, 10**10)):
    """``1/(2 + sqrt(2d/(d+1)))`` with an exact bracket from the rational criterion."""
    d = _check_dim(d)
    lo, hi = _bisect_sign(lambda p: n1m1_criterion(d, p, p), 0, Fraction(1, 2), tol)
    return Bracket(1 / (2 + _s(d)), lo, hi)


def analytic_threshold(n, d):
    """``1/(1 + (1 + sqrt(2d/(d+1)))^(1/n))``; below it the n-fold map is not decomposable."""
    if n < 1:
        raise ValueError("n must be >= 1")
    d = _check_dim(d)
    return 1 / (1 + (1 + _s(d)) ** (1 / n))


def analytic_threshold_limit(n):
    """Large-d limit ``1/(1 + (1 + sqrt 2)^(1/n))``."""
    return 1 / (1 + (1 + sqrt(2)) ** (1 / n))


def quantitative_bound(n, d):
    """Lower bound on max(mu(P), mu(theta o P)) for an n-tensor-stable decomposable P."""
    if n < 2:
        raise ValueError("quantitative bound needs n >= 2")
    d = _check_dim(d)
    return 2 / (1 + (1 + _s(d)) ** (1 / (n // 2))) - 1


def positivity_value(d, p1, p2):
    """``2 - t1 t2 - (t1 + t2)`` with ``t_i = p_to_t(d, p_i)``; >= 0 iff positive."""
    t1, t2 = p_to_t(d, p1), p_to_t(d, p2)
    return 2 - t1 * t2 - (t1 + t2)


def positivity_criterion(d, p1, p2):
    """Positivity of W_p1 (x) (theta o W_p2)."""
    return positivity_value(d, p1, p2) >= 0


def positivity_threshold_equal(d):
    """Equal-parameter positivity edge ``(2 - sqrt 3)(d+1) / (2(d+1-sqrt 3))``."""
    d = _check_dim(d)
    return (2 - sqrt(3)) * (d + 1) / (2 * (d + 1 - sqrt(3)))


def nondecomposable_interval(d):
    """Equal-parameter interval [positivity edge, decomposability edge); empty if reversed."""
    return positivity_threshold_equal(d), 1 / (2 + _s(d))


def classify_region(d, p1, p2):
    if not positivity_criterion(d, p1, p2):
        return RegionClass.NOT_POSITIVE
    if n1m1_criterion(d, p1, p2) >= 0:
        return RegionClass.DECOMPOSABLE
    return RegionClass.POSITIVE_NON_DECOMPOSABLE


def lp_threshold(n, d, tol=Fraction(1, 10**6)):
    """Bracket the LP decomposability threshold of W_p^{(x)n} (x) (theta o W_p)^{(x)n}.

    Bisection starts from [0, 1/2]; each midpoint reuses the previous optimal
    tableau since only the objective depends on p.
    """
    d = _check_dim(d)
    tol = as_fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    lo, hi = Fraction(0), Fraction(1, 2)
    warm = None
    while hi - lo > tol:
        mid = (lo + hi) / 2
        dec = is_decomposable_werner(n, n, d, mid, mid, warm_start=warm)
        warm = dec.outcome
        if dec.decomposable:
            hi = mid
        else:
            lo = mid
    return ThresholdResult(n, d, lo, hi)
