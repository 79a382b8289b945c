"""Oracle-versus-closed-form equivalence suites, run by ``wernerdec verify``.

Each suite returns a :class:`SuiteResult` with pass/fail/skip counts.  Cases
that would exceed the dense oracle's size guard are counted as skipped.
"""

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .lp import is_decomposable_werner, pairing_closed_form
from .mu import MapDescriptor, mu_of_map
from .oracle import OracleSizeError, haar_twirl_mc, hq_eigenvalues, pairing_value
from .polytope import build_system, enumerate_vertices, extreme_points, point_from_q
from .symmetric import hq_spectrum, is_hq_positive, is_hq_ppt
from .werner import twirl

SPECTRUM_TOL = 1e-9
PAIRING_TOL = 1e-9
TWIRL_TOL = 5e-2
MU_TOL = 1e-10

SPECTRUM_CASES = [(n, m, d) for d in (2, 3) for n in (1, 2, 3) for m in (1, 2, 3)
                  if n + m <= 4]


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return self.failed == 0

    def record(self, good, label=""):
        if good:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(label)

    def summary(self):
        status = "PASS" if self.ok else "FAIL"
        return (f"{self.name}: {status} (passed={self.passed} failed={self.failed} "
                f"skipped={self.skipped})")


def random_rational_q(rng, n, m, bound=9):
    Q = np.empty((n + 1, m + 1), dtype=object)
    for idx in np.ndindex(Q.shape):
        Q[idx] = Fraction(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, bound + 1)))
    return Q


def random_parameter(rng, den=97):
    return Fraction(int(rng.integers(0, den + 1)), den)


def spectrum_suite(samples=50, seed=0, tol=SPECTRUM_TOL):
    """Oracle spectra of H_Q against the closed-form table, multiplicities included."""
    res = SuiteResult("spectrum")
    rng = np.random.default_rng(seed)
    for n, m, d in SPECTRUM_CASES:
        for i in range(samples):
            Q = random_rational_q(rng, n, m)
            exact = hq_spectrum(Q, n, m, d).as_float_array()
            found = hq_eigenvalues(Q, n, m, d)
            good = len(exact) == len(found) and np.abs(exact - found).max() <= tol
            res.record(good, f"n={n} m={m} d={d} sample={i}")
    return res


def ppt_suite(samples=50, seed=1, tol=SPECTRUM_TOL):
    """Partial-transpose spectra and both sign predicates against the oracle."""
    res = SuiteResult("ppt")
    rng = np.random.default_rng(seed)
    for n, m, d in SPECTRUM_CASES:
        for i in range(samples):
            Q = random_rational_q(rng, n, m)
            # bias half the samples toward the positive cone so both verdicts occur
            if i % 2:
                Q = Q + np.full(Q.shape, Fraction(int(rng.integers(5, 40))), dtype=object)
            plain = hq_eigenvalues(Q, n, m, d)
            pt = hq_eigenvalues(Q, n, m, d, transpose=True)
            exact_pt = hq_spectrum(Q.T, m, n, d).as_float_array()
            good = (len(pt) == len(exact_pt) and np.abs(pt - exact_pt).max() <= tol
                    and is_hq_ppt(Q, n, m, d) == bool(pt.min() >= -tol)
                    and is_hq_positive(Q, n, m, d) == bool(plain.min() >= -tol))
            res.record(good, f"n={n} m={m} d={d} sample={i}")
    return res


def pairing_suite(samples=10, seed=2, tol=PAIRING_TOL):
    """Dense trace pairing against the scaled LP objective."""
    res = SuiteResult("pairing")
    rng = np.random.default_rng(seed)
    for n, m, d in SPECTRUM_CASES:
        for i in range(samples):
            Q = random_rational_q(rng, n, m)
            p1, p2 = random_parameter(rng), random_parameter(rng)
            try:
                dense = pairing_value(n, m, d, p1, p2, Q)
            except OracleSizeError:
                res.skipped += 1
                continue
            exact = float(pairing_closed_form(n, m, d, p1, p2, Q))
            res.record(abs(dense - exact) <= tol * max(1.0, abs(exact)),
                       f"n={n} m={m} d={d} sample={i}")
    return res


def random_symmetric(rng, side):
    A = rng.standard_normal((side, side))
    X = A + A.T
    return X / np.linalg.norm(X)


def twirl_suite(samples=10, seed=3, tol=TWIRL_TOL, draws=10_000):
    """Haar Monte Carlo twirl against the analytic projection, Frobenius distance."""
    res = SuiteResult("twirl")
    rng = np.random.default_rng(seed)
    for d in (2, 3):
        for i in range(samples):
            X = random_symmetric(rng, d * d)
            mc = haar_twirl_mc(X, d, draws, seed=int(rng.integers(2**31)))
            res.record(np.linalg.norm(mc - twirl(X, d)) <= tol, f"d={d} sample={i}")
    return res


def vertex_suite(grid=6):
    """Exact vertex enumeration for d = 2..10 and LP witnesses landing on vertices."""
    res = SuiteResult("vertices")
    for d in range(2, 11):
        verts = enumerate_vertices(build_system(d))
        res.record(verts == sorted(extreme_points(d)), f"d={d} vertex set")
    for d in (2, 3, 5):
        verts = set(extreme_points(d))
        for i in range(grid + 1):
            for j in range(grid + 1):
                p1, p2 = Fraction(i, 2 * grid), Fraction(j, 2 * grid)
                out = is_decomposable_werner(1, 1, d, p1, p2).outcome
                res.record(point_from_q(out.witness_q) in verts, f"d={d} p=({p1},{p2})")
    return res


def mu_werner(d, p):
    return min(2 * p / (d + 1), 2 * (1 - p) / (d - 1))


def mu_werner_transposed(d, p):
    return min(2 * p - 1, (d + 1 - 2 * p) / (d * d - 1))


def mu_suite(tol=MU_TOL):
    res = SuiteResult("mu")
    for d in (2, 3, 5):
        for i in range(11):
            p = Fraction(i, 10)
            got = mu_of_map(MapDescriptor.werner(d, p))
            got_t = mu_of_map(MapDescriptor.werner(d, p, transposed=True))
            res.record(abs(got - mu_werner(d, float(p))) <= tol, f"W d={d} p={p}")
            res.record(abs(got_t - mu_werner_transposed(d, float(p))) <= tol,
                       f"theta W d={d} p={p}")
    return res


def run_all(seed=0, tol=None, samples=50):
    """Every suite; ``tol`` overrides the numerical tolerance of the float suites."""
    pick = (lambda default: default) if tol is None else (lambda default: float(tol))
    return [
        spectrum_suite(samples, seed, pick(SPECTRUM_TOL)),
        ppt_suite(samples, seed + 1, pick(SPECTRUM_TOL)),
        pairing_suite(max(1, samples // 5), seed + 2, pick(PAIRING_TOL)),
        twirl_suite(10, seed + 3, pick(TWIRL_TOL)),
        vertex_suite(),
        mu_suite(pick(MU_TOL)),
    ]
