"""Acceptance criteria, one test each; every test prints a PASS/FAIL line."""

from fractions import Fraction
from math import sqrt

import numpy as np
import pytest

from wernerdec._rational import truncate
from wernerdec.bounds import (RegionClass, analytic_threshold, analytic_threshold_limit,
                              classify_region, lp_threshold, n1m1_criterion, quantitative_bound)
from wernerdec.lp import is_decomposable_werner
from wernerdec.mu import MapDescriptor, check_block_positive_bounds, mu_of_map
from wernerdec.oracle import MAX_SIDE, haar_twirl_mc, hq_eigenvalues
from wernerdec.polytope import build_system, enumerate_vertices, extreme_points, point_from_q
from wernerdec.symmetric import hq_spectrum, is_hq_ppt, rational_matrix
from wernerdec.werner import twirl

F = Fraction

# reference four-digit values: numerical LP thresholds and analytic bounds, n = 1..8
TABLE = {
    2: (["0.3169", "0.4054", "0.4367", "0.4524", "0.4619", "0.4682", "0.4728", "0.4762"],
        ["0.3169", "0.4052", "0.4363", "0.4521", "0.4616", "0.4680", "0.4726", "0.4760"]),
    3: (["0.3101", "0.4017", "0.4340", "0.4505", "0.4603", "0.4669", "0.4716", "0.4752"],
        ["0.3101", "0.4013", "0.4337", "0.4501", "0.4601", "0.4667", "0.4714", "0.4750"]),
    5: (["0.3038", "0.3981", "0.4316", "0.4486", "0.4588", "0.4656", "0.4705", "0.4742"],
        ["0.3038", "0.3978", "0.4313", "0.4483", "0.4586", "0.4655", "0.4704", "0.4741"]),
    10: (["0.2986", "0.3950", "0.4294", "0.4469", "0.4575", "0.4645", "0.4696", "0.4734"],
         ["0.2986", "0.3948", "0.4293", "0.4468", "0.4574", "0.4644", "0.4695", "0.4733"]),
}


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
        assert ok, detail
    return emit


def s(d):
    return sqrt(2 * d / (d + 1))


def test_criterion_1_table(report):
    bad = []
    for d, (numerical, analytic) in TABLE.items():
        for n in range(1, 9):
            res = lp_threshold(n, d, F(1, 10**6))
            got = (truncate(res.lower), truncate(analytic_threshold(n, d)))
            if got != (numerical[n - 1], analytic[n - 1]) or truncate(res.upper) != got[0]:
                bad.append((d, n, got))
    report(1, not bad, f"32 table cells, mismatches: {bad}")


def test_criterion_2_n1_exact(report):
    errs = {d: abs(float(lp_threshold(1, d, F(1, 10**6)).midpoint) - 1 / (2 + s(d)))
            for d in (2, 3, 5, 10)}
    report(2, max(errs.values()) <= 2e-6, f"max |lp - closed form| = {max(errs.values()):.2e}")


def random_q(rng, n, m):
    return rational_matrix([[F(int(rng.integers(-9, 10)), int(rng.integers(1, 10)))
                             for _ in range(m + 1)] for _ in range(n + 1)])


def test_criterion_3_spectrum(report):
    rng = np.random.default_rng(3)
    cases = failures = factored = 0
    ppt_true = 0
    for d in (2, 3):
        for n in (1, 2, 3):
            for m in (1, 2, 3):
                if n + m > 4:
                    continue
                factored += d ** (2 * (n + m)) > MAX_SIDE
                for i in range(50):
                    Q = random_q(rng, n, m)
                    if i % 2:
                        Q = Q + rational_matrix([[int(rng.integers(5, 40))] * (m + 1)] * (n + 1))
                    exact = hq_spectrum(Q, n, m, d).as_float_array()
                    ev = hq_eigenvalues(Q, n, m, d)
                    pt = hq_eigenvalues(Q, n, m, d, transpose=True)
                    exact_pt = hq_spectrum(Q.T, m, n, d).as_float_array()
                    ppt = is_hq_ppt(Q, n, m, d)
                    ppt_true += ppt
                    ok = (len(ev) == len(exact) and np.abs(ev - exact).max() <= 1e-9
                          and np.abs(pt - exact_pt).max() <= 1e-9
                          and ppt == bool(pt.min() >= -1e-9))
                    cases += 1
                    failures += not ok
    report(3, failures == 0 and 0 < ppt_true < cases,
           f"{cases} matrices, {failures} mismatches, {ppt_true} PPT, "
           f"{factored} configurations above the dense guard via Kronecker diagonals")


def test_criterion_4_sign_agreement(report):
    sign = lambda x: (x > 0) - (x < 0)
    bad, edge = [], 0
    for d in (2, 3, 5):
        for i in range(21):
            for j in range(21):
                p1, p2 = F(i, 20), F(j, 20)
                value = is_decomposable_werner(1, 1, d, p1, p2).value
                crit = n1m1_criterion(d, p1, p2)
                if value != 0 and crit != 0:
                    ok = sign(value) == sign(crit)
                else:
                    # a zero on either side must read as decomposable on both
                    ok = value >= 0 and crit >= 0
                    edge += value != crit
                if not ok:
                    bad.append((d, p1, p2))
    report(4, not bad, f"1323 grid points, disagreements {bad}, "
                       f"{edge} points with exactly one side zero")


def test_criterion_5_vertices(report):
    bad = [d for d in range(2, 11)
           if enumerate_vertices(build_system(d)) != sorted(extreme_points(d))]
    off = []
    for d in (2, 3, 5):
        verts = set(extreme_points(d))
        for i in range(21):
            for j in range(21):
                out = is_decomposable_werner(1, 1, d, F(i, 20), F(j, 20)).outcome
                if point_from_q(out.witness_q) not in verts:
                    off.append((d, i, j))
    report(5, not bad and not off, f"vertex mismatches {bad}, non-vertex witnesses {off}")


def test_criterion_6_mu(report):
    err = 0.0
    for d in (2, 3, 5):
        for i in range(11):
            p = i / 10
            P, T = MapDescriptor.werner(d, F(i, 10)), MapDescriptor.werner(d, F(i, 10), True)
            err = max(err, abs(mu_of_map(P) - min(2 * p / (d + 1), 2 * (1 - p) / (d - 1))),
                      abs(mu_of_map(T) - min(2 * p - 1, (d + 1 - 2 * p) / (d * d - 1))))
    T0 = MapDescriptor.werner(2, 0, transposed=True)
    edge = abs(mu_of_map(T0) + 1)
    report(6, err <= 1e-10 and edge <= 1e-10 and check_block_positive_bounds(T0),
           f"max error {err:.1e}, |mu(theta W_0) + 1| = {edge:.1e}")


def bisect(f, lo, hi, tol=F(1, 10**9)):
    """Point where the boolean ``f`` switches from f(lo) to f(hi)."""
    start = f(lo)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if f(mid) == start:
            lo = mid
        else:
            hi = mid
    return float((lo + hi) / 2)


def test_criterion_7_regions(report):
    black = RegionClass.POSITIVE_NON_DECOMPOSABLE
    count = sum(classify_region(2, F(i, 200), F(j, 200)) is black
                for i in range(201) for j in range(201))
    d = 3
    is_black = lambda p: classify_region(d, p, p) is black
    lo = bisect(is_black, F(0), F(27, 100))
    hi = bisect(is_black, F(27, 100), F(1, 2))
    exp_lo = (2 - sqrt(3)) * (d + 1) / (2 * (d + 1 - sqrt(3)))
    exp_hi = 1 / (2 + s(d))
    closed = classify_region(d, F(exp_hi) + F(1, 10**12), F(exp_hi) + F(1, 10**12)) is not black
    ok = count == 0 and abs(lo - exp_lo) <= 1e-6 and abs(hi - exp_hi) <= 1e-6 and closed
    report(7, ok, f"d=2 black cells {count}; d=3 interval [{lo:.7f}, {hi:.7f}) "
                  f"vs [{exp_lo:.7f}, {exp_hi:.7f})")


def test_criterion_8_bounds(report):
    ident = max(abs(quantitative_bound(2 * k, d) - (2 * analytic_threshold(k, d) - 1))
                for k in range(1, 9) for d in range(2, 11))
    qb = [quantitative_bound(n, 3) for n in range(2, 200, 2)]
    increasing = all(a < b < 0 for a, b in zip(qb, qb[1:]))
    mono_d = True
    for n in range(1, 9):
        vals = [analytic_threshold(n, d) for d in range(2, 2001)]
        lim = analytic_threshold_limit(n)
        mono_d &= all(a > b > lim for a, b in zip(vals, vals[1:]))
        mono_d &= vals[-1] - lim < 1e-4
    report(8, ident <= 1e-12 and increasing and mono_d,
           f"identity error {ident:.1e}, increasing in n {increasing}, monotone in d {mono_d}")


def test_criterion_9_twirl(report):
    rng = np.random.default_rng(9)
    worst = 0.0
    for d in (2, 3):
        for _ in range(10):
            A = rng.standard_normal((d * d, d * d))
            X = A + A.T
            X /= np.linalg.norm(X)
            mc = haar_twirl_mc(X, d, 10_000, seed=int(rng.integers(2**31)))
            worst = max(worst, np.linalg.norm(mc - twirl(X, d)))
    report(9, worst <= 5e-2, f"worst Frobenius distance {worst:.4f}")
