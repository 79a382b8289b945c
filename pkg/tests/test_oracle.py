from fractions import Fraction
from functools import reduce
from math import comb, factorial

import numpy as np
import pytest

from wernerdec.bounds import threshold_n1
from wernerdec.lp import pairing_closed_form
from wernerdec.oracle import (OracleSizeError, bipartite_transpose, dense_f, dense_hq,
                              factored_hq_eigenvalues, haar_twirl_mc, hq_eigenvalues,
                              local_blocks, pairing_value)
from wernerdec.symmetric import canonical_q, hq_spectrum, is_hq_positive, rational_matrix
from wernerdec.werner import partial_transpose, projectors, twirl, werner_state

F = Fraction


def kron(*ops):
    return reduce(np.kron, ops)


def random_q(rng, n, m):
    return rational_matrix([[F(int(rng.integers(-9, 10)), int(rng.integers(1, 10)))
                             for _ in range(m + 1)] for _ in range(n + 1)])


def test_f11_is_a_single_product():
    P0, _, G0, _ = local_blocks(2)
    expected = kron(P0, P0, G0)
    assert np.allclose(dense_f(1, 1, 2, 1, 2), expected)
    assert np.allclose(dense_f(1, 1, 2, 1, 2, normalization="factorial"), expected / 2)


def test_f21_n1_m1():
    P_sym, P_asym, _, _ = projectors(3)
    expected = np.kron(P_asym / 3, partial_transpose(P_sym / 6, (3, 3)))
    assert np.allclose(dense_f(2, 1, 1, 1, 3), expected)


@pytest.mark.parametrize("n,m", [(1, 1), (2, 1), (2, 2), (1, 3)])
def test_f_traces(n, m):
    for k in range(1, n + 2):
        for l in range(1, m + 2):
            assert np.isclose(np.trace(dense_f(k, l, n, m, 2)), 1)
            count = comb(n, k - 1) * comb(m, l - 1)
            lit = np.trace(dense_f(k, l, n, m, 2, normalization="factorial"))
            assert np.isclose(lit, count / (factorial(n) * factorial(m)))


def test_f_index_range():
    with pytest.raises(ValueError):
        dense_f(3, 1, 1, 1, 2)


def test_guard():
    with pytest.raises(OracleSizeError):
        dense_hq(canonical_q(2, 3), 2, 2, 3)


def test_e11_hq():
    P_sym, _, _, _ = projectors(2)
    H = dense_hq(rational_matrix([[1, 0], [0, 0]]), 1, 1, 2)
    assert np.allclose(H, np.kron(P_sym / 3, partial_transpose(P_sym / 3, (2, 2))))


def corner_formula(n, d):
    """Closed four-term expression for the canonical witness, in unnormalized projectors."""
    P_sym, P_asym, _, _ = projectors(d)
    Gs, Ga = partial_transpose(P_sym, (d, d)), partial_transpose(P_asym, (d, d))
    s = kron(*[P_sym] * n)
    a = kron(*[P_asym] * n)
    gs = kron(*[Gs] * n)
    ga = kron(*[Ga] * n)
    pref = 2 ** (2 * n) * (d + 1) / (d ** (2 * n) * factorial(n) ** 2)
    return pref * ((d - 1) / (d + 1) * np.kron(s, gs) + np.kron(s, ga) + np.kron(a, gs)
                   - np.kron(a, ga))


@pytest.mark.parametrize("d", [2, 3])
def test_canonical_witness_n1(d):
    assert np.allclose(dense_hq(canonical_q(1, d), 1, 1, d), corner_formula(1, d))


def test_canonical_witness_n2_scale():
    # the four-term expression carries an extra 1/(n!)^2 relative to sum_kl Q_kl F(k,l)
    H = dense_hq(canonical_q(2, 2), 2, 2, 2)
    assert np.allclose(H, 4 * corner_formula(2, 2))
    assert np.linalg.eigvalsh(H).min() > -1e-9
    assert np.linalg.eigvalsh(bipartite_transpose(H, 4, 2)).min() > -1e-9


def test_positivity_predicate_n2_m2(rng):
    agree = 0
    for i in range(12):
        Q = random_q(rng, 2, 2)
        if i % 2:
            Q = Q + rational_matrix([[20] * 3] * 3)
        ev = np.linalg.eigvalsh(dense_hq(Q, 2, 2, 2))
        agree += (ev.min() >= -1e-10) == is_hq_positive(Q, 2, 2, 2)
    assert agree == 12


def test_bipartite_transpose_one_pair_matches_partial_transpose(rng):
    X = rng.standard_normal((9, 9))
    assert np.allclose(bipartite_transpose(X, 1, 3), partial_transpose(X, (3, 3)))


def test_factored_agrees_with_dense(rng):
    Q = random_q(rng, 2, 1)
    for transpose in (False, True):
        dense = np.linalg.eigvalsh(
            bipartite_transpose(dense_hq(Q, 2, 1, 2), 3, 2) if transpose else dense_hq(Q, 2, 1, 2))
        assert np.allclose(factored_hq_eigenvalues(Q, 2, 1, 2, transpose), dense, atol=1e-10)


def test_factored_above_guard(rng):
    Q = random_q(rng, 2, 2)
    ev = hq_eigenvalues(Q, 2, 2, 3)
    assert len(ev) == 3**8
    assert np.allclose(ev, hq_spectrum(Q, 2, 2, 3).as_float_array(), atol=1e-9)


def test_pairing_closed_form(rng):
    for n, m, d in [(1, 1, 2), (2, 1, 2), (1, 2, 3)]:
        Q = random_q(rng, n, m)
        p1, p2 = F(int(rng.integers(0, 30)), 29), F(int(rng.integers(0, 30)), 29)
        assert np.isclose(pairing_value(n, m, d, p1, p2, Q),
                          float(pairing_closed_form(n, m, d, p1, p2, Q)), atol=1e-12)


def test_pairing_straddles_zero_at_threshold():
    b = threshold_n1(2, F(1, 10**8))
    Q1 = canonical_q(1, 2) / sum(canonical_q(1, 2).ravel())
    assert pairing_value(1, 1, 2, b.lower, b.lower, Q1) < 0
    assert pairing_value(1, 1, 2, b.upper, b.upper, Q1) > 0


def test_pairing_uniform_positive():
    for n, m, d in [(1, 1, 2), (1, 1, 3), (2, 1, 2)]:
        U = rational_matrix([[1] * (m + 1)] * (n + 1))
        for p in (F(0), F(1, 5), F(1, 2), F(1)):
            assert pairing_value(n, m, d, p, p, U) > 0


def test_pairing_at_p_one():
    Q = rational_matrix([[F(3, 7), 5], [2, -1]])
    val = pairing_value(1, 1, 3, 1, 1, Q)
    assert np.isclose(val, float(F(2, 12) ** 2 * F(3, 7)))


def test_mc_twirl_invariant_state():
    rho = werner_state(2, F(1, 3))
    assert np.linalg.norm(haar_twirl_mc(rho, 2, 10_000, seed=5) - rho) <= 5e-2


def test_mc_twirl_of_omega():
    P_sym, _, _, omega = projectors(2)
    mc = haar_twirl_mc(omega, 2, 10_000, seed=11)
    assert np.linalg.norm(mc - 2 / 3 * P_sym) <= 5e-2
    assert np.linalg.norm(mc - twirl(omega, 2)) <= 5e-2


def test_mc_twirl_deterministic(rng):
    X = rng.standard_normal((4, 4))
    X = X + X.T
    a = haar_twirl_mc(X, 2, 700, seed=3)
    b = haar_twirl_mc(X, 2, 700, seed=3)
    assert np.array_equal(a, b)


def test_mc_twirl_shape_error():
    with pytest.raises(ValueError):
        haar_twirl_mc(np.eye(4), 3, 10, seed=0)
