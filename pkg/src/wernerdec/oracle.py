"""Brute-force ground truth for the symmetric family H_Q.

Everything here is built densely from tensor products of the two-copy
projectors and diagonalised numerically, so it shares no code path with the
closed forms in :mod:`wernerdec.symmetric`.

The space is ordered as pairs ``(A_1 B_1)(A_2 B_2)...(A_{n+m} B_{n+m})``; the
first ``n`` pairs hold the untransposed projectors.
"""

from functools import lru_cache, reduce
from itertools import combinations
from math import comb, factorial

import numpy as np
from scipy.stats import unitary_group

from .symmetric import _check_q
from .werner import (_check_dim, d_asym, d_sym, partial_transpose, projectors,
                     werner_state)

MAX_SIDE = 4096
CACHE_SIDE = 1024


class OracleSizeError(MemoryError):
    """The dense construction would exceed ``MAX_SIDE``."""


def _guard(n, m, d, max_side):
    side = d ** (2 * (n + m))
    if side > max_side:
        raise OracleSizeError(
            f"dense side d^(2(n+m)) = {side} exceeds the guard {max_side}")
    return side


def local_blocks(d):
    """``(P_0, P_1, P_0^G, P_1^G)``: normalized projectors and their partial transposes."""
    P_sym, P_asym, _, _ = projectors(d)
    P0 = P_sym / d_sym(d)
    P1 = P_asym / d_asym(d)
    return P0, P1, partial_transpose(P0, (d, d)), partial_transpose(P1, (d, d))


def _placements(n, ones):
    """All 0/1 tuples of length n with exactly ``ones`` ones."""
    for pos in combinations(range(n), ones):
        t = [0] * n
        for i in pos:
            t[i] = 1
        yield tuple(t)


def _f_weight(n, m, k, l, normalization):
    if normalization == "average":
        return 1.0 / (comb(n, k - 1) * comb(m, l - 1))
    if normalization == "factorial":
        return 1.0 / (factorial(n) * factorial(m))
    raise ValueError(f"unknown normalization {normalization!r}")


def dense_f(k, l, n, m, d, normalization="average", max_side=MAX_SIDE):
    """Dense F(k, l): symmetrized placements of antisymmetric factors.

    ``normalization="average"`` divides the placement sum by the number of
    placements ``C(n,k-1) C(m,l-1)``, so ``Tr F(k,l) = 1``; this is the
    convention under which the eigenvalue and pairing closed forms hold.
    ``"factorial"`` uses the literal ``1/(n! m!)`` prefactor instead.
    """
    d = _check_dim(d)
    if not (1 <= k <= n + 1 and 1 <= l <= m + 1):
        raise ValueError(f"(k, l) = ({k}, {l}) out of range for n={n}, m={m}")
    _guard(n, m, d, max_side)
    P0, P1, G0, G1 = local_blocks(d)
    first, second = (P0, P1), (G0, G1)
    total = 0.0
    for it in _placements(n, k - 1):
        for jt in _placements(m, l - 1):
            ops = [first[i] for i in it] + [second[j] for j in jt]
            total = total + reduce(np.kron, ops, np.ones((1, 1)))
    return _f_weight(n, m, k, l, normalization) * total


def dense_hq(Q, n, m, d, normalization="average", max_side=MAX_SIDE):
    """Dense ``H_Q = sum_{k,l} Q[k,l] F(k,l)``."""
    Q = _check_q(Q, n, m)
    d = _check_dim(d)
    side = _guard(n, m, d, max_side)
    cached = side <= CACHE_SIDE
    H = np.zeros((side, side))
    for k in range(1, n + 2):
        for l in range(1, m + 2):
            q = float(Q[k - 1, l - 1])
            if not q:
                continue
            if cached:
                F = _f_basis(n, m, d, normalization)[k - 1][l - 1]
            else:
                F = dense_f(k, l, n, m, d, normalization, max_side)
            H += q * F
    return H


@lru_cache(maxsize=8)
def _f_basis(n, m, d, normalization):
    """All F(k, l) for small sides, reused across calls; treat as read-only."""
    basis = [[dense_f(k, l, n, m, d, normalization) for l in range(1, m + 2)]
             for k in range(1, n + 2)]
    for row in basis:
        for F in row:
            F.flags.writeable = False
    return basis


def bipartite_transpose(H, n_pairs, d):
    """Partial transpose of every B factor in the (A_i B_i) pair layout."""
    N = 2 * n_pairs
    T = np.asarray(H).reshape((d,) * (2 * N))
    axes = list(range(2 * N))
    for i in range(1, N, 2):  # B factors
        axes[i], axes[N + i] = axes[N + i], axes[i]
    side = d**N
    return T.transpose(axes).reshape(side, side)


def _local_diagonals(ops):
    """Diagonals of commuting symmetric ``ops`` in a numerically found joint eigenbasis."""
    generic = sum((i + 1.7) * op for i, op in enumerate(ops))
    _, B = np.linalg.eigh(generic)
    diags = []
    for op in ops:
        R = B.T @ op @ B
        off = R - np.diag(np.diag(R))
        if np.abs(off).max() > 1e-10:
            raise ArithmeticError("local operators are not jointly diagonalised")
        diags.append(np.diag(R).copy())
    return diags


def factored_hq_eigenvalues(Q, n, m, d, transpose=False, normalization="average"):
    """Eigenvalues of H_Q (or its A|B partial transpose) without forming the dense matrix.

    Each two-copy factor is diagonalised numerically and the full spectrum is
    assembled as a sum of Kronecker products of those diagonals. Used where the
    dense side exceeds the guard.
    """
    Q = _check_q(Q, n, m)
    d = _check_dim(d)
    P0, P1, G0, G1 = local_blocks(d)
    if transpose:
        P0, P1, G0, G1 = G0, G1, P0, P1
    a = _local_diagonals([P0, P1])
    b = _local_diagonals([G0, G1])
    ev = np.zeros(d ** (2 * (n + m)))
    for k in range(1, n + 2):
        for l in range(1, m + 2):
            q = float(Q[k - 1, l - 1])
            if not q:
                continue
            w = q * _f_weight(n, m, k, l, normalization)
            for it in _placements(n, k - 1):
                for jt in _placements(m, l - 1):
                    vecs = [a[i] for i in it] + [b[j] for j in jt]
                    ev += w * reduce(np.kron, vecs, np.ones(1))
    return np.sort(ev)


def hq_eigenvalues(Q, n, m, d, transpose=False, max_side=MAX_SIDE):
    """Sorted spectrum of H_Q or H_Q^Gamma; dense below the guard, factored above."""
    if d ** (2 * (n + m)) <= max_side:
        H = dense_hq(Q, n, m, d, max_side=max_side)
        if transpose:
            H = bipartite_transpose(H, n + m, d)
        return np.linalg.eigvalsh(H)
    return factored_hq_eigenvalues(Q, n, m, d, transpose=transpose)


def pairing_value(n, m, d, p1, p2, Q, max_side=MAX_SIDE):
    """Dense ``Tr[(rho_W(p1)^{(x)n} (x) (rho_W(p2)^G)^{(x)m}) H_Q]``."""
    d = _check_dim(d)
    _guard(n, m, d, max_side)
    r1 = werner_state(d, p1)
    r2 = partial_transpose(werner_state(d, p2), (d, d))
    rho = reduce(np.kron, [r1] * n + [r2] * m, np.ones((1, 1)))
    H = dense_hq(Q, n, m, d, max_side=max_side)
    return float(np.sum(rho * H))


def haar_unitaries(d, samples, seed):
    if samples < 1:
        raise ValueError("samples must be >= 1")
    U = unitary_group.rvs(d, size=samples, random_state=np.random.default_rng(seed))
    return U.reshape(samples, d, d)


def haar_twirl_mc(X, d, samples, seed):
    """Monte Carlo estimate of the Haar average of ``(U (x) U) X (U (x) U)^dagger``."""
    d = _check_dim(d)
    X = np.asarray(X)
    if X.shape != (d * d, d * d):
        raise ValueError(f"expected a {d*d}x{d*d} matrix, got shape {X.shape}")
    U = haar_unitaries(d, samples, seed)
    acc = np.zeros((d * d, d * d), dtype=complex)
    for start in range(0, samples, 512):
        Ub = U[start:start + 512]
        UU = np.einsum("sij,skl->sikjl", Ub, Ub).reshape(len(Ub), d * d, d * d)
        acc += np.einsum("sij,jk,slk->il", UU, X, UU.conj(), optimize=True)
    return (acc / samples).real
