"""Basic two-copy operators, Werner states and the Werner maps.

All operators act on C^d (x) C^d and are real symmetric in the computational
basis, so they are stored as dense ``float64`` numpy arrays. The basis index of
``|i>|j>`` is ``i*d + j``.
"""

from fractions import Fraction

import numpy as np

from ._rational import as_fraction


class DimensionError(ValueError):
    """Raised for a local dimension below 2 or a matrix of the wrong size."""


def _check_dim(d):
    if int(d) != d or d < 2:
        raise DimensionError(f"local dimension must be an integer >= 2, got {d!r}")
    return int(d)


def d_sym(d):
    return d * (d + 1) // 2


def d_asym(d):
    return d * (d - 1) // 2


def flip(d):
    d = _check_dim(d)
    F = np.zeros((d * d, d * d))
    for i in range(d):
        for j in range(d):
            F[j * d + i, i * d + j] = 1.0
    return F


def max_entangled(d):
    """|Omega><Omega| with |Omega> = sum_i |i>|i> (unnormalized, trace d)."""
    d = _check_dim(d)
    omega = np.zeros(d * d)
    omega[:: d + 1] = 1.0
    return np.outer(omega, omega)


def projectors(d):
    """Return ``(P_sym, P_asym, flip, omega)`` for local dimension ``d``."""
    F = flip(d)
    eye = np.eye(d * d)
    return (eye + F) / 2, (eye - F) / 2, F, max_entangled(d)


def _check_p(p):
    p = as_fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"Werner parameter must lie in [0, 1], got {p}")
    return p


def werner_state(d, p):
    """rho_W(p) = p P_sym/d_sym + (1-p) P_asym/d_asym."""
    d = _check_dim(d)
    p = _check_p(p)
    P_sym, P_asym, _, _ = projectors(d)
    return float(p) * P_sym / d_sym(d) + float(1 - p) * P_asym / d_asym(d)


def twirl(X, d):
    """Analytic UU-twirl: projection onto span{P_sym, P_asym}."""
    d = _check_dim(d)
    X = np.asarray(X)
    if X.shape != (d * d, d * d):
        raise DimensionError(f"expected a {d*d}x{d*d} matrix, got shape {X.shape}")
    P_sym, P_asym, _, _ = projectors(d)
    a = np.trace(X @ P_sym)
    b = np.trace(X @ P_asym)
    return a * P_sym / d_sym(d) + b * P_asym / d_asym(d)


def partial_transpose(X, dims, sys=1):
    """Transpose subsystem ``sys`` (0 or 1) of a bipartite matrix with local ``dims``."""
    dA, dB = dims
    X = np.asarray(X)
    if X.shape != (dA * dB, dA * dB):
        raise DimensionError(
            f"matrix of shape {X.shape} does not match dims ({dA}, {dB})")
    T = X.reshape(dA, dB, dA, dB)
    if sys == 1:
        T = T.transpose(0, 3, 2, 1)
    elif sys == 0:
        T = T.transpose(2, 1, 0, 3)
    else:
        raise ValueError("sys must be 0 or 1")
    return T.reshape(dA * dB, dA * dB)


def partial_trace(X, dims, sys=0):
    """Trace out subsystem ``sys`` of a bipartite matrix."""
    dA, dB = dims
    T = np.asarray(X).reshape(dA, dB, dA, dB)
    if sys == 0:
        return np.einsum("ijil->jl", T)
    return np.einsum("ijkj->ik", T)


def werner_map_choi(d, p, transposed=False):
    """Choi matrix of W_p, or of theta o W_p when ``transposed`` is set."""
    rho = werner_state(d, p)
    return partial_transpose(rho, (d, d)) if transposed else rho


def p_to_t(d, p):
    """Parameter t_p with W_p proportional to Z_t(X) = Tr(X) 1 - t X^T."""
    d = _check_dim(d)
    p = _check_p(p)
    return Fraction(d + 1 - 2 * p * d) / (d + 1 - 2 * p)


def t_to_p(d, t):
    d = _check_dim(d)
    t = as_fraction(t)
    if not -1 <= t <= 1:
        raise ValueError(f"t must lie in [-1, 1], got {t}")
    # t (d+1-2p) = d+1-2pd  =>  p = (d+1)(1-t) / (2(d-t))
    return Fraction((d + 1) * (1 - t)) / (2 * (d - t))
