"""The quantity mu(P) of a positive map, and what it implies for Werner symmetrization.

mu(P) is an infimum over completely positive T of
``Tr[C_P C_T] / Tr[(I (x) P(1)) C_T]``.  Numerator and denominator are linear
in ``C_T >= 0``, so the infimum over the PSD cone is reached on rank-one
``C_T = |psi><psi|``; mu(P) is then the smallest eigenvalue of the pencil
``(C_P, I (x) P(1))`` on the support of ``I (x) P(1)``.
"""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh

from .werner import partial_trace, werner_map_choi

EIG_TOL = 1e-10


@dataclass(frozen=True)
class MapDescriptor:
    """A linear map M_dA -> M_dB given by its Choi matrix ``(id (x) P)(omega)``."""

    dA: int
    dB: int
    choi: np.ndarray

    def __post_init__(self):
        side = self.dA * self.dB
        if np.shape(self.choi) != (side, side):
            raise ValueError(f"Choi matrix must be {side}x{side}")

    @property
    def image_of_identity(self):
        """P(1) = Tr_A C_P."""
        return partial_trace(self.choi, (self.dA, self.dB), sys=0)

    @classmethod
    def werner(cls, d, p, transposed=False):
        """W_p, or theta o W_p when ``transposed``."""
        return cls(d, d, werner_map_choi(d, p, transposed))


@dataclass(frozen=True)
class MuResult:
    value: float
    singular: bool      # P(1) rank deficient; value is the support-restricted one
    minimizer: np.ndarray


class MuUndefinedError(ValueError):
    pass


def mu_details(P, tol=EIG_TOL):
    C = np.asarray(P.choi, dtype=float)
    if not np.any(C):
        raise MuUndefinedError("mu is undefined for the zero map")
    B = np.kron(np.eye(P.dA), P.image_of_identity)
    w, U = np.linalg.eigh(B)
    keep = w > tol * max(1.0, np.abs(w).max())
    if not keep.any():
        raise MuUndefinedError("I (x) P(1) vanishes")
    singular = not keep.all()
    if singular:
        K = U[:, ~keep]
        lo = np.linalg.eigvalsh(K.T @ C @ K).min()
        # on ker(I (x) P(1)) a negative direction would send mu to -infinity
        assert lo >= -tol, "C_P is negative outside the support of I (x) P(1)"
    S = U[:, keep]
    vals, vecs = eigh(S.T @ C @ S, S.T @ B @ S)
    return MuResult(float(vals[0]), singular, S @ vecs[:, 0])


def mu_of_map(P):
    return mu_details(P).value


def symmetrization_interval(P):
    """Open interval ((1 + mu)/2, 1/2) of admissible Werner parameters, or None if mu >= 0."""
    mu = mu_of_map(P)
    if mu >= 0:
        return None
    return ((1 + mu) / 2, 0.5)


def check_block_positive_bounds(P, tol=EIG_TOL):
    """``-I (x) P(1) <= C_P <= dA I (x) P(1)`` up to ``tol`` in the eigenvalues."""
    C = np.asarray(P.choi, dtype=float)
    B = np.kron(np.eye(P.dA), P.image_of_identity)
    lower = np.linalg.eigvalsh(C + B).min()
    upper = np.linalg.eigvalsh(P.dA * B - C).min()
    return bool(lower >= -tol and upper >= -tol)


def rayleigh_ratio(P, C_T):
    """The ratio inside the infimum, for an explicit Choi matrix of T."""
    B = np.kron(np.eye(P.dA), P.image_of_identity)
    return float(np.real(np.trace(P.choi @ C_T)) / np.real(np.trace(B @ C_T)))
