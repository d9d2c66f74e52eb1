"""Gaussian states as (mean, covariance) pairs.

Quadratures are ``x = a + a^dag`` and ``p = -i (a - a^dag)``, ordered
``(x1, p1, x2, p2, ...)``, so the vacuum covariance is the identity and a
thermal state of mean photon number N has covariance ``(2N + 1) I``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .channels import ChannelParams, is_physical
from .entropy import g
from .errors import InvalidCovariance, ModeMismatch, NonPhysical

PHYSICALITY_TOL = 1e-10
SYMPLECTIC_TOL = 1e-9

Z = np.diag([1.0, -1.0])
SIGMA_Z = Z


@lru_cache(maxsize=8)
def symplectic_form(modes: int) -> np.ndarray:
    omega = np.kron(np.eye(modes), np.array([[0.0, 1.0], [-1.0, 0.0]]))
    omega.setflags(write=False)
    return omega


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class GaussianState:
    mean: np.ndarray
    cov: np.ndarray

    def __post_init__(self):
        mean = _frozen(self.mean).reshape(-1)
        cov = _frozen(self.cov)
        if cov.ndim != 2 or cov.shape[0] != cov.shape[1] or cov.shape[0] % 2:
            raise InvalidCovariance(f"covariance must be 2m x 2m, got {cov.shape}")
        if mean.shape[0] != cov.shape[0]:
            raise InvalidCovariance("mean and covariance sizes differ")
        if np.abs(cov - cov.T).max() > 1e-12:
            raise InvalidCovariance("covariance is not symmetric")
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "cov", cov)
        if not self.is_physical():
            raise InvalidCovariance("covariance violates the uncertainty principle")

    @property
    def modes(self) -> int:
        return self.cov.shape[0] // 2

    def is_physical(self, tol: float = PHYSICALITY_TOL) -> bool:
        omega = symplectic_form(self.modes)
        eigs = np.linalg.eigvalsh(self.cov + 1j * omega)
        return bool(eigs.min() >= -tol)

    def mean_photons(self) -> float:
        return float((np.trace(self.cov) + self.mean @ self.mean - 2 * self.modes) / 4)


def vacuum(modes: int = 1) -> GaussianState:
    return GaussianState(np.zeros(2 * modes), np.eye(2 * modes))


def thermal_state(N: float) -> GaussianState:
    if N < 0:
        raise ValueError(f"mean photon number must be >= 0, got {N}")
    return GaussianState(np.zeros(2), (2 * N + 1) * np.eye(2))


def coherent_state(alpha: complex) -> GaussianState:
    alpha = complex(alpha)
    return GaussianState([2 * alpha.real, 2 * alpha.imag], np.eye(2))


def apply_channel(params: ChannelParams, state: GaussianState) -> GaussianState:
    """Action of a single-mode channel on a Gaussian state.

    Covariant:     cov -> tau cov + y I,            mean -> sqrt(tau) mean
    Contravariant: cov -> |tau| Z cov Z + y I,      mean -> sqrt(|tau|) Z mean
    The contravariant sign matches the idler output of the two-mode squeezer
    used in :mod:`bcl.fock`, where a coherent input alpha leaves the idler
    displaced by sqrt(|tau|) conj(alpha).
    """
    if state.modes != 1:
        raise ModeMismatch(f"single-mode channel applied to a {state.modes}-mode state")
    if not is_physical(params):
        raise NonPhysical(f"{params} is not a physical channel")
    gain = params.gain
    if params.conjugating:
        cov = gain * (Z @ state.cov @ Z) + params.y * np.eye(2)
        mean = np.sqrt(gain) * (Z @ state.mean)
    else:
        cov = gain * state.cov + params.y * np.eye(2)
        mean = np.sqrt(gain) * state.mean
    return GaussianState(mean, cov)


def symplectic_eigenvalues(cov: np.ndarray) -> np.ndarray:
    """Williamson spectrum, from the moduli of the eigenvalues of ``i Omega cov``."""
    cov = np.asarray(cov, dtype=float)
    omega = symplectic_form(cov.shape[0] // 2)
    eigs = np.sort(np.abs(np.linalg.eigvals(1j * omega @ cov)))
    # eigenvalues come in +/- pairs; keep one of each
    return eigs[::2]


def gaussian_entropy(state: GaussianState) -> float:
    """Von Neumann entropy (bits): sum of g((nu - 1) / 2) over symplectic eigenvalues."""
    nus = symplectic_eigenvalues(state.cov)
    if nus.min() < 1 - SYMPLECTIC_TOL:
        raise InvalidCovariance(f"symplectic eigenvalue {nus.min()} < 1")
    return float(sum(g(max((nu - 1) / 2, 0.0)) for nu in nus))


def two_mode_squeezed_thermal(kappa: float, N: float) -> GaussianState:
    """Two-mode squeezer of gain ``kappa`` acting on thermal(N) x vacuum."""
    if kappa < 1 or N < 0:
        raise ValueError("need kappa >= 1 and N >= 0")
    a = 2 * (N + 1) * kappa - 1
    b = 2 * (N + 1) * kappa - (2 * N + 1)
    c = 2 * (N + 1) * np.sqrt(kappa * (kappa - 1))
    cov = np.block([[a * np.eye(2), c * SIGMA_Z], [c * SIGMA_Z, b * np.eye(2)]])
    return GaussianState(np.zeros(4), cov)


@dataclass(frozen=True, eq=False)
class EofDecomposition:
    gamma0: np.ndarray
    residual: np.ndarray
    residual_eigenvalues: np.ndarray


def eof_decompose(kappa: float, N: float) -> EofDecomposition:
    """Split the squeezed-thermal covariance into squeezed vacuum plus a PSD residual.

    The residual ``2N [[kappa I, s sigma_z], [s sigma_z, (kappa - 1) I]]`` with
    ``s = sqrt(kappa (kappa - 1))`` has spectrum {2N(2 kappa - 1)} x 2 and {0} x 2,
    so the state is reachable from the squeezed vacuum by random correlated
    displacements.
    """
    gamma = two_mode_squeezed_thermal(kappa, N).cov
    gamma0 = two_mode_squeezed_thermal(kappa, 0.0).cov
    s = np.sqrt(kappa * (kappa - 1))
    residual = 2 * N * np.block(
        [[kappa * np.eye(2), s * SIGMA_Z], [s * SIGMA_Z, (kappa - 1) * np.eye(2)]]
    )
    if not np.allclose(gamma0 + residual, gamma, rtol=0, atol=1e-12 * max(1.0, np.abs(gamma).max())):
        raise AssertionError("gamma0 + residual does not reproduce the covariance")
    eigs = np.sort(np.linalg.eigvalsh(residual))[::-1]
    return EofDecomposition(_frozen(gamma0), _frozen(residual), _frozen(eigs))


def eof_value(kappa: float, N: float = 0.0) -> float:
    """Entanglement of formation (bits) of the squeezed-thermal state; independent of N."""
    if kappa < 1 or N < 0:
        raise ValueError("need kappa >= 1 and N >= 0")
    return g(kappa - 1)
