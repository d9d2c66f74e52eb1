"""Truncated Fock-space representation of single- and two-mode states and of
the quantum-limited loss / amplifier channels.

The amplifier is the signal output of the two-mode squeezer

    U |n, 0> = cosh(r)^-(n+1) sum_k tanh(r)^k sqrt(C(n+k, k)) |n+k, k>,
    kappa = cosh(r)^2,

and the contravariant amplifier is its idler output.  Truncation never
renormalizes: lost population is tracked as ``trace_defect`` and checked
against a budget, raising :class:`TruncationBudgetExceeded` when exceeded.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np
from scipy.special import gammaln

from . import channels
from .channels import ChannelFamily, Decomposition
from .entropy import spectral_entropy
from .errors import DimensionMismatch, NonHermitian, TruncationBudgetExceeded

DEFAULT_BUDGET = 1e-9
HERMITIAN_TOL = 1e-12
PSD_TOL = 1e-10


class TruncationWarning(UserWarning):
    pass


@dataclass(frozen=True, eq=False)
class FockDensity:
    """Density matrix on ``modes`` modes, each truncated to ``dim`` levels."""

    matrix: np.ndarray
    modes: int = 1
    dim: int = field(init=False)
    trace_defect: float = field(init=False)
    tail_population: float = field(init=False)

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionMismatch(f"density matrix must be square, got {m.shape}")
        dim = round(m.shape[0] ** (1.0 / self.modes))
        if dim**self.modes != m.shape[0]:
            raise DimensionMismatch(f"size {m.shape[0]} is not a {self.modes}-mode product")
        if np.abs(m - m.conj().T).max(initial=0.0) > HERMITIAN_TOL * max(1.0, np.abs(m).max()):
            raise NonHermitian("density matrix is not Hermitian")
        m = (m + m.conj().T) / 2
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "trace_defect", abs(1.0 - float(np.trace(m).real)))
        pops = np.diag(m).real.reshape((dim,) * self.modes)
        top = np.zeros_like(pops, dtype=bool)
        for ax in range(self.modes):
            idx = [slice(None)] * self.modes
            idx[ax] = dim - 1
            top[tuple(idx)] = True
        object.__setattr__(self, "tail_population", float(pops[top].sum()))

    @classmethod
    def pure(cls, vector, modes: int = 1) -> "FockDensity":
        v = np.asarray(vector, dtype=complex).reshape(-1)
        return cls(np.outer(v, v.conj()), modes)

    @property
    def trace(self) -> float:
        return float(np.trace(self.matrix).real)

    def is_pure(self, tol: float = 1e-10) -> bool:
        return abs(float(np.trace(self.matrix @ self.matrix).real) - self.trace**2) <= tol

    def vector(self) -> np.ndarray:
        """State vector of a pure state (global phase fixed by the largest amplitude)."""
        w, v = np.linalg.eigh(self.matrix)
        psi = v[:, -1] * np.sqrt(max(w[-1], 0.0))
        k = np.argmax(np.abs(psi))
        return psi * (abs(psi[k]) / psi[k])

    def embed(self, dim: int) -> "FockDensity":
        """Zero-pad every mode to ``dim`` levels."""
        if dim < self.dim:
            raise DimensionMismatch("embedding can only enlarge the truncation")
        shape = (self.dim,) * (2 * self.modes)
        t = self.matrix.reshape(shape)
        pad = [(0, dim - self.dim)] * (2 * self.modes)
        return FockDensity(np.pad(t, pad).reshape(dim**self.modes, dim**self.modes), self.modes)


@dataclass(frozen=True, eq=False)
class KrausSet:
    """Kraus operators stacked as an array of shape ``(count, dim_out, dim_in)``."""

    operators: np.ndarray
    completeness_defect: float = field(init=False)

    def __post_init__(self):
        ops = np.array(self.operators, dtype=complex)
        if ops.ndim != 3:
            raise DimensionMismatch("Kraus operators must be stacked as (count, out, in)")
        ops.setflags(write=False)
        object.__setattr__(self, "operators", ops)
        gram = np.einsum("kji,kjl->il", ops.conj(), ops)
        defect = np.linalg.norm(np.eye(ops.shape[2]) - gram, 2)
        object.__setattr__(self, "completeness_defect", float(defect))

    @property
    def dim_in(self) -> int:
        return self.operators.shape[2]

    @property
    def dim_out(self) -> int:
        return self.operators.shape[1]

    def lost_population(self) -> np.ndarray:
        """Per input Fock level, population that falls outside the output truncation."""
        gram = np.einsum("kji,kji->i", self.operators.conj(), self.operators).real
        return np.clip(1.0 - gram, 0.0, None)

    def __len__(self) -> int:
        return self.operators.shape[0]


@dataclass(frozen=True)
class Truncation:
    budget: float = DEFAULT_BUDGET
    dim_out: Optional[int] = None


# --- amplitude tables ------------------------------------------------------


def amp_log_coefficients(kappa: float, dim_in: int, k_max: int) -> np.ndarray:
    """log |<n+k, k| U |n, 0>| for n < dim_in, k < k_max (``-inf`` where zero)."""
    n = np.arange(dim_in)[:, None]
    k = np.arange(k_max)[None, :]
    if kappa == 1.0:
        out = np.full((dim_in, k_max), -np.inf)
        out[:, 0] = 0.0
        return out
    return (
        0.5 * (gammaln(n + k + 1) - gammaln(k + 1) - gammaln(n + 1))
        - 0.5 * (n + 1) * np.log(kappa)
        + 0.5 * k * np.log1p(-1.0 / kappa)
    )


def amp_coefficients(kappa: float, dim_in: int, k_max: int) -> np.ndarray:
    return np.exp(amp_log_coefficients(kappa, dim_in, k_max))


def amp_lost_population(kappa: float, dim_in: int, dim_out: int) -> np.ndarray:
    """Population of input level n whose signal output lands at or above ``dim_out``."""
    c2 = amp_coefficients(kappa, dim_in, dim_out) ** 2
    n = np.arange(dim_in)[:, None]
    k = np.arange(dim_out)[None, :]
    kept = np.where(n + k < dim_out, c2, 0.0).sum(axis=1)
    return np.clip(1.0 - kept, 0.0, None)


def default_dim_out(kappa: float, dim_in: int, budget: float = DEFAULT_BUDGET) -> int:
    """Output truncation for the amplifier.

    The heuristic ``kappa d + 10 sqrt(kappa d) + 20``, enlarged when needed
    so that no input level loses more than ``budget``.
    """
    d = math.ceil(kappa * dim_in + 10 * math.sqrt(kappa * dim_in) + 20)
    return max(d, minimal_dim_out(kappa, dim_in, budget))


def minimal_dim_out(kappa: float, dim_in: int, budget: float = DEFAULT_BUDGET) -> int:
    """Smallest output truncation losing at most ``budget`` from any input level."""
    lo, hi = dim_in, 2 * dim_in + 8
    lost = amp_lost_population(kappa, dim_in, hi).max()
    while lost > budget:
        lo, hi = hi, 2 * hi
        previous, lost = lost, amp_lost_population(kappa, dim_in, hi).max()
        if lost >= previous:
            # rounding floor reached: no truncation can meet this budget
            raise TruncationBudgetExceeded(lost, budget, f"minimal_dim_out(kappa={kappa}, dim_in={dim_in})")
    while lo < hi:
        mid = (lo + hi) // 2
        if amp_lost_population(kappa, dim_in, mid).max() > budget:
            lo = mid + 1
        else:
            hi = mid
    return hi


# --- states ----------------------------------------------------------------


def fock_vector(n: int, dim: int) -> np.ndarray:
    v = np.zeros(dim, dtype=complex)
    v[n] = 1.0
    return v


def fock_state(n: int, dim: int) -> FockDensity:
    return FockDensity.pure(fock_vector(n, dim))


def vacuum(dim: int, modes: int = 1) -> FockDensity:
    return FockDensity.pure(fock_vector(0, dim**modes), modes)


def coherent_vector(alpha: complex, dim: int) -> np.ndarray:
    n = np.arange(dim)
    if alpha == 0:
        return fock_vector(0, dim)
    log_amp = -abs(alpha) ** 2 / 2 + n * np.log(abs(alpha)) - 0.5 * gammaln(n + 1)
    v = np.exp(log_amp) * np.exp(1j * n * np.angle(alpha))
    return v / np.linalg.norm(v)


def coherent_state(alpha: complex, dim: int) -> FockDensity:
    """Coherent state renormalized on the truncated space; warns on a heavy tail."""
    rho = FockDensity.pure(coherent_vector(alpha, dim))
    if abs(alpha) ** 2 > dim / 4 or rho.tail_population > 1e-3:
        warnings.warn(
            f"coherent amplitude {alpha} poorly resolved at dim={dim} "
            f"(tail population {rho.tail_population:.2e})",
            TruncationWarning,
            stacklevel=2,
        )
    return rho


def squeezed_vacuum_vector(r: float, phi: float, dim: int) -> np.ndarray:
    v = np.zeros(dim, dtype=complex)
    m = np.arange((dim + 1) // 2)
    t = np.tanh(r)
    with np.errstate(divide="ignore"):
        log_mag = m * np.log(t) if t > 0 else np.where(m == 0, 0.0, -np.inf)
    log_mag = log_mag + 0.5 * gammaln(2 * m + 1) - gammaln(m + 1) - m * np.log(2)
    v[2 * m] = np.exp(log_mag) * (-np.exp(1j * phi)) ** m
    return v / np.linalg.norm(v)


def thermal_fock(N: float, dim: int) -> FockDensity:
    """Thermal state populations N^n / (N+1)^(n+1), not renormalized."""
    if N == 0:
        return vacuum(dim)
    n = np.arange(dim)
    p = np.exp(n * np.log(N) - (n + 1) * np.log1p(N))
    return FockDensity(np.diag(p))


# --- channels ----------------------------------------------------------------


def kraus_loss(eta: float, dim: int) -> KrausSet:
    """Quantum-limited attenuator; exactly complete on the truncated space."""
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"transmissivity must lie in [0, 1], got {eta}")
    ops = []
    for k in range(dim):
        K = np.zeros((dim, dim))
        for n in range(k, dim):
            K[n - k, n] = math.sqrt(math.comb(n, k) * eta ** (n - k) * (1 - eta) ** k)
        if K.any():
            ops.append(K)
    return KrausSet(np.array(ops))


def kraus_amp(
    kappa: float, dim_in: int, dim_out: Optional[int] = None, budget: Optional[float] = None
) -> KrausSet:
    """Quantum-limited amplifier, ``<n+k|K_k|n> = sqrt(C(n+k,k)) kappa^-(n+1)/2 (1-1/kappa)^(k/2)``.

    Operators are truncated at ``dim_out`` output levels; with ``budget`` set,
    raises if any input level loses more population than that.
    """
    if kappa < 1:
        raise ValueError(f"gain must be >= 1, got {kappa}")
    if dim_out is None:
        dim_out = default_dim_out(kappa, dim_in, budget or DEFAULT_BUDGET)
    if dim_out < dim_in:
        raise DimensionMismatch("amplifier output truncation must be >= input truncation")
    c = amp_coefficients(kappa, dim_in, dim_out)
    ops = np.zeros((dim_out, dim_out, dim_in))
    for n in range(dim_in):
        k = np.arange(dim_out - n)
        ops[k, n + k, n] = c[n, k]
    ops = ops[np.abs(ops).max(axis=(1, 2)) > 0]
    kraus = KrausSet(ops)
    if budget is not None:
        lost = kraus.lost_population().max()
        if lost > budget:
            raise TruncationBudgetExceeded(lost, budget, f"kraus_amp(kappa={kappa}, dim_out={dim_out})")
    return kraus


def kraus_contra_amp(
    kappa: float,
    dim_in: int,
    dim_out: Optional[int] = None,
    budget: Optional[float] = None,
    signal_dim: Optional[int] = None,
) -> KrausSet:
    """Contravariant quantum-limited amplifier: idler output of the squeezer.

    One operator per signal photon number s, ``<s-n|L_s|n> = <s, s-n|U|n, 0>``.
    The idler is truncated at ``dim_out`` levels; the signal index is summed
    in full unless ``signal_dim`` cuts it, which makes the operators the
    complement of ``kraus_amp(kappa, dim_in, signal_dim)``.
    """
    if kappa < 1:
        raise ValueError(f"gain must be >= 1, got {kappa}")
    if dim_out is None:
        dim_out = default_dim_out(kappa, dim_in, budget or DEFAULT_BUDGET)
    c = amp_coefficients(kappa, dim_in, dim_out)
    n_sig = dim_in + dim_out - 1 if signal_dim is None else signal_dim
    ops = np.zeros((n_sig, dim_out, dim_in))
    for n in range(dim_in):
        k = np.arange(dim_out)
        k = k[n + k < n_sig]
        ops[n + k, k, n] = c[n, k]
    ops = ops[np.abs(ops).max(axis=(1, 2)) > 0]
    kraus = KrausSet(ops)
    if budget is not None:
        lost = kraus.lost_population().max()
        if lost > budget:
            raise TruncationBudgetExceeded(lost, budget, f"kraus_contra_amp(kappa={kappa}, dim_out={dim_out})")
    return kraus


def apply_kraus_matrix(kraus: KrausSet, matrix: np.ndarray) -> np.ndarray:
    ops = kraus.operators
    out = np.einsum("kij,jl,kml->im", ops, matrix, ops.conj(), optimize=True)
    return (out + out.conj().T) / 2


def apply_kraus(kraus: KrausSet, rho: FockDensity, renormalize: bool = False) -> FockDensity:
    """sum_k K rho K^dag, symmetrized; lost population stays lost unless ``renormalize``."""
    if rho.modes != 1 or rho.matrix.shape[0] != kraus.dim_in:
        raise DimensionMismatch(
            f"Kraus input dimension {kraus.dim_in} vs state {rho.matrix.shape} ({rho.modes} modes)"
        )
    out = apply_kraus_matrix(kraus, rho.matrix)
    if renormalize:
        out = out / np.trace(out).real
    return FockDensity(out)


def _check_lost(before: FockDensity, after: FockDensity, budget: float, where: str) -> None:
    lost = after.trace_defect - before.trace_defect
    if lost > budget:
        raise TruncationBudgetExceeded(lost, budget, where)


def apply_amp(kappa: float, rho: FockDensity, truncation: Truncation = Truncation()) -> FockDensity:
    kraus = kraus_amp(kappa, rho.dim, truncation.dim_out or default_dim_out(kappa, rho.dim, truncation.budget))
    out = apply_kraus(kraus, rho)
    _check_lost(rho, out, truncation.budget, f"amplifier kappa={kappa}")
    return out


def apply_contra_amp(kappa: float, rho: FockDensity, truncation: Truncation = Truncation()) -> FockDensity:
    dim_out = truncation.dim_out or default_dim_out(kappa, rho.dim, truncation.budget)
    out = apply_kraus(kraus_contra_amp(kappa, rho.dim, dim_out), rho)
    _check_lost(rho, out, truncation.budget, f"contravariant amplifier kappa={kappa}")
    return out


def apply_loss(eta: float, rho: FockDensity) -> FockDensity:
    return apply_kraus(kraus_loss(eta, rho.dim), rho)


def apply_decomposition(dec: Decomposition, rho: FockDensity, truncation: Truncation = Truncation()) -> FockDensity:
    mid = rho if dec.eta0 == 1.0 else apply_loss(dec.eta0, rho)
    if dec.conjugating:
        return apply_contra_amp(dec.kappa0, mid, truncation)
    if dec.kappa0 == 1.0:
        return mid
    return apply_amp(dec.kappa0, mid, truncation)


def apply_family(family: ChannelFamily, rho: FockDensity, truncation: Truncation = Truncation()) -> FockDensity:
    """Realize a channel family in Fock space as loss followed by quantum-limited amplification."""
    if rho.modes != 1:
        raise DimensionMismatch("apply_family acts on single-mode states")
    dec = channels.decompose(channels.canonical_params(family))
    return apply_decomposition(dec, rho, truncation)


def apply_params(params: channels.ChannelParams, rho: FockDensity, truncation: Truncation = Truncation()) -> FockDensity:
    return apply_decomposition(channels.decompose(params), rho, truncation)


def dilation_amplitudes(kappa: float, psi: np.ndarray, dim_out: int) -> np.ndarray:
    """Joint amplitude matrix ``Omega[s, k] = <s, k| U |psi, 0>`` truncated to s < dim_out."""
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    dim_in = psi.shape[0]
    c = amp_coefficients(kappa, dim_in, dim_out)
    omega = np.zeros((dim_out, dim_out), dtype=complex)
    for n in range(min(dim_in, dim_out)):
        k = np.arange(dim_out - n)
        omega[n + k, k] = psi[n] * c[n, k]
    return omega


@dataclass(frozen=True, eq=False)
class DilationOutput:
    signal_out: FockDensity
    idler_out: FockDensity
    lost_population: float


def contra_amp_dilation(
    kappa: float, psi: FockDensity | np.ndarray, dim_out: Optional[int] = None, budget: float = DEFAULT_BUDGET
) -> DilationOutput:
    """Both reductions of ``U (psi x |0>)``: signal = amplifier, idler = contravariant amplifier."""
    vec = psi.vector() if isinstance(psi, FockDensity) else np.asarray(psi, dtype=complex)
    if isinstance(psi, FockDensity) and not psi.is_pure():
        raise ValueError("dilation expects a pure input state")
    if dim_out is None:
        dim_out = default_dim_out(kappa, vec.shape[0], budget)
    omega = dilation_amplitudes(kappa, vec, dim_out)
    lost = float(np.vdot(vec, vec).real - np.vdot(omega, omega).real)
    if lost > budget:
        raise TruncationBudgetExceeded(lost, budget, f"dilation kappa={kappa}, dim_out={dim_out}")
    signal = omega @ omega.conj().T
    idler = omega.T @ omega.conj()
    return DilationOutput(FockDensity(signal), FockDensity(idler), lost)


def amp_output_spectrum(kappa: float, psi: np.ndarray, dim_out: int) -> tuple[np.ndarray, float]:
    """Spectrum of the amplifier output for a pure input, and the population lost.

    Uses the singular values of the dilation amplitudes rather than forming
    the output density matrix.
    """
    omega = dilation_amplitudes(kappa, psi, dim_out)
    sv = np.linalg.svd(omega, compute_uv=False)
    lost = float(np.vdot(psi, psi).real - np.sum(sv**2))
    return np.sort(sv**2)[::-1], lost


def measure_prepare_conjugate(rho: FockDensity, beta: complex, dim_out: int) -> np.ndarray:
    """Coherent-state measure-and-prepare map ``int d^2z/pi |beta z*><beta z*| <z|rho|z>``.

    Evaluated in closed form in the Fock basis.  With ``beta = sqrt(kappa - 1)``
    it reproduces the contravariant amplifier of gain kappa.
    """
    r = rho.matrix
    d_in = r.shape[0]
    b2 = abs(beta) ** 2
    out = np.zeros((dim_out, dim_out), dtype=complex)
    lf = gammaln(np.arange(d_in + dim_out + 1) + 1)
    for p in range(dim_out):
        for q in range(dim_out):
            acc = 0.0j
            for m in range(d_in):
                n = m + p - q
                if not 0 <= n < d_in or r[m, n] == 0:
                    continue
                log_w = lf[m + p] - 0.5 * (lf[m] + lf[n] + lf[p] + lf[q]) - (m + p + 1) * math.log1p(b2)
                acc += r[m, n] * math.exp(log_w)
            if acc != 0:
                out[p, q] = acc * beta**p * np.conj(beta) ** q
    return out


# --- spectral utilities ---------------------------------------------------


def _matrix(rho) -> np.ndarray:
    return rho.matrix if isinstance(rho, FockDensity) else np.asarray(rho)


def spectrum(rho) -> np.ndarray:
    """Eigenvalues sorted descending."""
    m = _matrix(rho)
    if np.abs(m - m.conj().T).max(initial=0.0) > HERMITIAN_TOL * max(1.0, np.abs(m).max()):
        raise NonHermitian("spectrum of a non-Hermitian matrix requested")
    return np.linalg.eigvalsh((m + m.conj().T) / 2)[::-1]


def entropy(rho) -> float:
    return spectral_entropy(spectrum(rho))


def trace_distance(a, b) -> float:
    ma, mb = _matrix(a), _matrix(b)
    if ma.shape != mb.shape:
        n = max(ma.shape[0], mb.shape[0])
        ma = np.pad(ma, (0, n - ma.shape[0]))
        mb = np.pad(mb, (0, n - mb.shape[0]))
    d = ma - mb
    return float(0.5 * np.abs(np.linalg.eigvalsh((d + d.conj().T) / 2)).sum())


def partial_trace(rho: FockDensity, traced_mode: int) -> FockDensity:
    """Trace out ``traced_mode`` of a multi-mode state."""
    if not 0 <= traced_mode < rho.modes:
        raise DimensionMismatch(f"mode {traced_mode} out of range for {rho.modes} modes")
    d, m = rho.dim, rho.modes
    t = rho.matrix.reshape((d,) * (2 * m))
    t = np.trace(t, axis1=traced_mode, axis2=traced_mode + m)
    return FockDensity(t.reshape(d ** (m - 1), d ** (m - 1)), m - 1)


def mean_photons(rho: FockDensity) -> float:
    """Expected total photon number summed over all modes."""
    d, m = rho.dim, rho.modes
    pops = np.diag(rho.matrix).real.reshape((d,) * m)
    total = sum(np.indices(pops.shape))
    return float((pops * total).sum())


def conj_fock(rho: FockDensity) -> FockDensity:
    """Entrywise complex conjugation in the Fock basis (transposition)."""
    return FockDensity(rho.matrix.conj(), rho.modes)


# --- samplers ---------------------------------------------------------------

SAMPLER_FAMILIES = ("haar", "fock", "coherent_grid", "squeezed_grid")


def haar_vector(dim: int, seed: int, index: int) -> np.ndarray:
    """Haar-random unit vector; a pure function of (seed, index)."""
    rng = np.random.default_rng([seed, index])
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v / np.linalg.norm(v)


def coherent_grid(dim_in: int) -> list[complex]:
    r_max = math.sqrt(dim_in / 4)
    alphas = [0j]
    for r in np.linspace(r_max / 6, r_max, 6):
        for th in np.linspace(0, 2 * np.pi, 8, endpoint=False):
            alphas.append(complex(r * np.cos(th), r * np.sin(th)))
    return alphas


def squeezed_grid(dim_in: int) -> list[tuple[float, float]]:
    return [(r, phi) for r in (0.05, 0.1, 0.2, 0.35, 0.5, 0.75, 1.0) for phi in (0.0, np.pi / 2, np.pi)]


def sample_pure_vectors(dim_in: int, count: Optional[int], seed: int, family: str = "haar") -> Iterator[np.ndarray]:
    """Deterministic stream of normalized state vectors on ``dim_in`` levels.

    ``count`` caps the number of vectors; grid families yield at most their
    grid size.
    """
    if dim_in < 2:
        raise ValueError("dim_in must be >= 2")
    if family == "haar":
        if count is None:
            raise ValueError("haar sampling needs a count")
        for i in range(count):
            yield haar_vector(dim_in, seed, i)
        return
    if family == "fock":
        items = (fock_vector(n, dim_in) for n in range(dim_in))
    elif family == "coherent_grid":
        items = (coherent_vector(a, dim_in) for a in coherent_grid(dim_in))
    elif family == "squeezed_grid":
        items = (squeezed_vacuum_vector(r, phi, dim_in) for r, phi in squeezed_grid(dim_in))
    else:
        raise ValueError(f"unknown sampler family {family!r}; expected one of {SAMPLER_FAMILIES}")
    for i, v in enumerate(items):
        if count is not None and i >= count:
            return
        yield v


def sample_pure_states(dim_in: int, count: Optional[int], seed: int, family: str = "haar") -> Iterator[FockDensity]:
    for v in sample_pure_vectors(dim_in, count, seed, family):
        yield FockDensity.pure(v)


# --- consistency with the phase-space picture --------------------------------


def self_test(tol: float = 1e-8) -> None:
    """Check the Kraus constructions against closed forms before any verification run.

    Loss must fix the vacuum and keep coherent states coherent; the amplifier
    must turn the vacuum into a thermal state of mean kappa - 1.
    """
    from .entropy import g

    d = 12
    vac = vacuum(d)
    for eta in (0.0, 0.3, 1.0):
        if trace_distance(apply_loss(eta, vac), vac) > tol:
            raise AssertionError(f"loss eta={eta} moves the vacuum")
    out = apply_loss(0.36, FockDensity.pure(coherent_vector(0.5, 30)))
    if trace_distance(out, FockDensity.pure(coherent_vector(0.3, 30))) > tol:
        raise AssertionError("loss does not map coherent states to coherent states")
    for kappa in (1.0, 1.5, 2.0):
        for op in (apply_amp, apply_contra_amp):
            o = op(kappa, vac)
            if abs(entropy(o) - g(kappa - 1)) > tol or abs(mean_photons(o) - (kappa - 1)) > tol:
                raise AssertionError(f"{op.__name__} kappa={kappa} on vacuum is not thermal(kappa-1)")
