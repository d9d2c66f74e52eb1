"""Canonical (tau, y) description of single-mode phase-covariant and
phase-contravariant Gaussian channels.

A covariant channel acts on the symmetrically ordered characteristic function
as ``chi(z) -> chi(sqrt(tau) z) exp(-y |z|^2 / 2)``; a contravariant one
conjugates the argument first.  ``tau`` is stored signed: non-negative for
covariant channels and non-positive for contravariant ones, so that the
physicality bound reads ``y >= |tau - 1|`` in both cases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import NonPhysical, UnsupportedDirection

BOUNDARY_TOL = 1e-12


@dataclass(frozen=True)
class ChannelParams:
    tau: float
    y: float
    conjugating: bool = False

    def __post_init__(self):
        if not (math.isfinite(self.tau) and math.isfinite(self.y)):
            raise ValueError("tau and y must be finite")
        if self.y < 0:
            raise ValueError(f"added noise y must be >= 0, got {self.y}")
        if self.conjugating and self.tau > 0:
            raise ValueError("contravariant channels carry tau <= 0")
        if not self.conjugating and self.tau < 0:
            raise ValueError("covariant channels carry tau >= 0")

    @property
    def gain(self) -> float:
        """|tau|, the factor multiplying the input covariance."""
        return abs(self.tau)

    @property
    def noise_floor(self) -> float:
        # smallest admissible y for this gain
        if self.conjugating:
            return self.gain + 1.0
        return abs(self.tau - 1.0)


@dataclass(frozen=True)
class Thermal:
    eta: float
    N: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.eta <= 1.0:
            raise ValueError(f"transmissivity must lie in [0, 1], got {self.eta}")
        if self.N < 0:
            raise ValueError(f"thermal photon number must be >= 0, got {self.N}")


@dataclass(frozen=True)
class AdditiveNoise:
    n: float

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"noise variance must be >= 0, got {self.n}")


@dataclass(frozen=True)
class Amplifier:
    kappa: float
    N: float = 0.0

    def __post_init__(self):
        if self.kappa < 1:
            raise ValueError(f"gain must be >= 1, got {self.kappa}")
        if self.N < 0:
            raise ValueError(f"thermal photon number must be >= 0, got {self.N}")


@dataclass(frozen=True)
class ContraAmplifier:
    kappa: float
    N: float = 0.0

    def __post_init__(self):
        if self.kappa < 1:
            raise ValueError(f"gain must be >= 1, got {self.kappa}")
        if self.N < 0:
            raise ValueError(f"thermal photon number must be >= 0, got {self.N}")


ChannelFamily = Union[Thermal, AdditiveNoise, Amplifier, ContraAmplifier]


@dataclass(frozen=True)
class Classification:
    is_physical: bool
    is_quantum_limited: bool
    is_entanglement_breaking: bool


@dataclass(frozen=True)
class Decomposition:
    """Loss stage ``eta0`` followed by a quantum-limited amplifier ``kappa0``.

    With ``conjugating`` set the amplifier stage is the contravariant
    (idler-side) quantum-limited amplifier.
    """

    eta0: float
    kappa0: float
    conjugating: bool = False


def canonical_params(family: ChannelFamily) -> ChannelParams:
    match family:
        case Thermal(eta=eta, N=N):
            return ChannelParams(eta, (1 - eta) * (2 * N + 1))
        case AdditiveNoise(n=n):
            return ChannelParams(1.0, 2 * n)
        case Amplifier(kappa=k, N=N):
            return ChannelParams(k, (k - 1) * (2 * N + 1))
        case ContraAmplifier(kappa=k, N=N):
            return ChannelParams(-(k - 1), k * (2 * N + 1), True)
    raise TypeError(f"not a channel family: {family!r}")


def classify(params: ChannelParams, tol: float = BOUNDARY_TOL) -> Classification:
    floor = params.noise_floor
    physical = params.y >= floor - tol
    return Classification(
        is_physical=physical,
        is_quantum_limited=physical and abs(params.y - floor) <= tol,
        is_entanglement_breaking=params.y >= params.gain + 1.0 - tol,
    )


def classify_family(family: ChannelFamily) -> Classification:
    """Classification decided from the family parameters, not from floats.

    Every family member is physical, and quantum-limited exactly when its
    environment is the vacuum.
    """
    params = canonical_params(family)
    limited = family.n == 0 if isinstance(family, AdditiveNoise) else family.N == 0
    if isinstance(family, ContraAmplifier):
        breaking = True
    else:
        breaking = classify(params).is_entanglement_breaking
    return Classification(True, limited, breaking)


def is_physical(params: ChannelParams) -> bool:
    return classify(params).is_physical


def _require_physical(params: ChannelParams) -> None:
    if not is_physical(params):
        raise NonPhysical(
            f"y={params.y} below the physical bound {params.noise_floor} "
            f"(tau={params.tau}, conjugating={params.conjugating})"
        )


def loss(eta: float) -> ChannelParams:
    """Quantum-limited attenuator of transmissivity ``eta``."""
    return canonical_params(Thermal(eta, 0.0))


def amp(kappa: float) -> ChannelParams:
    """Quantum-limited amplifier of gain ``kappa``."""
    return canonical_params(Amplifier(kappa, 0.0))


def contra_amp(kappa: float) -> ChannelParams:
    """Quantum-limited contravariant amplifier (idler output of a two-mode squeezer)."""
    return canonical_params(ContraAmplifier(kappa, 0.0))


IDENTITY = ChannelParams(1.0, 0.0)


def decompose(params: ChannelParams) -> Decomposition:
    """Split a physical channel into quantum-limited loss then amplification.

    Covariant: tau = eta0 kappa0, y = kappa0 (1 - eta0) + kappa0 - 1.
    Contravariant: |tau| = eta0 (kappa0 - 1), y = (kappa0 - 1)(1 - eta0) + kappa0.
    In both cases y + |tau| = 2 kappa0 - 1.
    """
    _require_physical(params)
    g = params.gain
    # clip: inputs within BOUNDARY_TOL of the bound may land marginally outside
    kappa0 = max((params.y + g + 1.0) / 2.0, 1.0)
    if params.conjugating:
        # kappa0 == 1 forces |tau| == 0: the output is vacuum whatever eta0 is
        eta0 = 1.0 if kappa0 == 1.0 else min(g / (kappa0 - 1.0), 1.0)
    else:
        eta0 = min(g / kappa0, 1.0)
    return Decomposition(eta0, kappa0, params.conjugating)


def recompose(dec: Decomposition) -> ChannelParams:
    first = loss(dec.eta0)
    second = contra_amp(dec.kappa0) if dec.conjugating else amp(dec.kappa0)
    return compose(first, second)


def compose(first: ChannelParams, second: ChannelParams) -> ChannelParams:
    """Channel obtained by applying ``first`` and then ``second``."""
    _require_physical(first)
    _require_physical(second)
    gain = first.gain * second.gain
    y = second.gain * first.y + second.y
    conjugating = first.conjugating != second.conjugating
    out = ChannelParams(-gain if conjugating else gain, y, conjugating)
    assert is_physical(out), out
    return out


def transpose_channel(params: ChannelParams) -> ChannelParams:
    """Complex conjugation of the output in the Fock basis.

    Turns a contravariant channel into the covariant one with the same gain
    and noise; for the quantum-limited contravariant amplifier of gain k this
    is the entanglement-breaking channel (tau=k-1, y=k).
    """
    if not params.conjugating:
        raise UnsupportedDirection("transposition is only defined here for contravariant input")
    return ChannelParams(params.gain, params.y, False)
