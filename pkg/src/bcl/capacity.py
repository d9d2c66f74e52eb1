"""Closed-form minimum output entropies and energy-constrained classical
capacities of the four channel families, plus plot data for their curves.

Capacities are in bits per channel use.  The minimum output entropy is the
entropy of the vacuum output; the maximum output entropy under a mean photon
number constraint E is attained by the thermal input of mean E, so the
capacity is ``g(output photons at E) - g(output photons at 0)``.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import phase_space
from .channels import (
    AdditiveNoise,
    Amplifier,
    ChannelFamily,
    ChannelParams,
    ContraAmplifier,
    Thermal,
    is_physical,
)
from .entropy import g
from .errors import InvalidGrid, NonPhysical

__all__ = [
    "g",
    "CapacityResult",
    "GridConfig",
    "output_photons",
    "min_output_entropy",
    "classical_capacity",
    "capacity_bound",
    "plot_data",
    "write_csv",
    "PANELS",
]


@dataclass(frozen=True)
class CapacityResult:
    family: ChannelFamily
    energy_E: float
    capacity_bits: float
    min_output_entropy_bits: float
    max_output_entropy_bits: float


def output_photons(family: ChannelFamily, E: float) -> float:
    """Mean photon number of the (thermal) output for a thermal input of mean E."""
    match family:
        case Thermal(eta=eta, N=N):
            return eta * E + (1 - eta) * N
        case AdditiveNoise(n=n):
            return E + n
        case Amplifier(kappa=k, N=N):
            return k * E + (k - 1) * (N + 1)
        case ContraAmplifier(kappa=k, N=N):
            return k * N + (k - 1) * (E + 1)
    raise TypeError(f"not a channel family: {family!r}")


def min_output_entropy(family: ChannelFamily) -> float:
    match family:
        case Thermal(eta=eta, N=N):
            return g((1 - eta) * N)
        case AdditiveNoise(n=n):
            return g(n)
        case Amplifier(kappa=k, N=N):
            return g((k - 1) * (N + 1))
        case ContraAmplifier(kappa=k, N=N):
            return g(k * (N + 1) - 1)
    raise TypeError(f"not a channel family: {family!r}")


def classical_capacity(family: ChannelFamily, E: float) -> CapacityResult:
    if E < 0:
        raise ValueError(f"energy constraint must be >= 0, got {E}")
    s_min = min_output_entropy(family)
    # at E = 0 both closed forms name the vacuum output; avoid rounding noise
    s_max = s_min if E == 0 else g(output_photons(family, E))
    return CapacityResult(family, E, s_max - s_min, s_min, s_max)


def capacity_bound(params: ChannelParams, E: float) -> float:
    """S(Phi(thermal E)) - S(Phi(vacuum)) computed from covariance matrices."""
    if not is_physical(params):
        raise NonPhysical(f"{params} is not a physical channel")
    if E < 0:
        raise ValueError(f"energy constraint must be >= 0, got {E}")
    hi = phase_space.gaussian_entropy(phase_space.apply_channel(params, phase_space.thermal_state(E)))
    lo = phase_space.gaussian_entropy(phase_space.apply_channel(params, phase_space.vacuum()))
    return hi - lo


# --- plot data ---------------------------------------------------------------

PANELS = ("fig2a", "fig2b", "fig2c", "fig2d")


@dataclass(frozen=True)
class GridConfig:
    points: int = 201
    kappa_max: float = 3.0
    energy: float = 10.0
    fig2a_N: Sequence[float] = (0, 1, 5, 10, 20, 40, 100, 200)
    fig2b_N: Sequence[float] = (0, 1, 5, 10)
    fig2c_N: Sequence[float] = (0, 2, 5, 10, 20, 40)
    fig2d_n: Sequence[float] = field(default_factory=lambda: tuple(np.linspace(0.0, 10.0, 51)))
    fig2d_E: Sequence[float] = (0, 1, 2, 5, 10, 20)

    def validate(self) -> None:
        if self.points < 2:
            raise InvalidGrid("need at least two grid points")
        if not self.kappa_max > 1:
            raise InvalidGrid("kappa axis must extend beyond 1")
        if self.energy < 0 or any(e < 0 for e in self.fig2d_E):
            raise InvalidGrid("energies must be >= 0")
        for Ns in (self.fig2a_N, self.fig2b_N, self.fig2c_N, self.fig2d_n):
            if len(Ns) == 0 or any(v < 0 for v in Ns):
                raise InvalidGrid("noise parameters must be >= 0 and non-empty")

    def eta_axis(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.points)

    def kappa_axis(self) -> np.ndarray:
        return np.linspace(1.0, self.kappa_max, self.points)


Row = tuple[str, str, float, float]


def _label(name: str, **params) -> str:
    return name + "[" + ";".join(f"{k}={v:g}" for k, v in params.items()) + "]"


def plot_data(panel: str, grid: GridConfig = GridConfig()) -> list[Row]:
    """Rows ``(panel, series, x, value)`` sorted by (series, x)."""
    grid.validate()
    E = grid.energy
    rows: list[Row] = []
    if panel == "fig2a":
        for N in grid.fig2a_N:
            for eta in grid.eta_axis():
                rows.append((panel, _label("C_thermal", N=N), eta, classical_capacity(Thermal(eta, N), E).capacity_bits))
            for k in grid.kappa_axis():
                rows.append((panel, _label("C_amp", N=N), k, classical_capacity(Amplifier(k, N), E).capacity_bits))
    elif panel == "fig2b":
        for N in grid.fig2b_N:
            for k in grid.kappa_axis():
                rows.append((panel, _label("C_amp", N=N), k, classical_capacity(Amplifier(k, N), E).capacity_bits))
                rows.append((panel, _label("C_contra", N=N), k, classical_capacity(ContraAmplifier(k, N), E).capacity_bits))
    elif panel == "fig2c":
        for N in grid.fig2c_N:
            for eta in grid.eta_axis():
                rows.append((panel, _label("Smin_thermal", N=N), eta, min_output_entropy(Thermal(eta, N))))
            for k in grid.kappa_axis():
                rows.append((panel, _label("Smin_amp", N=N), k, min_output_entropy(Amplifier(k, N))))
                rows.append((panel, _label("Smin_contra", N=N), k, min_output_entropy(ContraAmplifier(k, N))))
    elif panel == "fig2d":
        for n in grid.fig2d_n:
            for e in grid.fig2d_E:
                rows.append((panel, _label("C_addnoise", E=e), n, classical_capacity(AdditiveNoise(n), e).capacity_bits))
            rows.append((panel, "Smin_addnoise", n, min_output_entropy(AdditiveNoise(n))))
    else:
        raise InvalidGrid(f"unknown panel {panel!r}; expected one of {PANELS}")
    rows.sort(key=lambda r: (r[1], r[2]))
    return rows


def format_number(v: float) -> str:
    """17 significant digits: enough for an exact float round trip."""
    return f"{float(v):.17g}"


def write_csv(rows: list[Row], stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["panel", "series", "x", "value"])
    for panel, series, x, value in rows:
        writer.writerow([panel, series, format_number(x), format_number(value)])


def to_csv(rows: list[Row]) -> str:
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()
