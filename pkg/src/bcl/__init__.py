"""Single-mode bosonic Gaussian channels in phase space and truncated Fock space.

Besides closed-form capacities, the package checks numerically that no input
beats the vacuum at the output of the quantum-limited amplifier.
"""

from .capacity import (
    CapacityResult,
    GridConfig,
    capacity_bound,
    classical_capacity,
    min_output_entropy,
    plot_data,
    write_csv,
)
from .channels import (
    AdditiveNoise,
    Amplifier,
    ChannelParams,
    Classification,
    ContraAmplifier,
    Decomposition,
    Thermal,
    canonical_params,
    classify,
    classify_family,
    compose,
    decompose,
    is_physical,
    recompose,
    transpose_channel,
)
from .entropy import g
from .errors import BclError, NonPhysical, TruncationBudgetExceeded
from .fock import FockDensity, KrausSet, Truncation
from .phase_space import GaussianState
from .verification import SuiteConfig, VerificationReport, run_all, run_one

__version__ = "0.1.0"
