"""Entropy helpers shared by the phase-space and Fock representations.

All entropies are in bits.
"""

import math

import numpy as np

from .errors import NegativeArgument

EIG_CLAMP = 1e-14
_LN2 = math.log(2.0)


def g(x: float) -> float:
    """Entropy of a thermal state with mean photon number ``x``.

    ``g(x) = (x+1) log2(x+1) - x log2(x)`` with ``g(0) = 0``.
    """
    x = float(x)
    if x < 0:
        if x > -1e-13:
            x = 0.0
        else:
            raise NegativeArgument(f"g is defined for x >= 0, got {x}")
    if x == 0.0:
        return 0.0
    # log2(1+x) + x log2(1+1/x): no cancellation at either end of the range
    tail = x * (math.log1p(x) - math.log(x)) if x < 1.0 else x * math.log1p(1.0 / x)
    return (math.log1p(x) + tail) / _LN2


def spectral_entropy(eigenvalues) -> float:
    """-sum(p log2 p) with eigenvalues below ``EIG_CLAMP`` dropped."""
    p = np.asarray(eigenvalues, dtype=float)
    p = p[p > EIG_CLAMP]
    return float(-np.sum(p * np.log2(p)))
