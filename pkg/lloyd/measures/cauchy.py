"""Cauchy (Lorentzian) single-site distribution psi_lambda."""
from dataclasses import dataclass

import numpy as np

from core.exceptions import InvalidArgumentError


@dataclass(frozen=True)
class CauchyKernel:
    """Cauchy law of scale ``scale`` (the disorder strength lambda)."""

    scale: float

    def __post_init__(self):
        if not (np.isfinite(self.scale) and self.scale > 0):
            raise InvalidArgumentError(
                f'Cauchy scale must be positive and finite, got {self.scale}'
            )

    def shifted(self, extra):
        """Kernel of the sum of independent Cauchy scales."""
        return CauchyKernel(self.scale + extra)


def cauchy_density(kernel, x):
    x = np.asarray(x, dtype=float)
    scale = kernel.scale
    return scale / (np.pi * (scale * scale + x * x))


def cauchy_charfn(kernel, s):
    return np.exp(-kernel.scale * np.abs(np.asarray(s, dtype=float)))


def cauchy_cdf(kernel, x):
    return 0.5 + np.arctan(np.asarray(x, dtype=float) / kernel.scale) / np.pi


def tail_mass(kernel, half_width):
    """Mass of psi_lambda outside [-half_width, half_width]."""
    return 1.0 - 2.0 * np.arctan(half_width / kernel.scale) / np.pi


def window_tail_mass(kernel, low, high):
    """Mass of psi_lambda outside [low, high]; any signs of the ends."""
    return 0.5 * (tail_mass(kernel, -low) + tail_mass(kernel, high))


def cauchy_sample(kernel, u):
    """Inverse-CDF transform of uniforms ``u`` in the open interval (0, 1)."""
    u = np.asarray(u, dtype=float)
    if np.any(~((u > 0.0) & (u < 1.0))):
        raise InvalidArgumentError('uniform variates must lie in (0, 1)')
    return kernel.scale * np.tan(np.pi * (u - 0.5))
