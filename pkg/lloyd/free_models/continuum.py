"""Free one-dimensional Laplacian and its Cauchy-smoothed IDS."""
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

QUAD_ABS_TOL: float = 1e-10


@dataclass(frozen=True)
class ContinuumFreeModel:
    """-d^2/dx^2 on the real line; its IDS per unit length is sqrt(E)/pi."""


def continuum_free_ids(model, energy):
    energy = np.asarray(energy, dtype=float)
    return np.sqrt(np.maximum(energy, 0.0)) / np.pi


def continuum_ids_smoothed(model, kernel, energy, tol=QUAD_ABS_TOL):
    """(psi_lambda * N_0)(E) with N_0(E) = sqrt(max(E, 0)) / pi.

    With E' = E - lambda tan(theta) the Cauchy weight becomes d theta / pi,
    and N_0 vanishes for theta above arctan(E / lambda).
    """
    scale = kernel.scale
    energy = np.asarray(energy, dtype=float)
    values = np.empty(energy.size)
    for index, e in enumerate(energy.ravel()):
        upper = math.atan(e / scale)

        def integrand(theta):
            return math.sqrt(max(e - scale * math.tan(theta), 0.0))

        integral, _ = quad(
            integrand, -math.pi / 2, upper, epsabs=tol, limit=400
        )
        values[index] = integral / (np.pi * np.pi)
    values = values.reshape(energy.shape)
    return values if values.ndim else values[()]
