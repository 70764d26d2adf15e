"""Root spectral density of the Bethe lattice (Kesten-McKay law)."""
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from core.exceptions import InvalidArgumentError, OutsideStripError

QUAD_ABS_TOL: float = 1e-10


@dataclass(frozen=True)
class BetheFreeModel:
    """Adjacency of the infinite tree where every vertex has degree K + 1."""

    branching: int

    def __post_init__(self):
        if int(self.branching) != self.branching or self.branching < 2:
            raise InvalidArgumentError(
                f'branching number must be an integer >= 2: {self.branching}'
            )

    @property
    def band_edge(self):
        return 2.0 * math.sqrt(self.branching)


def kesten_mckay_density(model, energy):
    k = model.branching
    energy = np.asarray(energy, dtype=float)
    inside = np.abs(energy) < model.band_edge
    squared = np.where(inside, energy * energy, 0.0)
    density = (k + 1) * np.sqrt(4 * k - squared) / (
        2 * np.pi * ((k + 1) ** 2 - squared)
    )
    return np.where(inside, density, 0.0)


def _angular_weight(model, theta):
    # Kesten-McKay density in x = 2 sqrt(K) cos(theta), times dx/dtheta
    k = model.branching
    sine = math.sin(theta)
    cosine = math.cos(theta)
    return (k + 1) * 4 * k * sine * sine / (
        2 * np.pi * ((k + 1) ** 2 - 4 * k * cosine * cosine)
    )


def bethe_dos_smoothed(model, kernel, energy, tol=QUAD_ABS_TOL):
    """(psi_lambda * rho_KM)(E), also for complex E with |Im E| < lambda."""
    energy = np.asarray(energy)
    scale = kernel.scale
    is_complex = np.iscomplexobj(energy)
    flat = energy.ravel().astype(complex)
    if flat.size and np.max(np.abs(flat.imag)) >= scale:
        raise OutsideStripError(float(np.max(np.abs(flat.imag))), scale)
    edge = model.band_edge
    values = np.empty(flat.size, dtype=complex)
    for index, z in enumerate(flat):
        points = None
        if abs(z.real) < edge:
            points = [math.acos(z.real / edge)]

        def poisson(theta):
            gap = z - edge * math.cos(theta)
            return scale / (np.pi * (scale * scale + gap * gap))

        real, _ = quad(
            lambda theta: _angular_weight(model, theta) * poisson(theta).real,
            0.0, math.pi, points=points, epsabs=tol, limit=400,
        )
        imag = 0.0
        if is_complex:
            imag, _ = quad(
                lambda theta: (
                    _angular_weight(model, theta) * poisson(theta).imag
                ),
                0.0, math.pi, points=points, epsabs=tol, limit=400,
            )
        values[index] = complex(real, imag)
    values = values.reshape(energy.shape)
    if not is_complex:
        values = values.real
    return values if values.ndim else values[()]
