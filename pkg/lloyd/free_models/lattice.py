"""Free adjacency operator of Z^d and its Cauchy-smoothed root measure.

The smoothed density is computed in the time domain,

    p(E) = (1/pi) int_0^inf exp(-lambda t) cos(E t) J_0(2t)^d dt,

which converges exponentially and stays finite for complex E inside the
strip |Im E| < lambda.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad_vec

from core.exceptions import InvalidArgumentError, OutsideStripError
from .special import bessel_j, bessel_j_signed

logger = logging.getLogger(__name__)

# the integrand envelope is cut where it drops below this
CUTOFF: float = 1e-14
QUAD_ABS_TOL: float = 1e-10


@dataclass(frozen=True)
class LatticeFreeModel:
    dim: int

    def __post_init__(self):
        if int(self.dim) != self.dim or self.dim < 1:
            raise InvalidArgumentError(f'dimension must be >= 1: {self.dim}')

    @property
    def band_edge(self):
        return 2.0 * self.dim


def lattice_free_charfn(model, t):
    """<delta_0, exp(itH_0) delta_0> = J_0(2t)^d."""
    return bessel_j(0, 2.0 * np.asarray(t, dtype=float)) ** model.dim


def lattice_offdiag_charfn(model, x, t):
    """<delta_0, exp(itH_0) delta_x> = prod_j i^{x_j} J_{x_j}(2t)."""
    x = tuple(x)
    if len(x) != model.dim:
        raise InvalidArgumentError(
            f'site {x} does not belong to a {model.dim}-dimensional lattice'
        )
    if any(int(component) != component for component in x):
        raise InvalidArgumentError(f'site {x} is not a lattice vector')
    t = np.asarray(t, dtype=float)
    amplitude = np.ones_like(t, dtype=complex)
    for component in x:
        component = int(component)
        amplitude = amplitude * (1j ** component) * bessel_j_signed(
            component, 2.0 * t
        )
    return amplitude


def _horizon(decay, cutoff):
    return -math.log(cutoff) / decay


def _time_integral(model, horizon, integrand_size, integrand, tol):
    def envelope(t):
        return bessel_j(0, 2.0 * t) ** model.dim

    result, error = quad_vec(
        lambda t: integrand(t) * envelope(t),
        0.0, horizon, epsabs=tol, epsrel=1e-12, limit=20000,
    )
    logger.debug('time quadrature over [0, %.4g] for %d energies, error %.2g',
                 horizon, integrand_size, error)
    return result


def lattice_dos_smoothed(model, kernel, energy, tol=QUAD_ABS_TOL,
                         cutoff=CUTOFF):
    """Density of psi_lambda * mu_{delta_0, delta_0} for the Z^d adjacency.

    ``energy`` may be complex; the evaluation is then the analytic
    continuation and requires |Im E| < lambda.
    """
    energy = np.asarray(energy)
    scale = kernel.scale
    is_complex = np.iscomplexobj(energy)
    flat = energy.ravel().astype(complex)
    a, b = flat.real, flat.imag
    height = float(np.max(np.abs(b))) if flat.size else 0.0
    if height >= scale:
        raise OutsideStripError(height, scale)
    horizon = _horizon(scale - height, cutoff)

    if is_complex:
        def integrand(t):
            # cos((a + ib) t) = cos(at) cosh(bt) - i sin(at) sinh(bt),
            # damping exp(-lambda t) folded into cosh and sinh
            grow = np.exp((b - scale) * t)
            shrink = np.exp((-b - scale) * t)
            return np.concatenate((
                np.cos(a * t) * 0.5 * (grow + shrink),
                -np.sin(a * t) * 0.5 * (grow - shrink),
            ))
        raw = _time_integral(model, horizon, a.size, integrand, tol)
        values = (raw[:a.size] + 1j * raw[a.size:]) / np.pi
    else:
        def integrand(t):
            return np.cos(a * t) * np.exp(-scale * t)
        values = _time_integral(
            model, horizon, a.size, integrand, tol
        ) / np.pi
    values = values.reshape(energy.shape)
    return values if values.ndim else values[()]


def lattice_green_smoothed(model, kernel, energy, tol=QUAD_ABS_TOL,
                           cutoff=CUTOFF):
    """Disorder-averaged diagonal Green function at real E + i0.

    Averaging over Cauchy couplings moves the free Green function to
    E + i*lambda: m(E + i lambda) = i int_0^inf exp(i E t - lambda t)
    J_0(2t)^d dt.  Its imaginary part over pi is ``lattice_dos_smoothed``.
    """
    energy = np.asarray(energy, dtype=float)
    flat = energy.ravel()
    horizon = _horizon(kernel.scale, cutoff)

    def integrand(t):
        damping = np.exp(-kernel.scale * t)
        return np.concatenate(
            (np.cos(flat * t) * damping, np.sin(flat * t) * damping)
        )

    raw = _time_integral(model, horizon, flat.size, integrand, tol)
    cosine, sine = raw[:flat.size], raw[flat.size:]
    values = (-sine + 1j * cosine).reshape(energy.shape)
    return values if values.ndim else values[()]
