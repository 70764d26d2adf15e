"""Chebyshev-Bessel expansion of exp(itH).

With H = b + a X and the spectrum of X inside [-1, 1],

    exp(itH) = exp(itb) sum_n (2 - delta_{n0}) i^n J_n(a t) T_n(X).
"""
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy import sparse
from scipy.special import jv

from core.exceptions import EnclosureError

logger = logging.getLogger(__name__)

COEFFICIENT_CUTOFF: float = 1e-15
# terms kept beyond a |t| before the Bessel tail is tested
ORDER_SLACK: int = 40
NORM_DRIFT: float = 1e-6
# rows of the (time x order) Bessel table built at once
TIME_BLOCK: int = 32

_PHASES = np.array([1, 1j, -1, -1j])


@dataclass(frozen=True)
class SpectralBounds:
    """Interval [center - half_width, center + half_width]."""

    center: float
    half_width: float


def gershgorin_bounds(operator, margin=1.01):
    matrix = operator.matrix
    diagonal = matrix.diagonal()
    radius = np.asarray(abs(matrix).sum(axis=1)).ravel() - np.abs(diagonal)
    low = float(np.min(diagonal - radius))
    high = float(np.max(diagonal + radius))
    half_width = max(0.5 * (high - low) * margin, 1e-12)
    return SpectralBounds(0.5 * (high + low), half_width)


def expansion_order(half_width, t, cutoff=COEFFICIENT_CUTOFF):
    """Number of terms: first n > a|t| + 40 with |J_n(a t)| < cutoff."""
    argument = half_width * abs(t)
    order = int(math.floor(argument + ORDER_SLACK)) + 1
    while abs(jv(order, argument)) >= cutoff:
        order += 1
    return order


def _coefficients(orders, half_width, times):
    bessel = jv(orders[None, :], half_width * times[:, None])
    weights = np.where(orders == 0, 1.0, 2.0) * _PHASES[orders % 4]
    return bessel * weights[None, :]


def _rescaled(operator, bounds):
    identity = sparse.identity(operator.n, format='csr')
    return ((operator.matrix - bounds.center * identity)
            / bounds.half_width).tocsr()


def chebyshev_moments(operator, phi, psi, order, bounds):
    """mu_n = <phi, T_n(X) psi> for n < order."""
    scaled = _rescaled(operator, bounds)
    phi = np.conj(np.asarray(phi))
    dtype = complex if np.iscomplexobj(psi) else float
    previous = np.asarray(psi, dtype=dtype)
    moments = np.empty(order, dtype=np.result_type(phi, previous))
    moments[0] = phi @ previous
    if order == 1:
        return moments
    current = scaled @ previous
    moments[1] = phi @ current
    for n in range(2, order):
        previous, current = current, 2.0 * (scaled @ current) - previous
        moments[n] = phi @ current
    return moments


def chebyshev_amplitude(moments, times, bounds):
    """<phi, exp(itH) psi> for every t from precomputed moments."""
    times = np.atleast_1d(np.asarray(times, dtype=float))
    orders = np.arange(moments.size)
    amplitudes = np.empty(times.size, dtype=complex)
    for start in range(0, times.size, TIME_BLOCK):
        block = times[start:start + TIME_BLOCK]
        coefficients = _coefficients(orders, bounds.half_width, block)
        amplitudes[start:start + TIME_BLOCK] = (
            np.exp(1j * bounds.center * block) * (coefficients @ moments)
        )
    return amplitudes


def chebyshev_evolve(operator, vector, t, bounds=None):
    """exp(itH) v without diagonalizing H.

    This is the single-vector form of the expansion.  ``charfn_mc`` needs
    only <phi, exp(itH) psi> on a whole time grid and takes the moments
    route of ``chebyshev_amplitude`` instead, which shares the recurrence
    and coefficients but has no norm to watch.  The norm-drift check here
    is what raises EnclosureError.
    """
    vector = np.asarray(vector, dtype=complex)
    if t == 0:
        return vector.copy()
    if bounds is None:
        bounds = gershgorin_bounds(operator)
    order = expansion_order(bounds.half_width, t)
    coefficients = _coefficients(
        np.arange(order), bounds.half_width, np.array([float(t)])
    )[0]
    scaled = _rescaled(operator, bounds)
    previous = vector
    result = coefficients[0] * previous
    if order > 1:
        current = scaled @ vector
        result = result + coefficients[1] * current
        for n in range(2, order):
            previous, current = current, 2.0 * (scaled @ current) - previous
            result += coefficients[n] * current
    result *= np.exp(1j * t * bounds.center)
    drift = abs(np.linalg.norm(result) - np.linalg.norm(vector))
    logger.debug('chebyshev evolution t=%g: %d terms, norm drift %.2g',
                 t, order, drift)
    if not drift <= NORM_DRIFT:
        low = bounds.center - bounds.half_width
        high = bounds.center + bounds.half_width
        raise EnclosureError(
            f'norm drift {drift:.3g} at t={t:g}: '
            f'[{low:g}, {high:g}] does not enclose the spectrum'
        )
    return result
