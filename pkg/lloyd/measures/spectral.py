"""Finite spectral measures, grid densities and their Cauchy smoothing.

A finite-volume local spectral measure is a weighted point measure; its
convolution with psi_lambda is the finite sum of Poisson kernels evaluated by
``smear_spectrum`` and, equivalently, (1/pi) Im of the Stieltjes transform at
E + i*lambda.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.integrate import cumulative_trapezoid, trapezoid
from scipy.signal import fftconvolve

from core.exceptions import InvalidArgumentError
from core.output import write_csv
from .cauchy import cauchy_cdf, cauchy_density

logger = logging.getLogger(__name__)

# number of spectral points smeared per block
BLOCK: int = 512



def _shortest(value):
    """Shortest text that parses back to the same float."""
    text = repr(float(value))
    return text[:-2] if text.endswith('.0') else text


@dataclass(frozen=True)
class EnergyGrid:
    """Uniform energy grid closed at both ends."""

    e_min: float
    e_max: float
    step: float

    def __post_init__(self):
        if not (self.step > 0 and math.isfinite(self.step)):
            raise InvalidArgumentError(
                f'grid step must be positive: {self.step}'
            )
        if not (math.isfinite(self.e_min) and math.isfinite(self.e_max)):
            raise InvalidArgumentError('grid ends must be finite')
        if self.e_max < self.e_min:
            raise InvalidArgumentError(
                f'empty grid: e_max {self.e_max} < e_min {self.e_min}'
            )

    @classmethod
    def parse(cls, text):
        """Build a grid from ``min:max:step``."""
        parts = str(text).split(':')
        if len(parts) != 3:
            raise InvalidArgumentError(
                f'grid must look like min:max:step, got {text!r}'
            )
        try:
            e_min, e_max, step = (float(part) for part in parts)
        except ValueError:
            raise InvalidArgumentError(f'grid has non-numeric parts: {text!r}')
        return cls(e_min, e_max, step)

    @property
    def size(self):
        span = (self.e_max - self.e_min) / self.step
        return int(math.floor(span + 1e-9)) + 1

    @property
    def points(self):
        return self.e_min + self.step * np.arange(self.size)

    def __str__(self):
        return ':'.join(
            _shortest(value) for value in (self.e_min, self.e_max, self.step)
        )


@dataclass(frozen=True, eq=False)
class WeightedSpectrum:
    """Point measure sum_i w_i delta_{E_i}; weights may be complex."""

    points: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        points = np.asarray(self.points, dtype=float).ravel()
        weights = np.asarray(self.weights, dtype=complex).ravel()
        if points.shape != weights.shape:
            raise InvalidArgumentError(
                f'{points.size} points but {weights.size} weights'
            )
        if not (np.all(np.isfinite(points)) and np.all(np.isfinite(weights))):
            raise InvalidArgumentError('spectrum contains non-finite values')
        object.__setattr__(self, 'points', points)
        object.__setattr__(self, 'weights', weights)

    def __len__(self):
        return self.points.size

    @property
    def total_weight(self):
        return complex(np.sum(self.weights))

    def is_probability(self, tol=1e-10):
        weights = self.weights
        return bool(
            np.all(np.abs(weights.imag) <= tol)
            and np.all(weights.real >= -tol)
            and abs(np.sum(weights.real) - 1.0) <= tol
        )


@dataclass(frozen=True, eq=False)
class GridDensity:
    grid: EnergyGrid
    values: np.ndarray
    values_im: Optional[np.ndarray] = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.shape != (self.grid.size,):
            raise InvalidArgumentError(
                f'{values.size} values for a grid of {self.grid.size} points'
            )
        object.__setattr__(self, 'values', values)
        if self.values_im is not None:
            object.__setattr__(
                self, 'values_im', np.asarray(self.values_im, dtype=float)
            )

    @property
    def e_min(self):
        return self.grid.e_min

    @property
    def e_max(self):
        return self.grid.e_max

    @property
    def step(self):
        return self.grid.step

    @property
    def energies(self):
        return self.grid.points

    def mass(self):
        """Trapezoid integral of the real part over the grid."""
        return float(trapezoid(self.values, dx=self.grid.step))

    def to_csv(self, target, float_format='%.12g'):
        header = ['energy', 'density']
        columns = [self.energies, self.values]
        if self.values_im is not None:
            header.append('density_im')
            columns.append(self.values_im)
        write_csv(target, header, columns, float_format)


@dataclass(frozen=True, eq=False)
class StepIDS:
    """Right-continuous nondecreasing step function N(E)."""

    jumps: np.ndarray
    cumulative: np.ndarray

    def __post_init__(self):
        jumps = np.asarray(self.jumps, dtype=float)
        cumulative = np.asarray(self.cumulative, dtype=float)
        if jumps.shape != cumulative.shape:
            raise InvalidArgumentError('jumps and cumulative differ in length')
        if np.any(np.diff(jumps) < 0):
            raise InvalidArgumentError('jump energies must be sorted')
        if np.any(np.diff(cumulative) < 0):
            raise InvalidArgumentError('cumulative values must not decrease')
        object.__setattr__(self, 'jumps', jumps)
        object.__setattr__(self, 'cumulative', cumulative)

    def value_at(self, energy):
        energy = np.asarray(energy, dtype=float)
        index = np.searchsorted(self.jumps, energy, side='right')
        padded = np.concatenate(([0.0], self.cumulative))
        return padded[index]

    def to_grid(self, grid):
        return self.value_at(grid.points)

    def to_csv(self, target, float_format='%.12g'):
        write_csv(target, ['energy', 'ids'], [self.jumps, self.cumulative],
                  float_format)


def smear_spectrum(spec, kernel, grid, imaginary=False):
    """Exact convolution psi_lambda * spec sampled on ``grid``.

    The imaginary part of a complex (off-diagonal) measure is reported in
    ``values_im`` when ``imaginary`` is set.  ``meta['tail_mass']`` declares
    the weight that falls outside the grid window.
    """
    energies = grid.points
    real = np.zeros(grid.size)
    imag = np.zeros(grid.size) if imaginary else None
    for start in range(0, len(spec), BLOCK):
        points = spec.points[start:start + BLOCK]
        weights = spec.weights[start:start + BLOCK]
        kernel_values = cauchy_density(
            kernel, energies[:, None] - points[None, :]
        )
        real += kernel_values @ weights.real
        if imaginary:
            imag += kernel_values @ weights.imag
    inside = (
        cauchy_cdf(kernel, grid.e_max - spec.points)
        - cauchy_cdf(kernel, grid.e_min - spec.points)
    )
    tail = float(np.sum(spec.weights.real * (1.0 - inside)))
    logger.debug('smeared %d points at scale %g, tail mass %.3g',
                 len(spec), kernel.scale, tail)
    return GridDensity(
        grid, real, imag, meta={'scale': kernel.scale, 'tail_mass': tail}
    )


def stieltjes_eval(spec, z):
    """m(z) = sum_i w_i / (E_i - z) for Im z > 0."""
    z = np.asarray(z, dtype=complex)
    if np.any(z.imag <= 0):
        raise InvalidArgumentError('Stieltjes transform needs Im z > 0')
    if len(spec) == 0:
        return np.zeros_like(z)
    return np.sum(
        spec.weights / (spec.points - z[..., None]), axis=-1
    )


def ids_of(density):
    """Cumulative trapezoid integral of a nonnegative grid density."""
    if np.any(density.values < 0):
        raise InvalidArgumentError('density has negative values')
    cumulative = cumulative_trapezoid(
        density.values, dx=density.grid.step, initial=0.0
    )
    # rounding can break monotonicity only at the ulp level
    return StepIDS(density.energies, np.maximum.accumulate(cumulative))


def grid_convolve(density, kernel):
    """Convolve a grid curve with psi_lambda by trapezoid quadrature.

    The curve is taken as zero outside its grid; callers pad the grid so that
    the truncated tails are negligible on the window they compare.
    """
    grid = density.grid
    n = grid.size
    weights = np.full(n, grid.step)
    weights[[0, -1]] *= 0.5
    offsets = grid.step * np.arange(-(n - 1), n)
    kernel_values = cauchy_density(kernel, offsets)

    def convolve(values):
        full = fftconvolve(values * weights, kernel_values)
        return full[n - 1:2 * n - 1]

    imag = None
    if density.values_im is not None:
        imag = convolve(density.values_im)
    meta = dict(density.meta)
    meta['scale'] = meta.get('scale', 0.0) + kernel.scale
    return GridDensity(grid, convolve(density.values), imag, meta)
