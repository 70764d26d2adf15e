"""Named, reproducible checks of the Cauchy averaging identity.

Monte Carlo comparisons are judged by z-scores together with an absolute sup
band.  Only the time-domain check widens its band to ``z_cap`` standard
errors when the sampling noise is larger than the band.
"""
import logging
import time
from dataclasses import replace
from functools import wraps

import numpy as np

from core.exceptions import InvalidArgumentError, OutsideStripError
from ensemble.builders import ContinuumSpec, LatticeBoxSpec, TreeSpec
from free_models.bethe import BetheFreeModel, bethe_dos_smoothed
from free_models.continuum import (
    ContinuumFreeModel, continuum_free_ids, continuum_ids_smoothed,
)
from free_models.lattice import (
    LatticeFreeModel, lattice_dos_smoothed, lattice_offdiag_charfn,
)
from measures.cauchy import CauchyKernel
from measures.spectral import EnergyGrid, GridDensity, grid_convolve
from spectra.montecarlo import charfn_mc, dos_mc
from spectra.resolvent import tree_root_green
from .reports import CheckReport

logger = logging.getLogger(__name__)


def _grid(grid):
    return grid if isinstance(grid, EnergyGrid) else EnergyGrid.parse(grid)


def timed(name):
    """Log the check and stamp its wall time on the returned report."""
    def decorator(check):
        @wraps(check)
        def wrapper(*args, **kwargs):
            started = time.perf_counter()
            logger.info('running check %s', name)
            report = check(*args, **kwargs)
            elapsed = time.perf_counter() - started
            logger.info('check %s finished in %.2fs: %s', name, elapsed,
                        'pass' if report.passed else 'fail')
            return replace(report, runtime=elapsed)
        return wrapper
    return decorator


def _band(limit, z_cap, std_error):
    if std_error is None:
        return limit
    return max(limit, z_cap * float(np.max(std_error)))


def _z_metrics(estimate, reference):
    scores = estimate.z_scores(reference)
    return {
        'max_z': float(np.max(scores)),
        'z_p95': float(np.percentile(scores, 95)),
    }


@timed('theorem1_charfn')
def check_theorem1_charfn(dim=1, scale=1.0, side=512, n_samples=400,
                          t_max=6.0, t_step=0.05, seed=0, psi_offset=0,
                          disorder=True, workers=1, z_cap=4.0,
                          max_deviation=0.03):
    """E<phi, exp(itH) psi> against exp(-lambda|t|) <phi, exp(itH_0) psi>."""
    spec = LatticeBoxSpec(dim, side)
    kernel = CauchyKernel(scale)
    times = t_step * np.arange(int(np.floor(t_max / t_step + 1e-9)) + 1)
    offset = (psi_offset,) + (0,) * (dim - 1)
    estimate = charfn_mc(
        spec, kernel, times, n_samples, seed, phi=0,
        psi=spec.site_index(offset), workers=workers, disorder=disorder,
    )
    free = lattice_offdiag_charfn(LatticeFreeModel(dim), offset, times)
    damping = np.exp(-scale * np.abs(times)) if disorder else 1.0
    reference = damping * free
    deviation = float(np.max(np.abs(estimate.mean - reference)))
    metrics = {'max_deviation': deviation}
    thresholds = {
        'max_deviation': _band(max_deviation, z_cap, estimate.std_error),
    }
    if disorder and estimate.std_error is not None:
        metrics.update(_z_metrics(estimate, reference))
        thresholds['max_z'] = z_cap
    return CheckReport(
        'theorem1_charfn',
        {
            'dim': dim, 'scale': scale, 'side': side,
            'n_samples': n_samples, 't_max': t_max, 't_step': t_step,
            'psi_offset': psi_offset, 'disorder': disorder,
        },
        metrics, thresholds, seed,
    )


@timed('theorem1_dos')
def check_theorem1_dos(dim=1, scale=1.0, broaden=0.1, side=2000,
                       n_samples=200, grid='-6:6:0.02', seed=0, workers=1,
                       z_cap=4.0, max_sup=0.005, z_p95=2.5):
    """Site-averaged eta-smeared measure against the exact curve at
    lambda + eta.
    """
    if not broaden > 0:
        raise InvalidArgumentError('density comparison needs broaden > 0')
    grid = _grid(grid)
    estimate = dos_mc(
        LatticeBoxSpec(dim, side), CauchyKernel(scale), grid, n_samples,
        seed, broaden, site=None, workers=workers,
    )
    exact = lattice_dos_smoothed(
        LatticeFreeModel(dim), CauchyKernel(scale + broaden), grid.points
    )
    metrics = {'sup_distance': float(np.max(np.abs(estimate.mean - exact)))}
    thresholds = {'sup_distance': max_sup}
    if estimate.std_error is not None:
        metrics.update(_z_metrics(estimate, exact))
        thresholds.update({'max_z': z_cap, 'z_p95': z_p95})
    return CheckReport(
        'theorem1_dos',
        {
            'dim': dim, 'scale': scale, 'broaden': broaden, 'side': side,
            'n_samples': n_samples, 'grid': str(grid),
        },
        metrics, thresholds, seed,
    )


def truncated_tree_density(spec, kernel, energies):
    """Free root measure of the finite tree smoothed by ``kernel``."""
    z = np.asarray(energies) + 1j * kernel.scale
    green = tree_root_green(spec, None, z)
    return green.imag / np.pi


@timed('bethe')
def check_bethe(branching=2, scale=1.0, depth=14, n_samples=100,
                broaden=0.1, grid='-2.9:2.9:0.05', seed=0, disorder=True,
                workers=1, z_cap=4.0, max_sup=0.01):
    """Root density on a truncated tree against smeared Kesten-McKay.

    The finite-depth bias is the difference between the truncated free tree
    and the Kesten-McKay law, both smoothed at the same total scale; it is
    subtracted before the comparison.  The root coupling is averaged out
    exactly in every sample.
    """
    grid = _grid(grid)
    spec = TreeSpec(branching, depth)
    energies = grid.points
    total = CauchyKernel(scale + broaden if disorder else broaden)
    estimate = dos_mc(
        spec, CauchyKernel(scale), grid, n_samples, seed, broaden,
        workers=workers, disorder=disorder,
    )
    kesten_mckay = bethe_dos_smoothed(BetheFreeModel(branching), total,
                                      energies)
    truncated = truncated_tree_density(spec, total, energies)
    bias = truncated - kesten_mckay
    metrics = {
        'raw_sup': float(np.max(np.abs(estimate.mean - kesten_mckay))),
        'bias_sup': float(np.max(np.abs(bias))),
        'corrected_sup': float(
            np.max(np.abs(estimate.mean - kesten_mckay - bias))
        ),
    }
    thresholds = {'corrected_sup': max_sup}
    if disorder and estimate.std_error is not None:
        metrics.update(_z_metrics(estimate, truncated))
        thresholds['max_z'] = z_cap
    return CheckReport(
        'bethe',
        {
            'branching': branching, 'scale': scale, 'depth': depth,
            'n_samples': n_samples, 'broaden': broaden, 'grid': str(grid),
            'disorder': disorder,
        },
        metrics, thresholds, seed,
    )


def cauchy_riemann_residual(dim, scale, energies, heights, step=1e-4):
    """Largest Cauchy-Riemann residual of the complex DOS on a point set.

    Centers and stencil points go through one quadrature call, so every
    value comes from the same rule.
    """
    centers = (np.asarray(energies)[:, None]
               + 1j * np.asarray(heights)[None, :]).ravel()
    shifts = np.array([step, -step, 1j * step, -1j * step])
    points = (centers[:, None] + shifts[None, :]).ravel()
    values = lattice_dos_smoothed(
        LatticeFreeModel(dim), CauchyKernel(scale), points.astype(complex)
    ).reshape(centers.size, 4)
    u, v = values.real, values.imag
    du_dx = (u[:, 0] - u[:, 1]) / (2 * step)
    dv_dx = (v[:, 0] - v[:, 1]) / (2 * step)
    du_dy = (u[:, 2] - u[:, 3]) / (2 * step)
    dv_dy = (v[:, 2] - v[:, 3]) / (2 * step)
    return float(max(
        np.max(np.abs(du_dx - dv_dy)), np.max(np.abs(du_dy + dv_dx))
    ))


@timed('analytic_strip')
def check_analytic_strip(dim=1, scale=1.0,
                         heights=(-0.5, -0.25, 0.0, 0.25, 0.5),
                         energies='-4:4:0.5', step=1e-4,
                         max_residual=1e-5, max_slice=1e-8):
    heights = tuple(float(y) for y in heights)
    if any(abs(y) >= scale - 0.1 for y in heights):
        raise InvalidArgumentError(
            f'heights must satisfy |y| < lambda - 0.1 = {scale - 0.1:g}'
        )
    grid = _grid(energies)
    model = LatticeFreeModel(dim)
    kernel = CauchyKernel(scale)
    residual = cauchy_riemann_residual(dim, scale, grid.points, heights, step)
    real_curve = lattice_dos_smoothed(model, kernel, grid.points)
    continued = lattice_dos_smoothed(
        model, kernel, grid.points.astype(complex)
    )
    slice_deviation = float(np.max(np.abs(continued - real_curve)))
    try:
        lattice_dos_smoothed(model, kernel, 1.05j * scale)
    except OutsideStripError:
        unraised = 0.0
    else:
        unraised = 1.0
    return CheckReport(
        'analytic_strip',
        {
            'dim': dim, 'scale': scale, 'heights': list(heights),
            'energies': str(grid), 'step': step,
        },
        {
            'cr_residual': residual,
            'real_slice_deviation': slice_deviation,
            'outside_strip_unraised': unraised,
        },
        {
            'cr_residual': max_residual,
            'real_slice_deviation': max_slice,
            'outside_strip_unraised': 0.0,
        },
    )


@timed('continuum_ids')
def check_continuum_ids(scale=0.2, length=200, h=0.05, n_samples=100,
                        grid='0:4:0.05', seed=0, disorder=True, workers=1,
                        max_sup=0.02):
    """Averaged empirical IDS per unit length against psi * sqrt(E)/pi."""
    grid = _grid(grid)
    # above this the mesh dispersion deviates from E = k^2 by more than 1%
    ceiling = 0.05 / (h * h)
    if grid.e_max > ceiling:
        raise InvalidArgumentError(
            f'energy grid reaches {grid.e_max:g}, above the mesh limit '
            f'{ceiling:g}'
        )
    kernel = CauchyKernel(scale)
    estimate = dos_mc(
        ContinuumSpec(length, h), kernel, grid, n_samples, seed, 0.0,
        workers=workers, disorder=disorder,
    )
    if disorder:
        reference = continuum_ids_smoothed(
            ContinuumFreeModel(), kernel, grid.points
        )
    else:
        reference = continuum_free_ids(ContinuumFreeModel(), grid.points)
    return CheckReport(
        'continuum_ids',
        {
            'scale': scale, 'length': length, 'h': h,
            'n_samples': n_samples, 'grid': str(grid), 'disorder': disorder,
        },
        {'sup_distance': float(np.max(np.abs(estimate.mean - reference)))},
        {'sup_distance': max_sup},
        seed,
    )


def semigroup_distance(dim, first, second, window=8.0, step=0.02,
                       padding=40.0):
    """Sup over |E| <= window of (psi_second * p_first) - p_{first+second}."""
    model = LatticeFreeModel(dim)
    wide = EnergyGrid(-window - padding, window + padding, step)
    base = GridDensity(
        wide, lattice_dos_smoothed(model, CauchyKernel(first), wide.points)
    )
    convolved = grid_convolve(base, CauchyKernel(second))
    inside = np.abs(wide.points) <= window + 1e-9
    exact = lattice_dos_smoothed(
        model, CauchyKernel(first + second), wide.points[inside]
    )
    return float(np.max(np.abs(convolved.values[inside] - exact)))


@timed('semigroup')
def check_semigroup(scale1=0.5, scale2=0.5, dim=1, window=8.0, step=0.02,
                    padding=40.0, max_sup=1e-4):
    if not (scale1 > 0 and scale2 > 0):
        raise InvalidArgumentError('both scales must be positive')
    distance = semigroup_distance(dim, scale1, scale2, window, step, padding)
    return CheckReport(
        'semigroup',
        {
            'scale1': scale1, 'scale2': scale2, 'dim': dim,
            'window': window, 'step': step, 'padding': padding,
        },
        {'sup_distance': distance},
        {'sup_distance': max_sup},
    )


CHECKS = {
    'theorem1_charfn': check_theorem1_charfn,
    'theorem1_dos': check_theorem1_dos,
    'bethe': check_bethe,
    'analytic_strip': check_analytic_strip,
    'continuum_ids': check_continuum_ids,
    'semigroup': check_semigroup,
}

SEEDED = {'theorem1_charfn', 'theorem1_dos', 'bethe', 'continuum_ids'}

# desk-check sizes; thresholds sized to the smaller runs
QUICK = {
    'theorem1_charfn': {'side': 128, 'n_samples': 100, 't_step': 0.25},
    'theorem1_dos': {
        'side': 400, 'n_samples': 60, 'grid': '-6:6:0.1', 'max_sup': 0.02,
    },
    'bethe': {
        'depth': 8, 'n_samples': 60, 'grid': '-2.9:2.9:0.1', 'max_sup': 0.03,
    },
    'continuum_ids': {
        'length': 60, 'h': 0.1, 'n_samples': 30, 'grid': '0:4:0.1',
        'max_sup': 0.06,
    },
    'analytic_strip': {'energies': '-4:4:1'},
    'semigroup': {'padding': 30.0},
}

PRESETS = ('full', 'quick')


def run_check(name, seed=0, preset='full', force_threshold=None, workers=1,
              **options):
    if name not in CHECKS:
        raise InvalidArgumentError(
            f'unknown check {name!r}; choose from {sorted(CHECKS)}'
        )
    if preset not in PRESETS:
        raise InvalidArgumentError(f'preset must be one of {PRESETS}')
    parameters = dict(QUICK[name]) if preset == 'quick' else {}
    parameters.update(options)
    if name in SEEDED:
        parameters.update(seed=seed, workers=workers)
    report = CHECKS[name](**parameters)
    if force_threshold is not None:
        report = report.with_threshold(force_threshold)
    return report
