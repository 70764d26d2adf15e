"""Disorder averages of local spectral quantities.

Every sample is an independent task keyed by its sample index.  Rows are
stored by index before reduction, so the estimate does not depend on the
order or the thread in which samples finish.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from core.exceptions import (
    InvalidArgumentError, LloydError, ResourceCapError, SampleError,
)
from core.output import write_csv
from ensemble.builders import (
    ContinuumSpec, LatticeBoxSpec, TreeSpec, build_operator,
)
from ensemble.disorder import DisorderSample, draw_sample
from measures.cauchy import CauchyKernel, window_tail_mass
from measures.spectral import smear_spectrum
from .eigen import (
    DENSE_EIG_CAP, eig_sym, empirical_ids, local_spectral_measure,
    site_averaged_measure,
)
from .evolution import (
    chebyshev_amplitude, chebyshev_moments, expansion_order,
    gershgorin_bounds,
)
from .resolvent import tree_root_green

logger = logging.getLogger(__name__)

METHODS = ('auto', 'eig', 'resolvent')
# deviations below this count as exact on rows without sampling error
ROUNDOFF: float = 1e-12


@dataclass(frozen=True, eq=False)
class McEstimate:
    x: np.ndarray
    mean: np.ndarray
    std_error: Optional[np.ndarray]
    n_samples: int
    master_seed: int
    meta: dict = field(default_factory=dict)

    def z_scores(self, reference):
        """|mean - reference| / std_error, pointwise."""
        if self.std_error is None:
            raise InvalidArgumentError('a single sample has no standard error')
        deviation = np.abs(self.mean - reference)
        with np.errstate(divide='ignore', invalid='ignore'):
            scores = deviation / self.std_error
        # deterministic rows (e.g. t = 0) have zero error
        return np.where(self.std_error > 0, scores,
                        np.where(deviation > ROUNDOFF, np.inf, 0.0))

    def to_csv(self, target, float_format='%.12g', x_name='x', extra=()):
        """Write one row per grid point; ``extra`` is (name, values) pairs."""
        header = [x_name, 'mean', 'mean_im']
        columns = [self.x, self.mean.real, self.mean.imag]
        if self.std_error is not None:
            header.append('std_error')
            columns.append(self.std_error)
        for name, values in extra:
            header.append(name)
            columns.append(np.asarray(values))
        header.append('n_samples')
        columns.append(np.full(self.x.size, self.n_samples))
        write_csv(target, header, columns, float_format)


def _draw(spec, kernel, master_seed, sample_index, disorder):
    if disorder:
        return draw_sample(kernel, spec.site_count, master_seed, sample_index)
    return DisorderSample.free(spec.site_count)


def _collect(evaluate, n_samples, workers):
    def task(sample_index):
        try:
            return evaluate(sample_index)
        except LloydError as error:
            raise SampleError(sample_index, error) from error

    if workers <= 1:
        rows = [task(index) for index in range(n_samples)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(task, range(n_samples)))
    return np.vstack(rows)


def _summarize(rows, x, master_seed, meta):
    n_samples = rows.shape[0]
    mean = rows.mean(axis=0)
    std_error = None
    if n_samples >= 2:
        variance = (np.var(rows.real, axis=0, ddof=1)
                    + np.var(rows.imag, axis=0, ddof=1))
        # columns equal in every sample carry no sampling error
        constant = np.all(rows == rows[0], axis=0)
        std_error = np.where(constant, 0.0, np.sqrt(variance / n_samples))
    else:
        logger.warning('single disorder sample: standard error undefined')
    return McEstimate(x, mean, std_error, n_samples, master_seed, meta)


def _check_counts(n_samples, workers):
    if int(n_samples) != n_samples or n_samples < 1:
        raise InvalidArgumentError(f'need at least one sample: {n_samples}')
    if workers < 1:
        raise InvalidArgumentError(f'workers must be >= 1: {workers}')


def _spectral_amplitude(operator, phi, psi, times, cap):
    measure = local_spectral_measure(eig_sym(operator, cap=cap), phi, psi)
    return np.exp(1j * np.outer(times, measure.points)) @ measure.weights


def _amplitude(operator, phi, psi, times, label, cap=DENSE_EIG_CAP):
    """<phi, exp(itH) psi> on ``times``.

    Chebyshev moments are used while the expansion is shorter than the
    dimension; heavy Cauchy tails widen the spectrum and with it the order,
    and past that point the dense spectral sum is cheaper.
    """
    bounds = gershgorin_bounds(operator)
    t_max = float(np.max(np.abs(times))) if times.size else 0.0
    order = expansion_order(bounds.half_width, t_max)
    if order > operator.n and operator.n <= cap:
        logger.debug('%s: %d Chebyshev terms for dimension %d, '
                     'using the spectral sum', label, order, operator.n)
        return _spectral_amplitude(operator, phi, psi, times, cap)
    left = np.zeros(operator.n)
    right = np.zeros(operator.n)
    left[phi] = 1.0
    right[psi] = 1.0
    moments = chebyshev_moments(operator, left, right, order, bounds)
    logger.debug('%s: %d Chebyshev moments', label, order)
    return chebyshev_amplitude(moments, times, bounds)


def _check_sites(spec, *sites):
    for site in sites:
        if not 0 <= site < spec.site_count:
            raise InvalidArgumentError(
                f'site {site} outside 0..{spec.site_count - 1}'
            )


def free_charfn(spec, times, phi=0, psi=0):
    """<phi, exp(itH_0) psi> of the disorder-free finite operator."""
    times = np.atleast_1d(np.asarray(times, dtype=float))
    _check_sites(spec, phi, psi)
    operator = build_operator(spec, DisorderSample.free(spec.site_count))
    return _amplitude(operator, phi, psi, times, 'free operator')


def charfn_mc(spec, kernel, times, n_samples, master_seed, phi=0, psi=0,
              workers=1, disorder=True, cap=DENSE_EIG_CAP):
    """Sample mean of <phi, exp(itH^omega) psi> on the time grid."""
    _check_counts(n_samples, workers)
    times = np.atleast_1d(np.asarray(times, dtype=float))
    _check_sites(spec, phi, psi)

    def evaluate(sample_index):
        sample = _draw(spec, kernel, master_seed, sample_index, disorder)
        operator = build_operator(spec, sample)
        return _amplitude(operator, phi, psi, times,
                          f'sample {sample_index}', cap)

    rows = _collect(evaluate, int(n_samples), workers)
    return _summarize(rows, times, master_seed, {
        'quantity': 'charfn', 'scale': kernel.scale, 'phi': phi, 'psi': psi,
        'disorder': disorder,
    })


def _resolve_method(spec, method, site):
    if method not in METHODS:
        raise InvalidArgumentError(f'method must be one of {METHODS}')
    at_root = isinstance(spec, TreeSpec) and site == 0
    if method == 'auto':
        return 'resolvent' if at_root else 'eig'
    if method == 'resolvent' and not at_root:
        raise InvalidArgumentError('resolvent route covers the tree root only')
    return method


def _operator_size(spec):
    if isinstance(spec, ContinuumSpec):
        return spec.bumps.mesh_size
    return spec.site_count


def dos_mc(spec, kernel, grid, n_samples, master_seed, broaden, site=0,
           workers=1, method='auto', disorder=True, cap=DENSE_EIG_CAP,
           integrate_root=True):
    """Averaged local density at ``site`` smeared by psi_eta, eta = broaden.

    By the Cauchy identity its expectation is the free local measure
    smoothed at lambda + eta.  ``site=None`` averages the local measure over
    every site of a lattice box, which leaves the expectation of a periodic
    box unchanged and removes most of the sample-to-sample spread.  At the
    root of a tree the resolvent route integrates the root coupling out
    exactly, unless ``integrate_root`` is False, and samples the rest.
    With ``broaden`` 0 the averaged empirical IDS per unit volume is
    accumulated instead.

    ``meta['tail_mass']`` is the mean smeared weight outside the grid.
    """
    _check_counts(n_samples, workers)
    if broaden < 0:
        raise InvalidArgumentError(f'broadening must be >= 0: {broaden}')
    if site is None and not isinstance(spec, LatticeBoxSpec):
        raise InvalidArgumentError('site averaging needs a lattice box')
    energies = grid.points
    if broaden == 0:
        method = 'eig'
    else:
        method = _resolve_method(spec, method, site)
    if method == 'eig' and _operator_size(spec) > cap:
        raise ResourceCapError(
            f'dense eigensolve of dimension {_operator_size(spec)} exceeds '
            f'the cap {cap}; use charfn, the characteristic-function route'
        )
    ids_cap = None if isinstance(spec, ContinuumSpec) else 1.0
    smearing = CauchyKernel(broaden) if broaden > 0 else None
    root_scale = kernel.scale if disorder and integrate_root else None
    tails = {}

    def evaluate(sample_index):
        sample = _draw(spec, kernel, master_seed, sample_index, disorder)
        if method == 'resolvent':
            green = tree_root_green(spec, sample, energies + 1j * broaden,
                                    root_scale=root_scale)
            return green.imag / np.pi
        operator = build_operator(spec, sample)
        if broaden == 0:
            eig = eig_sym(operator, vectors=False, cap=cap)
            return empirical_ids(eig, spec.volume, ids_cap).to_grid(grid)
        if site is None:
            eig = eig_sym(operator, vectors=False, cap=cap)
            measure = site_averaged_measure(eig)
        else:
            eig = eig_sym(operator, cap=cap)
            measure = local_spectral_measure(eig, site, site)
        density = smear_spectrum(measure, smearing, grid)
        tails[sample_index] = density.meta['tail_mass']
        return density.values

    rows = _collect(evaluate, int(n_samples), workers)
    meta = {
        'quantity': 'ids' if broaden == 0 else 'dos', 'scale': kernel.scale,
        'broaden': broaden, 'site': site, 'method': method,
        'disorder': disorder,
    }
    if tails:
        meta['tail_mass'] = float(np.mean([tails[i] for i in sorted(tails)]))
    elif method == 'resolvent':
        total = CauchyKernel(broaden + (kernel.scale if disorder else 0.0))
        meta['tail_mass'] = float(
            window_tail_mass(total, grid.e_min, grid.e_max)
        )
    return _summarize(rows, energies, master_seed, meta)
