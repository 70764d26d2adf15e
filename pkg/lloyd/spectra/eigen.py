import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from core.exceptions import (
    InvalidArgumentError, ResourceCapError, SolverFailureError,
)
from measures.spectral import StepIDS, WeightedSpectrum

logger = logging.getLogger(__name__)

DENSE_EIG_CAP: int = 4096


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    """Ascending eigenvalues; eigenvectors as orthonormal columns."""

    values: np.ndarray
    vectors: Optional[np.ndarray] = None

    def __len__(self):
        return self.values.size

    def residual(self, operator):
        """Largest ||A v_i - e_i v_i|| over all pairs."""
        product = operator.matrix @ self.vectors
        return float(np.max(np.linalg.norm(
            product - self.vectors * self.values, axis=0
        )))

    def orthonormality_error(self):
        gram = self.vectors.T @ self.vectors
        return float(np.max(np.abs(gram - np.eye(len(self)))))


def eig_sym(operator, vectors=True, cap=DENSE_EIG_CAP):
    if operator.n > cap:
        raise ResourceCapError(
            f'dense eigensolve of dimension {operator.n} exceeds the cap {cap}'
        )
    dense = operator.toarray()
    try:
        if vectors:
            values, basis = np.linalg.eigh(dense)
        else:
            values, basis = np.linalg.eigvalsh(dense), None
    except np.linalg.LinAlgError as error:
        raise SolverFailureError(
            f'symmetric eigensolver did not converge: {error}',
            operator.fingerprint(),
        ) from error
    logger.debug('diagonalized matrix %s of dimension %d',
                 operator.fingerprint(), operator.n)
    return EigenDecomposition(values, basis)


def local_spectral_measure(eig, site_phi, site_psi):
    """mu_{phi,psi} = sum_i v_i(phi) v_i(psi) delta_{e_i}."""
    if eig.vectors is None:
        raise InvalidArgumentError(
            'decomposition was computed without vectors'
        )
    n = len(eig)
    for site in (site_phi, site_psi):
        if not 0 <= site < n:
            raise InvalidArgumentError(f'site {site} outside 0..{n - 1}')
    weights = eig.vectors[site_phi, :] * eig.vectors[site_psi, :]
    return WeightedSpectrum(eig.values, weights)


def empirical_ids(eig, volume, cap=1.0):
    """Eigenvalue counting function normalized by ``volume``.

    ``cap`` bounds the reported value (1 for lattices and trees); pass None
    for the continuum, whose IDS per unit length is unbounded.
    """
    if not volume > 0:
        raise InvalidArgumentError(f'volume must be positive: {volume}')
    cumulative = np.arange(1, len(eig) + 1) / volume
    if cap is not None:
        cumulative = np.minimum(cumulative, cap)
    return StepIDS(eig.values, cumulative)


def site_averaged_measure(eig):
    """Mean of mu_{x,x} over all sites x: unit weight 1/n on every level."""
    n = len(eig)
    return WeightedSpectrum(eig.values, np.full(n, 1.0 / n))
