"""Finite-volume Hamiltonians H = H_0 + sum_n omega_n P_n."""
import hashlib
from dataclasses import dataclass

import numpy as np
from scipy import sparse

from core.exceptions import InvalidArgumentError
from core.output import open_target

BOUNDARIES = ('periodic', 'dirichlet')
# hats need at least this many mesh points per unit length
MIN_POINTS_PER_BUMP: int = 4


@dataclass(frozen=True, eq=False)
class SymmetricOperator:
    """Real symmetric matrix held as a canonical CSR matrix."""

    matrix: sparse.csr_matrix

    def __post_init__(self):
        matrix = sparse.csr_matrix(self.matrix, dtype=float)
        matrix.sum_duplicates()
        matrix.sort_indices()
        if matrix.shape[0] != matrix.shape[1]:
            raise InvalidArgumentError(f'matrix is not square: {matrix.shape}')
        if not np.all(np.isfinite(matrix.data)):
            raise InvalidArgumentError('matrix has non-finite entries')
        if (matrix != matrix.T).nnz:
            raise InvalidArgumentError('matrix is not symmetric')
        object.__setattr__(self, 'matrix', matrix)

    @property
    def n(self):
        return self.matrix.shape[0]

    def entries(self):
        """Upper-triangle (row, col, value) triples, row <= col."""
        upper = sparse.triu(self.matrix, format='coo')
        order = np.lexsort((upper.col, upper.row))
        return upper.row[order], upper.col[order], upper.data[order]

    def write_triples(self, target):
        rows, cols, values = self.entries()
        with open_target(target) as stream:
            for row, col, value in zip(rows, cols, values):
                stream.write(f'{row} {col} {value:.17g}\n')

    def fingerprint(self):
        digest = hashlib.sha256()
        matrix = self.matrix
        for part in (matrix.indptr, matrix.indices, matrix.data):
            digest.update(np.ascontiguousarray(part).tobytes())
        return digest.hexdigest()[:16]

    def toarray(self):
        return self.matrix.toarray()


@dataclass(frozen=True)
class LatticeBoxSpec:
    dim: int
    side: int
    boundary: str = 'periodic'

    def __post_init__(self):
        if int(self.dim) != self.dim or self.dim < 1:
            raise InvalidArgumentError(f'dimension must be >= 1: {self.dim}')
        if int(self.side) != self.side or self.side < 1:
            raise InvalidArgumentError(f'box side must be >= 1: {self.side}')
        if self.boundary not in BOUNDARIES:
            raise InvalidArgumentError(
                f'boundary must be one of {BOUNDARIES}: {self.boundary!r}'
            )

    @property
    def shape(self):
        return (self.side,) * self.dim

    @property
    def site_count(self):
        return self.side ** self.dim

    @property
    def volume(self):
        return float(self.site_count)

    def site_index(self, x):
        """Flat index of lattice vector ``x`` (wrapped into the box)."""
        x = tuple(int(component) for component in x)
        if len(x) != self.dim:
            raise InvalidArgumentError(
                f'site {x} does not belong to a {self.dim}-dimensional box'
            )
        return int(np.ravel_multi_index(x, self.shape, mode='wrap'))


@dataclass(frozen=True)
class TreeSpec:
    """Rooted tree: root has K + 1 children, other inner vertices K."""

    branching: int
    depth: int

    def __post_init__(self):
        if int(self.branching) != self.branching or self.branching < 2:
            raise InvalidArgumentError(
                f'branching number must be an integer >= 2: {self.branching}'
            )
        if int(self.depth) != self.depth or self.depth < 0:
            raise InvalidArgumentError(f'depth must be >= 0: {self.depth}')

    def levels(self):
        """(first vertex, vertex count) of every level, root first."""
        levels = [(0, 1)]
        start, size = 1, self.branching + 1
        for _ in range(self.depth):
            levels.append((start, size))
            start += size
            size *= self.branching
        return levels

    @property
    def site_count(self):
        if self.depth == 0:
            return 1
        k = self.branching
        return 1 + (k + 1) * (k ** self.depth - 1) // (k - 1)

    @property
    def volume(self):
        return float(self.site_count)


@dataclass(frozen=True)
class BumpFamily:
    """Hats u_n(x) = max(0, 1 - |x - n|) on a periodic mesh of step h."""

    length: int
    h: float

    def __post_init__(self):
        if int(self.length) != self.length or self.length < 1:
            raise InvalidArgumentError(
                f'box length must be a positive integer: {self.length}'
            )
        if not self.h > 0:
            raise InvalidArgumentError(f'mesh step must be positive: {self.h}')
        per_unit = 1.0 / self.h
        if abs(per_unit - round(per_unit)) > 1e-9:
            raise InvalidArgumentError(f'1/h must be an integer: h = {self.h}')
        if round(per_unit) < MIN_POINTS_PER_BUMP:
            raise InvalidArgumentError(
                f'mesh too coarse: 1/h = {per_unit:g} < {MIN_POINTS_PER_BUMP}'
            )

    @property
    def points_per_unit(self):
        return int(round(1.0 / self.h))

    @property
    def mesh_size(self):
        return self.length * self.points_per_unit

    def matrix(self):
        """Sparse (mesh point x bump) matrix of the values u_n(x_j)."""
        m = self.points_per_unit
        mesh = np.arange(self.mesh_size)
        left = mesh // m
        offset = mesh % m
        right = (left + 1) % self.length
        rows = np.concatenate((mesh, mesh))
        cols = np.concatenate((left, right))
        values = np.concatenate(((m - offset) / m, offset / m))
        keep = values > 0
        return sparse.csr_matrix(
            (values[keep], (rows[keep], cols[keep])),
            shape=(self.mesh_size, self.length),
        )


@dataclass(frozen=True)
class ContinuumSpec:
    length: int
    h: float

    def __post_init__(self):
        BumpFamily(self.length, self.h)

    @property
    def bumps(self):
        return BumpFamily(self.length, self.h)

    @property
    def site_count(self):
        return self.length

    @property
    def volume(self):
        return float(self.length)


def _check_sample(sample, count):
    if sample is None:
        return np.zeros(count)
    omegas = np.asarray(getattr(sample, 'omegas', sample), dtype=float)
    if omegas.shape != (count,):
        raise InvalidArgumentError(
            f'{omegas.size} couplings for {count} sites'
        )
    return omegas


def _symmetrize(rows, cols, values, diagonal):
    n = diagonal.size
    hopping = sparse.coo_matrix((values, (rows, cols)), shape=(n, n))
    return SymmetricOperator(
        (hopping + hopping.T + sparse.diags(diagonal)).tocsr()
    )


def build_lattice(spec, sample=None):
    omegas = _check_sample(sample, spec.site_count)
    sites = np.arange(spec.site_count).reshape(spec.shape)
    rows, cols = [], []
    for axis in range(spec.dim):
        if spec.boundary == 'periodic':
            forward = np.roll(sites, -1, axis=axis)
            rows.append(sites.ravel())
            cols.append(forward.ravel())
        else:
            head = [slice(None)] * spec.dim
            tail = [slice(None)] * spec.dim
            head[axis] = slice(0, -1)
            tail[axis] = slice(1, None)
            rows.append(sites[tuple(head)].ravel())
            cols.append(sites[tuple(tail)].ravel())
    rows = np.concatenate(rows)
    cols = np.concatenate(cols)
    return _symmetrize(rows, cols, np.ones(rows.size), omegas)


def tree_parents(spec):
    """Parent index of every non-root vertex, in vertex order."""
    levels = spec.levels()
    parents = []
    for level, (start, size) in enumerate(levels[1:], start=1):
        if level == 1:
            parents.append(np.zeros(size, dtype=int))
        else:
            parents.append(
                levels[level - 1][0] + np.arange(size) // spec.branching
            )
    if not parents:
        return np.zeros(0, dtype=int)
    return np.concatenate(parents)


def build_tree(spec, sample=None):
    omegas = _check_sample(sample, spec.site_count)
    parents = tree_parents(spec)
    children = np.arange(1, spec.site_count)
    return _symmetrize(parents, children, np.ones(children.size), omegas)


def build_continuum(spec, sample=None):
    bumps = spec.bumps
    omegas = _check_sample(sample, bumps.length)
    n = bumps.mesh_size
    inverse_square = 1.0 / (spec.h * spec.h)
    mesh = np.arange(n)
    potential = bumps.matrix() @ omegas
    return _symmetrize(
        mesh, (mesh + 1) % n, np.full(n, -inverse_square),
        potential + 2.0 * inverse_square,
    )


def build_operator(spec, sample=None):
    if isinstance(spec, LatticeBoxSpec):
        return build_lattice(spec, sample)
    if isinstance(spec, TreeSpec):
        return build_tree(spec, sample)
    if isinstance(spec, ContinuumSpec):
        return build_continuum(spec, sample)
    raise InvalidArgumentError(f'unknown model spec: {spec!r}')

